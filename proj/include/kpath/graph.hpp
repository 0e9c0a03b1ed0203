#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kpath {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class ErrorKind {
    OutOfRange,
    SelfLoop,
    DuplicateEdge,
    NotAPath,
    Parse,
    InvalidModulator,
    BadK,
    NotAKPath,
    IsolatedBNode,
    InfeasibleSignature,
    NotSuitable,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Immutable undirected simple graph on vertices 0..n-1.
/// The numeric id order is the global vertex order used for every tie-break.
class Graph {
public:
    Graph() = default;

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t m() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    /// Edges as (min,max) pairs sorted lexicographically.
    std::vector<Edge> edges() const;

    friend Graph build_graph(int n, const std::vector<Edge>& edges);

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

/// Throws Error{OutOfRange|SelfLoop|DuplicateEdge}.
Graph build_graph(int n, const std::vector<Edge>& edges);

/// A simple path stored in canonical orientation: the lexicographically
/// smaller of the vertex sequence and its reversal.
struct Path {
    std::vector<Vertex> seq;

    std::size_t size() const { return seq.size(); }
    Vertex operator[](std::size_t i) const { return seq[i]; }
    auto operator<=>(const Path&) const = default;
    bool operator==(const Path&) const = default;
};

/// min(seq, reverse(seq)) without any validation.
std::vector<Vertex> orient_canonical(std::vector<Vertex> seq);

bool is_path(const Graph& G, const std::vector<Vertex>& seq);

/// Validates seq and returns it canonically oriented. Throws Error{NotAPath}.
Path canonical_path(const Graph& G, const std::vector<Vertex>& seq);

std::string to_string(const Path& P);

struct SubgraphMap {
    std::vector<int> forward;      // input id -> kernel id, -1 if dropped
    std::vector<Vertex> backward;  // kernel id -> input id, ascending

    bool contains(Vertex v) const { return forward[v] >= 0; }
};

/// Kernel ids follow the relative order of the kept input ids.
std::pair<Graph, SubgraphMap> induced_subgraph(const Graph& G, std::vector<Vertex> S);

/// Maps a path given in kernel ids back to input ids. The map is monotone,
/// so canonical orientation is preserved.
Path map_back(const SubgraphMap& map, const Path& P);

// Text format: "n m" header, then m lines "u v"; '#' starts a comment.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& G);
/// Whitespace-separated vertex ids (one line, '#' comments allowed).
std::vector<Vertex> read_vertex_list(std::istream& in);

}  // namespace kpath
