#include "kpath/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace kpath {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::NotAPath: return "NotAPath";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::InvalidModulator: return "InvalidModulator";
        case ErrorKind::BadK: return "BadK";
        case ErrorKind::NotAKPath: return "NotAKPath";
        case ErrorKind::IsolatedBNode: return "IsolatedBNode";
        case ErrorKind::InfeasibleSignature: return "InfeasibleSignature";
        case ErrorKind::NotSuitable: return "NotSuitable";
    }
    return "Unknown";
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "negative vertex count");
    Graph G;
    G.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::OutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at " + std::to_string(u));
        G.adj_[u].push_back(v);
        G.adj_[v].push_back(u);
    }
    for (Vertex u = 0; u < n; ++u) {
        auto& nu = G.adj_[u];
        std::sort(nu.begin(), nu.end());
        if (std::adjacent_find(nu.begin(), nu.end()) != nu.end())
            throw Error(ErrorKind::DuplicateEdge, "duplicate edge at " + std::to_string(u));
    }
    G.m_ = edges.size();
    return G;
}

std::vector<Vertex> orient_canonical(std::vector<Vertex> seq) {
    if (std::lexicographical_compare(seq.rbegin(), seq.rend(), seq.begin(), seq.end()))
        std::reverse(seq.begin(), seq.end());
    return seq;
}

bool is_path(const Graph& G, const std::vector<Vertex>& seq) {
    std::vector<char> seen(G.n(), 0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        Vertex v = seq[i];
        if (v < 0 || v >= G.n() || seen[v]) return false;
        seen[v] = 1;
        if (i > 0 && !G.adjacent(seq[i - 1], v)) return false;
    }
    return true;
}

Path canonical_path(const Graph& G, const std::vector<Vertex>& seq) {
    if (!is_path(G, seq)) throw Error(ErrorKind::NotAPath, "not a path: " + to_string(Path{seq}));
    return Path{orient_canonical(seq)};
}

std::string to_string(const Path& P) {
    std::string s;
    for (std::size_t i = 0; i < P.seq.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(P.seq[i]);
    }
    return s;
}

std::pair<Graph, SubgraphMap> induced_subgraph(const Graph& G, std::vector<Vertex> S) {
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    SubgraphMap map;
    map.forward.assign(G.n(), -1);
    for (Vertex v : S) {
        if (v < 0 || v >= G.n()) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v));
        map.forward[v] = static_cast<int>(map.backward.size());
        map.backward.push_back(v);
    }
    std::vector<Edge> edges;
    for (Vertex v : S)
        for (Vertex w : G.neighbors(v))
            if (v < w && map.forward[w] >= 0) edges.emplace_back(map.forward[v], map.forward[w]);
    return {build_graph(static_cast<int>(S.size()), edges), std::move(map)};
}

Path map_back(const SubgraphMap& map, const Path& P) {
    Path out;
    out.seq.reserve(P.size());
    for (Vertex v : P.seq) out.seq.push_back(map.backward[v]);
    return out;
}

namespace {

// Strips comments and returns whitespace tokens.
std::vector<long long> read_numbers(std::istream& in) {
    std::vector<long long> nums;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(tok, &used);
            } catch (const std::exception&) {
                throw Error(ErrorKind::Parse, "bad token '" + tok + "'");
            }
            if (used != tok.size()) throw Error(ErrorKind::Parse, "bad token '" + tok + "'");
            nums.push_back(value);
        }
    }
    return nums;
}

}  // namespace

Graph read_graph(std::istream& in) {
    auto nums = read_numbers(in);
    if (nums.size() < 2) throw Error(ErrorKind::Parse, "missing 'n m' header");
    long long n = nums[0], m = nums[1];
    if (n < 0 || m < 0 || n > (1LL << 30)) throw Error(ErrorKind::Parse, "bad header");
    if (nums.size() != static_cast<std::size_t>(2 + 2 * m))
        throw Error(ErrorKind::Parse, "expected " + std::to_string(m) + " edges");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        long long u = nums[2 + 2 * i], v = nums[3 + 2 * i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::OutOfRange, "edge endpoint out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return build_graph(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& G) {
    out << G.n() << ' ' << G.m() << '\n';
    for (auto [u, v] : G.edges()) out << u << ' ' << v << '\n';
}

std::vector<Vertex> read_vertex_list(std::istream& in) {
    std::vector<Vertex> out;
    for (long long v : read_numbers(in)) {
        if (v < 0 || v > (1LL << 30)) throw Error(ErrorKind::Parse, "bad vertex id");
        out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

}  // namespace kpath
