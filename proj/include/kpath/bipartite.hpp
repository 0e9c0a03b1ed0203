#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace kpath {

/// Bipartite graph with parts A = 0..na-1 and B = 0..nb-1.
/// Edge ids follow the (a, b) lexicographic order.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int na, int nb, std::vector<std::pair<int, int>> edges);

    int na() const { return na_; }
    int nb() const { return nb_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::pair<int, int>& edge(std::size_t id) const { return edges_[id]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    /// Incident edge ids, ordered by the opposite endpoint.
    const std::vector<int>& edges_of_a(int a) const { return byA_[a]; }
    const std::vector<int>& edges_of_b(int b) const { return byB_[b]; }
    int edge_id(int a, int b) const;  // -1 if absent

private:
    int na_ = 0, nb_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> byA_, byB_;
};

/// Set of (a, b) pairs sorted by a.
using Matching = std::vector<std::pair<int, int>>;

bool is_matching(const BipartiteGraph& H, const Matching& M);

Matching max_matching(const BipartiteGraph& H);

/// One augmenting-path search from every free A node at once.
/// mateA/mateB hold partner indices (-1 when free). Edges with blocked[id] set
/// and nodes with frozenA/frozenB set are never used. Returns true and
/// augments in place iff an augmenting path exists.
bool augment_once(const BipartiteGraph& H, std::vector<int>& mateA, std::vector<int>& mateB,
                  const std::vector<char>* blocked = nullptr, const std::vector<char>* frozenA = nullptr,
                  const std::vector<char>* frozenB = nullptr, std::uint64_t* steps = nullptr);

/// Pull-based enumeration of all maximum matchings by edge inclusion/exclusion
/// branching with one augmenting probe per exclusion branch.
class MaximumMatchingEnumerator {
public:
    explicit MaximumMatchingEnumerator(const BipartiteGraph& H, std::uint64_t* steps = nullptr);
    MaximumMatchingEnumerator(const MaximumMatchingEnumerator&) = delete;
    MaximumMatchingEnumerator& operator=(const MaximumMatchingEnumerator&) = delete;
    std::optional<Matching> next();

private:
    enum : char { Free = 0, Forced = 1, Forbidden = 2 };
    struct Node {
        std::vector<char> state;
        std::vector<int> mateA, mateB;
        int branch = -1;  // edge id this node branches on
        int stage = 0;    // 0 fresh, 1 include done, 2 exclude done
    };

    const BipartiteGraph& H_;
    std::uint64_t local_ = 0;
    std::uint64_t* steps_;
    std::vector<Node> stack_;
};

/// Matchings that saturate every target and use no edge at other A nodes.
class SaturatingMatchingEnumerator {
public:
    SaturatingMatchingEnumerator(const BipartiteGraph& H, const std::vector<int>& targets,
                                 std::uint64_t* steps = nullptr);
    SaturatingMatchingEnumerator(const SaturatingMatchingEnumerator&) = delete;
    SaturatingMatchingEnumerator& operator=(const SaturatingMatchingEnumerator&) = delete;
    std::optional<Matching> next();

private:
    BipartiteGraph restricted_;
    std::optional<MaximumMatchingEnumerator> inner_;
};

struct QExpansion {
    int q = 0;
    std::vector<int> hatA, hatB;  // sorted
    Matching expansion;           // sorted (a, b) pairs
    std::vector<int> saturatedB;  // sorted
};

/// Throws Error{IsolatedBNode}. Setting KPATH_VERIFY_EXPANSION=1 in the
/// environment runs verify_q_expansion on every result.
QExpansion q_expansion(const BipartiteGraph& H, int q);

bool verify_q_expansion(const BipartiteGraph& H, const QExpansion& E);

}  // namespace kpath
