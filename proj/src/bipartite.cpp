#include "kpath/bipartite.hpp"

#include "kpath/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace kpath {

BipartiteGraph::BipartiteGraph(int na, int nb, std::vector<std::pair<int, int>> edges)
    : na_(na), nb_(nb), edges_(std::move(edges)), byA_(na), byB_(nb) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (std::size_t id = 0; id < edges_.size(); ++id) {
        auto [a, b] = edges_[id];
        if (a < 0 || a >= na || b < 0 || b >= nb) throw Error(ErrorKind::OutOfRange, "bipartite edge out of range");
        byA_[a].push_back(static_cast<int>(id));
        byB_[b].push_back(static_cast<int>(id));
    }
}

int BipartiteGraph::edge_id(int a, int b) const {
    const auto& ids = byA_[a];
    auto it = std::lower_bound(ids.begin(), ids.end(), b,
                               [this](int id, int value) { return edges_[id].second < value; });
    if (it != ids.end() && edges_[*it].second == b) return *it;
    return -1;
}

bool is_matching(const BipartiteGraph& H, const Matching& M) {
    std::vector<char> usedA(H.na(), 0), usedB(H.nb(), 0);
    for (auto [a, b] : M) {
        if (a < 0 || a >= H.na() || b < 0 || b >= H.nb()) return false;
        if (H.edge_id(a, b) < 0 || usedA[a] || usedB[b]) return false;
        usedA[a] = usedB[b] = 1;
    }
    return true;
}

bool augment_once(const BipartiteGraph& H, std::vector<int>& mateA, std::vector<int>& mateB,
                  const std::vector<char>* blocked, const std::vector<char>* frozenA,
                  const std::vector<char>* frozenB, std::uint64_t* steps) {
    std::uint64_t local = 0;
    std::vector<int> parentB(H.nb(), -1);
    std::vector<char> seenA(H.na(), 0), seenB(H.nb(), 0);
    std::vector<int> queue;
    for (int a = 0; a < H.na(); ++a)
        if (mateA[a] < 0 && !(frozenA && (*frozenA)[a])) {
            seenA[a] = 1;
            queue.push_back(a);
        }
    int found = -1;
    for (std::size_t h = 0; h < queue.size() && found < 0; ++h) {
        int a = queue[h];
        ++local;
        for (int id : H.edges_of_a(a)) {
            ++local;
            if (blocked && (*blocked)[id]) continue;
            int b = H.edge(id).second;
            if (seenB[b] || mateA[a] == b || (frozenB && (*frozenB)[b])) continue;
            seenB[b] = 1;
            parentB[b] = a;
            if (mateB[b] < 0) {
                found = b;
                break;
            }
            int a2 = mateB[b];
            if (!seenA[a2] && !(frozenA && (*frozenA)[a2])) {
                seenA[a2] = 1;
                queue.push_back(a2);
            }
        }
    }
    if (steps) *steps += local + H.na() + H.nb();
    if (found < 0) return false;
    for (int b = found; b >= 0;) {
        int a = parentB[b];
        int prev = mateA[a];
        mateA[a] = b;
        mateB[b] = a;
        b = prev;
    }
    return true;
}

namespace {

Matching from_mates(const std::vector<int>& mateA) {
    Matching M;
    for (int a = 0; a < static_cast<int>(mateA.size()); ++a)
        if (mateA[a] >= 0) M.emplace_back(a, mateA[a]);
    return M;
}

}  // namespace

Matching max_matching(const BipartiteGraph& H) {
    std::vector<int> mateA(H.na(), -1), mateB(H.nb(), -1);
    while (augment_once(H, mateA, mateB)) {
    }
    return from_mates(mateA);
}

MaximumMatchingEnumerator::MaximumMatchingEnumerator(const BipartiteGraph& H, std::uint64_t* steps)
    : H_(H), steps_(steps ? steps : &local_) {
    Node root;
    root.state.assign(H.edge_count(), Free);
    root.mateA.assign(H.na(), -1);
    root.mateB.assign(H.nb(), -1);
    while (augment_once(H, root.mateA, root.mateB, nullptr, nullptr, nullptr, steps_)) {
    }
    stack_.push_back(std::move(root));
}

std::optional<Matching> MaximumMatchingEnumerator::next() {
    while (!stack_.empty()) {
        Node& top = stack_.back();
        *steps_ += 1;
        if (top.stage == 0) {
            int branch = -1;
            for (int a = 0; a < H_.na(); ++a) {
                ++*steps_;
                if (top.mateA[a] < 0) continue;
                int id = H_.edge_id(a, top.mateA[a]);
                if (top.state[id] == Free && (branch < 0 || id < branch)) branch = id;
            }
            if (branch < 0) {
                Matching out = from_mates(top.mateA);
                stack_.pop_back();
                return out;
            }
            top.branch = branch;
            top.stage = 1;
            Node child;
            child.state = top.state;
            child.state[branch] = Forced;
            child.mateA = top.mateA;
            child.mateB = top.mateB;
            *steps_ += H_.edge_count() + H_.na() + H_.nb();
            stack_.push_back(std::move(child));
            continue;
        }
        if (top.stage == 1) {
            top.stage = 2;
            Node child;
            child.state = top.state;
            child.state[top.branch] = Forbidden;
            child.mateA = top.mateA;
            child.mateB = top.mateB;
            auto [a, b] = H_.edge(top.branch);
            child.mateA[a] = -1;
            child.mateB[b] = -1;
            std::vector<char> blocked(H_.edge_count(), 0), frozenA(H_.na(), 0), frozenB(H_.nb(), 0);
            for (std::size_t id = 0; id < H_.edge_count(); ++id) {
                if (child.state[id] == Forbidden) blocked[id] = 1;
                if (child.state[id] == Forced) {
                    frozenA[H_.edge(id).first] = 1;
                    frozenB[H_.edge(id).second] = 1;
                }
            }
            *steps_ += 2 * H_.edge_count() + H_.na() + H_.nb();
            if (augment_once(H_, child.mateA, child.mateB, &blocked, &frozenA, &frozenB, steps_))
                stack_.push_back(std::move(child));
            continue;
        }
        stack_.pop_back();
    }
    return std::nullopt;
}

namespace {

BipartiteGraph restrict_rows(const BipartiteGraph& H, const std::vector<int>& targets) {
    std::vector<char> keep(H.na(), 0);
    for (int a : targets) {
        if (a < 0 || a >= H.na()) throw Error(ErrorKind::OutOfRange, "target out of range");
        keep[a] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : H.edges())
        if (keep[e.first]) edges.push_back(e);
    return BipartiteGraph(H.na(), H.nb(), std::move(edges));
}

}  // namespace

SaturatingMatchingEnumerator::SaturatingMatchingEnumerator(const BipartiteGraph& H, const std::vector<int>& targets,
                                                           std::uint64_t* steps)
    : restricted_(restrict_rows(H, targets)) {
    if (steps) *steps += H.edge_count() + H.na() + H.nb();
    std::vector<char> target(H.na(), 0);
    for (int a : targets) target[a] = 1;
    int want = 0;
    for (char t : target) want += t;
    std::vector<int> mateA(H.na(), -1), mateB(H.nb(), -1);
    int size = 0;
    while (augment_once(restricted_, mateA, mateB, nullptr, nullptr, nullptr, steps)) ++size;
    if (size == want) inner_.emplace(restricted_, steps);
}

std::optional<Matching> SaturatingMatchingEnumerator::next() {
    if (!inner_) return std::nullopt;
    auto M = inner_->next();
    if (!M) inner_.reset();
    return M;
}

QExpansion q_expansion(const BipartiteGraph& H, int q) {
    if (q < 1) throw Error(ErrorKind::OutOfRange, "q must be positive");
    for (int b = 0; b < H.nb(); ++b)
        if (H.edges_of_b(b).empty()) throw Error(ErrorKind::IsolatedBNode, "B node " + std::to_string(b) + " is isolated");

    // Maximum b-matching with capacity q on A and 1 on B.
    std::vector<int> flowB(H.nb(), -1);
    std::vector<char> visited(H.nb(), 0);
    std::function<bool(int)> dfs = [&](int a) -> bool {
        for (int id : H.edges_of_a(a)) {
            int b = H.edge(id).second;
            if (visited[b] || flowB[b] == a) continue;
            visited[b] = 1;
            if (flowB[b] < 0 || dfs(flowB[b])) {
                flowB[b] = a;
                return true;
            }
        }
        return false;
    };
    for (int a = 0; a < H.na(); ++a)
        for (int copy = 0; copy < q; ++copy) {
            std::fill(visited.begin(), visited.end(), 0);
            if (!dfs(a)) break;
        }

    // Alternating reachability from unmatched B nodes.
    std::vector<char> reachA(H.na(), 0), reachB(H.nb(), 0);
    std::vector<int> queueB;
    for (int b = 0; b < H.nb(); ++b)
        if (flowB[b] < 0) {
            reachB[b] = 1;
            queueB.push_back(b);
        }
    for (std::size_t h = 0; h < queueB.size(); ++h) {
        int b = queueB[h];
        for (int id : H.edges_of_b(b)) {
            int a = H.edge(id).first;
            if (a == flowB[b] || reachA[a]) continue;
            reachA[a] = 1;
            for (int id2 : H.edges_of_a(a)) {
                int b2 = H.edge(id2).second;
                if (flowB[b2] == a && !reachB[b2]) {
                    reachB[b2] = 1;
                    queueB.push_back(b2);
                }
            }
        }
    }

    QExpansion E;
    E.q = q;
    for (int a = 0; a < H.na(); ++a)
        if (reachA[a]) E.hatA.push_back(a);
    for (int b = 0; b < H.nb(); ++b) {
        bool inside = true;
        for (int id : H.edges_of_b(b))
            if (!reachA[H.edge(id).first]) inside = false;
        if (inside) E.hatB.push_back(b);
        if (flowB[b] >= 0 && reachA[flowB[b]]) {
            E.expansion.emplace_back(flowB[b], b);
            E.saturatedB.push_back(b);
        }
    }
    std::sort(E.expansion.begin(), E.expansion.end());

    if (const char* env = std::getenv("KPATH_VERIFY_EXPANSION"); env && std::string(env) == "1") {
        if (!verify_q_expansion(H, E)) throw std::logic_error("q-expansion failed verification");
    }
    return E;
}

bool verify_q_expansion(const BipartiteGraph& H, const QExpansion& E) {
    if (E.q < 1) return false;
    std::vector<char> inA(H.na(), 0), inB(H.nb(), 0);
    for (int a : E.hatA) {
        if (a < 0 || a >= H.na() || inA[a]) return false;
        inA[a] = 1;
    }
    for (int b : E.hatB) {
        if (b < 0 || b >= H.nb() || inB[b]) return false;
        inB[b] = 1;
    }
    std::vector<int> degA(H.na(), 0);
    std::vector<char> hitB(H.nb(), 0);
    for (auto [a, b] : E.expansion) {
        if (a < 0 || a >= H.na() || b < 0 || b >= H.nb()) return false;
        if (H.edge_id(a, b) < 0 || !inA[a] || !inB[b] || hitB[b]) return false;
        hitB[b] = 1;
        ++degA[a];
    }
    for (int a : E.hatA)
        if (degA[a] != E.q) return false;
    std::vector<int> sat(E.saturatedB);
    std::sort(sat.begin(), sat.end());
    if (std::adjacent_find(sat.begin(), sat.end()) != sat.end()) return false;
    if (sat.size() != E.expansion.size() || sat.size() != static_cast<std::size_t>(E.q) * E.hatA.size()) return false;
    for (int b : sat)
        if (b < 0 || b >= H.nb() || !hitB[b]) return false;
    // N(hatB) inside hatA
    for (int b : E.hatB)
        for (int id : H.edges_of_b(b))
            if (!inA[H.edge(id).first]) return false;
    std::size_t outsideB = H.nb() - E.hatB.size();
    std::size_t outsideA = H.na() - E.hatA.size();
    return outsideB <= static_cast<std::size_t>(E.q) * outsideA;
}

}  // namespace kpath
