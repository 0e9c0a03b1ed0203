#include "kpath/kernel_vc.hpp"

#include "detail.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace kpath {

namespace {

constexpr int kFree = -1;

int pair_index(int i, int j, int s) {
    // index of {X[i], X[j]}, i < j, in lexicographic pair order
    return i * s - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

AuxiliaryGraph build_auxiliary_H(const Graph& G, const std::vector<Vertex>& X) {
    AuxiliaryGraph aux;
    aux.inX = membership(G.n(), X);
    std::vector<int> rank(G.n(), -1);
    std::vector<Vertex> xs(X);
    std::sort(xs.begin(), xs.end());
    int s = static_cast<int>(xs.size());
    for (int i = 0; i < s; ++i) rank[xs[i]] = i;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) aux.pairs.emplace_back(xs[i], xs[j]);

    std::vector<std::pair<int, int>> edges;
    for (Vertex u = 0; u < G.n(); ++u) {
        if (aux.inX[u] || G.degree(u) < 2) continue;
        for (Vertex w : G.neighbors(u))
            if (!aux.inX[w]) throw Error(ErrorKind::InvalidModulator, "edge outside the vertex cover");
        int b = static_cast<int>(aux.bnodes.size());
        aux.bnodes.push_back(u);
        const auto& nu = G.neighbors(u);
        for (std::size_t i = 0; i < nu.size(); ++i)
            for (std::size_t j = i + 1; j < nu.size(); ++j)
                edges.emplace_back(pair_index(rank[nu[i]], rank[nu[j]], s), b);
    }
    aux.H = BipartiteGraph(static_cast<int>(aux.pairs.size()), static_cast<int>(aux.bnodes.size()), std::move(edges));
    return aux;
}

VcKernel kernelize_vc(const Graph& G, const std::vector<Vertex>& Xin, int k, const KernelOptions& opts) {
    Modulator M = make_modulator(G, ModulatorKind::VertexCover, Xin);
    if (k < 2 || k > G.n()) throw Error(ErrorKind::BadK, "k must lie in [2, n]");

    VcKernel K;
    K.k = k;
    K.X = M.vertices;
    const int n = G.n();
    K.inX = membership(n, K.X);
    K.aux = build_auxiliary_H(G, K.X);
    K.expansion = q_expansion(K.aux.H, 3);

    K.pendantsOf.assign(n, {});
    for (Vertex u = 0; u < n; ++u)
        if (!K.inX[u] && G.degree(u) == 1) K.pendantsOf[G.neighbors(u)[0]].push_back(u);
    K.twoPendant.assign(n, 0);
    K.inR.assign(n, 0);
    for (Vertex x : K.X) {
        const auto& pend = K.pendantsOf[x];
        for (Vertex p : pend) (pend.size() >= 2 ? K.twoPendant[p] : K.inR[p]) = 1;
        // a 3-path may start and end at two pendants of the same x
        std::size_t keep = (k == 3) ? 2 : 1;
        for (std::size_t i = 0; i < std::min(keep, pend.size()); ++i) K.I1plus.push_back(pend[i]);
    }
    std::sort(K.I1plus.begin(), K.I1plus.end());

    K.inHatB.assign(n, 0);
    for (int b : K.expansion.hatB) K.inHatB[K.aux.bnodes[b]] = 1;
    for (int b : K.expansion.saturatedB) K.Bprime.push_back(K.aux.bnodes[b]);
    std::sort(K.Bprime.begin(), K.Bprime.end());
    if (opts.mutation == Mutation::DropBprime && !K.Bprime.empty()) K.Bprime.erase(K.Bprime.begin());
    for (Vertex u : K.aux.bnodes)
        if (!K.inHatB[u]) {
            K.I2rest.push_back(u);
            K.inR[u] = 1;
        }
    K.R = detail::mask_to_list(K.inR);

    K.inKernel.assign(n, 0);
    for (const auto* part : {&K.X, &K.I1plus, &K.Bprime, &K.I2rest})
        for (Vertex v : *part) K.inKernel[v] = 1;
    auto [Gp, map] = induced_subgraph(G, detail::mask_to_list(K.inKernel));
    K.Gp = std::move(Gp);
    K.map = std::move(map);

    std::vector<std::pair<int, int>> keptEdges;
    for (const auto& e : K.aux.H.edges())
        if (K.inKernel[K.aux.bnodes[e.second]]) keptEdges.push_back(e);
    K.Hp = BipartiteGraph(K.aux.H.na(), K.aux.H.nb(), std::move(keptEdges));
    return K;
}

namespace {

// Oriented signature: per position the X/R vertex or kFree, then the two
// 2-pendant endpoint flags.
std::vector<int> oriented_sig(const VcKernel& K, const std::vector<Vertex>& s) {
    std::vector<int> out(s.size() + 2, kFree);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (K.inX[s[i]] || K.inR[s[i]]) out[i] = s[i];
    out[s.size()] = K.twoPendant[s.front()];
    out[s.size() + 1] = K.twoPendant[s.back()];
    return out;
}

std::vector<int> mirror(std::vector<int> sig) {
    std::size_t k = sig.size() - 2;
    std::reverse(sig.begin(), sig.begin() + k);
    std::swap(sig[k], sig[k + 1]);
    return sig;
}

struct VcFrame {
    std::vector<int> sig;
    std::vector<int> freePos;
    std::vector<std::vector<Vertex>> candG, candK;
};

VcFrame make_frame(const Graph& G, const VcKernel& K, const std::vector<int>& sig, std::uint64_t* steps) {
    VcFrame F;
    F.sig = sig;
    const int k = static_cast<int>(sig.size()) - 2;
    for (int f = 0; f < k; ++f) {
        if (sig[f] != kFree) continue;
        std::vector<Vertex> cand;
        if (f > 0 && f < k - 1) {
            Vertex x = sig[f - 1], y = sig[f + 1];
            if (x == kFree || y == kFree || !K.inX[x] || !K.inX[y]) throw std::logic_error("free slot not flanked by X");
            for (Vertex u : G.neighbors(x))
                if (K.inHatB[u] && G.adjacent(u, y)) cand.push_back(u);
        } else {
            if (k < 2) throw std::logic_error("free slot in a 1-path");
            Vertex x = sig[f == 0 ? 1 : k - 2];
            bool bit = sig[f == 0 ? k : k + 1] != 0;
            if (x == kFree || !K.inX[x]) throw std::logic_error("free end not next to X");
            if (bit) {
                if (K.pendantsOf[x].size() >= 2) cand = K.pendantsOf[x];
            } else {
                for (Vertex u : G.neighbors(x))
                    if (K.inHatB[u]) cand.push_back(u);
            }
        }
        if (steps) *steps += G.degree(F.sig[f > 0 ? f - 1 : 1]) + 1;
        std::vector<Vertex> kept;
        for (Vertex u : cand)
            if (K.inKernel[u]) kept.push_back(u);
        F.freePos.push_back(f);
        F.candG.push_back(std::move(cand));
        F.candK.push_back(std::move(kept));
    }
    return F;
}

// Orientation of s whose oriented signature is the class key; for a
// symmetric key, the one with the smaller free-position sequence.
std::vector<Vertex> frame_orientation(const VcKernel& K, const std::vector<Vertex>& s, std::vector<int>& key) {
    auto a = oriented_sig(K, s);
    auto b = mirror(a);
    std::vector<Vertex> rs = detail::reversed(s);
    if (a < b) {
        key = a;
        return s;
    }
    if (b < a) {
        key = b;
        return rs;
    }
    key = a;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (a[i] != kFree) continue;
        if (s[i] != rs[i]) return s[i] < rs[i] ? s : rs;
    }
    return s;
}

bool lex_smallest_in_frame(const VcFrame& F, const std::vector<Vertex>& r, int n, std::uint64_t* steps) {
    const int m = static_cast<int>(F.freePos.size());
    std::vector<Vertex> val(m);
    for (int j = 0; j < m; ++j) val[j] = r[F.freePos[j]];
    std::vector<char> pinned(n, 0);
    for (int i = 0; i < m; ++i) {
        std::vector<std::pair<int, int>> edges;
        for (Vertex u : F.candK[i])
            if (u < val[i] && !pinned[u]) edges.emplace_back(i, u);
        if (!edges.empty()) {
            for (int j = i + 1; j < m; ++j)
                for (Vertex u : F.candK[j])
                    if (!pinned[u]) edges.emplace_back(j, u);
            if (steps) *steps += edges.size() + m + n;
            BipartiteGraph H(m, n, std::move(edges));
            std::vector<int> mateA(m, -1), mateB(n, -1);
            for (int j = i + 1; j < m; ++j) {
                mateA[j] = val[j];
                mateB[val[j]] = j;
            }
            if (augment_once(H, mateA, mateB, nullptr, nullptr, nullptr, steps)) return false;
        }
        pinned[val[i]] = 1;
    }
    return true;
}

std::vector<Vertex> realize(const VcFrame& F, const Matching& M) {
    std::size_t k = F.sig.size() - 2;
    std::vector<Vertex> seq(F.sig.begin(), F.sig.begin() + k);
    for (auto [j, u] : M) seq[F.freePos[j]] = u;
    return seq;
}

class VcLiftStream : public PathStream {
public:
    VcLiftStream(const Graph& G, const VcKernel& K, std::vector<Vertex> seq) : G_(G), K_(K), seq_(std::move(seq)) {}

    std::optional<Path> next() override {
        ++steps_;
        if (stage_ == 0) {
            stage_ = 1;
            return Path{orient_canonical(seq_)};
        }
        if (stage_ == 1) {
            std::vector<int> key;
            auto r = frame_orientation(K_, seq_, key);
            frame_ = make_frame(G_, K_, key, &steps_);
            symmetric_ = (mirror(key) == key);
            if (!lex_smallest_in_frame(frame_, r, G_.n(), &steps_)) {
                stage_ = 3;
                return std::nullopt;
            }
            stage_ = 2;
            i_ = 0;
            u_ = 0;
            open_next_branch();
        }
        while (stage_ == 2) {
            ++steps_;
            if (!sat_) {
                open_next_branch();
                continue;
            }
            auto M = sat_->next();
            if (!M) {
                sat_.reset();
                ++u_;
                open_next_branch();
                continue;
            }
            auto seq = realize(frame_, *M);
            steps_ += seq.size();
            if (symmetric_ && !detail::keeps_orientation(seq)) continue;
            return Path{orient_canonical(std::move(seq))};
        }
        return std::nullopt;
    }

private:
    // Positions the (i_, u_) cursor on the next non-kernel candidate and
    // builds H* for it: kernel candidates before i, u at i, all others after.
    void open_next_branch() {
        const int m = static_cast<int>(frame_.freePos.size());
        while (i_ < m) {
            const auto& cand = frame_.candG[i_];
            while (u_ < cand.size() && K_.inKernel[cand[u_]]) {
                ++u_;
                ++steps_;
            }
            if (u_ < cand.size()) break;
            ++i_;
            u_ = 0;
        }
        if (i_ >= m) {
            stage_ = 3;
            return;
        }
        Vertex u = frame_.candG[i_][u_];
        std::vector<std::pair<int, int>> edges;
        for (int j = 0; j < m; ++j) {
            if (j < i_) {
                for (Vertex w : frame_.candK[j]) edges.emplace_back(j, w);
            } else if (j == i_) {
                edges.emplace_back(j, u);
            } else {
                for (Vertex w : frame_.candG[j])
                    if (w != u) edges.emplace_back(j, w);
            }
        }
        steps_ += edges.size() + m + G_.n();
        BipartiteGraph Hstar(m, G_.n(), std::move(edges));
        std::vector<int> targets(m);
        for (int j = 0; j < m; ++j) targets[j] = j;
        sat_.emplace(Hstar, targets, &steps_);
    }

    const Graph& G_;
    const VcKernel& K_;
    std::vector<Vertex> seq_;
    int stage_ = 0;
    VcFrame frame_;
    bool symmetric_ = false;
    int i_ = 0;
    std::size_t u_ = 0;
    std::optional<SaturatingMatchingEnumerator> sat_;
};

}  // namespace

std::vector<int> class_key_vc(const VcKernel& K, const std::vector<Vertex>& seq) {
    auto a = oriented_sig(K, seq);
    auto b = mirror(a);
    return std::min(a, b);
}

PositionalSignature signature_vc(const Graph& G, const VcKernel& K, const Path& P) {
    auto s = canonical_path(G, P.seq).seq;
    PositionalSignature sig;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (K.inX[s[i]] || K.inR[s[i]]) sig.emplace_back(s[i], static_cast<int>(i) + 1);
    return sig;
}

bool equivalent_vc(const VcKernel& K, const Path& P1, const Path& P2) {
    if (P1.size() != P2.size() || P1.size() == 0) return false;
    return class_key_vc(K, P1.seq) == class_key_vc(K, P2.seq);
}

Matching occupied_edges(const AuxiliaryGraph& aux, const Path& P) {
    Matching M;
    const auto& s = P.seq;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        Vertex x = s[i - 1], u = s[i], y = s[i + 1];
        if (!aux.inX[x] || !aux.inX[y] || aux.inX[u]) continue;
        auto b = std::lower_bound(aux.bnodes.begin(), aux.bnodes.end(), u);
        auto a = std::lower_bound(aux.pairs.begin(), aux.pairs.end(), Edge{std::min(x, y), std::max(x, y)});
        if (b == aux.bnodes.end() || *b != u || a == aux.pairs.end()) continue;
        M.emplace_back(static_cast<int>(a - aux.pairs.begin()), static_cast<int>(b - aux.bnodes.begin()));
    }
    std::sort(M.begin(), M.end());
    return M;
}

bool is_lex_smallest_vc(const Graph& G, const VcKernel& K, const Path& P) {
    auto seq = detail::kernel_path_to_input(K.Gp, K.map, P, K.k);
    std::vector<int> key;
    auto r = frame_orientation(K, seq, key);
    auto F = make_frame(G, K, key, nullptr);
    return lex_smallest_in_frame(F, r, G.n(), nullptr);
}

std::unique_ptr<PathStream> lift_vc(const Graph& G, const VcKernel& K, const Path& P) {
    auto seq = detail::kernel_path_to_input(K.Gp, K.map, P, K.k);
    return std::make_unique<VcLiftStream>(G, K, std::move(seq));
}

}  // namespace kpath
