#include "kpath/kernel_cvd.hpp"

#include "detail.hpp"
#include "kpath/bipartite.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace kpath {

std::string to_string(const TokenSignature& sig) {
    std::string s;
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i) s += ' ';
        if (sig[i] == kGapC) s += "gC";
        else if (sig[i] == kGapN) s += "gN";
        else s += std::to_string(sig[i]);
    }
    return s;
}

namespace {

// Rare closure over pairs and singles, then p frequent marks per type.
void mark_into(const Graph& G, const std::vector<Vertex>& X, int p, std::vector<char>& inR, std::vector<char>& freq) {
    const int n = G.n();
    auto inX = membership(n, X);
    std::vector<std::vector<Vertex>> types;
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j) {
            std::vector<Vertex> common;
            for (Vertex c : G.neighbors(X[i]))
                if (!inX[c] && G.adjacent(c, X[j])) common.push_back(c);
            types.push_back(std::move(common));
        }
    for (Vertex x : X) {
        std::vector<Vertex> single;
        for (Vertex c : G.neighbors(x))
            if (!inX[c]) single.push_back(c);
        types.push_back(std::move(single));
    }
    inR.assign(n, 0);
    freq.assign(n, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& W : types) {
            int open = 0;
            for (Vertex c : W) open += !inR[c];
            if (open > 0 && open <= p) {
                for (Vertex c : W) inR[c] = 1;
                changed = true;
            }
        }
    }
    for (const auto& W : types) {
        int taken = 0;
        for (Vertex c : W)
            if (!inR[c] && taken < p) {
                freq[c] = 1;
                ++taken;
            }
    }
}

bool is_n(const CvdKernel& K, Vertex v) { return K.inC[v] && !K.inR[v]; }

}  // namespace

std::pair<std::vector<Vertex>, std::vector<Vertex>> mark_cvd(const Graph& G, const std::vector<Vertex>& Xin) {
    Modulator M = make_modulator(G, ModulatorKind::CliqueDeletion, Xin);
    std::vector<char> inR, freq;
    mark_into(G, M.vertices, 2 * (static_cast<int>(M.vertices.size()) + 1), inR, freq);
    return {detail::mask_to_list(inR), detail::mask_to_list(freq)};
}

CvdKernel kernelize_cvd(const Graph& G, const std::vector<Vertex>& Xin, int k, const KernelOptions& opts) {
    Modulator M = make_modulator(G, ModulatorKind::CliqueDeletion, Xin);
    if (k < 2 || k > G.n()) throw Error(ErrorKind::BadK, "k must lie in [2, n]");
    const int n = G.n();
    CvdKernel K;
    K.X = M.vertices;
    K.k = k;
    const int ell = static_cast<int>(K.X.size());
    K.p = 2 * (ell + 1);
    K.inX = membership(n, K.X);
    K.inC.assign(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (!K.inX[v]) {
            K.inC[v] = 1;
            K.C.push_back(v);
        }
    std::vector<char> freq;
    mark_into(G, K.X, K.p, K.inR, freq);
    K.marked.assign(n, 0);
    int markedCount = 0, rareCount = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (K.inR[v]) {
            K.rare.push_back(v);
            ++rareCount;
        } else if (freq[v]) {
            K.frequent.push_back(v);
        }
        K.marked[v] = K.inR[v] || freq[v];
        markedCount += K.marked[v];
    }

    K.floorK = std::max({1, 4 * ell, 3 * ell + rareCount});
    K.cap = opts.clique_cap ? *opts.clique_cap : 4 * (ell + 1) * (ell + 1) * (ell + 1);
    K.cap = std::max({K.cap, markedCount, rareCount + K.floorK});
    const int csize = static_cast<int>(K.C.size());
    K.q = std::max(0, std::min(csize - K.cap, k - K.floorK));

    std::vector<Vertex> unmarked;
    for (Vertex v : K.C)
        if (!K.marked[v]) unmarked.push_back(v);
    std::size_t cursor = 0;
    for (int i = 0; i < K.q; ++i) K.removedFirstStage.push_back(unmarked[cursor++]);
    int remaining = csize - K.q;
    while (remaining > K.cap) {
        K.removedSecondStage.push_back(unmarked[cursor++]);
        --remaining;
    }
    K.kp = k - K.q;
    if (opts.mutation == Mutation::ShiftKp) K.kp += 1;

    K.inKernel.assign(n, 1);
    for (Vertex v : K.removedFirstStage) K.inKernel[v] = 0;
    for (Vertex v : K.removedSecondStage) K.inKernel[v] = 0;
    for (Vertex v : K.C)
        if (K.inKernel[v]) K.Cp.push_back(v);
    auto [Gp, map] = induced_subgraph(G, detail::mask_to_list(K.inKernel));
    K.Gp = std::move(Gp);
    K.map = std::move(map);
    return K;
}

TokenSignature cvd_tokens(const std::vector<char>& inX, const std::vector<char>& inR, const std::vector<Vertex>& seq) {
    enum { Start, End, X, R };
    auto type = [&](Vertex v) { return inX[v] ? X : R; };
    TokenSignature out;
    const std::size_t k = seq.size();
    for (std::size_t i = 0; i < k;) {
        if (inX[seq[i]] || inR[seq[i]]) {
            out.push_back(seq[i]);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < k && !inX[seq[j]] && !inR[seq[j]]) ++j;
        int left = i > 0 ? type(seq[i - 1]) : Start;
        int right = j < k ? type(seq[j]) : End;
        if (left == X && right == X) {
            if (j - i == 1) out.push_back(kGapC);
            else out.insert(out.end(), {kGapN, kGapN});
        } else if (left == X || right == X) {
            out.push_back(kGapN);
        }
        i = j;
    }
    return out;
}

TokenSignature signature_cvd(const Graph& G, const CvdKernel& K, const Path& P) {
    return cvd_tokens(K.inX, K.inR, canonical_path(G, P.seq).seq);
}

std::vector<int> class_key_cvd(const CvdKernel& K, const std::vector<Vertex>& seq) {
    auto a = cvd_tokens(K.inX, K.inR, seq);
    auto b = detail::reversed(a);
    return std::min(a, b);
}

namespace {

enum class SegKind { Empty, GapC, GapNN, GapNLeft, GapNRight, SlotOnly };

struct Segment {
    SegKind kind = SegKind::Empty;
    Vertex left = -1, right = -1;  // anchors, -1 at path ends
    int slot = -1;
    int gap1 = -1, gap2 = -1;
};

struct Gap {
    Vertex adj1 = -1, adj2 = -1;
};

struct CvdFrame {
    TokenSignature sig;
    std::vector<Vertex> anchors;
    std::vector<Segment> segs;  // anchors.size() + 1
    std::vector<Gap> gaps;
    int slots = 0;
    int fixed() const { return static_cast<int>(anchors.size() + gaps.size()); }
};

[[noreturn]] void bad_signature(const TokenSignature& sig) {
    throw Error(ErrorKind::InfeasibleSignature, "malformed token sequence: " + to_string(sig));
}

CvdFrame make_frame(const CvdKernel& K, const TokenSignature& sig) {
    enum { Start, End, X, R };
    CvdFrame F;
    F.sig = sig;
    std::vector<int> group;
    Vertex prev = -1;
    auto finish = [&](Vertex right) {
        Segment seg;
        seg.left = prev;
        seg.right = right;
        int lt = prev < 0 ? Start : (K.inX[prev] ? X : R);
        int rt = right < 0 ? End : (K.inX[right] ? X : R);
        auto add_gap = [&](Vertex a, Vertex b) {
            F.gaps.push_back({a, b});
            return static_cast<int>(F.gaps.size()) - 1;
        };
        if (group.empty()) {
            seg.kind = (lt != X && rt != X) ? SegKind::SlotOnly : SegKind::Empty;
        } else if (group == std::vector<int>{kGapC}) {
            if (lt != X || rt != X) bad_signature(sig);
            seg.kind = SegKind::GapC;
            seg.gap1 = add_gap(prev, right);
        } else if (group == std::vector<int>{kGapN}) {
            if (lt == X && rt != X) {
                seg.kind = SegKind::GapNLeft;
                seg.gap1 = add_gap(prev, -1);
            } else if (rt == X && lt != X) {
                seg.kind = SegKind::GapNRight;
                seg.gap1 = add_gap(right, -1);
            } else {
                bad_signature(sig);
            }
        } else if (group == std::vector<int>{kGapN, kGapN}) {
            if (lt != X || rt != X) bad_signature(sig);
            seg.kind = SegKind::GapNN;
            seg.gap1 = add_gap(prev, -1);
            seg.gap2 = add_gap(right, -1);
        } else {
            bad_signature(sig);
        }
        if (seg.kind != SegKind::Empty && seg.kind != SegKind::GapC) seg.slot = F.slots++;
        F.segs.push_back(seg);
        group.clear();
    };
    for (int t : sig) {
        if (t >= 0) {
            if (t >= static_cast<int>(K.inX.size()) || (!K.inX[t] && !K.inR[t])) bad_signature(sig);
            finish(t);
            F.anchors.push_back(t);
            prev = t;
        } else {
            group.push_back(t);
        }
    }
    finish(-1);
    return F;
}

struct Parts {
    std::vector<Vertex> gapV;
    std::vector<std::vector<Vertex>> contents;
};

std::vector<Vertex> build(const CvdFrame& F, const Parts& parts) {
    std::vector<Vertex> seq;
    for (std::size_t s = 0; s < F.segs.size(); ++s) {
        const auto& seg = F.segs[s];
        auto slot = [&]() {
            const auto& c = parts.contents[seg.slot];
            seq.insert(seq.end(), c.begin(), c.end());
        };
        switch (seg.kind) {
            case SegKind::Empty: break;
            case SegKind::GapC: seq.push_back(parts.gapV[seg.gap1]); break;
            case SegKind::GapNN:
                seq.push_back(parts.gapV[seg.gap1]);
                slot();
                seq.push_back(parts.gapV[seg.gap2]);
                break;
            case SegKind::GapNLeft:
                seq.push_back(parts.gapV[seg.gap1]);
                slot();
                break;
            case SegKind::GapNRight:
                slot();
                seq.push_back(parts.gapV[seg.gap1]);
                break;
            case SegKind::SlotOnly: slot(); break;
        }
        if (s < F.anchors.size()) seq.push_back(F.anchors[s]);
    }
    return seq;
}

std::optional<Parts> decompose(const CvdFrame& F, const std::vector<Vertex>& seq) {
    Parts parts;
    parts.gapV.assign(F.gaps.size(), -1);
    parts.contents.assign(F.slots, {});
    std::size_t pos = 0;
    for (std::size_t s = 0; s < F.segs.size(); ++s) {
        const auto& seg = F.segs[s];
        std::vector<Vertex> run;
        bool last = s == F.anchors.size();
        while (pos < seq.size() && (last || seq[pos] != F.anchors[s])) run.push_back(seq[pos++]);
        if (!last) {
            if (pos >= seq.size()) return std::nullopt;
            ++pos;
        }
        const std::size_t len = run.size();
        switch (seg.kind) {
            case SegKind::Empty:
                if (len != 0) return std::nullopt;
                break;
            case SegKind::GapC:
                if (len != 1) return std::nullopt;
                parts.gapV[seg.gap1] = run[0];
                break;
            case SegKind::GapNN:
                if (len < 2) return std::nullopt;
                parts.gapV[seg.gap1] = run.front();
                parts.gapV[seg.gap2] = run.back();
                parts.contents[seg.slot].assign(run.begin() + 1, run.end() - 1);
                break;
            case SegKind::GapNLeft:
                if (len < 1) return std::nullopt;
                parts.gapV[seg.gap1] = run.front();
                parts.contents[seg.slot].assign(run.begin() + 1, run.end());
                break;
            case SegKind::GapNRight:
                if (len < 1) return std::nullopt;
                parts.gapV[seg.gap1] = run.back();
                parts.contents[seg.slot].assign(run.begin(), run.end() - 1);
                break;
            case SegKind::SlotOnly: parts.contents[seg.slot] = run; break;
        }
    }
    if (pos != seq.size()) return std::nullopt;
    return parts;
}

bool gap_ok(const Graph& G, const Gap& g, Vertex v) {
    return G.adjacent(g.adj1, v) && (g.adj2 < 0 || G.adjacent(g.adj2, v));
}

// Sequence element following each slot, -1 when the slot ends the path.
std::vector<Vertex> slot_successors(const CvdFrame& F, const std::vector<Vertex>& gapV) {
    std::vector<Vertex> next(F.slots, -1);
    for (const auto& seg : F.segs) {
        if (seg.slot < 0) continue;
        if (seg.kind == SegKind::GapNN) next[seg.slot] = gapV[seg.gap2];
        else if (seg.kind == SegKind::GapNRight) next[seg.slot] = gapV[seg.gap1];
        else next[seg.slot] = seg.right;
    }
    return next;
}

std::optional<std::vector<Vertex>> smallest_kernel_realization(const Graph& G, const CvdKernel& K, const CvdFrame& F,
                                                               std::uint64_t* steps) {
    const int n = G.n();
    std::vector<char> used(n, 0);
    Parts parts;
    for (const auto& g : F.gaps) {
        Vertex best = -1;
        for (Vertex v : G.neighbors(g.adj1)) {
            if (steps) ++*steps;
            if (K.inKernel[v] && is_n(K, v) && !used[v] && gap_ok(G, g, v)) {
                best = v;
                break;
            }
        }
        if (best < 0) return std::nullopt;
        used[best] = 1;
        parts.gapV.push_back(best);
    }
    int m = K.kp - F.fixed();
    if (m < 0 || (m > 0 && F.slots == 0)) return std::nullopt;
    std::vector<Vertex> rem;
    for (Vertex v = 0; v < n && static_cast<int>(rem.size()) < m; ++v)
        if (K.inKernel[v] && is_n(K, v) && !used[v]) rem.push_back(v);
    if (steps) *steps += n;
    if (static_cast<int>(rem.size()) < m) return std::nullopt;
    parts.contents.assign(F.slots, {});
    auto next = slot_successors(F, parts.gapV);
    std::size_t ptr = 0;
    for (int j = 0; j < F.slots; ++j) {
        bool lastSlot = j == F.slots - 1;
        while (ptr < rem.size() && (lastSlot || (next[j] >= 0 && rem[ptr] < next[j]) || next[j] < 0))
            parts.contents[j].push_back(rem[ptr++]);
    }
    return build(F, parts);
}

// Realization of a kernel path used as the input of the non-suitable lift:
// the orientation matching the class key, canonical when both match.
std::vector<Vertex> frame_orientation(const CvdKernel& K, const std::vector<Vertex>& seq, TokenSignature& key) {
    auto a = cvd_tokens(K.inX, K.inR, seq);
    auto b = detail::reversed(a);
    if (a < b) {
        key = a;
        return seq;
    }
    if (b < a) {
        key = b;
        return detail::reversed(seq);
    }
    key = a;
    return orient_canonical(seq);
}

std::vector<Vertex> ns_realization(const Graph& G, const CvdKernel& K, const CvdFrame& F,
                                   const std::vector<Vertex>& frameSeq, std::uint64_t* steps) {
    if (K.q == 0) return frameSeq;
    auto parts = decompose(F, frameSeq);
    if (!parts || F.slots == 0) throw std::logic_error("kernel path does not fit its own class frame");
    std::vector<char> inP(G.n(), 0);
    for (Vertex v : frameSeq) inP[v] = 1;
    auto& tail = parts->contents[F.slots - 1];
    int added = 0;
    // only vertices outside the kernel, so that P is recovered by deleting them
    for (Vertex v = 0; v < G.n() && added < K.q; ++v) {
        if (is_n(K, v) && !K.inKernel[v] && !inP[v]) {
            tail.push_back(v);
            ++added;
        }
    }
    if (steps) *steps += G.n();
    if (added < K.q) throw std::logic_error("not enough clique vertices to extend a kernel path");
    return build(F, *parts);
}

// Next composition of total into parts.size() parts, colexicographic.
bool next_composition(std::vector<int>& c) {
    // colex on c is lex on reversed c
    const int t = static_cast<int>(c.size());
    int j = -1;
    for (int i = 0; i < t; ++i)
        if (c[i] > 0) {
            j = i;
            break;
        }
    // the largest index of reversed c with a positive entry is the smallest index of c
    if (j < 0 || j == t - 1) return false;
    int val = c[j];
    c[j] = 0;
    c[j + 1] += 1;
    c[0] = val - 1;
    return true;
}

std::vector<int> first_composition(int parts, int total) {
    std::vector<int> c(parts, 0);
    if (parts > 0) c[0] = total;
    return c;
}

// Injective tuples of length q over 0..a-1 in lexicographic order.
class TupleIter {
public:
    TupleIter(int a, int q) : a_(a), q_(q), used_(a, 0) {}
    bool next() {
        if (!started_) {
            started_ = true;
            if (a_ < q_) return false;
            idx_.resize(q_);
            for (int i = 0; i < q_; ++i) {
                idx_[i] = i;
                used_[i] = 1;
            }
            return true;
        }
        for (int pos = q_ - 1; pos >= 0; --pos) {
            used_[idx_[pos]] = 0;
            int j = idx_[pos] + 1;
            while (j < a_ && used_[j]) ++j;
            if (j < a_) {
                idx_[pos] = j;
                used_[j] = 1;
                int fill = 0;
                for (int p = pos + 1; p < q_; ++p) {
                    while (used_[fill]) ++fill;
                    idx_[p] = fill;
                    used_[fill] = 1;
                }
                return true;
            }
        }
        return false;
    }
    const std::vector<int>& tuple() const { return idx_; }

private:
    int a_, q_;
    std::vector<char> used_;
    std::vector<int> idx_;
    bool started_ = false;
};

class CvdLiftStream : public PathStream {
public:
    CvdLiftStream(const Graph& G, const CvdKernel& K, std::vector<Vertex> seq, bool requireSuitable)
        : G_(G), K_(K), seq_(std::move(seq)), requireSuitable_(requireSuitable) {
        if (requireSuitable_) {
            setup();
            if (!suitable_) throw Error(ErrorKind::NotSuitable, "path is not the suitable path of its class");
        }
    }

    std::optional<Path> next() override {
        ++steps_;
        if (stage_ == Stage::Init) {
            if (!setupDone_) setup();
            if (!suitable_) {
                stage_ = Stage::Done;
                auto r = ns_realization(G_, K_, frame_, frameSeq_, &steps_);
                return Path{orient_canonical(std::move(r))};
            }
            stage_ = Stage::Stars;
            if (K_.q == 0) {
                if (!anyOutsideN_) stage_ = Stage::Done;
                return Path{orient_canonical(seq_)};
            }
        }
        while (stage_ == Stage::Stars) {
            ++steps_;
            if (inTails_) {
                if (auto out = next_tail()) return out;
                inTails_ = false;
                continue;
            }
            if (!next_pstar()) {
                stage_ = Stage::Done;
                break;
            }
            if (K_.q == 0) {
                if (symmetric_ && !detail::keeps_orientation(pstar_)) continue;
                return Path{orient_canonical(pstar_)};
            }
            start_tails();
        }
        return std::nullopt;
    }

private:
    enum class Stage { Init, Stars, Done };

    struct Pos {
        bool gap;
        int index;  // gap index or slot index
    };

    void setup() {
        setupDone_ = true;
        frameSeq_ = frame_orientation(K_, seq_, key_);
        frame_ = make_frame(K_, key_);
        symmetric_ = detail::reversed(key_) == key_;
        auto best = smallest_kernel_realization(G_, K_, frame_, &steps_);
        suitable_ = best && orient_canonical(*best) == orient_canonical(seq_);
        rep_ = orient_canonical(seq_);
        for (Vertex v = 0; v < G_.n(); ++v) {
            if (is_n(K_, v)) {
                allN_.push_back(v);
                if (!K_.inKernel[v]) anyOutsideN_ = true;
            }
        }
        steps_ += G_.n();
    }

    // Layout of a k'-realization for the current slot counts, with candidates.
    void open_vector() {
        layout_.clear();
        candG_.clear();
        candK_.clear();
        for (const auto& seg : frame_.segs) {
            auto cells = [&]() {
                for (int c = 0; c < counts_[seg.slot]; ++c) layout_.push_back({false, seg.slot});
            };
            switch (seg.kind) {
                case SegKind::Empty: break;
                case SegKind::GapC: layout_.push_back({true, seg.gap1}); break;
                case SegKind::GapNN:
                    layout_.push_back({true, seg.gap1});
                    cells();
                    layout_.push_back({true, seg.gap2});
                    break;
                case SegKind::GapNLeft:
                    layout_.push_back({true, seg.gap1});
                    cells();
                    break;
                case SegKind::GapNRight:
                    cells();
                    layout_.push_back({true, seg.gap1});
                    break;
                case SegKind::SlotOnly: cells(); break;
            }
        }
        for (const auto& pos : layout_) {
            std::vector<Vertex> g, kk;
            for (Vertex v : allN_) {
                ++steps_;
                if (pos.gap && !gap_ok(G_, frame_.gaps[pos.index], v)) continue;
                g.push_back(v);
                if (K_.inKernel[v]) kk.push_back(v);
            }
            candG_.push_back(std::move(g));
            candK_.push_back(std::move(kk));
        }
        groupAPending_ = K_.q > 0;
        bi_ = 0;
        bu_ = 0;
    }

    bool next_count_vector() {
        const int m = K_.kp - frame_.fixed();
        if (!vectorStarted_) {
            vectorStarted_ = true;
            if (m < 0 || (m > 0 && frame_.slots == 0)) return false;
            counts_ = first_composition(frame_.slots, m);
            return true;
        }
        return next_composition(counts_);
    }

    void open_matching(int i, Vertex u) {
        const int L = static_cast<int>(layout_.size());
        std::vector<std::pair<int, int>> edges;
        for (int j = 0; j < L; ++j) {
            if (i < 0 || j < i) {
                for (Vertex w : candK_[j]) edges.emplace_back(j, w);
            } else if (j == i) {
                edges.emplace_back(j, u);
            } else {
                for (Vertex w : candG_[j])
                    if (w != u) edges.emplace_back(j, w);
            }
        }
        steps_ += edges.size() + L + G_.n();
        BipartiteGraph H(L, G_.n(), std::move(edges));
        std::vector<int> targets(L);
        for (int j = 0; j < L; ++j) targets[j] = j;
        sat_.emplace(H, targets, &steps_);
    }

    bool next_pstar() {
        while (true) {
            ++steps_;
            if (sat_) {
                auto M = sat_->next();
                if (M) {
                    Parts parts;
                    parts.gapV.assign(frame_.gaps.size(), -1);
                    parts.contents.assign(frame_.slots, {});
                    std::vector<Vertex> at(layout_.size(), -1);
                    for (auto [j, v] : *M) at[j] = v;
                    for (std::size_t j = 0; j < layout_.size(); ++j) {
                        if (layout_[j].gap) parts.gapV[layout_[j].index] = at[j];
                        else parts.contents[layout_[j].index].push_back(at[j]);
                    }
                    pstar_ = build(frame_, parts);
                    pstarParts_ = std::move(parts);
                    steps_ += pstar_.size();
                    return true;
                }
                sat_.reset();
                continue;
            }
            if (!haveVector_) {
                if (!next_count_vector()) return false;
                haveVector_ = true;
                open_vector();
                continue;
            }
            if (groupAPending_) {
                groupAPending_ = false;
                open_matching(-1, -1);
                continue;
            }
            const int L = static_cast<int>(layout_.size());
            while (bi_ < L) {
                const auto& cand = candG_[bi_];
                while (bu_ < cand.size() && K_.inKernel[cand[bu_]]) {
                    ++bu_;
                    ++steps_;
                }
                if (bu_ < cand.size()) break;
                ++bi_;
                bu_ = 0;
            }
            if (bi_ >= L) {
                haveVector_ = false;
                continue;
            }
            open_matching(bi_, candG_[bi_][bu_]);
            ++bu_;
        }
    }

    void start_tails() {
        if (frame_.slots == 0) throw std::logic_error("class without insertion slots at k' < k");
        inTails_ = true;
        std::vector<char> inP(G_.n(), 0);
        for (Vertex v : pstar_) inP[v] = 1;
        avail_.clear();
        for (Vertex v : allN_)
            if (!inP[v]) avail_.push_back(v);
        steps_ += allN_.size();
        lastSlot_ = 0;
        for (int j = 0; j < frame_.slots; ++j)
            if (!pstarParts_.contents[j].empty()) lastSlot_ = j;
        dist_ = first_composition(frame_.slots - lastSlot_, K_.q);
        tuples_.emplace(static_cast<int>(avail_.size()), K_.q);
    }

    std::optional<Path> next_tail() {
        while (true) {
            ++steps_;
            if (!tuples_->next()) {
                if (!next_composition(dist_)) return std::nullopt;
                tuples_.emplace(static_cast<int>(avail_.size()), K_.q);
                continue;
            }
            Parts parts = pstarParts_;
            const auto& tup = tuples_->tuple();
            std::size_t ptr = 0;
            for (std::size_t d = 0; d < dist_.size(); ++d)
                for (int c = 0; c < dist_[d]; ++c) parts.contents[lastSlot_ + d].push_back(avail_[tup[ptr++]]);
            auto O = build(frame_, parts);
            steps_ += O.size();
            if (symmetric_ && !detail::keeps_orientation(O)) continue;
            if (skipped(O) || (symmetric_ && skipped(detail::reversed(O)))) continue;
            return Path{orient_canonical(std::move(O))};
        }
    }

    // Whether O is the non-suitable lift of the kernel path left after
    // removing its last q slot vertices.
    bool skipped(const std::vector<Vertex>& O) {
        auto parts = decompose(frame_, O);
        steps_ += O.size();
        if (!parts) return false;
        int drop = K_.q;
        for (int j = frame_.slots - 1; j >= 0 && drop > 0; --j) {
            auto& c = parts->contents[j];
            while (!c.empty() && drop > 0) {
                c.pop_back();
                --drop;
            }
        }
        auto star = build(frame_, *parts);
        for (Vertex v : star)
            if (!K_.inKernel[v]) return false;
        if (orient_canonical(star) == rep_) return false;
        TokenSignature key;
        auto starFrame = frame_orientation(K_, star, key);
        return ns_realization(G_, K_, frame_, starFrame, &steps_) == O;
    }

    const Graph& G_;
    const CvdKernel& K_;
    std::vector<Vertex> seq_;
    bool requireSuitable_;
    bool setupDone_ = false;
    Stage stage_ = Stage::Init;

    TokenSignature key_;
    std::vector<Vertex> frameSeq_;
    CvdFrame frame_;
    bool symmetric_ = false;
    bool suitable_ = false;
    std::vector<Vertex> rep_;
    std::vector<Vertex> allN_;
    bool anyOutsideN_ = false;

    bool vectorStarted_ = false;
    bool haveVector_ = false;
    std::vector<int> counts_;
    std::vector<Pos> layout_;
    std::vector<std::vector<Vertex>> candG_, candK_;
    bool groupAPending_ = false;
    int bi_ = 0;
    std::size_t bu_ = 0;
    std::optional<SaturatingMatchingEnumerator> sat_;
    std::vector<Vertex> pstar_;
    Parts pstarParts_;

    bool inTails_ = false;
    std::vector<Vertex> avail_;
    int lastSlot_ = 0;
    std::vector<int> dist_;
    std::optional<TupleIter> tuples_;
};

}  // namespace

std::pair<std::vector<Vertex>, std::vector<Vertex>> path_order_keys(const CvdKernel& K, const std::vector<Vertex>& seq) {
    auto F = make_frame(K, cvd_tokens(K.inX, K.inR, seq));
    auto parts = decompose(F, seq);
    if (!parts) throw std::logic_error("sequence does not fit its own token frame");
    std::vector<Vertex> order1;
    std::vector<char> inSlot(K.inX.size(), 0);
    for (const auto& c : parts->contents)
        for (Vertex v : c) inSlot[v] = 1;
    for (Vertex v : seq)
        if (!inSlot[v]) order1.push_back(v);
    return {order1, seq};
}

std::vector<Vertex> sol_lift_test(const Graph& G, const CvdKernel& K, const TokenSignature& sig) {
    auto F = make_frame(K, sig);
    auto best = smallest_kernel_realization(G, K, F, nullptr);
    if (!best) throw Error(ErrorKind::InfeasibleSignature, "no kernel realization of " + to_string(sig));
    return *best;
}

Path sol_lift_test(const Graph& G, const CvdKernel& K, const Path& P) {
    auto seq = detail::kernel_path_to_input(K.Gp, K.map, P, K.kp);
    TokenSignature key;
    frame_orientation(K, seq, key);
    return Path{orient_canonical(sol_lift_test(G, K, key))};
}

bool is_suitable_cvd(const Graph& G, const CvdKernel& K, const Path& P) {
    auto seq = detail::kernel_path_to_input(K.Gp, K.map, P, K.kp);
    return sol_lift_test(G, K, P) == Path{orient_canonical(seq)};
}

Path sol_lift_ns(const Graph& G, const CvdKernel& K, const Path& P) {
    auto seq = detail::kernel_path_to_input(K.Gp, K.map, P, K.kp);
    TokenSignature key;
    auto r = frame_orientation(K, seq, key);
    auto F = make_frame(K, key);
    return Path{orient_canonical(ns_realization(G, K, F, r, nullptr))};
}

std::unique_ptr<PathStream> sol_lift_s(const Graph& G, const CvdKernel& K, const Path& P) {
    auto seq = detail::kernel_path_to_input(K.Gp, K.map, P, K.kp);
    return std::make_unique<CvdLiftStream>(G, K, std::move(seq), true);
}

std::unique_ptr<PathStream> lift_cvd(const Graph& G, const CvdKernel& K, const Path& P) {
    auto seq = detail::kernel_path_to_input(K.Gp, K.map, P, K.kp);
    return std::make_unique<CvdLiftStream>(G, K, std::move(seq), false);
}

}  // namespace kpath
