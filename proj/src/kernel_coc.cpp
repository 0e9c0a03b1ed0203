#include "kpath/kernel_coc.hpp"

#include "detail.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace kpath {

namespace {

constexpr int kFree = -1;

void collect_paths(const Graph& G, const std::vector<int>& compOf, int c, std::vector<Vertex>& seq,
                   std::vector<std::vector<Vertex>>& out) {
    out.push_back(seq);
    for (Vertex w : G.neighbors(seq.back())) {
        if (compOf[w] != c || std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
        seq.push_back(w);
        collect_paths(G, compOf, c, seq, out);
        seq.pop_back();
    }
}

bool fits(const Graph& G, const std::vector<Vertex>& path, Vertex u, Vertex w) {
    return (u == SlotType::kEnd || G.adjacent(u, path.front())) && (w == SlotType::kEnd || G.adjacent(w, path.back()));
}

}  // namespace

ComponentIndex index_components(const Graph& G, const std::vector<char>& inX) {
    ComponentIndex idx;
    idx.compOf.assign(G.n(), -1);
    for (Vertex s = 0; s < G.n(); ++s) {
        if (inX[s] || idx.compOf[s] >= 0) continue;
        int c = static_cast<int>(idx.members.size());
        std::vector<Vertex> mem{s};
        idx.compOf[s] = c;
        for (std::size_t h = 0; h < mem.size(); ++h)
            for (Vertex w : G.neighbors(mem[h]))
                if (!inX[w] && idx.compOf[w] < 0) {
                    idx.compOf[w] = c;
                    mem.push_back(w);
                }
        std::sort(mem.begin(), mem.end());
        idx.members.push_back(std::move(mem));
    }
    idx.paths.resize(idx.members.size());
    for (std::size_t c = 0; c < idx.members.size(); ++c) {
        for (Vertex s : idx.members[c]) {
            std::vector<Vertex> seq{s};
            collect_paths(G, idx.compOf, static_cast<int>(c), seq, idx.paths[c]);
        }
        std::sort(idx.paths[c].begin(), idx.paths[c].end());
    }
    return idx;
}

namespace {

SlotType make_slot(Vertex u, Vertex w, int t) {
    SlotType s;
    s.u = u;
    s.w = w;
    s.t = t;
    return s;
}

RareFrequent mark_with_index(const Graph& G, const std::vector<Vertex>& X, int r, int k, const ComponentIndex& comps) {
    RareFrequent rf;
    const int s = static_cast<int>(X.size());
    rf.p = r * (s + 1) + 1;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            for (int t = 1; t <= std::min(r, k - 2); ++t) rf.slots.push_back(make_slot(X[i], X[j], t));
    for (int i = 0; i < s; ++i)
        for (int t = 1; t <= std::min(r, k - 1); ++t) rf.slots.push_back(make_slot(X[i], SlotType::kEnd, t));
    if (k <= r) rf.slots.push_back(make_slot(SlotType::kEnd, SlotType::kEnd, k));

    const int nc = static_cast<int>(comps.members.size());
    for (auto& slot : rf.slots)
        for (int c = 0; c < nc; ++c)
            for (const auto& path : comps.paths[c])
                if (static_cast<int>(path.size()) == slot.t && fits(G, path, slot.u, slot.w)) {
                    slot.witnesses.push_back(c);
                    break;
                }

    rf.rareComp.assign(nc, 0);
    rf.keptComp.assign(nc, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (auto& slot : rf.slots) {
            int open = 0;
            for (int c : slot.witnesses) open += !rf.rareComp[c];
            if (open > 0 && open <= rf.p) {
                for (int c : slot.witnesses) rf.rareComp[c] = 1;
                changed = true;
            }
        }
    }
    for (auto& slot : rf.slots) {
        for (int c : slot.witnesses)
            if (!rf.rareComp[c] && static_cast<int>(slot.kept.size()) < rf.p) slot.kept.push_back(c);
        slot.rare = slot.kept.empty();
        for (int c : slot.kept) rf.keptComp[c] = 1;
    }
    return rf;
}

}  // namespace

RareFrequent mark_rare_frequent(const Graph& G, const std::vector<Vertex>& Xin, int r, int k) {
    Modulator M = make_modulator(G, ModulatorKind::Coc, Xin, r);
    auto comps = index_components(G, membership(G.n(), M.vertices));
    return mark_with_index(G, M.vertices, r, k, comps);
}

CocKernel kernelize_coc(const Graph& G, const std::vector<Vertex>& Xin, int k, int r, const KernelOptions& opts) {
    if (r < 2) throw Error(ErrorKind::InvalidModulator, "r must be at least 2");
    Modulator M = make_modulator(G, ModulatorKind::Coc, Xin, r);
    if (k < 2 || k > G.n()) throw Error(ErrorKind::BadK, "k must lie in [2, n]");
    CocKernel K;
    K.X = M.vertices;
    K.r = r;
    K.k = k;
    K.inX = membership(G.n(), K.X);
    K.comps = index_components(G, K.inX);
    K.marks = mark_with_index(G, K.X, r, k, K.comps);
    K.p = K.marks.p;
    if (opts.mutation == Mutation::FlipRare) {
        for (std::size_t c = 0; c < K.marks.rareComp.size(); ++c)
            if (K.marks.rareComp[c]) {
                K.marks.rareComp[c] = 0;
                break;
            }
    }
    K.inR.assign(G.n(), 0);
    K.inKernel = K.inX;
    for (std::size_t c = 0; c < K.comps.members.size(); ++c) {
        for (Vertex v : K.comps.members[c]) {
            if (K.marks.rareComp[c]) {
                K.inR[v] = 1;
                K.inKernel[v] = 1;
                K.rare.push_back(v);
            } else if (K.marks.keptComp[c]) {
                K.inKernel[v] = 1;
                K.frequentKept.push_back(v);
            }
        }
    }
    std::sort(K.rare.begin(), K.rare.end());
    std::sort(K.frequentKept.begin(), K.frequentKept.end());
    auto [Gp, map] = induced_subgraph(G, detail::mask_to_list(K.inKernel));
    K.Gp = std::move(Gp);
    K.map = std::move(map);
    return K;
}

namespace {

std::vector<int> oriented_sig(const CocKernel& K, const std::vector<Vertex>& s) {
    std::vector<int> out(s.size(), kFree);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (K.inX[s[i]] || K.inR[s[i]]) out[i] = s[i];
    return out;
}

struct Run {
    int start = 0;
    int t = 0;
    std::vector<std::vector<Vertex>> candG;  // non-rare fillings, by component then lexicographic
    std::vector<char> kernelCand;            // parallel to candG
};

std::vector<Run> make_runs(const Graph& G, const CocKernel& K, const std::vector<int>& sig, std::uint64_t* steps) {
    std::vector<Run> runs;
    const int k = static_cast<int>(sig.size());
    for (int i = 0; i < k;) {
        if (sig[i] != kFree) {
            ++i;
            continue;
        }
        int j = i;
        while (j < k && sig[j] == kFree) ++j;
        Run run;
        run.start = i;
        run.t = j - i;
        Vertex u = i > 0 ? sig[i - 1] : SlotType::kEnd;
        Vertex w = j < k ? sig[j] : SlotType::kEnd;
        for (std::size_t c = 0; c < K.comps.members.size(); ++c) {
            if (K.marks.rareComp[c]) continue;
            for (const auto& path : K.comps.paths[c]) {
                if (steps) ++*steps;
                if (static_cast<int>(path.size()) != run.t || !fits(G, path, u, w)) continue;
                run.candG.push_back(path);
                run.kernelCand.push_back(K.marks.keptComp[c]);
            }
        }
        runs.push_back(std::move(run));
        i = j;
    }
    return runs;
}

bool clashes(const std::vector<Vertex>& path, const std::vector<char>& used) {
    for (Vertex v : path)
        if (used[v]) return true;
    return false;
}

// Lexicographically smallest kernel realization of the signature, run by run.
std::optional<std::vector<Vertex>> smallest_kernel_realization(const std::vector<int>& sig, const std::vector<Run>& runs,
                                                               int n, std::uint64_t* steps) {
    std::vector<Vertex> seq(sig.begin(), sig.end());
    std::vector<char> used(n, 0);
    for (const auto& run : runs) {
        const std::vector<Vertex>* best = nullptr;
        for (std::size_t c = 0; c < run.candG.size(); ++c) {
            if (steps) *steps += run.t;
            if (!run.kernelCand[c] || clashes(run.candG[c], used)) continue;
            if (!best || run.candG[c] < *best) best = &run.candG[c];
        }
        if (!best) return std::nullopt;
        for (int j = 0; j < run.t; ++j) {
            seq[run.start + j] = (*best)[j];
            used[(*best)[j]] = 1;
        }
    }
    return seq;
}

std::vector<int> frame_key(const CocKernel& K, const std::vector<Vertex>& seq) {
    auto a = oriented_sig(K, seq);
    auto b = detail::reversed(a);
    return std::min(a, b);
}

bool suitable_in_frame(const Graph& G, const CocKernel&, const std::vector<Vertex>& seq, const std::vector<int>& key,
                       const std::vector<Run>& runs, std::uint64_t* steps) {
    auto best = smallest_kernel_realization(key, runs, G.n(), steps);
    return best && orient_canonical(*best) == orient_canonical(seq);
}

class CocLiftStream : public PathStream {
public:
    CocLiftStream(const Graph& G, const CocKernel& K, std::vector<Vertex> seq) : G_(G), K_(K), seq_(std::move(seq)) {}

    std::optional<Path> next() override {
        ++steps_;
        if (stage_ == 0) {
            stage_ = 1;
            return Path{orient_canonical(seq_)};
        }
        if (stage_ == 1) {
            key_ = frame_key(K_, seq_);
            symmetric_ = detail::reversed(key_) == key_;
            runs_ = make_runs(G_, K_, key_, &steps_);
            if (!suitable_in_frame(G_, K_, seq_, key_, runs_, &steps_)) {
                stage_ = 3;
                return std::nullopt;
            }
            used_.assign(G_.n(), 0);
            current_.assign(key_.begin(), key_.end());
            stage_ = 2;
        }
        while (stage_ == 2) {
            ++steps_;
            if (!active_) {
                if (!advance_phase_one()) {
                    stage_ = 3;
                    break;
                }
                continue;
            }
            if (dfs_next()) {
                if (symmetric_ && !detail::keeps_orientation(current_)) continue;
                steps_ += current_.size();
                return Path{orient_canonical(current_)};
            }
            unassign(i_, phaseOne_);
            active_ = false;
        }
        return std::nullopt;
    }

private:
    // Picks the next non-kernel filling of run i_, moving to later runs when exhausted.
    bool advance_phase_one() {
        const int s = static_cast<int>(runs_.size());
        while (i_ < s) {
            const auto& run = runs_[i_];
            for (++phaseOne_; phaseOne_ < static_cast<int>(run.candG.size()); ++phaseOne_) {
                steps_ += run.t;
                if (!run.kernelCand[phaseOne_]) break;
            }
            if (phaseOne_ < static_cast<int>(run.candG.size())) {
                assign(i_, phaseOne_);
                order_.clear();
                for (int j = i_ + 1; j < s; ++j) order_.push_back(j);
                for (int j = i_ - 1; j >= 0; --j) order_.push_back(j);
                choice_.assign(order_.size(), -1);
                level_ = 0;
                resume_ = false;
                active_ = true;
                return true;
            }
            ++i_;
            phaseOne_ = -1;
        }
        return false;
    }

    // Runs after i_ take any filling, runs before i_ only kernel fillings.
    bool dfs_next() {
        const int L = static_cast<int>(order_.size());
        if (resume_) {
            resume_ = false;
            if (L == 0) return false;
            level_ = L - 1;
            unassign(order_[level_], choice_[level_]);
        }
        while (level_ >= 0) {
            ++steps_;
            if (level_ == L) {
                resume_ = true;
                return true;
            }
            int run = order_[level_];
            const auto& cands = runs_[run].candG;
            bool kernelOnly = run < i_;
            int j = choice_[level_] + 1;
            for (; j < static_cast<int>(cands.size()); ++j) {
                steps_ += runs_[run].t;
                if (kernelOnly && !runs_[run].kernelCand[j]) continue;
                if (!clashes(cands[j], used_)) break;
            }
            if (j < static_cast<int>(cands.size())) {
                choice_[level_] = j;
                assign(run, j);
                ++level_;
                if (level_ < L) choice_[level_] = -1;
            } else {
                choice_[level_] = -1;
                --level_;
                if (level_ >= 0) unassign(order_[level_], choice_[level_]);
            }
        }
        return false;
    }

    void assign(int run, int cand) {
        const auto& path = runs_[run].candG[cand];
        for (int j = 0; j < runs_[run].t; ++j) {
            current_[runs_[run].start + j] = path[j];
            used_[path[j]] = 1;
        }
    }

    void unassign(int run, int cand) {
        for (Vertex v : runs_[run].candG[cand]) used_[v] = 0;
    }

    const Graph& G_;
    const CocKernel& K_;
    std::vector<Vertex> seq_;
    int stage_ = 0;
    std::vector<int> key_;
    bool symmetric_ = false;
    std::vector<Run> runs_;
    std::vector<char> used_;
    std::vector<Vertex> current_;
    int i_ = 0;
    int phaseOne_ = -1;
    bool active_ = false;
    std::vector<int> order_;
    std::vector<int> choice_;
    int level_ = 0;
    bool resume_ = false;
};

}  // namespace

PositionalSignature signature_diss(const Graph& G, const CocKernel& K, const Path& P) {
    auto s = canonical_path(G, P.seq).seq;
    PositionalSignature sig;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (K.inX[s[i]] || K.inR[s[i]]) sig.emplace_back(s[i], static_cast<int>(i) + 1);
    return sig;
}

std::vector<int> class_key_coc(const CocKernel& K, const std::vector<Vertex>& seq) { return frame_key(K, seq); }

std::vector<Vertex> frequent_order(const CocKernel& K, const std::vector<Vertex>& seq) {
    std::vector<Vertex> out;
    for (Vertex v : seq)
        if (!K.inX[v] && !K.inR[v]) out.push_back(v);
    return out;
}

bool is_suitable_coc(const Graph& G, const CocKernel& K, const Path& P) {
    auto seq = detail::kernel_path_to_input(K.Gp, K.map, P, K.k);
    auto key = frame_key(K, seq);
    auto runs = make_runs(G, K, key, nullptr);
    return suitable_in_frame(G, K, seq, key, runs, nullptr);
}

std::unique_ptr<PathStream> lift_coc(const Graph& G, const CocKernel& K, const Path& P) {
    auto seq = detail::kernel_path_to_input(K.Gp, K.map, P, K.k);
    return std::make_unique<CocLiftStream>(G, K, std::move(seq));
}

}  // namespace kpath
