#include "kpath/pipeline.hpp"

#include "kpath/modulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kpath {

ParamKind parse_param(const std::string& name) {
    if (name == "vc") return ParamKind::VertexCover;
    if (name == "coc") return ParamKind::Coc;
    if (name == "cvd") return ParamKind::CliqueDeletion;
    throw Error(ErrorKind::Parse, "unknown parameter kind '" + name + "'");
}

const char* to_string(ParamKind kind) {
    switch (kind) {
        case ParamKind::VertexCover: return "vc";
        case ParamKind::Coc: return "coc";
        case ParamKind::CliqueDeletion: return "cvd";
    }
    return "?";
}

std::unique_ptr<EnumerationKernel> make_kernel(const Graph& G, int k, const ParamSpec& param,
                                               const std::optional<std::vector<Vertex>>& X,
                                               const KernelOptions& opts) {
    if (k < 2 || k > G.n()) throw Error(ErrorKind::BadK, "kernels need 2 <= k <= n, got k=" + std::to_string(k));
    switch (param.kind) {
        case ParamKind::VertexCover: {
            auto mod = X ? *X : approx_vertex_cover(G).vertices;
            return std::make_unique<VcEnumerationKernel>(G, kernelize_vc(G, mod, k, opts));
        }
        case ParamKind::Coc: {
            if (param.r < 1) throw Error(ErrorKind::InvalidModulator, "r must be positive");
            auto mod = X ? *X : approx_coc_modulator(G, param.r).vertices;
            return std::make_unique<CocEnumerationKernel>(G, kernelize_coc(G, mod, k, param.r, opts));
        }
        case ParamKind::CliqueDeletion: {
            auto mod = X ? *X : approx_clique_modulator(G).vertices;
            return std::make_unique<CvdEnumerationKernel>(G, kernelize_cvd(G, mod, k, opts));
        }
    }
    throw Error(ErrorKind::Parse, "unknown parameter kind");
}

DfsPathStream::DfsPathStream(const Graph& G, int k) : G_(G), k_(k), onPath_(G.n(), 0) {}

std::optional<Path> DfsPathStream::next() {
    if (k_ < 1) return std::nullopt;
    for (;;) {
        ++steps_;
        if (seq_.size() == static_cast<std::size_t>(k_)) {
            onPath_[seq_.back()] = 0;
            seq_.pop_back();
            cursor_.pop_back();
            continue;
        }
        if (seq_.empty()) {
            if (start_ >= G_.n()) return std::nullopt;
            seq_.push_back(start_);
            cursor_.push_back(0);
            onPath_[start_++] = 1;
            if (k_ == 1) return Path{seq_};
            continue;
        }
        const auto& nb = G_.neighbors(seq_.back());
        std::size_t& c = cursor_.back();
        while (c < nb.size() && onPath_[nb[c]]) {
            ++c;
            ++steps_;
        }
        if (c == nb.size()) {
            onPath_[seq_.back()] = 0;
            seq_.pop_back();
            cursor_.pop_back();
            continue;
        }
        Vertex v = nb[c++];
        seq_.push_back(v);
        cursor_.push_back(0);
        onPath_[v] = 1;
        if (seq_.size() == static_cast<std::size_t>(k_) && seq_.front() < seq_.back()) return Path{seq_};
    }
}

namespace {

class PipelineStream : public PathStream {
public:
    explicit PipelineStream(std::unique_ptr<EnumerationKernel> K)
        : K_(std::move(K)), kernelPaths_(K_->kernel_graph(), K_->kernel_k()) {}

    std::optional<Path> next() override {
        for (;;) {
            if (lift_) {
                auto before = lift_->steps();
                auto out = lift_->next();
                steps_ += lift_->steps() - before;
                if (out) return out;
                lift_.reset();
            }
            auto before = kernelPaths_.steps();
            auto P = kernelPaths_.next();
            steps_ += kernelPaths_.steps() - before;
            if (!P) return std::nullopt;
            lift_ = K_->lift(*P);
        }
    }

private:
    std::unique_ptr<EnumerationKernel> K_;
    DfsPathStream kernelPaths_;
    std::unique_ptr<PathStream> lift_;
};

}  // namespace

std::unique_ptr<PathStream> enumerate_all(const Graph& G, int k, const ParamSpec& param,
                                          const std::optional<std::vector<Vertex>>& X,
                                          const KernelOptions& opts) {
    if (k < 1 || k > G.n()) return std::make_unique<VectorStream>(std::vector<Path>{});
    if (k == 1) {
        std::vector<Path> single;
        for (Vertex v = 0; v < G.n(); ++v) single.push_back(Path{{v}});
        return std::make_unique<VectorStream>(std::move(single));
    }
    return std::make_unique<PipelineStream>(make_kernel(G, k, param, X, opts));
}

namespace {

std::string join(const std::vector<Vertex>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::string describe_kernel(const EnumerationKernel& K) {
    std::ostringstream out;
    out << "input_n: " << K.input_graph().n() << "\n";
    out << "input_m: " << K.input_graph().m() << "\n";
    out << "kernel_n: " << K.kernel_graph().n() << "\n";
    out << "kernel_m: " << K.kernel_graph().m() << "\n";
    out << "k: " << K.input_k() << "\n";
    out << "kernel_k: " << K.kernel_k() << "\n";
    out << "kernel_to_input: " << join(K.kernel_map().backward) << "\n";
    if (auto* vc = dynamic_cast<const VcEnumerationKernel*>(&K)) {
        const auto& B = vc->bundle();
        out << "param: vc\n";
        out << "modulator: " << join(B.X) << "\n";
        out << "pendants_kept: " << join(B.I1plus) << "\n";
        out << "expansion_saturated: " << join(B.Bprime) << "\n";
        out << "outside_expansion: " << join(B.I2rest) << "\n";
        out << "fixed_vertices: " << join(B.R) << "\n";
    } else if (auto* coc = dynamic_cast<const CocEnumerationKernel*>(&K)) {
        const auto& B = coc->bundle();
        out << "param: coc\n";
        out << "r: " << B.r << "\n";
        out << "p: " << B.p << "\n";
        out << "modulator: " << join(B.X) << "\n";
        out << "rare: " << join(B.rare) << "\n";
        out << "frequent_kept: " << join(B.frequentKept) << "\n";
    } else if (auto* cvd = dynamic_cast<const CvdEnumerationKernel*>(&K)) {
        const auto& B = cvd->bundle();
        out << "param: cvd\n";
        out << "p: " << B.p << "\n";
        out << "modulator: " << join(B.X) << "\n";
        out << "rare: " << join(B.rare) << "\n";
        out << "frequent: " << join(B.frequent) << "\n";
        out << "clique_kept: " << join(B.Cp) << "\n";
        out << "shortened_by: " << B.q << "\n";
        out << "clique_cap: " << B.cap << "\n";
        out << "removed_first_stage: " << join(B.removedFirstStage) << "\n";
        out << "removed_second_stage: " << join(B.removedSecondStage) << "\n";
    }
    return out.str();
}

double delay_reference(const EnumerationKernel& K) {
    double n = K.input_graph().n();
    double m = std::max<double>(1.0, static_cast<double>(K.input_graph().m()));
    double k = K.input_k();
    double x = std::max<double>(1.0, static_cast<double>(K.modulator_size()));
    if (dynamic_cast<const VcEnumerationKernel*>(&K)) return n * m * k * k;
    if (auto* coc = dynamic_cast<const CocEnumerationKernel*>(&K)) return n * x * std::ldexp(1.0, coc->bundle().r);
    return n * x;
}

}  // namespace kpath
