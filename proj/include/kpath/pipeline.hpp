#pragma once

#include "kpath/graph.hpp"
#include "kpath/kernel_coc.hpp"
#include "kpath/kernel_cvd.hpp"
#include "kpath/kernel_vc.hpp"
#include "kpath/options.hpp"
#include "kpath/stream.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kpath {

enum class ParamKind { VertexCover, Coc, CliqueDeletion };

struct ParamSpec {
    ParamKind kind = ParamKind::VertexCover;
    int r = 2;  // component order bound, coc only
};

/// Parses "vc", "coc" or "cvd". Throws Error{Parse}.
ParamKind parse_param(const std::string& name);
const char* to_string(ParamKind kind);

class VcEnumerationKernel : public EnumerationKernel {
public:
    VcEnumerationKernel(Graph G, VcKernel K) : G_(std::move(G)), K_(std::move(K)) {}
    const VcKernel& bundle() const { return K_; }

    const Graph& input_graph() const override { return G_; }
    const Graph& kernel_graph() const override { return K_.Gp; }
    const SubgraphMap& kernel_map() const override { return K_.map; }
    int input_k() const override { return K_.k; }
    int kernel_k() const override { return K_.k; }
    std::size_t modulator_size() const override { return K_.X.size(); }
    std::vector<int> class_key(const std::vector<Vertex>& seq) const override { return class_key_vc(K_, seq); }
    bool is_representative(const Path& P) const override { return is_lex_smallest_vc(G_, K_, P); }
    std::unique_ptr<PathStream> lift(const Path& P) const override { return lift_vc(G_, K_, P); }

private:
    Graph G_;
    VcKernel K_;
};

class CocEnumerationKernel : public EnumerationKernel {
public:
    CocEnumerationKernel(Graph G, CocKernel K) : G_(std::move(G)), K_(std::move(K)) {}
    const CocKernel& bundle() const { return K_; }

    const Graph& input_graph() const override { return G_; }
    const Graph& kernel_graph() const override { return K_.Gp; }
    const SubgraphMap& kernel_map() const override { return K_.map; }
    int input_k() const override { return K_.k; }
    int kernel_k() const override { return K_.k; }
    std::size_t modulator_size() const override { return K_.X.size(); }
    std::vector<int> class_key(const std::vector<Vertex>& seq) const override { return class_key_coc(K_, seq); }
    bool is_representative(const Path& P) const override { return is_suitable_coc(G_, K_, P); }
    std::unique_ptr<PathStream> lift(const Path& P) const override { return lift_coc(G_, K_, P); }

private:
    Graph G_;
    CocKernel K_;
};

class CvdEnumerationKernel : public EnumerationKernel {
public:
    CvdEnumerationKernel(Graph G, CvdKernel K) : G_(std::move(G)), K_(std::move(K)) {}
    const CvdKernel& bundle() const { return K_; }

    const Graph& input_graph() const override { return G_; }
    const Graph& kernel_graph() const override { return K_.Gp; }
    const SubgraphMap& kernel_map() const override { return K_.map; }
    int input_k() const override { return K_.k; }
    int kernel_k() const override { return K_.kp; }
    std::size_t modulator_size() const override { return K_.X.size(); }
    std::vector<int> class_key(const std::vector<Vertex>& seq) const override { return class_key_cvd(K_, seq); }
    bool is_representative(const Path& P) const override { return is_suitable_cvd(G_, K_, P); }
    std::unique_ptr<PathStream> lift(const Path& P) const override { return lift_cvd(G_, K_, P); }

private:
    Graph G_;
    CvdKernel K_;
};

/// Builds the kernel for the given parameter. Without X an approximate
/// modulator is computed. Requires 2 <= k <= n. Throws Error.
std::unique_ptr<EnumerationKernel> make_kernel(const Graph& G, int k, const ParamSpec& param,
                                               const std::optional<std::vector<Vertex>>& X = std::nullopt,
                                               const KernelOptions& opts = {});

/// Canonical k-paths of G by depth-first extension, one per next() call.
class DfsPathStream : public PathStream {
public:
    DfsPathStream(const Graph& G, int k);
    std::optional<Path> next() override;

private:
    const Graph& G_;
    int k_;
    Vertex start_ = 0;
    std::vector<Vertex> seq_;
    std::vector<std::size_t> cursor_;
    std::vector<char> onPath_;
};

/// Every k-path of G: kernel paths are enumerated and lifted one at a time.
/// k = 1 yields the vertices; k > n or k < 1 yields nothing.
std::unique_ptr<PathStream> enumerate_all(const Graph& G, int k, const ParamSpec& param,
                                          const std::optional<std::vector<Vertex>>& X = std::nullopt,
                                          const KernelOptions& opts = {});

/// Key/value description of a kernel, one "key: value" line each.
std::string describe_kernel(const EnumerationKernel& K);

/// Polynomial reference for the delay of each parameter, in elementary steps
/// before the constant factor.
double delay_reference(const EnumerationKernel& K);

}  // namespace kpath
