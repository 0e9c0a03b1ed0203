#pragma once

#include "kpath/graph.hpp"
#include "kpath/modulator.hpp"
#include "kpath/options.hpp"
#include "kpath/stream.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace kpath {

/// Token sequence: vertex ids for modulator and rare vertices, plus gap symbols.
using TokenSignature = std::vector<int>;
constexpr int kGapC = -1;
constexpr int kGapN = -2;

std::string to_string(const TokenSignature& sig);

struct CvdKernel {
    Graph Gp;
    SubgraphMap map;
    std::vector<Vertex> X;
    std::vector<Vertex> C;   // V(G) - X
    std::vector<Vertex> Cp;  // clique vertices kept
    std::vector<Vertex> rare;
    std::vector<Vertex> frequent;
    int p = 0;
    int k = 0;
    int kp = 0;
    int q = 0;
    int cap = 0;    // clique-size cap used by the second stage
    int floorK = 0; // smallest k' the first stage may reduce to
    std::vector<Vertex> removedFirstStage, removedSecondStage;
    std::vector<char> inX, inR, inC, inKernel, marked;
};

/// Rare and frequent clique vertices. Throws Error{InvalidModulator}.
std::pair<std::vector<Vertex>, std::vector<Vertex>> mark_cvd(const Graph& G, const std::vector<Vertex>& X);

/// Throws Error{InvalidModulator|BadK}.
CvdKernel kernelize_cvd(const Graph& G, const std::vector<Vertex>& X, int k, const KernelOptions& opts = {});

/// Tokens of an oriented sequence under the given modulator and rare masks.
TokenSignature cvd_tokens(const std::vector<char>& inX, const std::vector<char>& inR, const std::vector<Vertex>& seq);

/// Tokens of the canonical orientation of P (input ids). Throws Error{NotAPath}.
TokenSignature signature_cvd(const Graph& G, const CvdKernel& K, const Path& P);

std::vector<int> class_key_cvd(const CvdKernel& K, const std::vector<Vertex>& seq);

/// Modulator, rare and gap vertices of an oriented sequence (order 1) and
/// the sequence itself (order 2).
std::pair<std::vector<Vertex>, std::vector<Vertex>> path_order_keys(const CvdKernel& K, const std::vector<Vertex>& seq);

/// Smallest k'-realization of an oriented token sequence in the kernel, in
/// input ids and in the orientation of the tokens. Throws Error{InfeasibleSignature}.
std::vector<Vertex> sol_lift_test(const Graph& G, const CvdKernel& K, const TokenSignature& sig);

/// The smallest kernel path of P's class (P in kernel ids), canonical, in input ids.
Path sol_lift_test(const Graph& G, const CvdKernel& K, const Path& P);

bool is_suitable_cvd(const Graph& G, const CvdKernel& K, const Path& P);

/// Extends a kernel path (kernel ids) by the k - k' smallest clique vertices outside
/// the kernel, placed at the end of its last clique slot. Result in input ids.
Path sol_lift_ns(const Graph& G, const CvdKernel& K, const Path& P);

/// Every k-path of P's class except those produced by sol_lift_ns on the
/// other kernel paths. Throws Error{NotSuitable}.
std::unique_ptr<PathStream> sol_lift_s(const Graph& G, const CvdKernel& K, const Path& P);

/// sol_lift_s for the suitable path, {sol_lift_ns(P)} otherwise.
std::unique_ptr<PathStream> lift_cvd(const Graph& G, const CvdKernel& K, const Path& P);

}  // namespace kpath
