#pragma once

#include "kpath/bipartite.hpp"
#include "kpath/graph.hpp"
#include "kpath/modulator.hpp"
#include "kpath/options.hpp"
#include "kpath/stream.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace kpath {

/// H with A = pairs {x,y} of X (lexicographic) and B = I2 (ascending).
struct AuxiliaryGraph {
    BipartiteGraph H;
    std::vector<Edge> pairs;
    std::vector<Vertex> bnodes;
    std::vector<char> inX;
};

AuxiliaryGraph build_auxiliary_H(const Graph& G, const std::vector<Vertex>& X);

struct VcKernel {
    Graph Gp;
    SubgraphMap map;
    std::vector<Vertex> X;
    std::vector<Vertex> I1plus;
    std::vector<Vertex> Bprime;
    std::vector<Vertex> I2rest;
    std::vector<Vertex> R;
    AuxiliaryGraph aux;
    BipartiteGraph Hp;  // aux.H restricted to B nodes kept in the kernel
    QExpansion expansion;
    int k = 0;

    // Masks over input ids.
    std::vector<char> inX, inR, inKernel, inHatB, twoPendant;
    /// Pendant neighbours per modulator vertex, ascending.
    std::vector<std::vector<Vertex>> pendantsOf;
};

/// Throws Error{InvalidModulator|BadK}.
VcKernel kernelize_vc(const Graph& G, const std::vector<Vertex>& X, int k, const KernelOptions& opts = {});

/// Vertex -> 1-based position, on the canonical orientation, restricted to X and R.
using PositionalSignature = std::vector<std::pair<Vertex, int>>;

/// P in input ids. Throws Error{NotAPath}.
PositionalSignature signature_vc(const Graph& G, const VcKernel& K, const Path& P);

/// Same signature up to reversal, with matching 2-pendant endpoint flags.
bool equivalent_vc(const VcKernel& K, const Path& P1, const Path& P2);

/// Orientation-free class key of an input-graph sequence.
std::vector<int> class_key_vc(const VcKernel& K, const std::vector<Vertex>& seq);

/// The ({x,y}, u) edges realised by consecutive x,u,y triples, as (A, B) indices of aux.H.
Matching occupied_edges(const AuxiliaryGraph& aux, const Path& P);

/// P in kernel ids. Throws Error{NotAKPath}.
bool is_lex_smallest_vc(const Graph& G, const VcKernel& K, const Path& P);

/// P in kernel ids; emits input-id paths. The stream references G and K.
std::unique_ptr<PathStream> lift_vc(const Graph& G, const VcKernel& K, const Path& P);

}  // namespace kpath
