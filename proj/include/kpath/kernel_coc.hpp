#pragma once

#include "kpath/graph.hpp"
#include "kpath/kernel_vc.hpp"
#include "kpath/modulator.hpp"
#include "kpath/options.hpp"
#include "kpath/stream.hpp"

#include <memory>
#include <vector>

namespace kpath {

/// A stretch of t consecutive non-modulator vertices flanked by u and w.
/// kEnd stands for a path end. Interior types have u < w.
struct SlotType {
    static constexpr Vertex kEnd = -1;
    Vertex u = kEnd;
    Vertex w = kEnd;
    int t = 0;
    bool rare = false;                // every witness component is rare
    std::vector<int> witnesses;       // component ids, ascending
    std::vector<int> kept;            // frequent witnesses kept in the kernel
};

/// Connected components of G[I] with every simple path inside them.
struct ComponentIndex {
    std::vector<int> compOf;                              // -1 for modulator vertices
    std::vector<std::vector<Vertex>> members;             // ascending; ids ordered by min member
    std::vector<std::vector<std::vector<Vertex>>> paths;  // oriented simple paths, lexicographic
};

ComponentIndex index_components(const Graph& G, const std::vector<char>& inX);

struct RareFrequent {
    int p = 0;
    std::vector<SlotType> slots;
    std::vector<char> rareComp;
    std::vector<char> keptComp;
};

/// Iterated marking over all slot types: witness sets of size at most p are
/// marked rare until stable, then p frequent witnesses per remaining type are kept.
/// Throws Error{InvalidModulator}.
RareFrequent mark_rare_frequent(const Graph& G, const std::vector<Vertex>& X, int r, int k);

struct CocKernel {
    Graph Gp;
    SubgraphMap map;
    std::vector<Vertex> X;
    int r = 2;
    int p = 0;
    int k = 0;
    std::vector<Vertex> rare;          // R
    std::vector<Vertex> frequentKept;  // frequent vertices kept in the kernel
    ComponentIndex comps;
    RareFrequent marks;
    std::vector<char> inX, inR, inKernel;
};

/// Throws Error{InvalidModulator|BadK}.
CocKernel kernelize_coc(const Graph& G, const std::vector<Vertex>& X, int k, int r, const KernelOptions& opts = {});

/// P in input ids. Throws Error{NotAPath}.
PositionalSignature signature_diss(const Graph& G, const CocKernel& K, const Path& P);

std::vector<int> class_key_coc(const CocKernel& K, const std::vector<Vertex>& seq);

/// Frequent vertices of the sequence in order.
std::vector<Vertex> frequent_order(const CocKernel& K, const std::vector<Vertex>& seq);

/// P in kernel ids. Throws Error{NotAKPath}.
bool is_suitable_coc(const Graph& G, const CocKernel& K, const Path& P);

std::unique_ptr<PathStream> lift_coc(const Graph& G, const CocKernel& K, const Path& P);

}  // namespace kpath
