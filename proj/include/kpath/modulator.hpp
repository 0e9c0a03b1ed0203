#pragma once

#include "kpath/graph.hpp"

#include <vector>

namespace kpath {

enum class ModulatorKind { VertexCover, Coc, CliqueDeletion };

struct Modulator {
    ModulatorKind kind = ModulatorKind::VertexCover;
    std::vector<Vertex> vertices;  // sorted ascending
    int r = 0;                     // only meaningful for Coc
};

/// Both endpoints of a greedy maximal matching, smallest edge first.
Modulator approx_vertex_cover(const Graph& G);

/// Adds the first r+1 BFS vertices of any component of G - X with more than r vertices.
Modulator approx_coc_modulator(const Graph& G, int r);

/// Adds the lexicographically smallest nonadjacent pair until G - X is a clique.
Modulator approx_clique_modulator(const Graph& G);

bool verify_modulator(const Graph& G, const Modulator& M);

/// Sorts, deduplicates and range-checks a user-supplied set.
/// Throws Error{InvalidModulator} when the set does not satisfy the kind's invariant.
Modulator make_modulator(const Graph& G, ModulatorKind kind, std::vector<Vertex> vertices, int r = 0);

/// Sizes of the connected components of G - X (X given as a membership mask).
std::vector<int> component_sizes_outside(const Graph& G, const std::vector<char>& inX);

std::vector<char> membership(int n, const std::vector<Vertex>& S);

}  // namespace kpath
