#pragma once

#include "kpath/graph.hpp"

#include <cstdint>
#include <vector>

namespace kpath {

/// Seeded instance families for tests and benchmarks.
namespace gen {

Graph gnp(int n, double p, std::uint64_t seed);
Graph complete(int n);

struct Planted {
    Graph G;
    std::vector<Vertex> X;  // a valid modulator for the family's parameter
};

/// Small cover whose pairs share many degree-2 neighbours, plus random pendants.
Planted vertex_cover_family(int n, std::uint64_t seed);
/// Hub set attached to many components of at most r vertices.
Planted coc_family(int n, int r, std::uint64_t seed);
/// A clique plus a few attached vertices with random neighbourhoods.
Planted clique_family(int cliqueSize, int attached, std::uint64_t seed);

}  // namespace gen
}  // namespace kpath
