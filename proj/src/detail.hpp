#pragma once

// Helpers shared by the kernel implementations.

#include "kpath/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace kpath::detail {

inline std::vector<Vertex> reversed(std::vector<Vertex> s) {
    std::reverse(s.begin(), s.end());
    return s;
}

inline bool is_canonical_orientation(const std::vector<Vertex>& s) {
    return !std::lexicographical_compare(s.rbegin(), s.rend(), s.begin(), s.end());
}

/// Picks one of s and its reversal, the same one whichever is given. The
/// choice is mixed by a hash of the vertex sequence so that neither orientation
/// is preferred over long stretches of an enumeration.
inline bool keeps_orientation(const std::vector<Vertex>& s) {
    bool canonical = is_canonical_orientation(s);
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](Vertex v) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
    };
    if (canonical) for (Vertex v : s) mix(v);
    else for (auto it = s.rbegin(); it != s.rend(); ++it) mix(*it);
    return canonical != static_cast<bool>(h & 1);
}

/// Checks that P is a k-path of Gp and returns it in input ids.
inline std::vector<Vertex> kernel_path_to_input(const Graph& Gp, const SubgraphMap& map, const Path& P, int k) {
    if (static_cast<int>(P.size()) != k || !is_path(Gp, P.seq))
        throw Error(ErrorKind::NotAKPath, "not a " + std::to_string(k) + "-path of the kernel: " + to_string(P));
    std::vector<Vertex> out;
    out.reserve(P.size());
    for (Vertex v : P.seq) out.push_back(map.backward[v]);
    return out;
}

inline std::vector<Vertex> mask_to_list(const std::vector<char>& mask) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(mask.size()); ++v)
        if (mask[v]) out.push_back(v);
    return out;
}

}  // namespace kpath::detail
