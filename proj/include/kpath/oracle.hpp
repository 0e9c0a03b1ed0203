#pragma once

#include "kpath/graph.hpp"
#include "kpath/stream.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace kpath {

/// Every k-path of G in canonical orientation, sorted and deduplicated.
std::vector<Path> enum_k_paths_bruteforce(const Graph& G, int k);

using ClassPartition = std::map<std::vector<int>, std::vector<Path>>;
using SignatureFn = std::function<std::vector<int>(const Path&)>;

ClassPartition partition_by_signature(const std::vector<Path>& S, const SignatureFn& sig);

struct PartitionReport {
    std::vector<Path> missing;     // in Sol(G) but never lifted
    std::vector<Path> duplicates;  // lifted more than once
    std::vector<Path> foreign;     // lifted but not a k-path of G
    std::vector<Path> empty_lifts; // kernel paths whose lift was empty
    std::size_t expected = 0;
    std::size_t lifted = 0;
    std::size_t kernel_solutions = 0;
    std::map<std::vector<int>, std::size_t> class_sizes;
    std::uint64_t max_delay = 0;

    bool pass() const { return missing.empty() && duplicates.empty() && foreign.empty() && empty_lifts.empty(); }
    /// One "key=value" pair per line.
    std::string summary() const;
};

/// Brute-forces the kernel at its own k, lifts every kernel path and
/// compares the union against brute force on the input graph.
PartitionReport verify_partition(const Graph& G, int k, const EnumerationKernel& K);

}  // namespace kpath
