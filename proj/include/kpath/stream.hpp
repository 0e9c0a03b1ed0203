#pragma once

#include "kpath/graph.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace kpath {

/// Pull-based path enumerator. steps() is a monotone count of elementary
/// operations performed so far; the difference between two reads brackets
/// the work done between emissions.
class PathStream {
public:
    virtual ~PathStream() = default;
    virtual std::optional<Path> next() = 0;
    std::uint64_t steps() const { return steps_; }

protected:
    std::uint64_t steps_ = 0;
};

/// Emits a fixed list.
class VectorStream : public PathStream {
public:
    explicit VectorStream(std::vector<Path> paths) : paths_(std::move(paths)) {}
    std::optional<Path> next() override {
        ++steps_;
        if (pos_ >= paths_.size()) return std::nullopt;
        steps_ += paths_[pos_].size();
        return paths_[pos_++];
    }

private:
    std::vector<Path> paths_;
    std::size_t pos_ = 0;
};

/// A kernel bundle together with its solution-lifting procedure.
/// Kernel paths are given in kernel ids; lifted paths are in input ids.
/// Lift streams reference the kernel and must not outlive it.
class EnumerationKernel {
public:
    virtual ~EnumerationKernel() = default;

    virtual const Graph& input_graph() const = 0;
    virtual const Graph& kernel_graph() const = 0;
    virtual const SubgraphMap& kernel_map() const = 0;
    virtual int input_k() const = 0;
    virtual int kernel_k() const = 0;
    virtual std::size_t modulator_size() const = 0;

    /// Orientation-free equivalence key of a path of the input graph.
    virtual std::vector<int> class_key(const std::vector<Vertex>& seq) const = 0;
    /// Whether a kernel path is the designated representative of its class.
    virtual bool is_representative(const Path& kernelPath) const = 0;
    virtual std::unique_ptr<PathStream> lift(const Path& kernelPath) const = 0;
};

}  // namespace kpath
