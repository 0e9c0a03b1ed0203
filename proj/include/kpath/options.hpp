#pragma once

#include <optional>

namespace kpath {

/// Deliberate kernel corruptions used to show that the verification
/// harness is able to fail.
enum class Mutation {
    None,
    DropBprime,  // vc: remove the smallest expansion-saturated vertex from the kernel
    FlipRare,    // coc: reclassify the first rare component as frequent and unkept
    ShiftKp,     // cvd: report k' + 1 as the kernel path length
};

struct KernelOptions {
    Mutation mutation = Mutation::None;
    /// cvd only: overrides the clique-size cap 4(l+1)^3. Raised if needed so
    /// that no class is lost (see kernelize_cvd).
    std::optional<int> clique_cap;
};

}  // namespace kpath
