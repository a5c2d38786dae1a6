#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dzx/diagram.hpp"

namespace dzx::cli {

struct FuzzOptions {
    std::uint64_t seed = 0;
    std::size_t wires = 4;
    std::size_t iters = 100;
    /// Swaps green fusion for a deliberately wrong variant; used to test the harness itself.
    bool inject_fault = false;
};

struct FuzzFailure {
    std::size_t iteration = 0;
    std::string check;
    std::string detail;
    /// Smallest failing diagram found by edge and node deletion.
    Diagram reproducer;
};

struct FuzzReport {
    std::size_t iters = 0;
    std::size_t passed = 0;
    std::vector<FuzzFailure> failures;
};

/// Random diagrams with `wires` boundary wires, checked for the normal-form
/// round trip, rule soundness and equality reflexivity. Deterministic in the seed.
[[nodiscard]] FuzzReport run_fuzz(const FuzzOptions& options);

}  // namespace dzx::cli
