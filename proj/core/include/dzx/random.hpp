#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "dzx/diagram.hpp"
#include "dzx/f2.hpp"

namespace dzx {

using Rng = std::mt19937_64;

struct RandomDiagramOptions {
    std::size_t inputs = 1;
    std::size_t outputs = 1;
    std::size_t spiders = 4;
    std::size_t extra_edges = 3;
    /// Chance that a parameter is drawn from the special values {0, ½, 1} (or {0, 1} for green).
    double special_param_rate = 0.2;
};

/// A valid diagram with every boundary port attached to a random spider and
/// random internal edges (parallel edges and self-loops included).
[[nodiscard]] Diagram random_diagram(Rng& rng, const RandomDiagramOptions& options);

[[nodiscard]] F2Matrix random_f2_matrix(Rng& rng, std::size_t rows, std::size_t cols);
[[nodiscard]] F2Matrix random_invertible(Rng& rng, std::size_t n);
[[nodiscard]] F2Vector random_f2_vector(Rng& rng, std::size_t n);

/// A vector over n wires whose support is a random affine subspace with random positive values.
[[nodiscard]] std::vector<double> random_affine_vector(Rng& rng, std::size_t n);
/// A strictly positive vector of length 2^n spanning a few orders of magnitude.
[[nodiscard]] std::vector<double> random_positive_vector(Rng& rng, std::size_t n);

}  // namespace dzx
