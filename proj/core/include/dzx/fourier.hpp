#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace dzx {

class FourierError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Multiplicative Walsh-Fourier parameters of a full-support vector over n wires:
 * v_x = Λ · Π_{y≠0} λ_y^{x·y}.
 *
 * `lambda[y - 1]` holds λ_y for y = 1 .. 2^n - 1 in binary order.
 */
struct FourierData {
    std::size_t n = 0;
    double big_lambda = 1.0;
    std::vector<double> lambda;
};

/// Entries at or below this fraction of the maximum count as missing support.
inline constexpr double full_support_epsilon = 1e-12;

/// In-place fast transform (Wu)_z = Σ_x (-1)^{x·z} u_x. Length must be a power of two.
void walsh_hadamard(std::span<double> u);
[[nodiscard]] std::vector<double> walsh_hadamard(std::vector<double> u);

/// Λ = v_0 and λ_y = Π_x (v_x / v_0)^{-2(-1)^{x·y} / 2^n}, computed in log space.
/// Throws FourierError("full support required") when some v_x is not positive.
[[nodiscard]] FourierData fourier_synthesize(std::span<const double> v);

/// v_x = Λ · Π_{y≠0} λ_y^{x·y}.
[[nodiscard]] std::vector<double> fourier_evaluate(const FourierData& fd);

}  // namespace dzx
