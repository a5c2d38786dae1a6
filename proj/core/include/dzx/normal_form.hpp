#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <variant>

#include "dzx/diagram.hpp"
#include "dzx/f2.hpp"
#include "dzx/fourier.hpp"
#include "dzx/semantics.hpp"

namespace dzx {

/// The support is not an affine subspace; a ⊕ b ⊕ c lies outside it.
class NonAffineSupport : public std::runtime_error {
public:
    NonAffineSupport(F2Vector a, F2Vector b, F2Vector c);

    F2Vector a;
    F2Vector b;
    F2Vector c;
};

/// Canonical form of the zero vector over n wires.
struct ZeroForm {
    std::size_t n = 0;
};

/**
 * Canonical form Λ Σ_{y∈F_2^k} Π_{z≠0} λ_z^{z·y} |Ay ⊕ x⟩.
 *
 * `a` is the canonical echelon basis of the support direction, `x` the
 * pivot-free coset representative and `fd` the Fourier data of
 * u_y = v_{Ay⊕x} over k wires.
 */
struct AffineForm {
    std::size_t n = 0;
    F2Matrix a;
    F2Vector x;
    FourierData fd;

    [[nodiscard]] std::size_t k() const noexcept { return a.cols(); }
};

using NormalFormData = std::variant<ZeroForm, AffineForm>;

[[nodiscard]] std::size_t wires(const NormalFormData& nf) noexcept;

/// Canonical datum of a state given by its 2^n amplitudes.
/// Throws NonAffineSupport with a violating triple when the support is not affine.
[[nodiscard]] NormalFormData normalize_state(std::span<const double> v);

/// Normal form of ⌈D⌉, i.e. of ⟦D⟧ vectorized over outputs ++ inputs (scaled by 2^{-n}).
[[nodiscard]] NormalFormData normalize_diagram(const Diagram& d);

/// The unique normal-form diagram 0→n with the given datum.
[[nodiscard]] Diagram nf_to_diagram(const NormalFormData& nf);

/// Exact agreement on (n, k, A, x); Λ and λ agree within relative `tol`.
[[nodiscard]] bool nf_equal(const NormalFormData& lhs, const NormalFormData& rhs, double tol = 1e-9);

/// ⟦D1⟧ = ⟦D2⟧ decided through canonical forms. Throws DiagramError on arity mismatch.
[[nodiscard]] bool diagrams_equal(const Diagram& lhs, const Diagram& rhs, double tol = 1e-9);

/// A diagram n→m with ⟦D⟧ = M. Throws NonAffineSupport when M has non-affine support.
[[nodiscard]] Diagram synthesize(const NonNegMatrix& m);

}  // namespace dzx
