#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "dzx/diagram.hpp"
#include "dzx/f2.hpp"

namespace dzx {

class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * A 2^m × 2^n matrix with nonnegative entries, stored row-major.
 *
 * Rows are indexed by output bits, columns by input bits, each big-endian in
 * wire order (wire 0 is the most significant bit). The flat index of entry
 * (x, y) is therefore the integer with bits x ++ y.
 */
class NonNegMatrix {
public:
    NonNegMatrix() = default;
    NonNegMatrix(std::size_t in_qubits, std::size_t out_qubits);
    NonNegMatrix(std::size_t in_qubits, std::size_t out_qubits, std::vector<double> entries);

    /// A 0→n state from its 2^n amplitudes.
    static NonNegMatrix state(std::vector<double> entries);
    static NonNegMatrix identity(std::size_t qubits);

    [[nodiscard]] std::size_t in_qubits() const noexcept { return in_; }
    [[nodiscard]] std::size_t out_qubits() const noexcept { return out_; }
    [[nodiscard]] std::size_t rows() const noexcept { return std::size_t{1} << out_; }
    [[nodiscard]] std::size_t cols() const noexcept { return std::size_t{1} << in_; }

    [[nodiscard]] double operator()(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
    double& operator()(std::size_t row, std::size_t col) { return entries_[row * cols() + col]; }

    [[nodiscard]] const std::vector<double>& entries() const noexcept { return entries_; }
    [[nodiscard]] double max_entry() const noexcept;

    /// this · rhs (apply rhs first).
    [[nodiscard]] NonNegMatrix operator*(const NonNegMatrix& rhs) const;
    /// Kronecker product with this on the more significant wires.
    [[nodiscard]] NonNegMatrix tensor(const NonNegMatrix& rhs) const;
    [[nodiscard]] NonNegMatrix scaled(double factor) const;

    friend bool operator==(const NonNegMatrix&, const NonNegMatrix&) = default;

private:
    std::size_t in_ = 0;
    std::size_t out_ = 0;
    std::vector<double> entries_;
};

/// Complex 2^m × 2^n matrix, only used as input to decohere_pure.
struct ComplexMatrix {
    std::size_t in_qubits = 0;
    std::size_t out_qubits = 0;
    std::vector<std::complex<double>> entries;  // row-major
};

enum class ContractionOrder {
    greedy,      ///< min-size elimination heuristic
    sequential,  ///< variables in creation order
    reversed,    ///< variables in reverse creation order
};

/// Exact interpretation ⟦D⟧. Throws DiagramError on invalid diagrams and
/// EvaluationError when an intermediate factor would be too large.
[[nodiscard]] NonNegMatrix evaluate(const Diagram& d, ContractionOrder order = ContractionOrder::greedy);

/// Entries treated as zero: |value| <= support_tolerance · max entry.
inline constexpr double support_tolerance = 1e-9;

/// Indices (output bits ++ input bits) of nonzero entries, in increasing order.
[[nodiscard]] std::vector<F2Vector> support(const NonNegMatrix& m);
[[nodiscard]] std::vector<F2Vector> support(const Diagram& d);

/// Entrywise squared modulus |M|².
[[nodiscard]] NonNegMatrix decohere_pure(const ComplexMatrix& m);

/// max |difference| <= tol · (1 + max |entry|). Throws on shape mismatch.
[[nodiscard]] bool approx_equal(const NonNegMatrix& lhs, const NonNegMatrix& rhs, double tol);

}  // namespace dzx
