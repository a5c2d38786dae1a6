#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dzx {

/// Linear-algebra failures over GF(2) (empty spans, singular matrices, shape mismatches).
class F2Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * A vector over GF(2).
 *
 * Bit 0 is the most significant bit when a vector is read as an integer
 * index, matching the wire order used by the evaluator.
 */
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t n) : bits_(n, 0) {}
    F2Vector(std::initializer_list<int> bits);

    /// Parses a string of '0'/'1' characters, e.g. "0101".
    static F2Vector from_string(std::string_view bits);
    /// Big-endian expansion of `index` over `n` bits.
    static F2Vector from_index(std::uint64_t index, std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
    void flip(std::size_t i) { bits_[i] ^= 1; }

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] std::size_t weight() const noexcept;
    [[nodiscard]] std::uint64_t to_index() const;
    [[nodiscard]] std::string to_string() const;
    /// Inner product x·y over GF(2).
    [[nodiscard]] bool dot(const F2Vector& other) const;
    /// Concatenation (this ++ other).
    [[nodiscard]] F2Vector concat(const F2Vector& other) const;

    F2Vector& operator^=(const F2Vector& other);
    friend F2Vector operator^(F2Vector lhs, const F2Vector& rhs) { return lhs ^= rhs; }

    friend bool operator==(const F2Vector&, const F2Vector&) = default;
    friend auto operator<=>(const F2Vector&, const F2Vector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// A dense row-major matrix over GF(2).
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    /// Builds a matrix from rows written as bit strings, e.g. {"110", "011"}.
    static F2Matrix from_rows(std::initializer_list<std::string_view> rows);
    /// Builds an n×k matrix from k column vectors of length n.
    static F2Matrix from_columns(std::span<const F2Vector> columns, std::size_t n);
    static F2Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c] != 0; }
    void set(std::size_t r, std::size_t c, bool value) { data_[r * cols_ + c] = value ? 1 : 0; }

    [[nodiscard]] F2Vector row(std::size_t r) const;
    [[nodiscard]] F2Vector column(std::size_t c) const;
    [[nodiscard]] F2Matrix transpose() const;
    [[nodiscard]] std::size_t rank() const;
    [[nodiscard]] bool is_invertible() const;

    /// Block-diagonal sum diag(this, other).
    [[nodiscard]] F2Matrix direct_sum(const F2Matrix& other) const;

    friend F2Matrix operator*(const F2Matrix& lhs, const F2Matrix& rhs);
    friend F2Vector operator*(const F2Matrix& lhs, const F2Vector& rhs);
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

    /// Row-major bits, used by the JSON formats.
    [[nodiscard]] const std::vector<std::uint8_t>& data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

/**
 * An affine subspace {basis·y ⊕ offset : y ∈ F_2^k} in canonical form.
 *
 * `basis` is the echelon basis produced by canonical_basis() and `offset`
 * has a zero at every pivot coordinate of `basis`, so equal subspaces have
 * equal representations.
 */
struct AffineSupport {
    F2Matrix basis;
    F2Vector offset;

    friend bool operator==(const AffineSupport&, const AffineSupport&) = default;
};

/**
 * Canonical injective n×k matrix whose column space is span(points).
 *
 * The columns are the nonzero rows of the reduced row echelon form of the
 * matrix whose rows are `points`, ordered by pivot position. The result
 * depends only on the span.
 */
[[nodiscard]] F2Matrix canonical_basis(std::span<const F2Vector> points);

/// Same as above for an explicit ambient dimension; accepts an empty span of points.
[[nodiscard]] F2Matrix canonical_basis(std::span<const F2Vector> points, std::size_t n);

/// Pivot coordinate (first nonzero row) of each column of a canonical basis.
[[nodiscard]] std::vector<std::size_t> pivot_rows(const F2Matrix& basis);

/// Returns the canonical affine description of `points`, or nullopt when the
/// set is empty or not a coset of a linear subspace. Duplicates are ignored.
[[nodiscard]] std::optional<AffineSupport> is_affine(std::span<const F2Vector> points);

/// The element of x ⊕ Im(basis) that is zero at every pivot coordinate of basis.
[[nodiscard]] F2Vector canonical_coset_rep(const F2Matrix& basis, const F2Vector& x);

/// The n×(2^n−1) matrix whose column for nonempty subset x (binary order 1..2^n−1) is x.
[[nodiscard]] F2Matrix subset_matrix(std::size_t n);

/**
 * Permutation σ_A of the nonzero vectors induced by an invertible A,
 * (σ_A)_{s,t} = [A·t = s], rows and columns in binary order 1..2^n−1.
 *
 * Satisfies A·𝔰_n = 𝔰_n·σ_A (the identity is checked before returning).
 */
[[nodiscard]] F2Matrix induced_permutation(const F2Matrix& a);

/// Some y with A·y = b (free variables set to 0), or nullopt if b ∉ Im(A).
[[nodiscard]] std::optional<F2Vector> solve(const F2Matrix& a, const F2Vector& b);

}  // namespace dzx
