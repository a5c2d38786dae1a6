#include "dzx/f2.hpp"

#include <algorithm>
#include <set>

namespace dzx {

namespace {

struct Echelon {
    std::vector<F2Vector> rows;  // nonzero rows only, ordered by pivot
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form of the matrix whose rows are `rows`.
Echelon reduce(std::vector<F2Vector> rows, std::size_t n) {
    Echelon out;
    std::size_t next = 0;
    for (std::size_t col = 0; col < n && next < rows.size(); ++col) {
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end(),
                               [col](const F2Vector& r) { return r[col]; });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(next), it);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r][col]) rows[r] ^= rows[next];
        }
        out.pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

}  // namespace

F2Vector::F2Vector(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) throw F2Error("F2Vector entries must be 0 or 1");
        bits_.push_back(static_cast<std::uint8_t>(b));
    }
}

F2Vector F2Vector::from_string(std::string_view bits) {
    F2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.bits_[i] = 1;
        } else if (bits[i] != '0') {
            throw F2Error("invalid bit character in '" + std::string(bits) + "'");
        }
    }
    return v;
}

F2Vector F2Vector::from_index(std::uint64_t index, std::size_t n) {
    F2Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v.bits_[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1U);
    return v;
}

bool F2Vector::is_zero() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

std::size_t F2Vector::weight() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t F2Vector::to_index() const {
    if (bits_.size() > 63) throw F2Error("vector too long to index");
    std::uint64_t idx = 0;
    for (auto b : bits_) idx = (idx << 1U) | b;
    return idx;
}

std::string F2Vector::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

bool F2Vector::dot(const F2Vector& other) const {
    if (other.size() != size()) throw F2Error("dot product length mismatch");
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) acc ^= bits_[i] & other.bits_[i];
    return acc != 0;
}

F2Vector F2Vector::concat(const F2Vector& other) const {
    F2Vector out = *this;
    out.bits_.insert(out.bits_.end(), other.bits_.begin(), other.bits_.end());
    return out;
}

F2Vector& F2Vector::operator^=(const F2Vector& other) {
    if (other.size() != size()) throw F2Error("xor length mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
    return *this;
}

F2Matrix F2Matrix::from_rows(std::initializer_list<std::string_view> rows) {
    if (rows.size() == 0) return {};
    const std::size_t cols = rows.begin()->size();
    F2Matrix m(rows.size(), cols);
    std::size_t r = 0;
    for (auto row : rows) {
        if (row.size() != cols) throw F2Error("ragged matrix rows");
        auto v = F2Vector::from_string(row);
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, v[c]);
        ++r;
    }
    return m;
}

F2Matrix F2Matrix::from_columns(std::span<const F2Vector> columns, std::size_t n) {
    F2Matrix m(n, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != n) throw F2Error("column length mismatch");
        for (std::size_t r = 0; r < n; ++r) m.set(r, c, columns[c][r]);
    }
    return m;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Vector F2Matrix::row(std::size_t r) const {
    F2Vector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.set(c, (*this)(r, c));
    return v;
}

F2Vector F2Matrix::column(std::size_t c) const {
    F2Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, (*this)(r, c));
    return v;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
    return t;
}

std::size_t F2Matrix::rank() const {
    std::vector<F2Vector> rs;
    rs.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) rs.push_back(row(r));
    return reduce(std::move(rs), cols_).rows.size();
}

bool F2Matrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

F2Matrix F2Matrix::direct_sum(const F2Matrix& other) const {
    F2Matrix m(rows_ + other.rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.set(r, c, (*this)(r, c));
    for (std::size_t r = 0; r < other.rows_; ++r)
        for (std::size_t c = 0; c < other.cols_; ++c) m.set(rows_ + r, cols_ + c, other(r, c));
    return m;
}

F2Matrix operator*(const F2Matrix& lhs, const F2Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw F2Error("matrix product shape mismatch");
    F2Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t r = 0; r < lhs.rows_; ++r)
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            if (!lhs(r, k)) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out.data_[r * out.cols_ + c] ^= rhs.data_[k * rhs.cols_ + c];
        }
    return out;
}

F2Vector operator*(const F2Matrix& lhs, const F2Vector& rhs) {
    if (lhs.cols_ != rhs.size()) throw F2Error("matrix-vector shape mismatch");
    F2Vector out(lhs.rows_);
    for (std::size_t r = 0; r < lhs.rows_; ++r) {
        bool acc = false;
        for (std::size_t c = 0; c < lhs.cols_; ++c) acc ^= lhs(r, c) && rhs[c];
        out.set(r, acc);
    }
    return out;
}

F2Matrix canonical_basis(std::span<const F2Vector> points) {
    if (points.empty()) throw F2Error("empty span");
    return canonical_basis(points, points.front().size());
}

F2Matrix canonical_basis(std::span<const F2Vector> points, std::size_t n) {
    for (const auto& p : points)
        if (p.size() != n) throw F2Error("points of mixed length");
    auto ech = reduce(std::vector<F2Vector>(points.begin(), points.end()), n);
    return F2Matrix::from_columns(ech.rows, n);
}

std::vector<std::size_t> pivot_rows(const F2Matrix& basis) {
    std::vector<std::size_t> pivots;
    pivots.reserve(basis.cols());
    for (std::size_t c = 0; c < basis.cols(); ++c) {
        std::size_t r = 0;
        while (r < basis.rows() && !basis(r, c)) ++r;
        if (r == basis.rows()) throw F2Error("basis has a zero column");
        pivots.push_back(r);
    }
    return pivots;
}

std::optional<AffineSupport> is_affine(std::span<const F2Vector> points) {
    if (points.empty()) return std::nullopt;
    const std::size_t n = points.front().size();
    std::set<F2Vector> distinct;
    for (const auto& p : points) {
        if (p.size() != n) throw F2Error("points of mixed length");
        distinct.insert(p);
    }
    const F2Vector& p0 = *distinct.begin();
    std::vector<F2Vector> shifted;
    shifted.reserve(distinct.size());
    for (const auto& p : distinct) shifted.push_back(p ^ p0);

    F2Matrix basis = canonical_basis(shifted, n);
    const std::size_t k = basis.cols();
    if (k >= 63 || distinct.size() != (std::size_t{1} << k)) return std::nullopt;
    // With |S| = 2^rank, S ⊆ span(S) forces equality; membership is checked anyway.
    for (const auto& s : shifted)
        if (!solve(basis, s)) return std::nullopt;
    F2Vector offset = canonical_coset_rep(basis, p0);
    return AffineSupport{std::move(basis), std::move(offset)};
}

F2Vector canonical_coset_rep(const F2Matrix& basis, const F2Vector& x) {
    if (basis.rows() != x.size()) throw F2Error("coset representative length mismatch");
    F2Vector rep = x;
    const auto pivots = pivot_rows(basis);
    for (std::size_t c = 0; c < basis.cols(); ++c)
        if (rep[pivots[c]]) rep ^= basis.column(c);
    return rep;
}

F2Matrix subset_matrix(std::size_t n) {
    if (n == 0) throw F2Error("subset matrix needs n >= 1");
    if (n > 20) throw F2Error("subset matrix too large");
    const std::size_t cols = (std::size_t{1} << n) - 1;
    F2Matrix s(n, cols);
    for (std::size_t x = 1; x <= cols; ++x) {
        auto bits = F2Vector::from_index(x, n);
        for (std::size_t i = 0; i < n; ++i) s.set(i, x - 1, bits[i]);
    }
    return s;
}

F2Matrix induced_permutation(const F2Matrix& a) {
    if (a.rows() != a.cols()) throw F2Error("singular: matrix is not square");
    if (!a.is_invertible()) throw F2Error("singular");
    const std::size_t n = a.rows();
    const std::size_t dim = (std::size_t{1} << n) - 1;
    F2Matrix sigma(dim, dim);
    for (std::size_t t = 1; t <= dim; ++t) {
        const auto s = (a * F2Vector::from_index(t, n)).to_index();
        sigma.set(s - 1, t - 1, true);
    }
    const F2Matrix sub = subset_matrix(n);
    if (!(a * sub == sub * sigma)) throw F2Error("induced permutation identity failed");
    return sigma;
}

std::optional<F2Vector> solve(const F2Matrix& a, const F2Vector& b) {
    if (b.size() != a.rows()) throw F2Error("solve: right-hand side length mismatch");
    // Eliminate on the augmented rows [A | b].
    const std::size_t k = a.cols();
    std::vector<F2Vector> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        F2Vector aug(k + 1);
        for (std::size_t c = 0; c < k; ++c) aug.set(c, a(r, c));
        aug.set(k, b[r]);
        rows.push_back(std::move(aug));
    }
    auto ech = reduce(std::move(rows), k + 1);
    F2Vector y(k);
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
        if (ech.pivots[i] == k) return std::nullopt;
        y.set(ech.pivots[i], ech.rows[i][k]);
    }
    return y;
}

}  // namespace dzx
