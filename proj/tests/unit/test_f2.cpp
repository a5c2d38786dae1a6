#include <gtest/gtest.h>

#include <set>

#include "dzx/f2.hpp"
#include "dzx/random.hpp"
#include "oracle.hpp"

using dzx::F2Matrix;
using dzx::F2Vector;

namespace {

std::vector<F2Vector> vecs(std::initializer_list<const char*> bits) {
    std::vector<F2Vector> out;
    for (const char* b : bits) out.push_back(F2Vector::from_string(b));
    return out;
}

std::set<std::uint64_t> column_space(const F2Matrix& a) {
    std::set<std::uint64_t> out;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << a.cols()); ++y)
        out.insert((a * F2Vector::from_index(y, a.cols())).to_index());
    return out;
}

// Brute-force σ_A from its definition (σ_A)_{s,t} = [A t = s].
F2Matrix sigma_by_definition(const F2Matrix& a) {
    const std::size_t n = a.rows();
    const std::size_t size = (std::size_t{1} << n) - 1;
    F2Matrix s(size, size);
    for (std::size_t t = 1; t <= size; ++t)
        for (std::size_t r = 1; r <= size; ++r)
            if ((a * F2Vector::from_index(t, n)).to_index() == r) s.set(r - 1, t - 1, true);
    return s;
}

std::vector<F2Matrix> all_matrices(std::size_t rows, std::size_t cols) {
    std::vector<F2Matrix> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (rows * cols)); ++bits) {
        F2Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows * cols; ++i) m.set(i / cols, i % cols, ((bits >> i) & 1U) != 0);
        out.push_back(m);
    }
    return out;
}

}  // namespace

TEST(F2Vector, IndexIsBigEndian) {
    EXPECT_EQ(F2Vector::from_index(1, 3).to_string(), "001");
    EXPECT_EQ(F2Vector::from_string("100").to_index(), 4U);
    EXPECT_TRUE(F2Vector::from_string("101").dot(F2Vector::from_string("111")) == false);
    EXPECT_THROW(F2Vector::from_string("10x"), dzx::F2Error);
}

TEST(CanonicalBasis, SingleVector) {
    const auto pts = vecs({"11"});
    const F2Matrix b = dzx::canonical_basis(pts);
    EXPECT_EQ(b, F2Matrix::from_rows({"1", "1"}));
}

TEST(CanonicalBasis, ThreeVectorsSpanPlane) {
    const auto pts = vecs({"01", "10", "11"});
    EXPECT_EQ(dzx::canonical_basis(pts), F2Matrix::identity(2));
}

TEST(CanonicalBasis, ZeroVectorSpansNothing) {
    const auto pts = vecs({"00"});
    const F2Matrix b = dzx::canonical_basis(pts);
    EXPECT_EQ(b.rows(), 2U);
    EXPECT_EQ(b.cols(), 0U);
}

TEST(CanonicalBasis, EmptySetIsRejected) {
    EXPECT_THROW((void)dzx::canonical_basis(std::span<const F2Vector>{}), dzx::F2Error);
}

TEST(CanonicalBasis, IdempotentUnderRespanning) {
    dzx::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const F2Matrix a = dzx::random_f2_matrix(rng, n, 1 + trial % 4);
        std::vector<F2Vector> pts;
        for (auto idx : column_space(a)) pts.push_back(F2Vector::from_index(idx, n));
        const F2Matrix b = dzx::canonical_basis(pts);
        EXPECT_EQ(b.rank(), b.cols());
        EXPECT_EQ(column_space(b), column_space(a));
        std::vector<F2Vector> again;
        for (auto idx : column_space(b)) again.push_back(F2Vector::from_index(idx, n));
        EXPECT_EQ(dzx::canonical_basis(again), b);
    }
}

TEST(IsAffine, AndGateSupportIsNotAffine) {
    const auto pts = vecs({"000", "001", "010", "111"});
    EXPECT_FALSE(dzx::is_affine(pts).has_value());
}

TEST(IsAffine, CosetOfDiagonal) {
    const auto pts = vecs({"01", "10"});
    const auto s = dzx::is_affine(pts);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->basis, F2Matrix::from_rows({"1", "1"}));
    EXPECT_EQ(s->offset, F2Vector::from_string("01"));
}

TEST(IsAffine, FullSpace) {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<F2Vector> pts;
        for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) pts.push_back(F2Vector::from_index(i, n));
        const auto s = dzx::is_affine(pts);
        ASSERT_TRUE(s.has_value());
        EXPECT_EQ(s->basis, F2Matrix::identity(n));
        EXPECT_TRUE(s->offset.is_zero());
    }
}

TEST(IsAffine, AgreesWithBruteForceEnumeration) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto affine = oracle::affine_subsets(n);
        const std::set<std::uint64_t> affine_set(affine.begin(), affine.end());
        const std::size_t size = std::size_t{1} << n;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); ++mask) {
            std::vector<F2Vector> pts;
            for (std::size_t i = 0; i < size; ++i)
                if ((mask >> i) & 1U) pts.push_back(F2Vector::from_index(i, n));
            const auto s = dzx::is_affine(pts);
            ASSERT_EQ(s.has_value(), affine_set.contains(mask)) << "n=" << n << " mask=" << mask;
            if (!s) continue;
            std::uint64_t rebuilt = 0;
            for (auto idx : column_space(s->basis)) rebuilt |= std::uint64_t{1} << (F2Vector::from_index(idx, n) ^ s->offset).to_index();
            EXPECT_EQ(rebuilt, mask);
        }
    }
}

TEST(CosetRep, Examples) {
    const F2Matrix diag = F2Matrix::from_rows({"1", "1"});
    EXPECT_EQ(dzx::canonical_coset_rep(diag, F2Vector::from_string("10")), F2Vector::from_string("01"));
    EXPECT_TRUE(dzx::canonical_coset_rep(F2Matrix::identity(3), F2Vector::from_string("101")).is_zero());
    const F2Matrix empty(3, 0);
    EXPECT_EQ(dzx::canonical_coset_rep(empty, F2Vector::from_string("110")), F2Vector::from_string("110"));
}

TEST(CosetRep, InvariantAcrossTheCoset) {
    dzx::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const F2Matrix a = dzx::random_f2_matrix(rng, n, trial % 4);
        std::vector<F2Vector> cols;
        for (auto idx : column_space(a)) cols.push_back(F2Vector::from_index(idx, n));
        const F2Matrix basis = dzx::canonical_basis(cols, n);
        const F2Vector x = dzx::random_f2_vector(rng, n);
        const F2Vector rep = dzx::canonical_coset_rep(basis, x);
        EXPECT_TRUE(dzx::solve(basis, rep ^ x).has_value());
        for (std::size_t p : dzx::pivot_rows(basis)) EXPECT_FALSE(rep[p]);
        for (const auto& c : cols) EXPECT_EQ(dzx::canonical_coset_rep(basis, x ^ c), rep);
    }
}

TEST(SubsetMatrix, SmallCases) {
    EXPECT_EQ(dzx::subset_matrix(1), F2Matrix::from_rows({"1"}));
    EXPECT_EQ(dzx::subset_matrix(2), F2Matrix::from_rows({"011", "101"}));
    const F2Matrix s3 = dzx::subset_matrix(3);
    EXPECT_EQ(s3.rows(), 3U);
    EXPECT_EQ(s3.cols(), 7U);
    EXPECT_EQ(s3.column(6), F2Vector::from_string("111"));
    EXPECT_THROW((void)dzx::subset_matrix(0), dzx::F2Error);
}

TEST(InducedPermutation, IdentityAndShear) {
    EXPECT_EQ(dzx::induced_permutation(F2Matrix::identity(3)), F2Matrix::identity(7));
    const F2Matrix shear = F2Matrix::from_rows({"11", "01"});
    // A·01 = 11, A·10 = 10, A·11 = 01: columns 01 and 11 swap.
    EXPECT_EQ(dzx::induced_permutation(shear), F2Matrix::from_rows({"001", "010", "100"}));
    EXPECT_THROW((void)dzx::induced_permutation(F2Matrix::from_rows({"11", "11"})), dzx::F2Error);
}

TEST(InducedPermutation, ExhaustiveUpToThree) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& a : all_matrices(n, n)) {
            if (!a.is_invertible()) continue;
            const F2Matrix sigma = sigma_by_definition(a);
            EXPECT_EQ(dzx::induced_permutation(a), sigma);
            EXPECT_EQ(a * dzx::subset_matrix(n), dzx::subset_matrix(n) * sigma);
        }
}

TEST(InducedPermutation, RandomAtFour) {
    dzx::Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const F2Matrix a = dzx::random_invertible(rng, 4);
        const F2Matrix sigma = sigma_by_definition(a);
        EXPECT_EQ(dzx::induced_permutation(a), sigma);
        EXPECT_EQ(a * dzx::subset_matrix(4), dzx::subset_matrix(4) * sigma);
    }
}

TEST(Solve, Examples) {
    EXPECT_EQ(dzx::solve(F2Matrix::identity(3), F2Vector::from_string("101")), F2Vector::from_string("101"));
    const F2Matrix diag = F2Matrix::from_rows({"1", "1"});
    EXPECT_EQ(dzx::solve(diag, F2Vector::from_string("11")), F2Vector::from_string("1"));
    EXPECT_FALSE(dzx::solve(diag, F2Vector::from_string("10")).has_value());
}

TEST(F2Matrix, RankAndProducts) {
    const F2Matrix a = F2Matrix::from_rows({"110", "011"});
    EXPECT_EQ(a.rank(), 2U);
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_EQ(a * F2Matrix::identity(3), a);
    EXPECT_EQ(a * F2Vector::from_string("111"), F2Vector::from_string("00"));
    EXPECT_EQ(F2Matrix::identity(1).direct_sum(F2Matrix::from_rows({"1", "1"})), F2Matrix::from_rows({"10", "01", "01"}));
}
