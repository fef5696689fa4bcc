#include "ymh/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ymh;

namespace {

using Dense = std::vector<std::vector<Scalar>>;

// textbook Gaussian elimination on a dense copy
int dense_rank(Dense a) {
    const int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Scalar f = a[i][c] / a[r][c];
            for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

Dense random_dense(std::mt19937& rng, int rows, int cols, int density) {
    std::uniform_int_distribution<int> val(-3, 3), hit(0, 9);
    Dense a(rows, std::vector<Scalar>(cols, 0));
    for (auto& row : a)
        for (auto& x : row)
            if (hit(rng) < density) x = val(rng);
    return a;
}

SparseMatrix to_sparse(const Dense& a) {
    const int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
    SparseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (a[i][j] != 0) m.set(i, j, a[i][j]);
    return m;
}

}  // namespace

TEST(Linalg, ScalarTextRoundTrip) {
    EXPECT_EQ(to_string(Scalar(-3, 2)), "-3/2");
    EXPECT_EQ(parse_scalar("-6/4"), Scalar(-3, 2));
    EXPECT_EQ(to_string(parse_scalar("7")), "7");
}

TEST(Linalg, CanonicalizeMergesAndDropsZeros) {
    SparseVector v{{3, 1}, {1, 2}, {3, -1}, {0, 0}};
    canonicalize(v);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].first, 1);
    EXPECT_EQ(v[0].second, 2);
    EXPECT_TRUE(axpy(v, Scalar(-2), {{1, 1}}).empty());
}

TEST(Linalg, RankAgreesWithDenseElimination) {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + trial % 9, cols = 1 + (trial * 7) % 11;
        const Dense a = random_dense(rng, rows, cols, 2 + trial % 6);
        const SparseMatrix m = to_sparse(a);
        const int expected = dense_rank(a);
        EXPECT_EQ(rank(m), expected);
        EXPECT_EQ(rank_transposed(m), expected);
        EXPECT_EQ(rank(m.transpose()), expected);
        EXPECT_TRUE(check_rank_nullity(m));
    }
}

TEST(Linalg, KernelIsAnnihilatedAndHasRightSize) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Dense a = random_dense(rng, 5, 8, 4);
        const SparseMatrix m = to_sparse(a);
        const auto ker = kernel_basis(m);
        EXPECT_EQ(static_cast<int>(ker.size()), 8 - dense_rank(a));
        EXPECT_EQ(rank_of_vectors(ker), static_cast<int>(ker.size()));
        for (const auto& v : ker) EXPECT_TRUE(m.apply(v).empty());
    }
}

TEST(Linalg, ProductAndIdentity) {
    SparseMatrix a(2, 3);
    a.set(0, 0, 1);
    a.set(0, 2, 2);
    a.set(1, 1, -1);
    EXPECT_EQ(SparseMatrix::identity(2) * a, a);
    EXPECT_EQ(a * SparseMatrix::identity(3), a);
    const SparseMatrix aat = a * a.transpose();
    EXPECT_EQ(aat.at(0, 0), 5);
    EXPECT_EQ(aat.at(1, 1), 1);
    EXPECT_EQ(aat.at(0, 1), 0);
    EXPECT_TRUE((a - a).is_zero());
}

TEST(Linalg, SolveInSpan) {
    const std::vector<SparseVector> basis{{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}};
    const auto c = solve_in_span(basis, {{0, 1}, {2, -1}});
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ((*c)[0], 1);
    EXPECT_EQ((*c)[1], -1);
    EXPECT_FALSE(solve_in_span(basis, {{0, 1}}).has_value());
}

TEST(Linalg, EchelonTagsRecordCombinations) {
    Echelon e(3);
    EXPECT_TRUE(e.insert({{0, 2}, {1, 2}}, {{0, 1}}));
    EXPECT_TRUE(e.insert({{1, 1}, {2, 1}}, {{1, 1}}));
    EXPECT_FALSE(e.insert({{0, 1}, {2, -1}}, {{2, 1}}));
    SparseVector tag;
    const SparseVector res = e.reduce({{0, 4}, {1, 3}, {2, -1}}, &tag);
    EXPECT_TRUE(res.empty());
    // 4x0 + 3x1 - x2 = 2*(2x0 + 2x1) - (x1 + x2)
    EXPECT_EQ(coeff(tag, 0), 2);
    EXPECT_EQ(coeff(tag, 1), -1);
}

TEST(Linalg, SubquotientDimensionAndReduction) {
    // sub = span(e0, e1, e2 + e3), quot = span(e0 + e1)
    const std::vector<SparseVector> sub{{{0, 1}}, {{1, 1}}, {{2, 1}, {3, 1}}};
    const std::vector<SparseVector> quot{{{0, 1}, {1, 1}}};
    const Subquotient sq(4, sub, quot);
    EXPECT_EQ(sq.dim(), 2);
    EXPECT_TRUE(sq.in_sub({{2, 2}, {3, 2}}));
    EXPECT_FALSE(sq.in_sub({{2, 1}}));
    EXPECT_TRUE(sq.reduce({{0, 1}, {1, 1}}).empty());
    EXPECT_EQ(sq.reduce({{0, 1}}), scaled(sq.reduce({{1, 1}}), Scalar(-1)));
    EXPECT_THROW(sq.reduce({{3, 1}}), std::exception);
    for (const auto& l : sq.lifts()) EXPECT_TRUE(sq.in_sub(l));
}
