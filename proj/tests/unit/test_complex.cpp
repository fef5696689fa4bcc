#include "ymh/complex.hpp"
#include "ymh/series.hpp"

#include <gtest/gtest.h>

using namespace ymh;

TEST(Complex, KoszulOfTrivialModule) {
    // H_p(YM, k): k, V[-1], R[-3], k[-4]
    const int n = 3;
    const auto t = homology_table(ComplexKind::Koszul, trivial_module(n, 8, AlgebraTag::YM), 0, 8);
    for (int m = 0; m <= 8; ++m) {
        EXPECT_EQ(t.dim(0, m), m == 0 ? 1 : 0);
        EXPECT_EQ(t.dim(1, m), m == 1 ? n : 0);
        EXPECT_EQ(t.dim(2, m), m == 3 ? n : 0);
        EXPECT_EQ(t.dim(3, m), m == 4 ? 1 : 0);
    }
    EXPECT_TRUE(euler_consistent(t));
}

TEST(Complex, CEOfPolynomialRingIsTrivial) {
    for (int n = 2; n <= 4; ++n) {
        const auto t = homology_table(ComplexKind::CE, sv_regular_module(n, 7), 0, 7);
        for (int p = 0; p <= t.length; ++p)
            for (int m = 0; m <= 7; ++m) EXPECT_EQ(t.dim(p, m), p == 0 && m == 0 ? 1 : 0) << n << "," << p << "," << m;
    }
}

TEST(Complex, CEOfTrivialModuleIsExterior) {
    const int n = 4;
    const auto t = homology_table(ComplexKind::CE, trivial_module(n, 6), 0, 6);
    for (int p = 0; p <= n; ++p)
        for (int m = 0; m <= 6; ++m) EXPECT_EQ(t.dim(p, m), m == p ? binomial(n, p) : 0);
}

TEST(Complex, DifferentialsSquareToZero) {
    const auto w = w_module(3, 8);
    for (int m = 0; m <= 8; ++m) {
        EXPECT_NO_THROW(assert_complex(ce_complex(w, m)));
        EXPECT_NO_THROW(assert_complex(koszul_complex(sv_regular_module(3, 8), m)));
    }
}

TEST(Complex, KoszulOfPolynomialRing) {
    // S(V) as a YM-module: H_0 = S(V) / V S(V) = k, H_1 has dims of the relation part
    const auto t = homology_table(ComplexKind::Koszul, sv_regular_module(3, 8), 0, 8);
    EXPECT_EQ(t.row(0), (std::vector<int>{1, 0, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(t.row(1), (std::vector<int>{0, 0, 3, 5, 7, 9, 11, 13, 15}));
    EXPECT_TRUE(euler_consistent(t));
}

TEST(Complex, CochainOfTrivialModule) {
    const auto m = trivial_module(3, 6, AlgebraTag::YM);
    EXPECT_EQ(koszul_cohomology_at(m, 0), (std::vector<int>{1, 0, 0, 0}));
    EXPECT_EQ(koszul_cohomology_at(m, -1), (std::vector<int>{0, 3, 0, 0}));
    EXPECT_EQ(koszul_cohomology_at(m, -3), (std::vector<int>{0, 0, 3, 0}));
    EXPECT_EQ(koszul_cohomology_at(m, -4), (std::vector<int>{0, 0, 0, 1}));
    EXPECT_EQ(koszul_cohomology_at(m, -2), (std::vector<int>{0, 0, 0, 0}));
}

TEST(Complex, ParanoidModeAgrees) {
    EngineOptions opt;
    opt.paranoid = true;
    const auto w = w_module(3, 7);
    const auto a = homology_table(ComplexKind::CE, w, 0, 7);
    const auto b = homology_table(ComplexKind::CE, w, 0, 7, opt);
    for (int p = 0; p <= a.length; ++p) EXPECT_EQ(a.row(p), b.row(p));
}

TEST(Complex, BeyondTrackedRangeIsReported) {
    const auto w = w_module(3, 5);
    EXPECT_THROW(ce_complex(w, 9), std::exception);
    SliceRequest req;
    req.partial = true;
    const auto s = ce_complex(w, 9, req);
    EXPECT_EQ(s.dims[0], -1);
}
