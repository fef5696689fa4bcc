#include "ymh/module.hpp"
#include "ymh/series.hpp"

#include <gtest/gtest.h>

using namespace ymh;

namespace {

long sv_dim(int n, int m) { return m < 0 ? 0 : binomial(n + m - 1, m); }

}  // namespace

TEST(Module, PolyBasisCounts) {
    const PolyBasis b(3, 5);
    for (int m = 0; m <= 5; ++m) EXPECT_EQ(b.dim(m), sv_dim(3, m));
    const int k = b.index({0, 2});
    ASSERT_GE(k, 0);
    EXPECT_EQ(b.mono(2, k), (std::vector<int>{0, 2}));
    EXPECT_EQ(b.mono(3, b.mul(2, k, 1)), (std::vector<int>{0, 1, 2}));
}

TEST(Module, BasicModulesSatisfyInvariants) {
    for (int n = 2; n <= 4; ++n) {
        EXPECT_EQ(check_module_invariants(trivial_module(n, 5)), "");
        EXPECT_EQ(check_module_invariants(trivial_module(n, 5, AlgebraTag::YM)), "");
        const auto sv = sv_regular_module(n, 6);
        EXPECT_EQ(check_module_invariants(sv), "");
        for (int m = 0; m <= 6; ++m) EXPECT_EQ(sv.dim(m), sv_dim(n, m));
    }
}

TEST(Module, ShiftAndSum) {
    const auto t = trivial_module(3, 4);
    const auto s = shift(t, 2);
    // Y[j]_m = Y_{m+j}
    EXPECT_EQ(s.dim(-2), 1);
    EXPECT_EQ(s.dim(0), 0);
    const auto sum = direct_sum(sv_regular_module(3, 4), sv_regular_module(3, 4));
    EXPECT_EQ(sum.dim(3), 20);
    EXPECT_EQ(check_module_invariants(sum), "");
}

TEST(Module, WDimensionsMatchSeries) {
    for (int n = 2; n <= 4; ++n) {
        const auto w = w_module(n, 7);
        const auto h = w_hilbert(n, 7);
        for (int m = 0; m <= 7; ++m) EXPECT_EQ(w.dim(m), h[m].get_num().get_si()) << n << "," << m;
        EXPECT_EQ(check_module_invariants(w), "");
    }
}

TEST(Module, WIsAnnihilatedByQAndGeneratedInDegreeTwo) {
    const auto full = w_module_full(3, 7);
    EXPECT_TRUE(w_generated_in_degree_two(full));
    for (int m = 2; m + 2 <= 7; ++m) EXPECT_TRUE(full.module.q_action(m).is_zero());
}

TEST(Module, GeneratorsActInjectivelyOnW) {
    const auto w = w_module(3, 7);
    for (int i = 0; i < 3; ++i)
        for (const auto& row : nonzerodivisor_check(w, i, 7)) EXPECT_TRUE(row.injective()) << i << "," << row.degree;
}

TEST(Module, TensorDimensionsConvolve) {
    const auto a = w_module(3, 6), b = sv_regular_module(3, 4);
    const auto t = tensor_module(a, b);
    EXPECT_EQ(check_module_invariants(t), "");
    for (int m = t.min_degree; m <= t.max_degree; ++m) {
        long s = 0;
        for (int da = a.min_degree; da <= m; ++da)
            if (m - da <= b.max_degree) s += static_cast<long>(a.dim(da)) * b.dim(m - da);
        EXPECT_EQ(t.dim(m), s) << m;
    }
    EXPECT_EQ(tensor_power(a, 2).dim(4), 9);
}

TEST(Module, YMModulesFromPresentation) {
    const auto p = ym_presentation(3, 6);
    const auto adj = sym_adjoint_module(p, 5);
    EXPECT_EQ(adj.tag, AlgebraTag::YM);
    EXPECT_EQ(check_module_invariants(adj), "");
    EXPECT_EQ(check_module_invariants(s_tym_adjoint_module(p, 5, 1)), "");
}
