#include "ymh/lie.hpp"
#include "ymh/series.hpp"

#include <gtest/gtest.h>

using namespace ymh;

namespace {

int mobius(int k) {
    int mu = 1;
    for (int p = 2; p * p <= k; ++p)
        if (k % p == 0) {
            k /= p;
            if (k % p == 0) return 0;
            mu = -mu;
        }
    return k > 1 ? -mu : mu;
}

long necklace_count(int n, int d) {
    long s = 0;
    for (int k = 1; k <= d; ++k)
        if (d % k == 0) {
            long pw = 1;
            for (int e = 0; e < d / k; ++e) pw *= n;
            s += mobius(k) * pw;
        }
    return s / d;
}

std::vector<int> ym_dims(const YMPresentation& p) {
    return std::vector<int>(p.dims.begin() + 1, p.dims.end());
}

}  // namespace

TEST(Lie, WordCodes) {
    const Word w{0, 2, 1, 1};
    EXPECT_EQ(word_from_code(word_code(w, 3), 3, 4), w);
    EXPECT_EQ(word_text(w), "x1x3x2x2");
    EXPECT_TRUE(is_lyndon({0, 0, 1}));
    EXPECT_FALSE(is_lyndon({0, 1, 0}));
    EXPECT_FALSE(is_lyndon({1, 1}));
}

TEST(Lie, WittDimensionsByMoebius) {
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 8; ++d) {
            EXPECT_EQ(witt_dimension(n, d), necklace_count(n, d));
            const auto hall = hall_basis(n, d);
            EXPECT_EQ(static_cast<long>(hall.size()), necklace_count(n, d));
            for (const auto& h : hall) {
                EXPECT_TRUE(is_lyndon(h.word));
                if (d > 1) {
                    EXPECT_TRUE(is_lyndon(Word(h.word.begin(), h.word.begin() + h.split)));
                    EXPECT_TRUE(is_lyndon(Word(h.word.begin() + h.split, h.word.end())));
                }
            }
        }
}

TEST(Lie, FreeLieBracketExpandsToCommutator) {
    const FreeLie f(2, 4);
    const LieElement x1 = f.generator(0), x2 = f.generator(1);
    const WordPoly e = f.expand(f.bracket(x1, x2));
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(e.at(word_code({0, 1}, 2)), 1);
    EXPECT_EQ(e.at(word_code({1, 0}, 2)), -1);
    EXPECT_TRUE(f.bracket(x1, x1).coords.empty());
}

TEST(Lie, YMDimensions) {
    EXPECT_EQ(ym_dims(ym_presentation(3, 7)), (std::vector<int>{3, 3, 5, 10, 24, 50, 120}));
    EXPECT_EQ(ym_dims(ym_presentation(4, 5)), (std::vector<int>{4, 6, 16, 45, 144}));
}

TEST(Lie, YM2IsHeisenberg) {
    const auto p = ym_presentation(2, 6);
    EXPECT_EQ(ym_dims(p), (std::vector<int>{2, 1, 0, 0, 0, 0}));
    EXPECT_EQ(validate_presentation(p), "");
}

TEST(Lie, IdealDimensionsComplementYM) {
    const YMBuilder b(3, 6);
    for (int d = 1; d <= 6; ++d)
        EXPECT_EQ(b.ideal_dim(d) + b.presentation().dim(d), witt_dimension(3, d)) << "d=" << d;
    EXPECT_EQ(b.ideal_dim(3), 3);
}

TEST(Lie, RelationsVanishInQuotient) {
    const YMBuilder b(3, 5);
    for (const auto& r : ym_relations(b.free_lie())) EXPECT_TRUE(b.reduce(r).empty());
}

TEST(Lie, PresentationPassesValidation) {
    for (int n = 3; n <= 4; ++n) EXPECT_EQ(validate_presentation(ym_presentation(n, 6)), "");
}

TEST(Lie, BracketAntisymmetry) {
    const auto p = ym_presentation(3, 6);
    for (int a = 0; a < p.total_dim(); ++a)
        for (int b = 0; b < p.total_dim(); ++b) {
            if (a == b || p.degree_of(a) + p.degree_of(b) > 6) continue;
            EXPECT_EQ(ym_bracket_global(p, a, b), scaled(ym_bracket_global(p, b, a), Scalar(-1)));
        }
}

TEST(Lie, PBWStraighteningExample) {
    const auto p = ym_presentation(2, 4);
    // x1 * x2 = x2 x1 + [x1, x2]
    const PBWElement e = pbw_left_mult(p, 0, {1});
    const int x12 = p.global({2, 0});
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(e.at(PBWMonomial{0, 1}), 1);
    EXPECT_EQ(e.at(PBWMonomial{x12}), 1);
    EXPECT_EQ(p.lifts[2][0].bracket_text(), "[x1,x2]");
}

TEST(Lie, PBWCountsMatchHilbertSeries) {
    for (int n = 2; n <= 4; ++n) {
        const int D = n == 2 ? 8 : 6;
        const auto p = ym_presentation(n, D);
        const auto h = ym_hilbert(n, D);
        for (int d = 0; d <= D; ++d) {
            EXPECT_EQ(static_cast<long>(pbw_basis(p, d).size()), h[d].get_num().get_si()) << n << "," << d;
            EXPECT_EQ(assoc_dimension(n, d), h[d].get_num().get_si()) << n << "," << d;
        }
    }
}

TEST(Lie, AssocComponentReducesRelations) {
    const AssocComponent c(3, 3);
    EXPECT_EQ(c.dim(), 24);
    for (int j = 0; j < 3; ++j) EXPECT_TRUE(c.reduce(ym_relation_word(3, j)).empty());
}
