#include "ymh/derivation.hpp"

#include <gtest/gtest.h>

using namespace ymh;

namespace {

SparseVector letter(const DerivationLab& lab, int i) {
    return lab.component(1).reduce({{word_code({i}, lab.n()), Scalar(1)}});
}

std::vector<Scalar> coords_of(const DerivationLab& lab, const HomDerivation& d) {
    const auto c = lab.express(d, lab.standard_derivations());
    EXPECT_TRUE(c.has_value()) << d.name;
    return c.value_or(std::vector<Scalar>{});
}

std::vector<Scalar> unit(int size, int k, const Scalar& a) {
    std::vector<Scalar> v(size, 0);
    v[k] = a;
    return v;
}

}  // namespace

TEST(Derivation, StandardBasisShape) {
    const DerivationLab lab(3);
    const auto b = lab.standard_derivations();
    ASSERT_EQ(b.size(), 7u);
    EXPECT_EQ(b[0].shift, 0);
    EXPECT_EQ(b[1].shift, -1);
    EXPECT_EQ(b[4].shift, 0);
    for (const auto& d : b) EXPECT_TRUE(lab.preserves_relations(d)) << d.name;
    EXPECT_EQ(DerivationLab(4).standard_derivations().size(), 11u);
}

TEST(Derivation, ImagesOfGenerators) {
    const DerivationLab lab(3);
    const auto rot = lab.rotation(0, 1);
    EXPECT_EQ(rot.images[1], scaled(letter(lab, 0), Scalar(2)));
    EXPECT_EQ(rot.images[0], scaled(letter(lab, 1), Scalar(-2)));
    EXPECT_TRUE(rot.images[2].empty());
    EXPECT_EQ(lab.euler().images[2], letter(lab, 2));
    EXPECT_EQ(lab.translation(1).images[1], unit_vector(0));
    EXPECT_TRUE(lab.translation(1).images[0].empty());
}

TEST(Derivation, BracketExamples) {
    const DerivationLab lab(3);
    const int sz = 7;
    EXPECT_EQ(coords_of(lab, lab.bracket(lab.euler(), lab.translation(0))), unit(sz, 1, -1));
    // [d_{1,2}, d_1] = -2 d_2
    EXPECT_EQ(coords_of(lab, lab.bracket(lab.rotation(0, 1), lab.translation(0))), unit(sz, 2, -2));
    EXPECT_EQ(coords_of(lab, lab.bracket(lab.translation(0), lab.translation(1))), std::vector<Scalar>(sz, 0));
    EXPECT_EQ(coords_of(lab, lab.bracket(lab.euler(), lab.rotation(0, 2))), std::vector<Scalar>(sz, 0));
}

TEST(Derivation, NonDerivationIsRejected) {
    const DerivationLab lab(3);
    HomDerivation bad = lab.euler();
    bad.name = "x1 -> x1 only";
    bad.images[1].clear();
    bad.images[2].clear();
    EXPECT_FALSE(lab.preserves_relations(bad));
}

TEST(Derivation, ExpectedBracketsMatchComputed) {
    const DerivationLab lab(3);
    const auto b = lab.standard_derivations();
    for (int i = 0; i < static_cast<int>(b.size()); ++i)
        for (int j = 0; j < static_cast<int>(b.size()); ++j)
            EXPECT_EQ(coords_of(lab, lab.bracket(b[i], b[j])), expected_standard_bracket(3, i, j)) << i << "," << j;
}

TEST(Derivation, HH1StructureForThreeGenerators) {
    const auto h = verify_hh1_structure(3, 6);
    EXPECT_TRUE(h.report.pass);
    EXPECT_EQ(h.names.size(), 7u);
}
