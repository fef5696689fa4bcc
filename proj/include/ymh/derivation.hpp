#pragma once

#include "ymh/checks.hpp"
#include "ymh/lie.hpp"
#include "ymh/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ymh {

// A homogeneous derivation of YM(n) given by the images of the generators.
// images[i] lives in YM(n)_{1+shift}, in AssocComponent normal-word coordinates.
struct HomDerivation {
    std::string name;
    int shift = 0;
    std::vector<SparseVector> images;
};

bool operator==(const HomDerivation& a, const HomDerivation& b);

class DerivationLab {
public:
    explicit DerivationLab(int n);
    int n() const { return n_; }

    const AssocComponent& component(int d) const;
    WordPoly to_words(int d, const SparseVector& coords) const;

    // Leibniz extension on a homogeneous word polynomial of degree deg
    WordPoly apply_words(const HomDerivation& der, int deg, const WordPoly& p) const;
    SparseVector apply(const HomDerivation& der, int deg, const WordPoly& p) const;

    // zero on the relations r_j and on x_k r_j, r_j x_k
    bool preserves_relations(const HomDerivation& der) const;

    HomDerivation bracket(const HomDerivation& a, const HomDerivation& b) const;
    HomDerivation combination(const std::vector<HomDerivation>& basis, const std::vector<Scalar>& c) const;
    std::optional<std::vector<Scalar>> express(const HomDerivation& d, const std::vector<HomDerivation>& basis) const;

    HomDerivation euler() const;
    HomDerivation translation(int i) const;
    HomDerivation rotation(int i, int j) const;
    // d_eu, d_1..d_n, d_{i,j} for i < j
    std::vector<HomDerivation> standard_derivations() const;

private:
    int n_;
    mutable std::map<int, std::unique_ptr<AssocComponent>> cache_;
};

// coefficients of [b_a, b_b] over the standard basis, from the semidirect product structure
std::vector<Scalar> expected_standard_bracket(int n, int a, int b);

struct BracketEntry {
    int a = 0, b = 0;
    std::vector<Scalar> computed;
    std::vector<Scalar> expected;
};

struct HH1Structure {
    CheckReport report;
    std::vector<std::string> names;
    std::vector<BracketEntry> brackets;
};

// brackets, Jacobi, and span dims against HH^1 from the Hochschild complex up to max_degree
HH1Structure verify_hh1_structure(int n, int max_degree = -1, const EngineOptions& opt = {});

}  // namespace ymh
