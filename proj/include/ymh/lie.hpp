#pragma once

#include "ymh/linalg.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace ymh {

// A word in x_1..x_n stored with 0-based letters.
using Word = std::vector<int>;

std::uint64_t word_code(const Word& w, int n);
Word word_from_code(std::uint64_t code, int n, int len);
std::string word_text(const Word& w);  // "x1x1x2"
bool is_lyndon(const Word& w);

long witt_dimension(int n, int d);

// Hall monomial: a Lyndon word with its standard bracketing.
struct HallMonomial {
    Word word;
    int split = 0;  // word = word[0,split) . word[split,..), both Lyndon
    int degree() const { return static_cast<int>(word.size()); }
    std::string bracket_text() const;
};

std::vector<HallMonomial> hall_basis(int n, int d);

struct LieElement {
    int degree = 0;
    SparseVector coords;  // over hall_basis(n, degree)
};

// integer polynomial in T(V), words of one length keyed by word_code
using WordPoly = std::map<std::uint64_t, Scalar>;

// Free Lie algebra f(n) tracked through degree D.
class FreeLie {
public:
    FreeLie(int n, int max_degree);

    int n() const { return n_; }
    int max_degree() const { return max_degree_; }
    int dim(int d) const { return static_cast<int>(basis_.at(d).size()); }
    const std::vector<HallMonomial>& basis(int d) const { return basis_.at(d); }
    int index_of(const Word& w) const;  // -1 if not a Lyndon word

    LieElement generator(int i) const;
    WordPoly expand(const LieElement& a) const;
    const std::vector<std::pair<std::uint64_t, long>>& expansion(int d, int k) const {
        return expansions_.at(d).at(k);
    }
    // Lyndon coordinates of a Lie polynomial given in words
    LieElement from_words(int degree, WordPoly p) const;
    LieElement bracket(const LieElement& a, const LieElement& b) const;
    // ad(x_i): f_d -> f_{d+1} in Hall coordinates
    const SparseMatrix& ad_generator(int i, int d) const { return ad_.at(d).at(i); }

    // Z_2^n parity class of a basis element (letter counts mod 2)
    unsigned parity(int d, int k) const { return parity_.at(d).at(k); }

private:
    int n_, max_degree_;
    std::vector<std::vector<HallMonomial>> basis_;
    std::vector<std::unordered_map<std::uint64_t, int>> index_;
    std::vector<std::vector<std::vector<std::pair<std::uint64_t, long>>>> expansions_;
    std::vector<std::vector<SparseMatrix>> ad_;
    std::vector<std::vector<unsigned>> parity_;
};

// The relations r_j = sum_i [x_i,[x_i,x_j]] in f(n)_3.
std::vector<LieElement> ym_relations(const FreeLie& f);

// basis of I_d, in the quotient construction's echelon form
std::vector<SparseVector> ideal_component(const FreeLie& f, const std::vector<LieElement>& rels, int d);

// Basis element of ym(n): (degree, index within degree)
struct YMIndex {
    int degree = 0;
    int index = 0;
    friend bool operator<(const YMIndex& a, const YMIndex& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.index < b.index;
    }
    friend bool operator==(const YMIndex& a, const YMIndex& b) {
        return a.degree == b.degree && a.index == b.index;
    }
};

// Frozen description of ym(n) through degree D.
class YMPresentation {
public:
    int n = 0;
    int max_degree = 0;
    std::vector<int> dims;                       // dims[d], d = 0..D (dims[0] = 0)
    std::vector<std::vector<HallMonomial>> lifts;  // lifts[d][k]
    std::vector<int> offsets;                    // global index of (d, 0)
    // brackets[(a_global, b_global)] = coords in ym_{deg a + deg b}; stored for all
    // ordered pairs with deg a + deg b <= D, a != b
    std::map<std::pair<int, int>, SparseVector> brackets;

    int dim(int d) const { return d >= 0 && d < static_cast<int>(dims.size()) ? dims[d] : 0; }
    int global(YMIndex i) const { return offsets.at(i.degree) + i.index; }
    YMIndex local(int g) const;
    int total_dim() const { return offsets.back(); }
    int degree_of(int g) const { return local(g).degree; }

    // deterministic structural hash over the frozen data
    std::string fingerprint() const;
};

// Builds the presentation. The builder keeps the reduction machinery.
class YMBuilder {
public:
    YMBuilder(int n, int max_degree);
    const FreeLie& free_lie() const { return *free_; }
    const YMPresentation& presentation() const { return pres_; }
    int ideal_dim(int d) const;
    const std::vector<SparseVector>& ideal_basis(int d) const { return ideal_.at(d); }
    // reduction f(n)_d -> ym(n)_d
    SparseVector reduce(const LieElement& a) const;

private:
    struct DegreeData {
        std::vector<Echelon> blocks;       // one per parity class
        std::vector<std::vector<int>> cols;  // Hall indices in each block
        std::vector<int> block_of, local_of;
        std::vector<int> lift_of_hall;     // Hall index -> ym index or -1
    };
    SparseVector reduce_coords(int d, const SparseVector& v) const;

    std::unique_ptr<FreeLie> free_;
    std::vector<DegreeData> data_;
    std::vector<std::vector<SparseVector>> ideal_;
    YMPresentation pres_;
};

YMPresentation ym_presentation(int n, int max_degree);

SparseVector ym_bracket(const YMPresentation& p, YMIndex a, YMIndex b);
SparseVector ym_bracket_global(const YMPresentation& p, int a, int b);

// checks: dims vs series, antisymmetry, Jacobi; returns empty string on success
std::string validate_presentation(const YMPresentation& p);

// PBW monomial: non-decreasing global indices y1 <= ... <= yk, read as the
// ordered product yk ... y1.
using PBWMonomial = std::vector<int>;
using PBWElement = std::map<PBWMonomial, Scalar>;

int pbw_degree(const YMPresentation& p, const PBWMonomial& m);
std::vector<PBWMonomial> pbw_basis(const YMPresentation& p, int d);
// all multisets of basis elements with degree filter, used by S(ym) modules
std::vector<PBWMonomial> monomials(const YMPresentation& p, int d, int min_factor_degree,
                                   int exact_length = -1);
PBWElement pbw_left_mult(const YMPresentation& p, int gen, const PBWMonomial& m);
PBWElement pbw_left_mult_element(const YMPresentation& p, int g, const PBWElement& e);

// YM(n)_d = V^{(x)d} / sum V^a R V^b with normal words as basis
class AssocComponent {
public:
    AssocComponent(int n, int d);
    int n() const { return n_; }
    int degree() const { return d_; }
    int dim() const { return static_cast<int>(normal_.size()); }
    const std::vector<std::uint64_t>& normal_words() const { return normal_; }
    SparseVector reduce(const WordPoly& p) const;

private:
    int n_, d_;
    std::vector<std::uint64_t> normal_;
    std::unordered_map<std::uint64_t, int> normal_index_;
    std::vector<Echelon> blocks_;
    std::vector<int> block_of_, local_of_;
    std::vector<std::vector<std::uint64_t>> block_words_;
};

// relation vectors u r_j v spanning the degree-d piece of the two-sided ideal
std::vector<SparseVector> assoc_relation_vectors(int n, int d);
int assoc_dimension(int n, int d);
WordPoly ym_relation_word(int n, int j);

}  // namespace ymh
