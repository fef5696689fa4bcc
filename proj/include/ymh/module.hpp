#pragma once

#include "ymh/lie.hpp"
#include "ymh/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace ymh {

enum class AlgebraTag { SV, YM };

std::string tag_name(AlgebraTag t);

// Graded left module over S(V(n)) or YM(n), tracked on [min_degree, max_degree].
// Degrees below min_degree are zero; degrees above max_degree are unknown.
struct GradedModule {
    std::string name;
    AlgebraTag tag = AlgebraTag::SV;
    int n = 0;
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> dims;                         // dims[m - min_degree]
    std::vector<std::vector<std::string>> labels;  // may be empty
    // actions[m - min_degree][i] : degree m -> m + 1, for m < max_degree
    std::vector<std::vector<SparseMatrix>> actions;

    int dim(int m) const;
    bool tracked(int m) const { return m <= max_degree; }
    // A_i^{(m)}; zero-shaped outside the support
    SparseMatrix action(int i, int m) const;
    // Q^{(m)} = sum_i A_i^{(m+1)} A_i^{(m)}
    SparseMatrix q_action(int m) const;
    std::vector<int> dims_range(int lo, int hi) const;
};

// empty string when every invariant holds
std::string check_module_invariants(const GradedModule& y);

// Monomial basis of S(V(n)) through degree D (sorted letter sequences).
class PolyBasis {
public:
    PolyBasis(int n, int max_degree);
    int n() const { return n_; }
    int max_degree() const { return max_degree_; }
    int dim(int m) const { return m < 0 || m > max_degree_ ? 0 : static_cast<int>(monos_[m].size()); }
    const std::vector<int>& mono(int m, int k) const { return monos_[m][k]; }
    int index(const std::vector<int>& mono) const;
    // index of x_i * mono(m, k) in degree m+1
    int mul(int m, int k, int i) const { return mul_[m][k][i]; }
    std::string label(int m, int k) const;

private:
    int n_, max_degree_;
    std::vector<std::vector<std::vector<int>>> monos_;
    std::vector<std::map<std::vector<int>, int>> index_;
    std::vector<std::vector<std::vector<int>>> mul_;
};

GradedModule trivial_module(int n, int max_degree, AlgebraTag tag = AlgebraTag::SV);
GradedModule sv_regular_module(int n, int max_degree);
GradedModule shift(const GradedModule& y, int j);
GradedModule direct_sum(const GradedModule& a, const GradedModule& b);
GradedModule tensor_module(const GradedModule& a, const GradedModule& b);
GradedModule tensor_power(const GradedModule& a, int i);

struct TensorBlock {
    int a = 0, b = 0, offset = 0;
};
std::vector<TensorBlock> tensor_layout(const GradedModule& a, const GradedModule& b, int m);
// A_k (x) 1 + sign * 1 (x) B_k at degree m
SparseMatrix tensor_action(const GradedModule& a, const GradedModule& b, int k, int m, int sign);

// S(ym(n)) with the adjoint action extended as a derivation
GradedModule sym_adjoint_module(const YMPresentation& p, int max_degree);
// S(tym(n)) (length < 0) or its graded piece S^length(tym(n))
GradedModule s_tym_adjoint_module(const YMPresentation& p, int max_degree, int length = -1);

struct WModule {
    GradedModule module;
    std::vector<Subquotient> pieces;  // W_m as Ker d1 / Im d2 inside S_{m-1} (x) V
};

WModule w_module_full(int n, int max_degree);
GradedModule w_module(int n, int max_degree);

// classes of x_i(x)x_j - x_j(x)x_i span W_2, and the action closes on them
bool w_generated_in_degree_two(const WModule& w);

struct InjectivityRow {
    int degree = 0;
    int source_dim = 0;
    int kernel_dim = 0;
    bool injective() const { return kernel_dim == 0; }
};

// elt = generator index 0..n-1, or -1 for q
std::vector<InjectivityRow> nonzerodivisor_check(const GradedModule& y, int elt, int max_degree);

}  // namespace ymh
