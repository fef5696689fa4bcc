#pragma once

#include "ymh/linalg.hpp"
#include "ymh/module.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ymh {

enum class ComplexKind { Koszul, CE };
std::string kind_name(ComplexKind k);

// One internal degree of a complex: C_0 <- C_1 <- ... <- C_L.
// Unknown pieces (beyond the tracked range of the module) are -1 / nullopt.
struct ComplexSlice {
    ComplexKind kind = ComplexKind::Koszul;
    int degree = 0;
    std::vector<int> dims;                       // C_p
    std::vector<std::optional<SparseMatrix>> d;  // d[p] : C_p -> C_{p-1}, d[0] unused
    int length() const { return static_cast<int>(dims.size()) - 1; }
};

struct SliceRequest {
    bool partial = false;        // allow degrees beyond the tracked range
    std::set<int> homological;   // empty: all p
};

ComplexSlice koszul_complex(const GradedModule& y, int m, const SliceRequest& req = {});
ComplexSlice ce_complex(const GradedModule& y, int m, const SliceRequest& req = {});
// throws when some composite d_p d_{p+1} is nonzero
void assert_complex(const ComplexSlice& s);

// Cochain complex Hom_YM(K, Y) of the Koszul resolution at internal degree e:
// Y_e -> Y_{e+1}(x)V* -> Y_{e+3}(x)R* -> Y_{e+4}; returns dim H^i, i = 0..3
std::vector<int> koszul_cohomology_at(const GradedModule& y, int e);

struct HomologyCell {
    int p = 0;
    int degree = 0;
    int chain_dim = -1;  // -1: unknown
    int dim = -1;        // -1: not computed
    std::optional<long> expected;
    std::string note;
    bool ok() const { return !expected || dim == *expected; }
};

struct HomologyTable {
    std::string kind;
    std::string coefficient;
    int n = 0;
    int lo = 0, hi = 0;
    int length = 0;
    std::vector<HomologyCell> cells;  // ordered by (p, degree)

    HomologyCell& at(int p, int m);
    const HomologyCell& at(int p, int m) const;
    int dim(int p, int m) const { return at(p, m).dim; }
    std::vector<int> row(int p) const;  // degrees lo..hi
    bool all_ok() const;
    std::string to_tsv() const;
};

struct EngineOptions {
    int workers = 1;
    bool partial = false;
    bool paranoid = false;      // rank-nullity with kernels on every matrix
    std::set<int> homological;  // restrict computed H_p
};

HomologyTable homology_table(ComplexKind kind, const GradedModule& y, int lo, int hi,
                             const EngineOptions& opt = {});

// alternating sums of chain dims and homology dims agree wherever known
bool euler_consistent(const HomologyTable& t);

}  // namespace ymh
