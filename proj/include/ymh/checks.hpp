#pragma once

#include "ymh/complex.hpp"
#include "ymh/lie.hpp"
#include "ymh/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ymh {

struct CheckRow {
    std::string key;
    std::string computed;
    std::string expected;
    bool pass = true;
};

struct CheckReport {
    std::string id;
    std::string claim;
    bool pass = true;
    std::vector<CheckRow> rows;
    std::vector<std::string> notes;
    std::vector<HomologyTable> tables;

    void add(std::string key, const std::string& computed, const std::string& expected, bool ok);
    void add(std::string key, long computed, long expected) {
        add(std::move(key), std::to_string(computed), std::to_string(expected), computed == expected);
    }
    void merge(const CheckReport& other);
};

std::string join(const std::vector<int>& v);
std::string join(const std::vector<long>& v);

// --- Checks against closed forms. All dimensions are exact.

// predicted dim H_p(V, W^{(x)i}) at internal degree m; nullopt where no closed form applies
std::optional<long> exacta_prediction(int n, int i, int p, int m);
CheckReport exacta_check(int n, int i, int max_degree, const EngineOptions& opt = {});

struct HochschildResult {
    HomologyTable homology;    // HH_p at degrees 0..D
    HomologyTable cohomology;  // HH^i at degrees -4..D-4, re-indexed by duality
    int sampled_degree = 0;
    std::vector<int> direct_cochain;  // dim HH^i at the sampled degree, i = 0..3
    bool duality_confirmed = false;
};

HochschildResult hochschild_table(const YMPresentation& p, int max_degree, const EngineOptions& opt = {},
                                  int sampled_degree = -1);
// HH_p against the closed forms (separate formulas for n = 2)
CheckReport hochschild_check(const YMPresentation& p, int max_degree, const EngineOptions& opt = {});
// total dim of HH^0 over degrees 0..max_degree equals 1
CheckReport center_check(int n, int max_degree, const EngineOptions& opt = {});

CheckReport minimal_resolution_check(int n, int max_degree);

struct ExternalProductResult {
    int source_dim = 0;  // H_0(V, M(x)M) at M-degree j
    int target_dim = 0;  // H_1(V, M(x)M) at M-degree j + 2
    int rank = 0;
    int kernel_dim() const { return source_dim - rank; }
    int cokernel_dim() const { return target_dim - rank; }
};

// j is the M-degree (M = W[2]); W(x)W sits in degree j + 4
ExternalProductResult external_product(int n, int j);
CheckReport external_product_check(int n, int top_j);

CheckReport tym_homology_check(const YMPresentation& p, int max_degree, const EngineOptions& opt = {});
CheckReport h3_equals_hn_check(const GradedModule& y, int max_degree, const EngineOptions& opt = {});

CheckReport w_module_check(int n, int max_degree);
CheckReport lie_dims_check(int n, int max_degree, const YMPresentation* p = nullptr);
CheckReport series_identities_check(int n, int order);

}  // namespace ymh
