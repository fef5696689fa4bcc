#pragma once

#include "ymh/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ymh {

class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Scalar> coeffs);

    static TruncatedSeries constant(int order, const Scalar& c);
    // sum of c * t^k, dropped beyond the order
    static TruncatedSeries polynomial(int order, const std::vector<std::pair<int, Scalar>>& terms);

    int order() const { return order_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar& operator[](int k) const { return c_.at(k); }
    Scalar& operator[](int k) { return c_.at(k); }

    TruncatedSeries truncated(int order) const;
    bool all_integral() const;
    bool all_nonnegative() const;
    std::string to_string() const;       // polynomial text, e.g. "3*t^3 + 4*t^4"
    std::string coeff_list() const;      // "1,3,9"

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Scalar& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    int order_ = 0;
    std::vector<Scalar> c_{Scalar(0)};
};

TruncatedSeries inverse(const TruncatedSeries& s);
TruncatedSeries log(const TruncatedSeries& s);
TruncatedSeries exp(const TruncatedSeries& s);
TruncatedSeries substitute_power(const TruncatedSeries& s, int l);
// multiply by t^k
TruncatedSeries shift_up(const TruncatedSeries& s, int k);
// index of the first differing coefficient, nullopt when equal up to min order
std::optional<int> first_difference(const TruncatedSeries& a, const TruncatedSeries& b);

long euler_phi(long l);
long binomial(long n, long k);

TruncatedSeries ym_hilbert(int n, int order);
TruncatedSeries w_hilbert(int n, int order);
TruncatedSeries chi_hc(int n, int order);
TruncatedSeries hh_series(int n, int i, int order);
TruncatedSeries hc_series(int n, int i, int order);
TruncatedSeries ym2_hh_series(int i, int order);
TruncatedSeries ym2_hc_series(int i, int order);
// product over d of (1 - t^d)^(-dims[d]); dims[0] is ignored
TruncatedSeries pbw_series(const std::vector<int>& dims, int order);

struct SeriesSet {
    int n = 0;
    int order = 0;
    TruncatedSeries chi;
    std::vector<TruncatedSeries> hh;  // unreduced HH_0..HH_{top}
    std::vector<TruncatedSeries> hc;  // unreduced HC_0..HC_{top}
};

// closed forms for YM(n); n == 2 uses its own formulas
SeriesSet closed_form_series(int n, int order, int top = 7);

// HH-bar_0 = HH_0 - 1, HC-bar_{2k} = HC_{2k} - 1
TruncatedSeries reduced_hh(const SeriesSet& s, int i);
TruncatedSeries reduced_hc(const SeriesSet& s, int i);

struct IdentityResult {
    std::string name;
    bool pass = true;
    std::optional<int> first_failure;  // coefficient index
};

std::vector<IdentityResult> verify_series_identities(const SeriesSet& s);
std::vector<IdentityResult> verify_series_identities(int n, int order);

}  // namespace ymh
