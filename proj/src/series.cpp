#include "ymh/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ymh {

TruncatedSeries::TruncatedSeries(int order) : order_(order), c_(order + 1) {
    if (order < 0) throw std::invalid_argument("negative series order");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Scalar> coeffs) : TruncatedSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = std::move(coeffs[k]);
}

TruncatedSeries TruncatedSeries::constant(int order, const Scalar& c) {
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::polynomial(int order, const std::vector<std::pair<int, Scalar>>& terms) {
    TruncatedSeries s(order);
    for (const auto& [k, c] : terms)
        if (k >= 0 && k <= order) s.c_[k] += c;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order > order_) throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(order, std::vector<Scalar>(c_.begin(), c_.begin() + order + 1));
}

bool TruncatedSeries::all_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& q) { return q.get_den() == 1; });
}

bool TruncatedSeries::all_nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& q) { return q >= 0; });
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        if (c_[k] == 0) continue;
        Scalar c = c_[k];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (c < 0) c = -c;
        first = false;
        if (k == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << "*";
        os << "t";
        if (k > 1) os << "^" << k;
    }
    if (first) os << "0";
    os << " + O(t^" << order_ + 1 << ")";
    return os.str();
}

std::string TruncatedSeries::coeff_list() const {
    std::ostringstream os;
    for (int k = 0; k <= order_; ++k) os << (k ? "," : "") << c_[k].get_str();
    return os.str();
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order_, b.order_));
    for (int k = 0; k <= s.order_; ++k) s.c_[k] = a.c_[k] + b.c_[k];
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order_, b.order_));
    for (int k = 0; k <= s.order_; ++k) s.c_[k] = a.c_[k] - b.c_[k];
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a) { return Scalar(-1) * a; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order_, b.order_));
    for (int i = 0; i <= s.order_; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j <= s.order_; ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return s;
}

TruncatedSeries operator*(const Scalar& a, const TruncatedSeries& b) {
    TruncatedSeries s(b);
    for (auto& c : s.c_) c *= a;
    return s;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
}

TruncatedSeries inverse(const TruncatedSeries& s) {
    if (s[0] == 0) throw std::domain_error("inverse needs a nonzero constant term");
    const int N = s.order();
    TruncatedSeries r(N);
    r[0] = 1 / s[0];
    for (int k = 1; k <= N; ++k) {
        Scalar acc = 0;
        for (int j = 1; j <= k; ++j) acc += s[j] * r[k - j];
        r[k] = -acc * r[0];
    }
    return r;
}

TruncatedSeries log(const TruncatedSeries& s) {
    if (s[0] != 1) throw std::domain_error("log needs constant term 1");
    const int N = s.order();
    // (log s)' = s'/s
    TruncatedSeries ds(N);
    for (int k = 0; k < N; ++k) ds[k] = (k + 1) * s[k + 1];
    TruncatedSeries q = ds * inverse(s);
    TruncatedSeries r(N);
    for (int k = 1; k <= N; ++k) r[k] = q[k - 1] / k;
    return r;
}

TruncatedSeries exp(const TruncatedSeries& s) {
    if (s[0] != 0) throw std::domain_error("exp needs constant term 0");
    const int N = s.order();
    TruncatedSeries e(N);
    e[0] = 1;
    for (int k = 1; k <= N; ++k) {
        Scalar acc = 0;
        for (int j = 1; j <= k; ++j) acc += j * s[j] * e[k - j];
        e[k] = acc / k;
    }
    return e;
}

TruncatedSeries substitute_power(const TruncatedSeries& s, int l) {
    if (l < 1) throw std::invalid_argument("substitute_power needs l >= 1");
    TruncatedSeries r(s.order());
    for (int k = 0; k * l <= s.order(); ++k) r[k * l] = s[k];
    return r;
}

TruncatedSeries shift_up(const TruncatedSeries& s, int k) {
    TruncatedSeries r(s.order());
    for (int j = 0; j + k <= s.order(); ++j) r[j + k] = s[j];
    return r;
}

std::optional<int> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int N = std::min(a.order(), b.order());
    for (int k = 0; k <= N; ++k)
        if (a[k] != b[k]) return k;
    return std::nullopt;
}

long euler_phi(long l) {
    long r = l;
    for (long p = 2; p * p <= l; ++p) {
        if (l % p) continue;
        while (l % p == 0) l /= p;
        r -= r / p;
    }
    if (l > 1) r -= r / l;
    return r;
}

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

namespace {

void need_n(int n, int lo) {
    if (n < lo) throw std::invalid_argument("n out of range for this series");
}

TruncatedSeries poly(int order, std::initializer_list<std::pair<int, long>> terms) {
    std::vector<std::pair<int, Scalar>> t;
    for (auto [k, c] : terms) t.emplace_back(k, Scalar(c));
    return TruncatedSeries::polynomial(order, t);
}

TruncatedSeries one_minus_t_pow(int order, int e) {
    TruncatedSeries s = TruncatedSeries::constant(order, 1);
    TruncatedSeries f = poly(order, {{0, 1}, {1, -1}});
    TruncatedSeries r = s;
    for (int k = 0; k < e; ++k) r = r * f;
    return r;
}

}  // namespace

TruncatedSeries ym_hilbert(int n, int order) {
    need_n(n, 2);
    return inverse(poly(order, {{0, 1}, {2, -1}}) * poly(order, {{0, 1}, {1, -n}, {2, 1}}));
}

TruncatedSeries w_hilbert(int n, int order) {
    need_n(n, 2);
    TruncatedSeries d = one_minus_t_pow(order, n);
    TruncatedSeries num = d + poly(order, {{0, -1}, {1, n}, {3, -n}, {4, 1}});
    return num * inverse(d);
}

TruncatedSeries chi_hc(int n, int order) {
    need_n(n, 2);
    TruncatedSeries la = log(poly(order, {{0, 1}, {1, -n}, {3, n}, {4, -1}}));
    TruncatedSeries r(order);
    for (int l = 1; l <= std::max(order, 1); ++l)
    {
        Scalar w(euler_phi(l), l);
        w.canonicalize();
        r = r - w * substitute_power(la, l);
    }
    return r;
}

TruncatedSeries hh_series(int n, int i, int order) {
    need_n(n, 3);
    const long m = static_cast<long>(n) * (n - 1);
    switch (i) {
        case 0: return chi_hc(n, order) + poly(order, {{0, 1}, {3, n}, {4, m / 2 - 1}});
        case 1: return chi_hc(n, order) + poly(order, {{3, 2L * n}, {4, m - 1}});
        case 2: return poly(order, {{3, n}, {4, m / 2 + 1}});
        case 3: return poly(order, {{4, 1}});
        default:
            if (i < 0) throw std::invalid_argument("negative homological degree");
            return TruncatedSeries(order);
    }
}

TruncatedSeries hc_series(int n, int i, int order) {
    need_n(n, 3);
    const long m = static_cast<long>(n) * (n - 1);
    if (i < 0) throw std::invalid_argument("negative homological degree");
    switch (i) {
        case 0: return hh_series(n, 0, order);
        case 1: return poly(order, {{3, n}, {4, m / 2}});
        case 2: return poly(order, {{0, 1}, {4, 1}});
        default: return i % 2 == 0 ? TruncatedSeries::constant(order, 1) : TruncatedSeries(order);
    }
}

TruncatedSeries ym2_hh_series(int i, int order) {
    if (i < 0) throw std::invalid_argument("negative homological degree");
    TruncatedSeries inv1 = inverse(poly(order, {{0, 1}, {1, -1}}));
    TruncatedSeries inv2 = inverse(poly(order, {{0, 1}, {2, -1}}));
    switch (i) {
        case 0: return inv1 * inv1;
        case 1: return poly(order, {{1, 2}, {2, -1}}) * poly(order, {{0, 1}, {2, 1}}) * inv1 * inv1;
        case 2: return poly(order, {{3, 2}, {4, 2}, {5, -2}}) * inv2 * inv1;
        case 3: return poly(order, {{4, 1}}) * inv2;
        default: return TruncatedSeries(order);
    }
}

TruncatedSeries ym2_hc_series(int i, int order) {
    if (i < 0) throw std::invalid_argument("negative homological degree");
    TruncatedSeries inv1 = inverse(poly(order, {{0, 1}, {1, -1}}));
    switch (i) {
        case 0: return inv1 * inv1;
        case 1: return poly(order, {{3, 2}, {4, -1}}) * inv1 * inv1;
        case 2: return TruncatedSeries::constant(order, 1) + poly(order, {{4, 1}}) *
                                                               inverse(poly(order, {{0, 1}, {2, -1}}));
        default: return i % 2 == 0 ? TruncatedSeries::constant(order, 1) : TruncatedSeries(order);
    }
}

TruncatedSeries pbw_series(const std::vector<int>& dims, int order) {
    TruncatedSeries r = TruncatedSeries::constant(order, 1);
    for (int d = 1; d < static_cast<int>(dims.size()) && d <= order; ++d) {
        if (dims[d] == 0) continue;
        TruncatedSeries f = inverse(TruncatedSeries::polynomial(order, {{0, 1}, {d, -1}}));
        for (int k = 0; k < dims[d]; ++k) r = r * f;
    }
    return r;
}

SeriesSet closed_form_series(int n, int order, int top) {
    SeriesSet s;
    s.n = n;
    s.order = order;
    s.chi = chi_hc(n, order);
    for (int i = 0; i <= top; ++i) {
        s.hh.push_back(n == 2 ? ym2_hh_series(i, order) : hh_series(n, i, order));
        s.hc.push_back(n == 2 ? ym2_hc_series(i, order) : hc_series(n, i, order));
    }
    return s;
}

TruncatedSeries reduced_hh(const SeriesSet& s, int i) {
    if (i >= static_cast<int>(s.hh.size())) return TruncatedSeries(s.order);
    TruncatedSeries r = s.hh[i];
    if (i == 0) r[0] -= 1;
    return r;
}

TruncatedSeries reduced_hc(const SeriesSet& s, int i) {
    if (i < 0 || i >= static_cast<int>(s.hc.size())) return TruncatedSeries(s.order);
    TruncatedSeries r = s.hc[i];
    if (i % 2 == 0) r[0] -= 1;
    return r;
}

std::vector<IdentityResult> verify_series_identities(const SeriesSet& s) {
    std::vector<IdentityResult> out;
    const int N = s.order;
    const int top = static_cast<int>(s.hh.size()) - 1;
    auto record = [&](std::string name, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        IdentityResult r;
        r.name = std::move(name);
        r.first_failure = first_difference(lhs, rhs);
        r.pass = !r.first_failure.has_value();
        out.push_back(std::move(r));
    };
    auto hh = [&](int i) { return reduced_hh(s, i); };
    auto hc = [&](int i) { return reduced_hc(s, i); };

    TruncatedSeries alt(N), weighted(N), cyc(N);
    for (int i = 0; i <= top; ++i) {
        const Scalar sign = i % 2 ? -1 : 1;
        alt = alt + sign * hh(i);
        weighted = weighted + Scalar(sign * (3 - i)) * hh(i);
        cyc = cyc + sign * hc(i);
    }
    record("koszul: sum (-1)^i HHbar_i = 0", alt, TruncatedSeries(N));
    record("euler: chi = sum (-1)^i (3-i) HHbar_i", s.chi, weighted);
    record("euler: chi = sum (-1)^i HCbar_i", s.chi, cyc);
    record("HCbar_2 = HHbar_3", hc(2), hh(3));
    record("HCbar_1 = HHbar_2 - HHbar_3", hc(1), hh(2) - hh(3));
    record("HCbar_0 = HHbar_0", hc(0), hh(0));
    for (int i = 0; i <= top; ++i)
        record("connes: HHbar_" + std::to_string(i) + " = HCbar_" + std::to_string(i) + " + HCbar_" +
                   std::to_string(i - 1),
               hh(i), hc(i) + hc(i - 1));
    return out;
}

std::vector<IdentityResult> verify_series_identities(int n, int order) {
    return verify_series_identities(closed_form_series(n, order));
}

}  // namespace ymh
