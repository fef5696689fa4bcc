#include "ymh/checks.hpp"

#include "ymh/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ymh {

void CheckReport::add(std::string key, const std::string& computed, const std::string& expected, bool ok) {
    rows.push_back({std::move(key), computed, expected, ok});
    pass = pass && ok;
}

void CheckReport::merge(const CheckReport& other) {
    for (const auto& r : other.rows) rows.push_back(r);
    for (const auto& s : other.notes) notes.push_back(s);
    for (const auto& t : other.tables) tables.push_back(t);
    pass = pass && other.pass;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    return os.str();
}

std::string join(const std::vector<long>& v) {
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    return os.str();
}

namespace {

// compares every cell that carries an expectation, one row per homological degree
void table_rows(CheckReport& r, const HomologyTable& t, const std::string& prefix) {
    for (int p = 0; p <= t.length; ++p) {
        std::vector<std::string> got, want;
        bool any = false, ok = true;
        for (int m = t.lo; m <= t.hi; ++m) {
            const auto& c = t.at(p, m);
            got.push_back(c.dim < 0 ? "-" : std::to_string(c.dim));
            want.push_back(c.expected ? std::to_string(*c.expected) : (c.note.empty() ? "-" : "?"));
            if (c.expected) {
                any = true;
                ok = ok && c.ok();
            }
        }
        if (!any) continue;
        auto cat = [](const std::vector<std::string>& v) {
            std::string s;
            for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k];
            return s;
        };
        r.add(prefix + " H_" + std::to_string(p) + " degrees " + std::to_string(t.lo) + ".." + std::to_string(t.hi),
              cat(got), cat(want), ok);
    }
}

long lam(int n, int k, int m, int deg) { return m == deg ? binomial(n, k) : 0; }

}  // namespace

std::optional<long> exacta_prediction(int n, int i, int p, int m) {
    if (p >= n) return 0;
    if (i == 1) {
        if (p == 0) return lam(n, 2, m, 2);
        if (p == 1) return lam(n, 3, m, 3) + (m == 3 ? n : 0);
        if (p == 2) return lam(n, 4, m, 4) + (m == 4 ? 1 : 0);
        return lam(n, p + 2, m, p + 2);
    }
    if (p >= 2) return lam(n, p + 2 * i, m, p + 2 * i);
    if (p == 1 && i >= 3) return lam(n, 1 + 2 * i, m, 1 + 2 * i);
    return std::nullopt;
}

CheckReport exacta_check(int n, int i, int max_degree, const EngineOptions& opt) {
    if (n < 3 || i < 1) throw std::invalid_argument("exacta_check needs n >= 3, i >= 1");
    CheckReport r;
    r.id = "teo-exacta n=" + std::to_string(n) + " i=" + std::to_string(i);
    r.claim = "H_p(V, W^(x)i) = Lambda^(p+2i) V in degree p+2i, with the low-degree exceptions for i = 1";
    const int wdeg = std::max(2, max_degree - 2 * (i - 1));
    const GradedModule t = tensor_power(w_module(n, wdeg), i);
    HomologyTable tab = homology_table(ComplexKind::CE, t, 0, max_degree, opt);
    for (auto& c : tab.cells) {
        c.expected = exacta_prediction(n, i, c.p, c.degree);
        if (!c.expected) c.note = "unpredicted";
    }
    table_rows(r, tab, "CE(W^" + std::to_string(i) + ")");
    if (i == 2) r.notes.push_back("p = 0 and p = 1 carry no closed form; reported as unpredicted");
    if (i >= 3) r.notes.push_back("p = 0 carries no closed form; reported as unpredicted");
    r.tables.push_back(std::move(tab));
    return r;
}

// ------------------------------------------------------------- Hochschild

HochschildResult hochschild_table(const YMPresentation& p, int max_degree, const EngineOptions& opt,
                                  int sampled_degree) {
    HochschildResult h;
    const GradedModule y = sym_adjoint_module(p, max_degree);
    h.homology = homology_table(ComplexKind::Koszul, y, 0, max_degree, opt);
    HomologyTable& co = h.cohomology;
    co.kind = "koszul-cochain (duality)";
    co.coefficient = y.name;
    co.n = p.n;
    co.lo = -4;
    co.hi = max_degree - 4;
    co.length = 3;
    for (int i = 0; i <= 3; ++i)
        for (int e = co.lo; e <= co.hi; ++e) {
            HomologyCell c;
            c.p = i;
            c.degree = e;
            if (e + 4 >= h.homology.lo) {
                const auto& src = h.homology.at(3 - i, e + 4);
                c.dim = src.dim;
                c.chain_dim = src.chain_dim;
            } else {
                c.dim = c.chain_dim = 0;
            }
            co.cells.push_back(c);
        }
    if (sampled_degree < 0) sampled_degree = std::min(4, max_degree - 4);
    h.sampled_degree = sampled_degree;
    if (sampled_degree >= 0 && sampled_degree + 4 <= max_degree) {
        h.direct_cochain = koszul_cohomology_at(y, sampled_degree);
        h.duality_confirmed = true;
        for (int i = 0; i <= 3; ++i)
            h.duality_confirmed = h.duality_confirmed && h.direct_cochain[i] == co.at(i, sampled_degree).dim;
    }
    return h;
}

CheckReport hochschild_check(const YMPresentation& p, int max_degree, const EngineOptions& opt) {
    CheckReport r;
    const int n = p.n;
    r.id = "hochschild n=" + std::to_string(n);
    r.claim = n == 2 ? "HH_*(YM(2)) has the closed-form Hilbert series for two generators"
                     : "HH_*(YM(n)) has the closed-form Hilbert series (chi-based for HH_0, HH_1)";
    HochschildResult h = hochschild_table(p, max_degree, opt);
    for (auto& c : h.homology.cells) {
        const TruncatedSeries s = n == 2 ? ym2_hh_series(c.p, max_degree) : hh_series(n, c.p, max_degree);
        c.expected = s[c.degree].get_num().get_si();
    }
    table_rows(r, h.homology, "HH");
    for (int m = 0; m <= max_degree; ++m) {
        long alt = 0;
        for (int q = 0; q <= 3; ++q) alt += (q % 2 ? -1 : 1) * (h.homology.dim(q, m) - (q == 0 && m == 0 ? 1 : 0));
        r.add("sum (-1)^p dim HHbar_p at degree " + std::to_string(m), alt, 0);
    }
    if (h.duality_confirmed || !h.direct_cochain.empty()) {
        std::vector<int> via;
        for (int i = 0; i <= 3; ++i) via.push_back(h.cohomology.at(i, h.sampled_degree).dim);
        r.add("HH^i at degree " + std::to_string(h.sampled_degree) + ": direct cochain vs duality",
              join(h.direct_cochain), join(via), h.duality_confirmed);
    } else {
        r.notes.push_back("max degree below 4: duality sample skipped");
    }
    r.notes.push_back("truncation boundary: degrees above " + std::to_string(max_degree) + " not evaluated");
    r.tables.push_back(std::move(h.homology));
    r.tables.push_back(std::move(h.cohomology));
    return r;
}

CheckReport center_check(int n, int max_degree, const EngineOptions& opt) {
    CheckReport r;
    r.id = "center n=" + std::to_string(n);
    r.claim = "the center HH^0(YM(n)) is k";
    const YMPresentation p = ym_presentation(n, max_degree + 1);
    const GradedModule y = sym_adjoint_module(p, max_degree + 1);
    EngineOptions o = opt;
    o.partial = true;
    o.homological = {3};
    const HomologyTable t = homology_table(ComplexKind::Koszul, y, 0, max_degree + 4, o);
    std::vector<int> center;
    long total = 0;
    for (int e = 0; e <= max_degree; ++e) {
        center.push_back(t.dim(3, e + 4));
        total += center.back();
    }
    std::vector<int> expected(center.size(), 0);
    expected[0] = 1;
    r.add("dim HH^0 degrees 0.." + std::to_string(max_degree) + " (= HH_3 at degree + 4)", join(center), join(expected),
          center == expected);
    r.add("total dim HH^0 over degrees <= " + std::to_string(max_degree), total, 1);
    const int e = std::min(4, max_degree - 3);
    if (e >= 0) {
        const auto direct = koszul_cohomology_at(y, e);
        r.add("HH^0 at degree " + std::to_string(e) + " by direct cochain computation", direct[0], center[e]);
    }
    return r;
}

// ------------------------------------------------------- minimal resolution

CheckReport minimal_resolution_check(int n, int max_degree) {
    if (n < 3) throw std::invalid_argument("minimal_resolution_check needs n >= 3");
    CheckReport r;
    r.id = "minimal-resolution n=" + std::to_string(n);
    r.claim = "the Koszul-type complex P(M) is a minimal free resolution of M(n) = W(n)[2]";
    const PolyBasis s(n, max_degree + 1);
    const WModule w = w_module_full(n, max_degree);

    struct Gen {
        int degree;
        int kind;  // 0: exterior, 1: e_i, 2: c
        std::vector<int> subset;
        int idx;
    };
    const int L = std::max(2, n - 2);
    std::vector<std::vector<Gen>> gens(L + 1);
    std::vector<std::map<std::vector<int>, int>> ext_index(L + 1);
    for (int p = 0; p <= L; ++p) {
        const int k = p + 2;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u) sub.push_back(i);
            if (static_cast<int>(sub.size()) == k) gens[p].push_back({k, 0, sub, 0});
        }
        std::sort(gens[p].begin(), gens[p].end(), [](const Gen& a, const Gen& b) { return a.subset < b.subset; });
        for (std::size_t g = 0; g < gens[p].size(); ++g) ext_index[p][gens[p][g].subset] = static_cast<int>(g);
    }
    for (int i = 0; i < n; ++i) gens[1].push_back({3, 1, {}, i});
    gens[2].push_back({4, 2, {}, 0});
    auto find_e = [&](int i) {
        for (std::size_t g = 0; g < gens[1].size(); ++g)
            if (gens[1][g].kind == 1 && gens[1][g].idx == i) return static_cast<int>(g);
        throw std::logic_error("missing generator");
    };
    auto layout = [&](int p, int m) {
        std::vector<int> off(gens[p].size() + 1, 0);
        for (std::size_t g = 0; g < gens[p].size(); ++g) off[g + 1] = off[g] + s.dim(m - gens[p][g].degree);
        return off;
    };

    for (int m = 0; m <= max_degree; ++m) {
        std::vector<std::vector<int>> off(L + 1);
        for (int p = 0; p <= L; ++p) off[p] = layout(p, m);
        // d_p : P_p -> P_{p-1}, p >= 1
        std::vector<SparseMatrix> d(L + 2);
        for (int p = 1; p <= L; ++p) {
            MatrixBuilder b(off[p - 1].back(), off[p].back());
            for (std::size_t g = 0; g < gens[p].size(); ++g) {
                const Gen& gen = gens[p][g];
                const int zdeg = m - gen.degree;
                for (int z = 0; z < s.dim(zdeg); ++z) {
                    const int col = off[p][g] + z;
                    if (gen.kind == 0) {
                        for (int k = 0; k < static_cast<int>(gen.subset.size()); ++k) {
                            auto t = gen.subset;
                            t.erase(t.begin() + k);
                            const int tg = ext_index[p - 1].at(t);
                            b.add(off[p - 1][tg] + s.mul(zdeg, z, gen.subset[k]), col, k % 2 ? -1 : 1);
                        }
                    } else if (gen.kind == 1) {
                        // e_i -> sum_j x_j (x) x_j ^ x_i
                        for (int j = 0; j < n; ++j) {
                            if (j == gen.idx) continue;
                            const std::vector<int> t{std::min(j, gen.idx), std::max(j, gen.idx)};
                            b.add(off[0][ext_index[0].at(t)] + s.mul(zdeg, z, j), col, j < gen.idx ? 1 : -1);
                        }
                    } else {
                        // c -> sum_j x_j (x) e_j
                        for (int j = 0; j < n; ++j) b.add(off[1][find_e(j)] + s.mul(zdeg, z, j), col, 1);
                    }
                }
            }
            d[p] = b.build();
        }
        d[L + 1] = SparseMatrix(off[L].back(), 0);
        // augmentation z (x) x_i ^ x_j -> class of z x_i (x) x_j - z x_j (x) x_i in W_m
        MatrixBuilder aug(w.module.dim(m), off[0].back());
        for (std::size_t g = 0; g < gens[0].size(); ++g) {
            const int i = gens[0][g].subset[0], j = gens[0][g].subset[1];
            for (int z = 0; z < s.dim(m - 2); ++z) {
                SparseVector v{{s.mul(m - 2, z, i) * n + j, Scalar(1)}, {s.mul(m - 2, z, j) * n + i, Scalar(-1)}};
                canonicalize(v);
                aug.add_column(off[0][g] + z, w.pieces[m].reduce(v));
            }
        }
        d[0] = aug.build();

        bool dd = true;
        for (int p = 0; p <= L; ++p) dd = dd && (d[p] * d[p + 1]).is_zero();
        r.add("d o d = 0 at degree " + std::to_string(m), dd ? "0" : "nonzero", "0", dd);
        std::vector<int> rk(L + 2);
        for (int p = 0; p <= L + 1; ++p) rk[p] = rank(d[p]);
        r.add("augmentation onto W at degree " + std::to_string(m), rk[0], w.module.dim(m));
        const int h0 = off[0].back() - rk[1];
        r.add("coker d_1 = M at M-degree " + std::to_string(m - 2), h0, w.module.dim(m));
        for (int p = 0; p <= L; ++p) {
            const int h = off[p].back() - rk[p] - rk[p + 1];
            r.add("H_" + std::to_string(p) + "(P -> W) at degree " + std::to_string(m), h, 0);
        }
    }
    return r;
}

// --------------------------------------------------------- external product

ExternalProductResult external_product(int n, int j) {
    if (n < 3) throw std::invalid_argument("external_product needs n >= 3");
    const int a = j + 4;
    const GradedModule w = w_module(n, std::max(2, a));
    const GradedModule t = tensor_module(w, w);
    ExternalProductResult res;
    const ComplexSlice src = ce_complex(t, a, {false, {0}});
    const ComplexSlice dst = ce_complex(t, a + 2, {false, {1}});
    std::vector<SparseVector> full, bound, cycles, bound1;
    for (int k = 0; k < src.dims[0]; ++k) full.push_back(unit_vector(k));
    for (int c = 0; c < src.d[1]->cols(); ++c) bound.push_back(src.d[1]->column(c));
    const Subquotient h0(src.dims[0], full, bound);
    cycles = kernel_basis(*dst.d[1]);
    for (int c = 0; c < dst.d[2]->cols(); ++c) bound1.push_back(dst.d[2]->column(c));
    const Subquotient h1(dst.dims[1], cycles, bound1);
    res.source_dim = h0.dim();
    res.target_dim = h1.dim();
    if (a < t.min_degree || src.dims[0] == 0) return res;

    // w (x) w' -> sum_i (x_i w (x) w' - w (x) x_i w') (x) x_i
    std::vector<SparseMatrix> anti;
    for (int i = 0; i < n; ++i) anti.push_back(tensor_action(w, w, i, a, -1));
    auto phi = [&](const SparseVector& v) {
        SparseVector out;
        for (int i = 0; i < n; ++i)
            for (const auto& [z, x] : anti[i].apply(v)) out.emplace_back(z * n + i, x);
        canonicalize(out);
        return out;
    };
    for (const auto& b : bound)
        if (!h1.reduce(phi(b)).empty()) throw std::logic_error("external product is not well defined");
    std::vector<SparseVector> images;
    for (const auto& l : h0.lifts()) images.push_back(h1.reduce(phi(l)));
    res.rank = rank_of_vectors(images);
    return res;
}

CheckReport external_product_check(int n, int top_j) {
    CheckReport r;
    r.id = "external-product n=" + std::to_string(n);
    r.claim = "x_{0,1}: Tor_0(M,M) -> Tor_1(M,M) has kernel Lambda^4(V[1]) + Lambda^2(V[1]) + k and cokernel "
              "Lambda^5 V + Lambda^3 V + V";
    for (int j = -1; j <= top_j; ++j) {
        const ExternalProductResult e = external_product(n, j);
        const long ker = j == 0 ? 1 + binomial(n, 2) + binomial(n, 4) : 0;
        const long cok = j + 2 == 1 ? n + binomial(n, 3) + binomial(n, 5) : 0;
        r.add("kernel at M-degree " + std::to_string(j), e.kernel_dim(), ker);
        r.add("cokernel at M-degree " + std::to_string(j + 2) + " (CE internal degree " + std::to_string(j + 6) + ")",
              e.cokernel_dim(), cok);
    }
    r.notes.push_back("M = W[2]: M-degree j of Tor_1 is CE internal degree j + 4 on W(x)W(x)V; the lowest cokernel "
                      "degree M-degree 1 sits at CE internal degree 5");
    return r;
}

// ------------------------------------------------------------------- tym

CheckReport tym_homology_check(const YMPresentation& p, int max_degree, const EngineOptions& opt) {
    CheckReport r;
    const int n = p.n;
    r.id = "tym-homology n=" + std::to_string(n);
    r.claim = "H_2(ym, tym) = V[-4], H_3(ym, tym) = 0, H_2(ym, S^2 tym) = H_3(ym, S^2 tym) = 0";
    EngineOptions o = opt;
    o.homological = {2, 3};
    for (int len = 1; len <= 2; ++len) {
        const GradedModule y = s_tym_adjoint_module(p, max_degree, len);
        HomologyTable t = homology_table(ComplexKind::Koszul, y, 0, max_degree, o);
        for (auto& c : t.cells) {
            if (c.p == 2) c.expected = len == 1 && c.degree == 5 ? n : 0;
            if (c.p == 3) c.expected = 0;
        }
        table_rows(r, t, "Koszul(S^" + std::to_string(len) + " tym)");
        r.tables.push_back(std::move(t));
    }
    return r;
}

CheckReport h3_equals_hn_check(const GradedModule& y, int max_degree, const EngineOptions& opt) {
    if (y.tag != AlgebraTag::SV) throw std::invalid_argument("h3_equals_hn_check needs an S(V)-module");
    CheckReport r;
    const int n = y.n;
    r.id = "h3-hn " + y.name + " n=" + std::to_string(n);
    r.claim = "H_3(ym, Y) = H_n(V, Y), and H_2(ym, Y) = H_{n-1}(V, Y) when q is a nonzerodivisor on Y";
    EngineOptions o = opt;
    o.partial = true;
    o.homological = {2, 3};
    const HomologyTable k = homology_table(ComplexKind::Koszul, y, 0, max_degree, o);
    o.homological = {n - 1, n};
    const int shift_deg = n - 4;
    const HomologyTable c = homology_table(ComplexKind::CE, y, 0, std::max(0, max_degree + shift_deg), o);
    auto ce_dim = [&](int p, int m) { return m < 0 ? 0 : c.dim(p, m); };
    bool q_injective = true;
    for (const auto& row : nonzerodivisor_check(y, -1, y.max_degree)) q_injective = q_injective && row.injective();
    std::vector<int> k3, c3, k2, c2;
    for (int m = 0; m <= max_degree; ++m) {
        if (k.dim(3, m) < 0) continue;
        k3.push_back(k.dim(3, m));
        c3.push_back(ce_dim(n, m + shift_deg));
    }
    r.add("H_3(ym,Y) vs H_n(V,Y) (degree shift " + std::to_string(shift_deg) + ")", join(k3), join(c3), k3 == c3);
    if (q_injective) {
        for (int m = 0; m <= max_degree; ++m) {
            if (k.dim(2, m) < 0 || ce_dim(n - 1, m + shift_deg) < 0) continue;
            k2.push_back(k.dim(2, m));
            c2.push_back(ce_dim(n - 1, m + shift_deg));
        }
        r.add("H_2(ym,Y) vs H_{n-1}(V,Y)", join(k2), join(c2), k2 == c2);
    } else {
        r.notes.push_back("q is not injective on " + y.name + ": H_2 comparison skipped");
    }
    return r;
}

// --------------------------------------------------------- module and dims

CheckReport w_module_check(int n, int max_degree) {
    CheckReport r;
    r.id = "w-module n=" + std::to_string(n);
    r.claim = "W(n) has the closed-form Hilbert series, is generated by the classes of [x_i,x_j], q acts by 0, "
              "and each x_i is a nonzerodivisor (n >= 3)";
    const WModule w = w_module_full(n, max_degree);
    const TruncatedSeries ws = w_hilbert(n, max_degree);
    std::vector<long> want;
    for (int m = 0; m <= max_degree; ++m) want.push_back(ws[m].get_num().get_si());
    std::vector<long> got;
    for (int m = 0; m <= max_degree; ++m) got.push_back(w.module.dim(m));
    r.add("dims degrees 0.." + std::to_string(max_degree), join(got), join(want), got == want);
    bool qzero = true;
    for (int m = 0; m + 2 <= max_degree; ++m) qzero = qzero && w.module.q_action(m).is_zero();
    r.add("q acts by zero", qzero ? "yes" : "no", "yes", qzero);
    const bool gen = w_generated_in_degree_two(w);
    r.add("generated by classes of x_i(x)x_j - x_j(x)x_i", gen ? "yes" : "no", "yes", gen);
    if (n >= 3) {
        for (int i = 0; i < n; ++i) {
            std::vector<int> ker;
            for (const auto& row : nonzerodivisor_check(w.module, i, std::min(max_degree, 8))) ker.push_back(row.kernel_dim);
            r.add("kernel of x_" + std::to_string(i + 1) + " on W degrees 0.." + std::to_string(ker.size() - 1),
                  join(ker), join(std::vector<int>(ker.size(), 0)), ker == std::vector<int>(ker.size(), 0));
        }
        const GradedModule ww = tensor_module(w.module, w.module);
        std::vector<int> ker;
        for (const auto& row : nonzerodivisor_check(ww, -1, std::min(ww.max_degree, 8))) ker.push_back(row.kernel_dim);
        r.add("kernel of q on W(x)W degrees 0.." + std::to_string(ker.size() - 1), join(ker),
              join(std::vector<int>(ker.size(), 0)), ker == std::vector<int>(ker.size(), 0));
    } else {
        bool zero = true;
        for (int m = 0; m < max_degree; ++m)
            for (int i = 0; i < n; ++i) zero = zero && w.module.action(i, m).is_zero();
        r.add("W(2) = k[-2]: all actions zero", zero ? "yes" : "no", "yes", zero);
    }
    return r;
}

CheckReport lie_dims_check(int n, int max_degree, const YMPresentation* given) {
    CheckReport r;
    r.id = "lie-dims n=" + std::to_string(n);
    r.claim = "dim ym(n)_d satisfies the PBW identity against 1/((1-t^2)(1-nt+t^2))";
    YMPresentation local;
    if (!given) local = ym_presentation(n, max_degree);
    const YMPresentation& p = given ? *given : local;
    // expected dims by peeling the PBW product off the closed form
    const TruncatedSeries target = ym_hilbert(n, max_degree);
    std::vector<int> want(max_degree + 1, 0);
    for (int d = 1; d <= max_degree; ++d) {
        const TruncatedSeries partial = pbw_series(want, max_degree);
        want[d] = static_cast<int>(Scalar(target[d] - partial[d]).get_num().get_si());
    }
    std::vector<int> got(p.dims.begin(), p.dims.begin() + max_degree + 1);
    r.add("dim ym_d, d = 0.." + std::to_string(max_degree), join(got), join(want), got == want);
    const std::string err = validate_presentation(p);
    r.add("antisymmetry, Jacobi and relations on structure constants", err.empty() ? "ok" : err, "ok", err.empty());
    std::vector<int> pbw, series;
    for (int d = 0; d <= max_degree; ++d) {
        pbw.push_back(static_cast<int>(pbw_basis(p, d).size()));
        series.push_back(static_cast<int>(target[d].get_num().get_si()));
    }
    r.add("PBW monomial counts", join(pbw), join(series), pbw == series);
    std::vector<int> assoc;
    for (int d = 0; d <= max_degree; ++d) assoc.push_back(assoc_dimension(n, d));
    r.add("dim YM_d from the associative relations vs PBW", join(assoc), join(pbw), assoc == pbw);
    return r;
}

CheckReport series_identities_check(int n, int order) {
    CheckReport r;
    r.id = "series-identities n=" + std::to_string(n);
    r.claim = "Koszul, Euler and Connes identities on the closed-form HH/HC series";
    for (const auto& id : verify_series_identities(n, order))
        r.add(id.name, id.pass ? "holds" : "fails at t^" + std::to_string(*id.first_failure), "holds", id.pass);
    const SeriesSet s = closed_form_series(n, order);
    bool integral = s.chi.all_integral();
    bool nonneg = true;
    for (const auto& x : s.hh) integral = integral && x.all_integral(), nonneg = nonneg && x.all_nonnegative();
    for (const auto& x : s.hc) integral = integral && x.all_integral(), nonneg = nonneg && x.all_nonnegative();
    r.add("HH/HC coefficients are nonnegative integers", integral && nonneg ? "yes" : "no", "yes", integral && nonneg);
    return r;
}

}  // namespace ymh
