#include "ymh/module.hpp"

#include "ymh/series.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ymh {

std::string tag_name(AlgebraTag t) { return t == AlgebraTag::SV ? "S(V)" : "YM"; }

int GradedModule::dim(int m) const {
    if (m < min_degree) return 0;
    if (m > max_degree) throw std::out_of_range(name + ": degree " + std::to_string(m) + " beyond tracked range");
    return dims[m - min_degree];
}

SparseMatrix GradedModule::action(int i, int m) const {
    if (i < 0 || i >= n) throw std::out_of_range("action: generator index");
    if (m + 1 > max_degree) throw std::out_of_range(name + ": action beyond tracked range");
    if (m < min_degree) return SparseMatrix(dim(m + 1), 0);
    return actions[m - min_degree][i];
}

SparseMatrix GradedModule::q_action(int m) const {
    SparseMatrix q(dim(m + 2), dim(m));
    for (int i = 0; i < n; ++i) q = q + action(i, m + 1) * action(i, m);
    return q;
}

std::vector<int> GradedModule::dims_range(int lo, int hi) const {
    std::vector<int> out;
    for (int m = lo; m <= hi; ++m) out.push_back(dim(m));
    return out;
}

std::string check_module_invariants(const GradedModule& y) {
    const int span = y.max_degree - y.min_degree + 1;
    if (span < 1 || static_cast<int>(y.dims.size()) != span) return "dims length";
    if (static_cast<int>(y.actions.size()) != span - 1) return "actions length";
    for (int m = y.min_degree; m < y.max_degree; ++m) {
        const auto& row = y.actions[m - y.min_degree];
        if (static_cast<int>(row.size()) != y.n) return "generator count";
        for (const auto& a : row)
            if (a.rows() != y.dim(m + 1) || a.cols() != y.dim(m))
                return "action shape at degree " + std::to_string(m);
    }
    if (y.tag == AlgebraTag::SV) {
        for (int m = y.min_degree; m + 2 <= y.max_degree; ++m)
            for (int i = 0; i < y.n; ++i)
                for (int j = i + 1; j < y.n; ++j)
                    if (!(y.action(j, m + 1) * y.action(i, m) == y.action(i, m + 1) * y.action(j, m)))
                        return "actions do not commute at degree " + std::to_string(m);
    } else {
        for (int m = y.min_degree; m + 3 <= y.max_degree; ++m)
            for (int j = 0; j < y.n; ++j) {
                SparseMatrix s(y.dim(m + 3), y.dim(m));
                for (int i = 0; i < y.n; ++i) {
                    const SparseMatrix ai0 = y.action(i, m), ai1 = y.action(i, m + 1), ai2 = y.action(i, m + 2);
                    const SparseMatrix aj0 = y.action(j, m), aj1 = y.action(j, m + 1), aj2 = y.action(j, m + 2);
                    s = s + ai2 * (ai1 * aj0) - (ai2 * (aj1 * ai0)).scaled(2) + aj2 * (ai1 * ai0);
                }
                if (!s.is_zero()) return "Yang-Mills relation does not act by zero at degree " + std::to_string(m);
            }
    }
    return {};
}

namespace {

GradedModule empty_like(const std::string& name, AlgebraTag tag, int n, int lo, int hi) {
    GradedModule y;
    y.name = name;
    y.tag = tag;
    y.n = n;
    y.min_degree = lo;
    y.max_degree = hi;
    y.dims.assign(hi - lo + 1, 0);
    y.labels.assign(hi - lo + 1, {});
    y.actions.assign(std::max(0, hi - lo), {});
    return y;
}

void finish(GradedModule& y) {
    const std::string err = check_module_invariants(y);
    if (!err.empty()) throw std::logic_error(y.name + ": " + err);
}

}  // namespace

// ---------------------------------------------------------------- S(V)

PolyBasis::PolyBasis(int n, int max_degree) : n_(n), max_degree_(max_degree) {
    monos_.resize(max_degree + 2);
    index_.resize(max_degree + 2);
    monos_[0].push_back({});
    for (int m = 1; m <= max_degree + 1; ++m)
        for (const auto& mono : monos_[m - 1]) {
            const int lo = mono.empty() ? 0 : mono.back();
            for (int i = lo; i < n; ++i) {
                auto next = mono;
                next.push_back(i);
                monos_[m].push_back(std::move(next));
            }
        }
    for (int m = 0; m <= max_degree + 1; ++m)
        for (std::size_t k = 0; k < monos_[m].size(); ++k) index_[m][monos_[m][k]] = static_cast<int>(k);
    mul_.resize(max_degree + 1);
    for (int m = 0; m <= max_degree; ++m)
        for (const auto& mono : monos_[m]) {
            std::vector<int> row(n);
            for (int i = 0; i < n; ++i) {
                auto next = mono;
                next.insert(std::upper_bound(next.begin(), next.end(), i), i);
                row[i] = index_[m + 1].at(next);
            }
            mul_[m].push_back(std::move(row));
        }
}

int PolyBasis::index(const std::vector<int>& mono) const {
    const int m = static_cast<int>(mono.size());
    if (m > max_degree_ + 1) return -1;
    auto it = index_[m].find(mono);
    return it == index_[m].end() ? -1 : it->second;
}

std::string PolyBasis::label(int m, int k) const {
    const auto& mono = monos_.at(m).at(k);
    if (mono.empty()) return "1";
    std::string s;
    for (std::size_t a = 0; a < mono.size();) {
        std::size_t b = a;
        while (b < mono.size() && mono[b] == mono[a]) ++b;
        s += "x" + std::to_string(mono[a] + 1);
        if (b - a > 1) s += "^" + std::to_string(b - a);
        a = b;
    }
    return s;
}

GradedModule trivial_module(int n, int max_degree, AlgebraTag tag) {
    GradedModule y = empty_like("k", tag, n, 0, std::max(0, max_degree));
    y.dims[0] = 1;
    y.labels[0] = {"1"};
    for (int m = 0; m < y.max_degree; ++m)
        for (int i = 0; i < n; ++i) y.actions[m].emplace_back(y.dim(m + 1), y.dim(m));
    finish(y);
    return y;
}

GradedModule sv_regular_module(int n, int max_degree) {
    PolyBasis s(n, max_degree);
    GradedModule y = empty_like("S(V)", AlgebraTag::SV, n, 0, max_degree);
    for (int m = 0; m <= max_degree; ++m) {
        y.dims[m] = s.dim(m);
        for (int k = 0; k < s.dim(m); ++k) y.labels[m].push_back(s.label(m, k));
    }
    for (int m = 0; m < max_degree; ++m)
        for (int i = 0; i < n; ++i) {
            std::vector<SparseVector> cols(s.dim(m));
            for (int k = 0; k < s.dim(m); ++k) cols[k] = unit_vector(s.mul(m, k, i));
            y.actions[m].push_back(SparseMatrix::from_columns(s.dim(m + 1), std::move(cols)));
        }
    finish(y);
    return y;
}

GradedModule shift(const GradedModule& y, int j) {
    GradedModule out(y);
    out.name = y.name + "[" + std::to_string(j) + "]";
    out.min_degree = y.min_degree - j;
    out.max_degree = y.max_degree - j;
    return out;
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
    if (a.tag != b.tag || a.n != b.n) throw std::invalid_argument("direct_sum: incompatible modules");
    const int lo = std::min(a.min_degree, b.min_degree), hi = std::min(a.max_degree, b.max_degree);
    GradedModule y = empty_like("(" + a.name + " + " + b.name + ")", a.tag, a.n, lo, hi);
    for (int m = lo; m <= hi; ++m) {
        y.dims[m - lo] = a.dim(m) + b.dim(m);
        auto la = m >= a.min_degree && !a.labels.empty() ? a.labels[m - a.min_degree] : std::vector<std::string>{};
        auto lb = m >= b.min_degree && !b.labels.empty() ? b.labels[m - b.min_degree] : std::vector<std::string>{};
        if (static_cast<int>(la.size()) == a.dim(m) && static_cast<int>(lb.size()) == b.dim(m)) {
            for (auto& s : la) y.labels[m - lo].push_back("L:" + s);
            for (auto& s : lb) y.labels[m - lo].push_back("R:" + s);
        }
    }
    for (int m = lo; m < hi; ++m)
        for (int i = 0; i < a.n; ++i) {
            const SparseMatrix ma = a.action(i, m), mb = b.action(i, m);
            MatrixBuilder mbld(y.dim(m + 1), y.dim(m));
            for (int c = 0; c < ma.cols(); ++c)
                for (const auto& [r, v] : ma.column(c)) mbld.add(r, c, v);
            for (int c = 0; c < mb.cols(); ++c)
                for (const auto& [r, v] : mb.column(c)) mbld.add(r + ma.rows(), c + ma.cols(), v);
            y.actions[m - lo].push_back(mbld.build());
        }
    finish(y);
    return y;
}

std::vector<TensorBlock> tensor_layout(const GradedModule& a, const GradedModule& b, int m) {
    std::vector<TensorBlock> out;
    int off = 0;
    for (int da = a.min_degree; m - da >= b.min_degree; ++da) {
        const int db = m - da;
        if (da > a.max_degree || db > b.max_degree) continue;
        const int sa = a.dim(da), sb = b.dim(db);
        if (sa == 0 || sb == 0) continue;
        out.push_back({da, db, off});
        off += sa * sb;
    }
    return out;
}

namespace {
int layout_dim(const GradedModule& a, const GradedModule& b, const std::vector<TensorBlock>& l) {
    int s = 0;
    for (const auto& t : l) s += a.dim(t.a) * b.dim(t.b);
    return s;
}
}  // namespace

SparseMatrix tensor_action(const GradedModule& a, const GradedModule& b, int k, int m, int sign) {
    const auto src = tensor_layout(a, b, m), dst = tensor_layout(a, b, m + 1);
    std::map<std::pair<int, int>, int> dst_off;
    for (const auto& t : dst) dst_off[{t.a, t.b}] = t.offset;
    MatrixBuilder bld(layout_dim(a, b, dst), layout_dim(a, b, src));
    for (const auto& t : src) {
        const int sb = b.dim(t.b);
        auto it = dst_off.find({t.a + 1, t.b});
        if (it != dst_off.end()) {
            const SparseMatrix ak = a.action(k, t.a);
            const int nb = b.dim(t.b);
            for (int ia = 0; ia < ak.cols(); ++ia)
                for (const auto& [ra, v] : ak.column(ia))
                    for (int ib = 0; ib < sb; ++ib) bld.add(it->second + ra * nb + ib, t.offset + ia * sb + ib, v);
        }
        it = dst_off.find({t.a, t.b + 1});
        if (it != dst_off.end()) {
            const SparseMatrix bk = b.action(k, t.b);
            const int nb = b.dim(t.b + 1);
            for (int ia = 0; ia < a.dim(t.a); ++ia)
                for (int ib = 0; ib < bk.cols(); ++ib)
                    for (const auto& [rb, v] : bk.column(ib))
                        bld.add(it->second + ia * nb + rb, t.offset + ia * sb + ib, sign * v);
        }
    }
    return bld.build();
}

GradedModule tensor_module(const GradedModule& a, const GradedModule& b) {
    if (a.n != b.n || a.tag != b.tag) throw std::invalid_argument("tensor_module: incompatible modules");
    const int lo = a.min_degree + b.min_degree;
    // pieces below the first nonzero degree do not limit the tracked range
    auto low = [](const GradedModule& y) {
        for (int m = y.min_degree; m <= y.max_degree; ++m)
            if (y.dim(m) > 0) return m;
        return y.max_degree;
    };
    const int hi = std::min(a.max_degree + low(b), b.max_degree + low(a));
    GradedModule y = empty_like(a.name + "(x)" + b.name, a.tag, a.n, lo, hi);
    for (int m = lo; m <= hi; ++m) {
        const auto l = tensor_layout(a, b, m);
        y.dims[m - lo] = layout_dim(a, b, l);
        bool have = !a.labels.empty() && !b.labels.empty();
        for (const auto& t : l)
            have = have && static_cast<int>(a.labels[t.a - a.min_degree].size()) == a.dim(t.a) &&
                   static_cast<int>(b.labels[t.b - b.min_degree].size()) == b.dim(t.b);
        if (have)
            for (const auto& t : l)
                for (const auto& sa : a.labels[t.a - a.min_degree])
                    for (const auto& sb : b.labels[t.b - b.min_degree]) y.labels[m - lo].push_back(sa + "|" + sb);
    }
    for (int m = lo; m < hi; ++m)
        for (int k = 0; k < a.n; ++k) y.actions[m - lo].push_back(tensor_action(a, b, k, m, 1));
    finish(y);
    return y;
}

GradedModule tensor_power(const GradedModule& a, int i) {
    if (i < 1) throw std::invalid_argument("tensor_power needs i >= 1");
    GradedModule y = a;
    for (int k = 1; k < i; ++k) y = tensor_module(y, a);
    y.name = a.name + "^(x)" + std::to_string(i);
    return y;
}

// ---------------------------------------------------------------- S(ym)

namespace {

GradedModule adjoint_monomials(const YMPresentation& p, int max_degree, int min_factor, int length,
                               const std::string& name) {
    if (max_degree > p.max_degree) throw std::out_of_range("adjoint module beyond presentation degree");
    GradedModule y = empty_like(name, AlgebraTag::YM, p.n, 0, max_degree);
    std::vector<std::vector<PBWMonomial>> basis(max_degree + 1);
    std::vector<std::map<PBWMonomial, int>> index(max_degree + 1);
    for (int m = 0; m <= max_degree; ++m) {
        basis[m] = monomials(p, m, min_factor, length);
        y.dims[m] = static_cast<int>(basis[m].size());
        for (std::size_t k = 0; k < basis[m].size(); ++k) {
            index[m][basis[m][k]] = static_cast<int>(k);
            std::string s;
            for (int g : basis[m][k]) {
                const YMIndex li = p.local(g);
                s += (s.empty() ? "" : "*") + std::string("y") + std::to_string(li.degree) + "_" + std::to_string(li.index);
            }
            y.labels[m].push_back(s.empty() ? "1" : s);
        }
    }
    for (int m = 0; m < max_degree; ++m)
        for (int i = 0; i < p.n; ++i) {
            MatrixBuilder bld(y.dims[m + 1], y.dims[m]);
            for (int k = 0; k < y.dims[m]; ++k) {
                const auto& mono = basis[m][k];
                for (std::size_t j = 0; j < mono.size(); ++j) {
                    const int d = p.degree_of(mono[j]) + 1;
                    for (const auto& [e, c] : ym_bracket_global(p, i, mono[j])) {
                        PBWMonomial next(mono);
                        next[j] = p.offsets[d] + e;
                        std::sort(next.begin(), next.end());
                        auto it = index[m + 1].find(next);
                        if (it == index[m + 1].end())
                            throw std::logic_error(name + ": adjoint action leaves the submodule");
                        bld.add(it->second, k, c);
                    }
                }
            }
            y.actions[m].push_back(bld.build());
        }
    finish(y);
    return y;
}

}  // namespace

GradedModule sym_adjoint_module(const YMPresentation& p, int max_degree) {
    GradedModule y = adjoint_monomials(p, max_degree, 1, -1, "S(ym)");
    if (pbw_series(p.dims, max_degree) != TruncatedSeries(max_degree, {y.dims.begin(), y.dims.end()}))
        throw std::logic_error("S(ym) dims disagree with the PBW count");
    return y;
}

GradedModule s_tym_adjoint_module(const YMPresentation& p, int max_degree, int length) {
    const std::string name = length < 0 ? "S(tym)" : "S^" + std::to_string(length) + "(tym)";
    GradedModule y = adjoint_monomials(p, max_degree, 2, length, name);
    if (length < 0) {
        std::vector<int> tdims(p.dims);
        if (tdims.size() > 1) tdims[1] = 0;
        if (pbw_series(tdims, max_degree) != TruncatedSeries(max_degree, {y.dims.begin(), y.dims.end()}))
            throw std::logic_error("S(tym) dims disagree with the PBW count");
    }
    return y;
}

// -------------------------------------------------------------------- W(n)

WModule w_module_full(int n, int max_degree) {
    if (n < 2) throw std::invalid_argument("w_module needs n >= 2");
    PolyBasis s(n, max_degree + 1);
    WModule w;
    GradedModule& y = w.module;
    y = empty_like("W", AlgebraTag::SV, n, 0, max_degree);
    // C1_m = S_{m-1} (x) V, index mono * n + i
    auto d1 = [&](int m) {
        MatrixBuilder b(s.dim(m), s.dim(m - 1) * n);
        for (int k = 0; k < s.dim(m - 1); ++k)
            for (int i = 0; i < n; ++i) b.add(s.mul(m - 1, k, i), k * n + i, 1);
        return b.build();
    };
    auto d2 = [&](int m) {
        // d2(y (x) x_i) = sum_j (x_j^2 y (x) x_i + x_j x_i y (x) x_j - 2 x_i x_j y (x) x_j)
        MatrixBuilder b(s.dim(m - 1) * n, std::max(0, s.dim(m - 3)) * n);
        for (int k = 0; k < s.dim(m - 3); ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const int jj = s.mul(m - 2, s.mul(m - 3, k, j), j);
                    const int ij = s.mul(m - 2, s.mul(m - 3, k, i), j);
                    b.add(jj * n + i, k * n + i, 1);
                    b.add(ij * n + j, k * n + i, 1);
                    b.add(ij * n + j, k * n + i, -2);
                }
        return b.build();
    };
    std::vector<std::vector<SparseVector>> boundaries(max_degree + 1);
    for (int m = 0; m <= max_degree; ++m) {
        if (m == 0) {
            w.pieces.emplace_back(0, std::vector<SparseVector>{}, std::vector<SparseVector>{});
            continue;
        }
        const SparseMatrix a = d1(m);
        std::vector<SparseVector> quot;
        if (m >= 3) {
            const SparseMatrix b = d2(m);
            if (!(a * b).is_zero()) throw std::logic_error("W: d1 d2 != 0");
            for (int c = 0; c < b.cols(); ++c) quot.push_back(b.column(c));
        }
        w.pieces.emplace_back(a.cols(), kernel_basis(a), quot);
        boundaries[m] = std::move(quot);
        y.dims[m] = w.pieces[m].dim();
        for (int k = 0; k < y.dims[m]; ++k) y.labels[m].push_back("w" + std::to_string(m) + "_" + std::to_string(k));
    }
    auto times = [&](int m, const SparseVector& v, int i) {
        // x_i on S_{m-1} (x) V
        SparseVector out;
        for (const auto& [c, x] : v) out.emplace_back(s.mul(m - 1, c / n, i) * n + c % n, x);
        canonicalize(out);
        return out;
    };
    for (int m = 0; m < max_degree; ++m)
        for (int i = 0; i < n; ++i) {
            std::vector<SparseVector> cols;
            for (const auto& l : w.pieces[m].lifts()) cols.push_back(w.pieces[m + 1].reduce(times(m, l, i)));
            for (const auto& bd : boundaries[m])
                if (!w.pieces[m + 1].reduce(times(m, bd, i)).empty())
                    throw std::logic_error("W: action does not preserve boundaries");
            y.actions[m].push_back(SparseMatrix::from_columns(y.dims[m + 1], std::move(cols)));
        }
    const TruncatedSeries ws = w_hilbert(n, max_degree);
    for (int m = 0; m <= max_degree; ++m)
        if (ws[m] != y.dims[m]) throw std::logic_error("W dims disagree with the closed form");
    finish(y);
    return w;
}

GradedModule w_module(int n, int max_degree) { return w_module_full(n, max_degree).module; }

bool w_generated_in_degree_two(const WModule& w) {
    const GradedModule& y = w.module;
    const int n = y.n;
    if (y.max_degree < 2) return true;
    // x_i (x) x_j sits at (mono x_i) * n + j in S_1 (x) V
    std::vector<SparseVector> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparseVector v{{i * n + j, Scalar(1)}, {j * n + i, Scalar(-1)}};
            canonicalize(v);
            gens.push_back(w.pieces[2].reduce(v));
        }
    if (rank_of_vectors(gens) != y.dim(2)) return false;
    for (int m = 2; m < y.max_degree; ++m) {
        std::vector<SparseMatrix> blocks;
        for (int i = 0; i < n; ++i) blocks.push_back(y.action(i, m));
        if (rank(hstack(blocks)) != y.dim(m + 1)) return false;
    }
    return true;
}

std::vector<InjectivityRow> nonzerodivisor_check(const GradedModule& y, int elt, int max_degree) {
    const int shift_deg = elt < 0 ? 2 : 1;
    std::vector<InjectivityRow> out;
    for (int m = y.min_degree; m + shift_deg <= max_degree; ++m) {
        const SparseMatrix a = elt < 0 ? y.q_action(m) : y.action(elt, m);
        out.push_back({m, a.cols(), a.cols() - rank(a)});
    }
    return out;
}

}  // namespace ymh
