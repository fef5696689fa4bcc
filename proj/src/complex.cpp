#include "ymh/complex.hpp"

#include "ymh/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ymh {

int default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string kind_name(ComplexKind k) { return k == ComplexKind::Koszul ? "koszul" : "ce"; }

namespace {

// -1 when the degree is beyond the tracked range
int ydim(const GradedModule& y, int m) { return m > y.max_degree ? -1 : y.dim(m); }

int times(int a, int b) { return a < 0 ? -1 : a * b; }

std::vector<bool> needed_differentials(int length, const std::set<int>& hom) {
    std::vector<bool> need(length + 2, hom.empty());
    for (int p : hom) {
        if (p >= 1 && p <= length) need[p] = true;
        if (p + 1 <= length) need[p + 1] = true;
    }
    need[0] = false;
    need[length + 1] = false;
    return need;
}

struct Subsets {
    std::vector<std::vector<std::vector<int>>> of_size;
    std::vector<std::map<std::vector<int>, int>> index;
    explicit Subsets(int n) : of_size(n + 1), index(n + 1) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u) s.push_back(i);
            of_size[s.size()].push_back(s);
        }
        for (auto& v : of_size) std::sort(v.begin(), v.end());
        for (int p = 0; p <= n; ++p)
            for (std::size_t k = 0; k < of_size[p].size(); ++k) index[p][of_size[p][k]] = static_cast<int>(k);
    }
};

}  // namespace

ComplexSlice koszul_complex(const GradedModule& y, int m, const SliceRequest& req) {
    if (!req.partial && m > y.max_degree)
        throw std::out_of_range("koszul_complex: degree " + std::to_string(m) + " beyond tracked range");
    const int n = y.n;
    ComplexSlice s;
    s.kind = ComplexKind::Koszul;
    s.degree = m;
    s.dims = {ydim(y, m), times(ydim(y, m - 1), n), times(ydim(y, m - 3), n), ydim(y, m - 4)};
    s.d.resize(4);
    const auto need = needed_differentials(3, req.homological);
    // d1(y (x) x_i) = -x_i y
    if (need[1] && m <= y.max_degree) {
        MatrixBuilder b(s.dims[0], s.dims[1]);
        for (int i = 0; i < n; ++i) {
            const SparseMatrix a = y.action(i, m - 1);
            for (int c = 0; c < a.cols(); ++c) b.add_column(c * n + i, a.column(c), -1);
        }
        s.d[1] = b.build();
    }
    // d2(y (x) x_i) = sum_j (x_j^2 y (x) x_i + x_j x_i y (x) x_j - 2 x_i x_j y (x) x_j)
    if (need[2] && m - 1 <= y.max_degree) {
        MatrixBuilder b(s.dims[1], s.dims[2]);
        if (s.dims[2] > 0) {
            std::vector<std::vector<SparseMatrix>> prod(n, std::vector<SparseMatrix>(n));
            for (int a = 0; a < n; ++a) {
                const SparseMatrix outer = y.action(a, m - 2);
                for (int c = 0; c < n; ++c) prod[a][c] = outer * y.action(c, m - 3);
            }
            const int src = y.dim(m - 3);
            for (int v = 0; v < src; ++v)
                for (int i = 0; i < n; ++i) {
                    const int col = v * n + i;
                    for (int j = 0; j < n; ++j) {
                        for (const auto& [z, x] : prod[j][j].column(v)) b.add(z * n + i, col, x);
                        for (const auto& [z, x] : prod[j][i].column(v)) b.add(z * n + j, col, x);
                        for (const auto& [z, x] : prod[i][j].column(v)) b.add(z * n + j, col, -2 * x);
                    }
                }
        }
        s.d[2] = b.build();
    }
    // d3(y) = -sum_i x_i y (x) x_i
    if (need[3] && m - 3 <= y.max_degree) {
        MatrixBuilder b(s.dims[2], s.dims[3]);
        if (s.dims[3] > 0)
            for (int i = 0; i < n; ++i) {
                const SparseMatrix a = y.action(i, m - 4);
                for (int c = 0; c < a.cols(); ++c)
                    for (const auto& [z, x] : a.column(c)) b.add(z * n + i, c, -x);
            }
        s.d[3] = b.build();
    }
    assert_complex(s);
    return s;
}

ComplexSlice ce_complex(const GradedModule& y, int m, const SliceRequest& req) {
    if (!req.partial && m > y.max_degree)
        throw std::out_of_range("ce_complex: degree " + std::to_string(m) + " beyond tracked range");
    const int n = y.n;
    const Subsets sub(n);
    ComplexSlice s;
    s.kind = ComplexKind::CE;
    s.degree = m;
    for (int p = 0; p <= n; ++p) s.dims.push_back(times(ydim(y, m - p), static_cast<int>(sub.of_size[p].size())));
    s.d.resize(n + 1);
    const auto need = needed_differentials(n, req.homological);
    // d(y (x) x_S) = sum_k (-1)^k x_{s_k} y (x) x_{S - s_k}
    for (int p = 1; p <= n; ++p) {
        if (!need[p] || m - p + 1 > y.max_degree) continue;
        MatrixBuilder b(s.dims[p - 1], s.dims[p]);
        const int cp = static_cast<int>(sub.of_size[p].size()), cq = static_cast<int>(sub.of_size[p - 1].size());
        if (s.dims[p] > 0) {
            std::vector<SparseMatrix> act;
            for (int i = 0; i < n; ++i) act.push_back(y.action(i, m - p));
            for (int si = 0; si < cp; ++si) {
                const auto& S = sub.of_size[p][si];
                for (int k = 0; k < p; ++k) {
                    auto T = S;
                    T.erase(T.begin() + k);
                    const int ti = sub.index[p - 1].at(T);
                    const int sign = k % 2 ? -1 : 1;
                    const SparseMatrix& a = act[S[k]];
                    for (int v = 0; v < a.cols(); ++v)
                        for (const auto& [z, x] : a.column(v)) b.add(z * cq + ti, v * cp + si, sign * x);
                }
            }
        }
        s.d[p] = b.build();
    }
    assert_complex(s);
    return s;
}

void assert_complex(const ComplexSlice& s) {
    for (int p = 1; p < s.length(); ++p)
        if (s.d[p] && s.d[p + 1] && !((*s.d[p]) * (*s.d[p + 1])).is_zero())
            throw std::logic_error(kind_name(s.kind) + " complex: d o d != 0 at degree " + std::to_string(s.degree));
}

std::vector<int> koszul_cohomology_at(const GradedModule& y, int e) {
    if (e + 4 > y.max_degree) throw std::out_of_range("cochain complex beyond tracked range");
    const int n = y.n;
    const int c0 = y.dim(e), c1 = n * y.dim(e + 1), c2 = n * y.dim(e + 3), c3 = y.dim(e + 4);
    // d1(y) = sum_i x_i y (x) x_i*
    MatrixBuilder b1(c1, c0);
    for (int i = 0; i < n; ++i) {
        const SparseMatrix a = y.action(i, e);
        for (int v = 0; v < a.cols(); ++v)
            for (const auto& [z, x] : a.column(v)) b1.add(z * n + i, v, x);
    }
    // d2(y (x) x_k*) = q y (x) r_k* + sum_i (x_i x_k y - 2 x_k x_i y) (x) r_i*
    MatrixBuilder b2(c2, c1);
    {
        std::vector<std::vector<SparseMatrix>> prod(n, std::vector<SparseMatrix>(n));
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) prod[a][c] = y.action(a, e + 2) * y.action(c, e + 1);
        for (int v = 0; v < y.dim(e + 1); ++v)
            for (int k = 0; k < n; ++k) {
                const int col = v * n + k;
                for (int j = 0; j < n; ++j)
                    for (const auto& [z, x] : prod[j][j].column(v)) b2.add(z * n + k, col, x);
                for (int i = 0; i < n; ++i) {
                    for (const auto& [z, x] : prod[i][k].column(v)) b2.add(z * n + i, col, x);
                    for (const auto& [z, x] : prod[k][i].column(v)) b2.add(z * n + i, col, -2 * x);
                }
            }
    }
    // d3(y (x) r_i*) = x_i y
    MatrixBuilder b3(c3, c2);
    for (int i = 0; i < n; ++i) {
        const SparseMatrix a = y.action(i, e + 3);
        for (int v = 0; v < a.cols(); ++v) b3.add_column(v * n + i, a.column(v));
    }
    const SparseMatrix d1 = b1.build(), d2 = b2.build(), d3 = b3.build();
    if (!(d2 * d1).is_zero() || !(d3 * d2).is_zero()) throw std::logic_error("cochain complex: d o d != 0");
    const int r1 = rank(d1), r2 = rank(d2), r3 = rank(d3);
    return {c0 - r1, c1 - r1 - r2, c2 - r2 - r3, c3 - r3};
}

// ------------------------------------------------------------------ tables

HomologyCell& HomologyTable::at(int p, int m) {
    return const_cast<HomologyCell&>(static_cast<const HomologyTable*>(this)->at(p, m));
}

const HomologyCell& HomologyTable::at(int p, int m) const {
    if (p < 0 || p > length || m < lo || m > hi) throw std::out_of_range("homology table index");
    return cells[static_cast<std::size_t>(p) * (hi - lo + 1) + (m - lo)];
}

std::vector<int> HomologyTable::row(int p) const {
    std::vector<int> out;
    for (int m = lo; m <= hi; ++m) out.push_back(at(p, m).dim);
    return out;
}

bool HomologyTable::all_ok() const {
    return std::all_of(cells.begin(), cells.end(), [](const HomologyCell& c) { return c.ok(); });
}

std::string HomologyTable::to_tsv() const {
    std::ostringstream os;
    os << "p\tdegree\tdim\texpected\tstatus\n";
    for (const auto& c : cells) {
        if (c.dim < 0 && !c.expected) continue;
        os << c.p << '\t' << c.degree << '\t' << (c.dim < 0 ? std::string("-") : std::to_string(c.dim)) << '\t'
           << (c.expected ? std::to_string(*c.expected) : std::string("-")) << '\t';
        if (c.dim < 0)
            os << "not-computed";
        else if (!c.expected)
            os << (c.note.empty() ? "computed" : c.note);
        else
            os << (c.ok() ? "pass" : "FAIL");
        os << '\n';
    }
    return os.str();
}

HomologyTable homology_table(ComplexKind kind, const GradedModule& y, int lo, int hi, const EngineOptions& opt) {
    HomologyTable t;
    t.kind = kind_name(kind);
    t.coefficient = y.name;
    t.n = y.n;
    t.lo = lo;
    t.hi = hi;
    t.length = kind == ComplexKind::Koszul ? 3 : y.n;
    for (int p = 0; p <= t.length; ++p)
        for (int m = lo; m <= hi; ++m) {
            HomologyCell c;
            c.p = p;
            c.degree = m;
            t.cells.push_back(c);
        }
    std::vector<std::size_t> order(hi - lo + 1);
    std::iota(order.begin(), order.end(), 0);
    std::reverse(order.begin(), order.end());  // larger degrees are the larger jobs
    std::vector<std::vector<std::pair<int, int>>> results(order.size());  // (chain dim, H dim) per p
    SliceRequest req{opt.partial, opt.homological};
    run_jobs(order, opt.workers, [&](std::size_t k) {
        const int m = lo + static_cast<int>(k);
        const ComplexSlice s = kind == ComplexKind::Koszul ? koszul_complex(y, m, req) : ce_complex(y, m, req);
        const int L = s.length();
        std::vector<int> rk(L + 2, -1);
        rk[0] = 0;
        rk[L + 1] = 0;
        for (int p = 1; p <= L; ++p) {
            if (!s.d[p]) continue;
            rk[p] = rank(*s.d[p]);
            if (opt.paranoid && !check_rank_nullity(*s.d[p]))
                throw std::logic_error("rank-nullity check failed");
        }
        std::vector<std::pair<int, int>> row(L + 1, {-1, -1});
        for (int p = 0; p <= L; ++p) {
            row[p].first = s.dims[p];
            const bool want = opt.homological.empty() || opt.homological.count(p);
            if (want && s.dims[p] >= 0 && rk[p] >= 0 && rk[p + 1] >= 0) row[p].second = s.dims[p] - rk[p] - rk[p + 1];
        }
        results[k] = std::move(row);
    });
    for (std::size_t k = 0; k < results.size(); ++k) {
        const int m = lo + static_cast<int>(k);
        for (int p = 0; p <= t.length; ++p) {
            auto& c = t.at(p, m);
            c.chain_dim = results[k][p].first;
            c.dim = results[k][p].second;
            if (c.dim < -1) throw std::logic_error("negative homology dimension");
        }
    }
    if (!euler_consistent(t)) throw std::logic_error("Euler characteristic mismatch");
    return t;
}

bool euler_consistent(const HomologyTable& t) {
    for (int m = t.lo; m <= t.hi; ++m) {
        long chain = 0, hom = 0;
        bool known = true;
        for (int p = 0; p <= t.length; ++p) {
            const auto& c = t.at(p, m);
            if (c.chain_dim < 0 || c.dim < 0) {
                known = false;
                break;
            }
            const long sign = p % 2 ? -1 : 1;
            chain += sign * c.chain_dim;
            hom += sign * c.dim;
        }
        if (known && chain != hom) return false;
    }
    return true;
}

}  // namespace ymh
