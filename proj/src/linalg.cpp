#include "ymh/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ymh {

std::string to_string(const Scalar& q) { return q.get_str(); }

Scalar parse_scalar(const std::string& s) {
    Scalar q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

Scalar coeff(const SparseVector& v, int i) {
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const auto& e, int k) { return e.first < k; });
    if (it != v.end() && it->first == i) return it->second;
    return 0;
}

SparseVector axpy(const SparseVector& y, const Scalar& a, const SparseVector& x) {
    if (a == 0) return y;
    SparseVector out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            Scalar s = y[i].second + a * x[j].second;
            if (s != 0) out.emplace_back(y[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVector scaled(const SparseVector& x, const Scalar& a) {
    if (a == 0) return {};
    SparseVector out(x);
    for (auto& e : out) e.second *= a;
    return out;
}

SparseVector unit_vector(int i) { return {{i, Scalar(1)}}; }

void canonicalize(SparseVector& v) {
    std::stable_sort(v.begin(), v.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    out.reserve(v.size());
    for (auto& e : v) {
        if (!out.empty() && out.back().first == e.first)
            out.back().second += e.second;
        else
            out.push_back(std::move(e));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }),
              out.end());
    v = std::move(out);
}

// ---------------------------------------------------------------- matrices

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i] = unit_vector(i);
    return m;
}

SparseMatrix SparseMatrix::from_columns(int rows, std::vector<SparseVector> cols) {
    SparseMatrix m(rows, static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(static_cast<int>(c), std::move(cols[c]));
    return m;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t s = 0;
    for (const auto& c : data_) s += c.size();
    return s;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& c) { return c.empty(); });
}

Scalar SparseMatrix::at(int r, int c) const { return coeff(data_.at(c), r); }

void SparseMatrix::set(int r, int c, const Scalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    auto& col = data_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int k) { return e.first < k; });
    if (it != col.end() && it->first == r) {
        if (v == 0)
            col.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        col.insert(it, {r, v});
    }
}

void SparseMatrix::set_column(int c, SparseVector v) {
    canonicalize(v);
    if (!v.empty() && (v.front().first < 0 || v.back().first >= rows_))
        throw std::out_of_range("column entry outside matrix");
    data_.at(c) = std::move(v);
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : data_[c]) t.data_[r].emplace_back(c, v);
    return t;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const { return transpose().data_; }

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    std::map<int, Scalar> acc;
    for (const auto& [c, x] : v)
        for (const auto& [r, a] : data_.at(c)) acc[r] += a * x;
    SparseVector out;
    for (auto& [r, s] : acc)
        if (s != 0) out.emplace_back(r, std::move(s));
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    std::vector<Scalar> acc(a.rows_);
    std::vector<char> used(a.rows_, 0);
    std::vector<int> touched;
    for (int c = 0; c < b.cols_; ++c) {
        touched.clear();
        for (const auto& [k, bv] : b.data_[c]) {
            for (const auto& [r, av] : a.data_[k]) {
                if (!used[r]) {
                    used[r] = 1;
                    touched.push_back(r);
                    acc[r] = av * bv;
                } else {
                    acc[r] += av * bv;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& col = out.data_[c];
        for (int r : touched) {
            if (acc[r] != 0) col.emplace_back(r, acc[r]);
            used[r] = 0;
        }
    }
    return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    SparseMatrix out(a.rows_, a.cols_);
    for (int c = 0; c < a.cols_; ++c) out.data_[c] = axpy(a.data_[c], 1, b.data_[c]);
    return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    SparseMatrix out(a.rows_, a.cols_);
    for (int c = 0; c < a.cols_; ++c) out.data_[c] = axpy(a.data_[c], -1, b.data_[c]);
    return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

SparseMatrix SparseMatrix::scaled(const Scalar& a) const {
    SparseMatrix out(rows_, cols_);
    for (int c = 0; c < cols_; ++c) out.data_[c] = ymh::scaled(data_[c], a);
    return out;
}

MatrixBuilder::MatrixBuilder(int rows, int cols) : rows_(rows), cols_(cols), cols_data_(cols) {}

void MatrixBuilder::add(int r, int c, const Scalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("builder index");
    if (v != 0) cols_data_[c].emplace_back(r, v);
}

void MatrixBuilder::add_column(int c, const SparseVector& v, const Scalar& a) {
    for (const auto& [r, x] : v) add(r, c, a * x);
}

SparseMatrix MatrixBuilder::build() { return SparseMatrix::from_columns(rows_, std::move(cols_data_)); }

SparseMatrix vstack(const std::vector<SparseMatrix>& blocks) {
    if (blocks.empty()) return {};
    int cols = blocks[0].cols(), rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
        rows += b.rows();
    }
    std::vector<SparseVector> data(cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int c = 0; c < cols; ++c)
            for (const auto& [r, v] : b.column(c)) data[c].emplace_back(r + off, v);
        off += b.rows();
    }
    return SparseMatrix::from_columns(rows, std::move(data));
}

SparseMatrix hstack(const std::vector<SparseMatrix>& blocks) {
    if (blocks.empty()) return {};
    int rows = blocks[0].rows();
    std::vector<SparseVector> data;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
        for (int c = 0; c < b.cols(); ++c) data.push_back(b.column(c));
    }
    return SparseMatrix::from_columns(rows, std::move(data));
}

// -------------------------------------------------------- integer elimination

namespace {

struct IntRow {
    std::vector<int> idx;
    std::vector<mpz_class> val;
    bool empty() const { return idx.empty(); }
};

void make_primitive(IntRow& r) {
    if (r.val.empty()) return;
    mpz_class g = 0;
    for (const auto& v : r.val) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& v : r.val) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const SparseVector& v, const std::vector<int>* remap = nullptr) {
    IntRow r;
    mpz_class l = 1;
    for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    r.idx.reserve(v.size());
    r.val.reserve(v.size());
    for (const auto& [i, q] : v) {
        r.idx.push_back(remap ? (*remap)[i] : i);
        r.val.push_back(q.get_num() * (l / q.get_den()));
    }
    make_primitive(r);
    return r;
}

class UnionFind {
public:
    explicit UnionFind(int n) : p_(n) { std::iota(p_.begin(), p_.end(), 0); }
    int find(int x) {
        while (p_[x] != x) x = p_[x] = p_[p_[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> p_;
};

struct Elimination {
    std::vector<int> pivot_cols;
    std::vector<IntRow> pivot_rows;
};

// Fraction-free elimination: s <- p*s - a*r, then divide out the content.
// Markowitz rule picks the sparsest active row and inside it the column with
// the fewest active entries; ties go to the lowest index.
Elimination eliminate(std::vector<IntRow> rows, int ncols, bool markowitz) {
    Elimination out;
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> col_count(ncols, 0);
    std::vector<std::vector<int>> col_rows(ncols);
    std::vector<char> active(nrows, 0);
    std::vector<int> stamp(nrows, -1);
    std::set<std::pair<std::size_t, int>> queue;
    for (int i = 0; i < nrows; ++i) {
        if (rows[i].empty()) continue;
        active[i] = 1;
        queue.insert({markowitz ? rows[i].idx.size() : 0, i});
        for (int c : rows[i].idx) {
            ++col_count[c];
            col_rows[c].push_back(i);
        }
    }
    auto contains = [&](const IntRow& r, int c) {
        return std::binary_search(r.idx.begin(), r.idx.end(), c);
    };
    IntRow tmp;
    int step = 0;
    while (!queue.empty()) {
        const int pr = queue.begin()->second;
        queue.erase(queue.begin());
        active[pr] = 0;
        IntRow& prow = rows[pr];
        int pc = prow.idx[0];
        std::size_t pk = 0;
        if (markowitz) {
            for (std::size_t k = 1; k < prow.idx.size(); ++k) {
                int c = prow.idx[k];
                if (col_count[c] < col_count[pc]) {
                    pc = c;
                    pk = k;
                }
            }
        }
        for (int c : prow.idx) --col_count[c];
        const mpz_class pval = prow.val[pk];
        for (int s : col_rows[pc]) {
            if (!active[s] || stamp[s] == step) continue;
            stamp[s] = step;
            IntRow& row = rows[s];
            if (!contains(row, pc)) continue;
            auto it = std::lower_bound(row.idx.begin(), row.idx.end(), pc);
            mpz_class a = row.val[it - row.idx.begin()];
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), pval.get_mpz_t());
            mpz_class ps = pval / g, ar = a / g;
            queue.erase({markowitz ? row.idx.size() : 0, s});
            tmp.idx.clear();
            tmp.val.clear();
            std::size_t i = 0, j = 0;
            while (i < row.idx.size() || j < prow.idx.size()) {
                if (j == prow.idx.size() || (i < row.idx.size() && row.idx[i] < prow.idx[j])) {
                    tmp.idx.push_back(row.idx[i]);
                    tmp.val.push_back(ps * row.val[i]);
                    ++i;
                } else if (i == row.idx.size() || prow.idx[j] < row.idx[i]) {
                    int c = prow.idx[j];
                    tmp.idx.push_back(c);
                    tmp.val.push_back(-ar * prow.val[j]);
                    ++col_count[c];
                    col_rows[c].push_back(s);
                    ++j;
                } else {
                    mpz_class v = ps * row.val[i] - ar * prow.val[j];
                    if (v != 0) {
                        tmp.idx.push_back(row.idx[i]);
                        tmp.val.push_back(std::move(v));
                    } else {
                        --col_count[row.idx[i]];
                    }
                    ++i;
                    ++j;
                }
            }
            std::swap(row, tmp);
            make_primitive(row);
            if (row.empty())
                active[s] = 0;
            else
                queue.insert({markowitz ? row.idx.size() : 0, s});
        }
        col_rows[pc].clear();
        col_rows[pc].shrink_to_fit();
        out.pivot_cols.push_back(pc);
        out.pivot_rows.push_back(std::move(prow));
        ++step;
    }
    return out;
}

struct Component {
    std::vector<int> cols;  // global column ids, ascending
    std::vector<int> rows;  // indices into the input vector list
};

// Splits a family of vectors over [0, ncols) into independent blocks.
std::vector<Component> components(const std::vector<SparseVector>& vecs, int ncols) {
    UnionFind uf(ncols);
    for (const auto& v : vecs)
        for (std::size_t k = 1; k < v.size(); ++k) uf.unite(v[0].first, v[k].first);
    std::vector<int> comp_of(ncols, -1);
    std::vector<Component> comps;
    for (int c = 0; c < ncols; ++c) {
        int r = uf.find(c);
        if (comp_of[r] < 0) {
            comp_of[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comp_of[c] = comp_of[r];
        comps[comp_of[c]].cols.push_back(c);
    }
    for (std::size_t i = 0; i < vecs.size(); ++i)
        if (!vecs[i].empty()) comps[comp_of[vecs[i][0].first]].rows.push_back(static_cast<int>(i));
    return comps;
}

int max_index(const std::vector<SparseVector>& vecs) {
    int m = -1;
    for (const auto& v : vecs)
        if (!v.empty()) m = std::max(m, v.back().first);
    return m;
}

int blocked_rank(const std::vector<SparseVector>& vecs, int ncols, bool markowitz) {
    int total = 0;
    std::vector<int> local(ncols, -1);
    for (const auto& comp : components(vecs, ncols)) {
        if (comp.rows.empty()) continue;
        for (std::size_t k = 0; k < comp.cols.size(); ++k) local[comp.cols[k]] = static_cast<int>(k);
        std::vector<IntRow> rows;
        rows.reserve(comp.rows.size());
        for (int i : comp.rows) rows.push_back(to_int_row(vecs[i], &local));
        total += static_cast<int>(
            eliminate(std::move(rows), static_cast<int>(comp.cols.size()), markowitz).pivot_cols.size());
    }
    return total;
}

}  // namespace

int rank(const SparseMatrix& m) {
    std::vector<SparseVector> cols(m.cols());
    for (int c = 0; c < m.cols(); ++c) cols[c] = m.column(c);
    return blocked_rank(cols, m.rows(), true);
}

int rank_transposed(const SparseMatrix& m) { return blocked_rank(m.row_vectors(), m.cols(), false); }

int rank_of_vectors(const std::vector<SparseVector>& vecs) {
    return blocked_rank(vecs, max_index(vecs) + 1, true);
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
    const auto rowvecs = m.row_vectors();
    std::vector<SparseVector> basis;
    std::vector<int> local(m.cols(), -1);
    for (const auto& comp : components(rowvecs, m.cols())) {
        const int nc = static_cast<int>(comp.cols.size());
        for (int k = 0; k < nc; ++k) local[comp.cols[k]] = k;
        std::vector<IntRow> rows;
        for (int i : comp.rows) rows.push_back(to_int_row(rowvecs[i], &local));
        Elimination el = eliminate(std::move(rows), nc, true);
        std::vector<char> is_pivot(nc, 0);
        for (int c : el.pivot_cols) is_pivot[c] = 1;
        std::vector<Scalar> v(nc);
        for (int f = 0; f < nc; ++f) {
            if (is_pivot[f]) continue;
            std::fill(v.begin(), v.end(), Scalar(0));
            v[f] = 1;
            for (std::size_t k = el.pivot_cols.size(); k-- > 0;) {
                const IntRow& r = el.pivot_rows[k];
                const int pc = el.pivot_cols[k];
                Scalar s = 0;
                mpz_class pv = 0;
                for (std::size_t t = 0; t < r.idx.size(); ++t) {
                    if (r.idx[t] == pc)
                        pv = r.val[t];
                    else if (v[r.idx[t]] != 0)
                        s += Scalar(r.val[t]) * v[r.idx[t]];
                }
                v[pc] = -s / Scalar(pv);
            }
            SparseVector out;
            for (int k = 0; k < nc; ++k)
                if (v[k] != 0) out.emplace_back(comp.cols[k], v[k]);
            basis.push_back(std::move(out));
        }
    }
    // deterministic order: by first support index
    std::stable_sort(basis.begin(), basis.end(),
                     [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
    return basis;
}

bool check_rank_nullity(const SparseMatrix& m) {
    const int r = rank(m);
    if (r != rank_transposed(m)) return false;
    const auto ker = kernel_basis(m);
    if (r + static_cast<int>(ker.size()) != m.cols()) return false;
    for (const auto& v : ker)
        if (!m.apply(v).empty()) return false;
    return rank_of_vectors(ker) == static_cast<int>(ker.size());
}

// ----------------------------------------------------------------- echelon

Echelon::Echelon(int dim, Pivot rule) : dim_(dim), rule_(rule), pivot_row_(dim, -1) {}

SparseVector Echelon::reduce(const SparseVector& v, SparseVector* tag_out) const {
    if (!v.empty() && v.back().first >= dim_) throw std::out_of_range("echelon: vector too long");
    if (tag_out) tag_out->clear();
    if (rows_.empty()) return v;
    std::vector<Scalar> acc(dim_);
    for (const auto& [i, x] : v) acc[i] = x;
    std::vector<std::pair<int, Scalar>> used;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = acc[pivots_[k]];
        if (c == 0) continue;
        Scalar f = c;
        for (const auto& [i, x] : rows_[k]) acc[i] -= f * x;
        if (tag_out) used.emplace_back(static_cast<int>(k), std::move(f));
    }
    SparseVector res;
    for (int i = 0; i < dim_; ++i)
        if (acc[i] != 0) res.emplace_back(i, std::move(acc[i]));
    if (tag_out) {
        std::map<int, Scalar> t;
        for (const auto& [k, f] : used)
            for (const auto& [j, x] : tags_[k]) t[j] += f * x;
        for (auto& [j, x] : t)
            if (x != 0) tag_out->emplace_back(j, std::move(x));
    }
    return res;
}

bool Echelon::insert(const SparseVector& v, const SparseVector& tag) {
    SparseVector combo;
    SparseVector res = reduce(v, &combo);
    if (res.empty()) return false;
    const auto& pe = rule_ == Pivot::First ? res.front() : res.back();
    const int p = pe.first;
    const Scalar inv = 1 / pe.second;
    SparseVector t = axpy(tag, -1, combo);
    rows_.push_back(scaled(res, inv));
    tags_.push_back(scaled(t, inv));
    pivot_row_[p] = static_cast<int>(pivots_.size());
    pivots_.push_back(p);
    return true;
}

std::optional<std::vector<Scalar>> solve_in_span(const std::vector<SparseVector>& basis,
                                                 const SparseVector& target) {
    int dim = std::max(max_index(basis), target.empty() ? -1 : target.back().first) + 1;
    Echelon e(dim);
    for (std::size_t j = 0; j < basis.size(); ++j) e.insert(basis[j], unit_vector(static_cast<int>(j)));
    SparseVector combo;
    if (!e.reduce(target, &combo).empty()) return std::nullopt;
    std::vector<Scalar> out(basis.size());
    for (const auto& [j, x] : combo) out[j] = x;
    return out;
}

// ------------------------------------------------------------- subquotient

Subquotient::Subquotient(int ambient_dim, const std::vector<SparseVector>& sub,
                         const std::vector<SparseVector>& quot)
    : ambient_(ambient_dim), block_of_(ambient_dim, -1), local_of_(ambient_dim, -1) {
    std::vector<SparseVector> all(quot);
    all.insert(all.end(), sub.begin(), sub.end());
    if (max_index(all) >= ambient_dim) throw std::out_of_range("subquotient: vector outside ambient");
    for (const auto& comp : components(all, ambient_dim)) {
        if (comp.rows.empty()) continue;
        Block b;
        b.coords = comp.cols;
        const int id = static_cast<int>(blocks_.size());
        for (std::size_t k = 0; k < comp.cols.size(); ++k) {
            block_of_[comp.cols[k]] = id;
            local_of_[comp.cols[k]] = static_cast<int>(k);
        }
        blocks_.push_back(std::move(b));
    }
    for (auto& b : blocks_) b.full = Echelon(static_cast<int>(b.coords.size()));
    for (const auto& q : quot)
        if (!q.empty()) {
            auto& b = blocks_[block_of_[q[0].first]];
            b.full.insert(localize(q, b));
        }
    for (const auto& s : sub) {
        if (s.empty()) continue;
        auto& b = blocks_[block_of_[s[0].first]];
        const int id = static_cast<int>(lifts_.size());
        if (b.full.insert(localize(s, b), unit_vector(id))) {
            lifts_.push_back(s);
            b.lift_ids.push_back(id);
        }
    }
    int span = 0;
    for (const auto& b : blocks_) span += b.full.size();
    if (rank_of_vectors(sub) != span)
        throw std::logic_error("subquotient: quotient span not contained in sub span");
}

SparseVector Subquotient::localize(const SparseVector& v, const Block& b) const {
    SparseVector out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) {
        if (&blocks_[block_of_[i]] != &b) throw std::logic_error("subquotient: vector spans blocks");
        out.emplace_back(local_of_[i], x);
    }
    return out;
}

SparseVector Subquotient::reduce(const SparseVector& v) const {
    std::map<int, SparseVector> parts;
    for (const auto& e : v) {
        if (e.first >= ambient_) throw std::out_of_range("subquotient: vector outside ambient");
        if (block_of_[e.first] < 0) throw std::logic_error("subquotient: vector not in sub");
        parts[block_of_[e.first]].push_back(e);
    }
    SparseVector out;
    for (const auto& [bid, part] : parts) {
        const auto& b = blocks_[bid];
        SparseVector combo;
        if (!b.full.reduce(localize(part, b), &combo).empty())
            throw std::logic_error("subquotient: vector not in sub");
        out = axpy(out, 1, combo);
    }
    return out;
}

bool Subquotient::in_sub(const SparseVector& v) const {
    try {
        reduce(v);
        return true;
    } catch (const std::logic_error&) {
        return false;
    }
}

Subquotient subquotient_basis(int ambient_dim, const std::vector<SparseVector>& sub,
                              const std::vector<SparseVector>& quot) {
    return Subquotient(ambient_dim, sub, quot);
}

}  // namespace ymh
