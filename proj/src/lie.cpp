#include "ymh/lie.hpp"

#include "ymh/series.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ymh {

std::uint64_t word_code(const Word& w, int n) {
    std::uint64_t c = 0;
    for (int a : w) c = c * n + a;
    return c;
}

Word word_from_code(std::uint64_t code, int n, int len) {
    Word w(len);
    for (int k = len - 1; k >= 0; --k) {
        w[k] = static_cast<int>(code % n);
        code /= n;
    }
    return w;
}

std::string word_text(const Word& w) {
    std::string s;
    for (int a : w) s += "x" + std::to_string(a + 1);
    return s;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
    return true;
}

namespace {

int mobius(int m) {
    int r = 1;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return 0;
        r = -r;
    }
    return m > 1 ? -r : r;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

unsigned word_parity(const Word& w) {
    unsigned p = 0;
    for (int a : w) p ^= 1u << a;
    return p;
}

unsigned code_parity(std::uint64_t code, int n, int len) {
    unsigned p = 0;
    for (int k = 0; k < len; ++k) {
        p ^= 1u << (code % n);
        code /= n;
    }
    return p;
}

}  // namespace

long witt_dimension(int n, int d) {
    long s = 0;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0) s += mobius(e) * static_cast<long>(ipow(n, d / e));
    return s / d;
}

std::string HallMonomial::bracket_text() const {
    std::function<std::string(const Word&)> rec = [&](const Word& w) -> std::string {
        if (w.size() == 1) return "x" + std::to_string(w[0] + 1);
        for (std::size_t i = 1; i < w.size(); ++i) {
            Word v(w.begin() + i, w.end());
            if (is_lyndon(v)) return "[" + rec(Word(w.begin(), w.begin() + i)) + "," + rec(v) + "]";
        }
        throw std::logic_error("not a Lyndon word");
    };
    return rec(word);
}

std::vector<HallMonomial> hall_basis(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("hall_basis: bad arguments");
    std::vector<HallMonomial> out;
    // Duval's generation of Lyndon words in lexicographic order
    Word w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == d) {
            HallMonomial h;
            h.word = w;
            for (std::size_t i = 1; i < w.size(); ++i)
                if (is_lyndon(Word(w.begin() + i, w.end()))) {
                    h.split = static_cast<int>(i);
                    break;
                }
            out.push_back(std::move(h));
        }
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < d) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == n - 1) w.pop_back();
    }
    if (static_cast<long>(out.size()) != witt_dimension(n, d))
        throw std::logic_error("hall_basis: Witt count mismatch");
    return out;
}

// ---------------------------------------------------------------- FreeLie

namespace {

template <class C>
void peel(const FreeLie& f, int degree, std::map<std::uint64_t, C>& p, SparseVector& coords) {
    const int n = f.n();
    while (!p.empty()) {
        auto it = p.begin();
        if (it->second == 0) {
            p.erase(it);
            continue;
        }
        const std::uint64_t code = it->first;
        const int k = f.index_of(word_from_code(code, n, degree));
        if (k < 0) throw std::logic_error("not a Lie polynomial: leading word is not Lyndon");
        const C c = it->second;
        coords.emplace_back(k, Scalar(c));
        for (const auto& [w, v] : f.expansion(degree, k)) {
            auto jt = p.find(w);
            if (jt == p.end())
                p.emplace(w, -c * v);
            else if ((jt->second -= c * v) == 0)
                p.erase(jt);
        }
    }
}

}  // namespace

FreeLie::FreeLie(int n, int max_degree) : n_(n), max_degree_(max_degree) {
    if (n < 2 || max_degree < 1) throw std::invalid_argument("FreeLie: need n >= 2, D >= 1");
    if (ipow(n, max_degree) > (1ull << 40)) throw std::invalid_argument("FreeLie: degree too large");
    basis_.resize(max_degree + 1);
    index_.resize(max_degree + 1);
    expansions_.resize(max_degree + 1);
    parity_.resize(max_degree + 1);
    for (int d = 1; d <= max_degree; ++d) {
        basis_[d] = hall_basis(n, d);
        for (std::size_t k = 0; k < basis_[d].size(); ++k) {
            const auto& h = basis_[d][k];
            index_[d][word_code(h.word, n)] = static_cast<int>(k);
            parity_[d].push_back(word_parity(h.word));
            std::vector<std::pair<std::uint64_t, long>> e;
            if (d == 1) {
                e.emplace_back(h.word[0], 1);
            } else {
                Word u(h.word.begin(), h.word.begin() + h.split), v(h.word.begin() + h.split, h.word.end());
                const int du = static_cast<int>(u.size()), dv = static_cast<int>(v.size());
                const auto& eu = expansions_[du][index_of(u)];
                const auto& ev = expansions_[dv][index_of(v)];
                std::map<std::uint64_t, long> acc;
                const std::uint64_t su = ipow(n, dv), sv = ipow(n, du);
                for (const auto& [a, x] : eu)
                    for (const auto& [b, y] : ev) {
                        acc[a * su + b] += x * y;
                        acc[b * sv + a] -= x * y;
                    }
                for (const auto& [w, c] : acc)
                    if (c != 0) e.emplace_back(w, c);
            }
            if (e.empty() || e.front().first != word_code(h.word, n) || e.front().second != 1)
                throw std::logic_error("FreeLie: bracketing does not have the Lyndon word as leading term");
            expansions_[d].push_back(std::move(e));
        }
    }
    ad_.resize(max_degree + 1);
    for (int d = 1; d < max_degree; ++d) {
        const std::uint64_t s = ipow(n, d);
        for (int i = 0; i < n; ++i) {
            std::vector<SparseVector> cols(dim(d));
            for (int k = 0; k < dim(d); ++k) {
                std::map<std::uint64_t, long> p;
                for (const auto& [w, c] : expansions_[d][k]) {
                    p[i * s + w] += c;
                    p[w * n + i] -= c;
                }
                peel(*this, d + 1, p, cols[k]);
                canonicalize(cols[k]);
            }
            ad_[d].push_back(SparseMatrix::from_columns(dim(d + 1), std::move(cols)));
        }
    }
}

int FreeLie::index_of(const Word& w) const {
    const int d = static_cast<int>(w.size());
    if (d < 1 || d > max_degree_) return -1;
    auto it = index_[d].find(word_code(w, n_));
    return it == index_[d].end() ? -1 : it->second;
}

LieElement FreeLie::generator(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("generator index");
    return {1, unit_vector(i)};
}

WordPoly FreeLie::expand(const LieElement& a) const {
    WordPoly p;
    for (const auto& [k, c] : a.coords)
        for (const auto& [w, v] : expansions_.at(a.degree).at(k)) p[w] += c * v;
    for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
    return p;
}

LieElement FreeLie::from_words(int degree, WordPoly p) const {
    LieElement out;
    out.degree = degree;
    peel(*this, degree, p, out.coords);
    canonicalize(out.coords);
    return out;
}

LieElement FreeLie::bracket(const LieElement& a, const LieElement& b) const {
    const int d = a.degree + b.degree;
    if (d > max_degree_) throw std::out_of_range("free bracket beyond tracked degree");
    if (a.coords.empty() || b.coords.empty()) return {d, {}};
    const WordPoly pa = expand(a), pb = expand(b);
    const std::uint64_t sa = ipow(n_, b.degree), sb = ipow(n_, a.degree);
    WordPoly p;
    for (const auto& [u, x] : pa)
        for (const auto& [v, y] : pb) {
            p[u * sa + v] += x * y;
            p[v * sb + u] -= x * y;
        }
    return from_words(d, std::move(p));
}

std::vector<LieElement> ym_relations(const FreeLie& f) {
    if (f.max_degree() < 3) throw std::invalid_argument("relations live in degree 3");
    std::vector<LieElement> rels;
    for (int j = 0; j < f.n(); ++j) {
        LieElement r{3, {}};
        for (int i = 0; i < f.n(); ++i) {
            LieElement inner = f.bracket(f.generator(i), f.generator(j));
            r.coords = axpy(r.coords, 1, f.bracket(f.generator(i), inner).coords);
        }
        rels.push_back(std::move(r));
    }
    return rels;
}

// -------------------------------------------------------------- YMBuilder

YMBuilder::YMBuilder(int n, int max_degree) : free_(std::make_unique<FreeLie>(n, max_degree)) {
    const FreeLie& f = *free_;
    const auto rels = max_degree >= 3 ? ym_relations(f) : std::vector<LieElement>{};
    data_.resize(max_degree + 1);
    ideal_.resize(max_degree + 1);
    pres_.n = n;
    pres_.max_degree = max_degree;
    pres_.dims.assign(max_degree + 1, 0);
    pres_.lifts.resize(max_degree + 1);
    for (int d = 1; d <= max_degree; ++d) {
        DegreeData& dd = data_[d];
        const int fd = f.dim(d);
        std::map<unsigned, int> block_id;
        dd.block_of.resize(fd);
        dd.local_of.resize(fd);
        for (int k = 0; k < fd; ++k) {
            auto [it, fresh] = block_id.emplace(f.parity(d, k), static_cast<int>(dd.cols.size()));
            if (fresh) dd.cols.emplace_back();
            dd.block_of[k] = it->second;
            dd.local_of[k] = static_cast<int>(dd.cols[it->second].size());
            dd.cols[it->second].push_back(k);
        }
        for (const auto& c : dd.cols) dd.blocks.emplace_back(static_cast<int>(c.size()), Echelon::Pivot::Last);

        // I_3 = span(r_j); I_{d+1} = [V, I_d] (Jacobi moves every bracket with
        // an ideal element into iterated generator brackets)
        std::vector<SparseVector> cand;
        if (d == 3) {
            for (const auto& r : rels) cand.push_back(r.coords);
        } else if (d > 3) {
            for (const auto& u : ideal_[d - 1])
                for (int i = 0; i < n; ++i) cand.push_back(f.ad_generator(i, d - 1).apply(u));
        }
        for (const auto& v : cand) {
            if (v.empty()) continue;
            const int b = dd.block_of[v.front().first];
            SparseVector loc;
            for (const auto& [k, x] : v) {
                if (dd.block_of[k] != b) throw std::logic_error("ideal vector crosses parity blocks");
                loc.emplace_back(dd.local_of[k], x);
            }
            dd.blocks[b].insert(loc);
        }
        std::vector<char> pivot(fd, 0);
        for (std::size_t b = 0; b < dd.blocks.size(); ++b) {
            const auto& e = dd.blocks[b];
            for (int r = 0; r < e.size(); ++r) {
                pivot[dd.cols[b][e.pivots()[r]]] = 1;
                SparseVector g;
                for (const auto& [k, x] : e.row(r)) g.emplace_back(dd.cols[b][k], x);
                canonicalize(g);
                ideal_[d].push_back(std::move(g));
            }
        }
        dd.lift_of_hall.assign(fd, -1);
        for (int k = 0; k < fd; ++k) {
            if (pivot[k]) continue;
            dd.lift_of_hall[k] = static_cast<int>(pres_.lifts[d].size());
            pres_.lifts[d].push_back(f.basis(d)[k]);
        }
        pres_.dims[d] = static_cast<int>(pres_.lifts[d].size());
    }
    pres_.offsets.assign(max_degree + 2, 0);
    for (int d = 1; d <= max_degree + 1; ++d) pres_.offsets[d] = pres_.offsets[d - 1] + pres_.dims[d - 1];

    if (pbw_series(pres_.dims, max_degree) != ym_hilbert(n, max_degree))
        throw std::logic_error("ym dims contradict the PBW identity");

    // structure constants on the lifts
    const int total = pres_.total_dim();
    for (int a = 0; a < total; ++a) {
        const YMIndex ia = pres_.local(a);
        for (int b = a + 1; b < total; ++b) {
            const YMIndex ib = pres_.local(b);
            if (ia.degree + ib.degree > max_degree) break;
            const int ha = f.index_of(pres_.lifts[ia.degree][ia.index].word);
            const int hb = f.index_of(pres_.lifts[ib.degree][ib.index].word);
            LieElement br;
            if (ia.degree == 1) {
                br = {1 + ib.degree, f.ad_generator(ha, ib.degree).column(hb)};
            } else {
                br = f.bracket({ia.degree, unit_vector(ha)}, {ib.degree, unit_vector(hb)});
            }
            SparseVector v = reduce(br);
            if (v.empty()) continue;
            pres_.brackets[{b, a}] = scaled(v, -1);
            pres_.brackets[{a, b}] = std::move(v);
        }
    }
}

int YMBuilder::ideal_dim(int d) const { return static_cast<int>(ideal_.at(d).size()); }

SparseVector YMBuilder::reduce_coords(int d, const SparseVector& v) const {
    const DegreeData& dd = data_.at(d);
    std::map<int, SparseVector> parts;
    for (const auto& [k, x] : v) parts[dd.block_of[k]].emplace_back(dd.local_of[k], x);
    SparseVector out;
    for (const auto& [b, loc] : parts)
        for (const auto& [k, x] : dd.blocks[b].reduce(loc)) {
            const int lift = dd.lift_of_hall[dd.cols[b][k]];
            if (lift < 0) throw std::logic_error("reduction left a pivot coordinate");
            out.emplace_back(lift, x);
        }
    canonicalize(out);
    return out;
}

SparseVector YMBuilder::reduce(const LieElement& a) const {
    if (a.degree < 1 || a.degree > pres_.max_degree) throw std::out_of_range("reduce: degree");
    return reduce_coords(a.degree, a.coords);
}

std::vector<SparseVector> ideal_component(const FreeLie& f, const std::vector<LieElement>& rels, int d) {
    if (d < 3) throw std::invalid_argument("ideal_component needs d >= 3");
    if (f.n() == 0 || rels.size() != static_cast<std::size_t>(f.n()))
        throw std::invalid_argument("ideal_component expects the n Yang-Mills relations");
    YMBuilder b(f.n(), d);
    return b.ideal_basis(d);
}

YMPresentation ym_presentation(int n, int max_degree) { return YMBuilder(n, max_degree).presentation(); }

YMIndex YMPresentation::local(int g) const {
    if (g < 0 || g >= total_dim()) throw std::out_of_range("ym global index");
    auto it = std::upper_bound(offsets.begin(), offsets.end(), g);
    const int d = static_cast<int>(it - offsets.begin()) - 1;
    return {d, g - offsets[d]};
}

std::string YMPresentation::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    mix(std::to_string(n));
    mix(std::to_string(max_degree));
    for (int d : dims) mix(std::to_string(d));
    for (const auto& ls : lifts)
        for (const auto& l : ls) mix(word_text(l.word));
    for (const auto& [k, v] : brackets) {
        mix(std::to_string(k.first) + "," + std::to_string(k.second));
        for (const auto& [i, x] : v) mix(std::to_string(i) + ":" + x.get_str());
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

SparseVector ym_bracket_global(const YMPresentation& p, int a, int b) {
    const int d = p.degree_of(a) + p.degree_of(b);
    if (d > p.max_degree) throw std::out_of_range("ym_bracket: degree overflow");
    if (a == b) return {};
    auto it = p.brackets.find({a, b});
    return it == p.brackets.end() ? SparseVector{} : it->second;
}

SparseVector ym_bracket(const YMPresentation& p, YMIndex a, YMIndex b) {
    return ym_bracket_global(p, p.global(a), p.global(b));
}

namespace {

// bracket of two global-index combinations; result in global indices
SparseVector bracket_combo(const YMPresentation& p, const SparseVector& u, const SparseVector& v) {
    SparseVector out;
    for (const auto& [a, x] : u)
        for (const auto& [b, y] : v) {
            const int d = p.degree_of(a) + p.degree_of(b);
            SparseVector br = ym_bracket_global(p, a, b);
            for (auto& e : br) e.first += p.offsets[d];
            out = axpy(out, x * y, br);
        }
    return out;
}

}  // namespace

std::string validate_presentation(const YMPresentation& p) {
    if (static_cast<int>(p.dims.size()) != p.max_degree + 1) return "dims length";
    if (p.offsets.size() != p.dims.size() + 1) return "offsets length";
    for (int d = 1; d <= p.max_degree; ++d) {
        if (static_cast<int>(p.lifts[d].size()) != p.dims[d]) return "lift count at degree " + std::to_string(d);
        for (const auto& l : p.lifts[d])
            if (l.degree() != d || !is_lyndon(l.word)) return "lift is not a Lyndon word of degree " + std::to_string(d);
    }
    if (pbw_series(p.dims, p.max_degree) != ym_hilbert(p.n, p.max_degree)) return "PBW identity fails";
    for (const auto& [k, v] : p.brackets) {
        const int d = p.degree_of(k.first) + p.degree_of(k.second);
        if (d > p.max_degree) return "bracket beyond max degree";
        if (!v.empty() && v.back().first >= p.dims[d]) return "bracket coordinate out of range";
        auto it = p.brackets.find({k.second, k.first});
        if (it == p.brackets.end() || it->second != scaled(v, -1)) return "antisymmetry fails";
    }
    const int total = p.total_dim();
    for (int a = 0; a < total; ++a)
        for (int b = a + 1; b < total; ++b) {
            if (p.degree_of(a) + p.degree_of(b) >= p.max_degree) break;
            const SparseVector ab = bracket_combo(p, unit_vector(a), unit_vector(b));
            for (int c = b + 1; c < total; ++c) {
                if (p.degree_of(a) + p.degree_of(b) + p.degree_of(c) > p.max_degree) break;
                SparseVector j = bracket_combo(p, ab, unit_vector(c));
                j = axpy(j, 1, bracket_combo(p, bracket_combo(p, unit_vector(b), unit_vector(c)), unit_vector(a)));
                j = axpy(j, 1, bracket_combo(p, bracket_combo(p, unit_vector(c), unit_vector(a)), unit_vector(b)));
                if (!j.empty()) return "Jacobi fails";
            }
        }
    if (p.max_degree >= 3)
        for (int j = 0; j < p.n; ++j) {
            SparseVector r;
            for (int i = 0; i < p.n; ++i)
                r = axpy(r, 1, bracket_combo(p, unit_vector(i), bracket_combo(p, unit_vector(i), unit_vector(j))));
            if (!r.empty()) return "Yang-Mills relation not satisfied";
        }
    return {};
}

// --------------------------------------------------------------------- PBW

int pbw_degree(const YMPresentation& p, const PBWMonomial& m) {
    int d = 0;
    for (int g : m) d += p.degree_of(g);
    return d;
}

std::vector<PBWMonomial> monomials(const YMPresentation& p, int d, int min_factor_degree, int exact_length) {
    if (d < 0) return {};
    if (d > p.max_degree) throw std::out_of_range("monomials: degree beyond presentation");
    std::vector<PBWMonomial> out;
    PBWMonomial cur;
    std::function<void(int, int)> rec = [&](int start, int rest) {
        if (rest == 0) {
            if (exact_length < 0 || static_cast<int>(cur.size()) == exact_length) out.push_back(cur);
            return;
        }
        if (exact_length >= 0 && static_cast<int>(cur.size()) >= exact_length) return;
        for (int g = start; g < p.total_dim(); ++g) {
            const int dg = p.degree_of(g);
            if (dg > rest) break;
            if (dg < min_factor_degree) continue;
            cur.push_back(g);
            rec(g, rest - dg);
            cur.pop_back();
        }
    };
    rec(0, d);
    return out;
}

std::vector<PBWMonomial> pbw_basis(const YMPresentation& p, int d) { return monomials(p, d, 1); }

namespace {

class Straightener {
public:
    explicit Straightener(const YMPresentation& p) : p_(p) {}

    // b * (yk ... y1) for m = (y1 <= ... <= yk)
    const PBWElement& mult(int b, const PBWMonomial& m) {
        auto key = std::make_pair(b, m);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        PBWElement out;
        if (m.empty() || b >= m.back()) {
            PBWMonomial r(m);
            r.push_back(b);
            out[r] = 1;
        } else {
            const int top = m.back();
            PBWMonomial rest(m.begin(), m.end() - 1);
            const PBWElement inner = mult(b, rest);
            for (const auto& [mm, c] : inner) add(out, mult(top, mm), c);
            const int d = p_.degree_of(b) + p_.degree_of(top);
            for (const auto& [k, c] : ym_bracket_global(p_, b, top)) add(out, mult(p_.offsets[d] + k, rest), c);
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    static void add(PBWElement& acc, const PBWElement& e, const Scalar& c) {
        for (const auto& [m, x] : e) {
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, c * x);
            else if ((it->second += c * x) == 0)
                acc.erase(it);
        }
    }

    const YMPresentation& p_;
    std::map<std::pair<int, PBWMonomial>, PBWElement> memo_;
};

}  // namespace

PBWElement pbw_left_mult(const YMPresentation& p, int gen, const PBWMonomial& m) {
    if (gen < 0 || gen >= p.n) throw std::out_of_range("pbw_left_mult: generator");
    if (pbw_degree(p, m) + 1 > p.max_degree) throw std::out_of_range("pbw_left_mult: degree overflow");
    Straightener s(p);
    return s.mult(gen, m);
}

PBWElement pbw_left_mult_element(const YMPresentation& p, int g, const PBWElement& e) {
    if (g < 0 || g >= p.total_dim()) throw std::out_of_range("pbw_left_mult_element: index");
    Straightener s(p);
    PBWElement out;
    for (const auto& [m, c] : e) {
        if (pbw_degree(p, m) + p.degree_of(g) > p.max_degree)
            throw std::out_of_range("pbw_left_mult_element: degree overflow");
        for (const auto& [mm, x] : s.mult(g, m)) {
            auto it = out.find(mm);
            if (it == out.end())
                out.emplace(mm, c * x);
            else if ((it->second += c * x) == 0)
                out.erase(it);
        }
    }
    return out;
}

// ------------------------------------------------------------ associative

WordPoly ym_relation_word(int n, int j) {
    WordPoly r;
    for (int i = 0; i < n; ++i) {
        r[word_code({i, i, j}, n)] += 1;
        r[word_code({i, j, i}, n)] -= 2;
        r[word_code({j, i, i}, n)] += 1;
    }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

std::vector<SparseVector> assoc_relation_vectors(int n, int d) {
    std::vector<SparseVector> out;
    if (d < 3) return out;
    std::vector<WordPoly> rels;
    for (int j = 0; j < n; ++j) rels.push_back(ym_relation_word(n, j));
    for (int a = 0; a + 3 <= d; ++a) {
        const int b = d - 3 - a;
        const std::uint64_t na = ipow(n, a), nb = ipow(n, b);
        for (std::uint64_t u = 0; u < na; ++u)
            for (const auto& r : rels)
                for (std::uint64_t v = 0; v < nb; ++v) {
                    SparseVector vec;
                    for (const auto& [w, c] : r) vec.emplace_back(static_cast<int>((u * ipow(n, 3) + w) * nb + v), c);
                    canonicalize(vec);
                    out.push_back(std::move(vec));
                }
    }
    return out;
}

int assoc_dimension(int n, int d) {
    if (d < 0) return 0;
    if (ipow(n, d) > (1ull << 30)) throw std::invalid_argument("assoc_dimension: too large");
    return static_cast<int>(ipow(n, d)) - rank_of_vectors(assoc_relation_vectors(n, d));
}

AssocComponent::AssocComponent(int n, int d) : n_(n), d_(d) {
    if (d < 0) {
        return;
    }
    if (ipow(n, d) > (1ull << 24)) throw std::invalid_argument("AssocComponent: too large");
    const int N = static_cast<int>(ipow(n, d));
    std::map<unsigned, int> block_id;
    block_of_.resize(N);
    local_of_.resize(N);
    for (int w = 0; w < N; ++w) {
        auto [it, fresh] = block_id.emplace(code_parity(w, n, d), static_cast<int>(block_words_.size()));
        if (fresh) block_words_.emplace_back();
        block_of_[w] = it->second;
        local_of_[w] = static_cast<int>(block_words_[it->second].size());
        block_words_[it->second].push_back(w);
    }
    for (const auto& bw : block_words_) blocks_.emplace_back(static_cast<int>(bw.size()), Echelon::Pivot::Last);
    for (const auto& v : assoc_relation_vectors(n, d)) {
        const int b = block_of_[v.front().first];
        SparseVector loc;
        for (const auto& [w, c] : v) loc.emplace_back(local_of_[w], c);
        blocks_[b].insert(loc);
    }
    std::vector<char> pivot(N, 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (int p : blocks_[b].pivots()) pivot[block_words_[b][p]] = 1;
    for (int w = 0; w < N; ++w)
        if (!pivot[w]) {
            normal_index_[w] = static_cast<int>(normal_.size());
            normal_.push_back(w);
        }
}

SparseVector AssocComponent::reduce(const WordPoly& p) const {
    if (d_ < 0) {
        if (!p.empty()) throw std::logic_error("AssocComponent: nonzero element in negative degree");
        return {};
    }
    std::map<int, SparseVector> parts;
    for (const auto& [w, c] : p) {
        if (c == 0) continue;
        if (w >= block_of_.size()) throw std::out_of_range("AssocComponent: word of wrong length");
        parts[block_of_[w]].emplace_back(local_of_[w], c);
    }
    SparseVector out;
    for (auto& [b, loc] : parts) {
        canonicalize(loc);
        for (const auto& [k, x] : blocks_[b].reduce(loc)) out.emplace_back(normal_index_.at(block_words_[b][k]), x);
    }
    canonicalize(out);
    return out;
}

}  // namespace ymh
