#include "ymh/derivation.hpp"

#include <algorithm>
#include <stdexcept>

namespace ymh {

bool operator==(const HomDerivation& a, const HomDerivation& b) {
    return a.shift == b.shift && a.images == b.images;
}

DerivationLab::DerivationLab(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("DerivationLab needs n >= 2");
}

const AssocComponent& DerivationLab::component(int d) const {
    if (d < 0) throw std::out_of_range("negative degree component");
    auto& slot = cache_[d];
    if (!slot) slot = std::make_unique<AssocComponent>(n_, d);
    return *slot;
}

WordPoly DerivationLab::to_words(int d, const SparseVector& coords) const {
    WordPoly p;
    if (d < 0) return p;
    const auto& normal = component(d).normal_words();
    for (const auto& [k, c] : coords) p[normal.at(k)] += c;
    return p;
}

WordPoly DerivationLab::apply_words(const HomDerivation& der, int deg, const WordPoly& p) const {
    WordPoly out;
    const int img = 1 + der.shift;
    if (deg + der.shift < 0 || img < 0) return out;
    std::vector<WordPoly> images;
    for (const auto& v : der.images) images.push_back(to_words(img, v));
    std::uint64_t scale_img = 1;
    for (int k = 0; k < img; ++k) scale_img *= n_;
    for (const auto& [code, c] : p) {
        const Word w = word_from_code(code, n_, deg);
        for (int pos = 0; pos < deg; ++pos) {
            const Word prefix(w.begin(), w.begin() + pos), suffix(w.begin() + pos + 1, w.end());
            std::uint64_t scale_suffix = 1;
            for (std::size_t k = 0; k < suffix.size(); ++k) scale_suffix *= n_;
            const std::uint64_t pre = word_code(prefix, n_), suf = word_code(suffix, n_);
            for (const auto& [ic, v] : images[w[pos]]) {
                const std::uint64_t code_out = (pre * scale_img + ic) * scale_suffix + suf;
                auto it = out.find(code_out);
                const Scalar add = c * v;
                if (it == out.end())
                    out.emplace(code_out, add);
                else if ((it->second += add) == 0)
                    out.erase(it);
            }
        }
    }
    return out;
}

SparseVector DerivationLab::apply(const HomDerivation& der, int deg, const WordPoly& p) const {
    if (deg + der.shift < 0) return {};
    return component(deg + der.shift).reduce(apply_words(der, deg, p));
}

bool DerivationLab::preserves_relations(const HomDerivation& der) const {
    for (int j = 0; j < n_; ++j) {
        const WordPoly r = ym_relation_word(n_, j);
        if (!apply(der, 3, r).empty()) return false;
        for (int k = 0; k < n_; ++k) {
            WordPoly left, right;
            for (const auto& [code, c] : r) {
                const Word w = word_from_code(code, n_, 3);
                Word lw{k}, rw = w;
                lw.insert(lw.end(), w.begin(), w.end());
                rw.push_back(k);
                left[word_code(lw, n_)] += c;
                right[word_code(rw, n_)] += c;
            }
            if (!apply(der, 4, left).empty() || !apply(der, 4, right).empty()) return false;
        }
    }
    return true;
}

HomDerivation DerivationLab::bracket(const HomDerivation& a, const HomDerivation& b) const {
    HomDerivation r;
    r.name = "[" + a.name + "," + b.name + "]";
    r.shift = a.shift + b.shift;
    // generator images below degree zero vanish
    if (1 + r.shift < 0) {
        r.images.assign(n_, {});
        return r;
    }
    for (int k = 0; k < n_; ++k) {
        const SparseVector ab = apply(a, 1 + b.shift, to_words(1 + b.shift, b.images[k]));
        const SparseVector ba = apply(b, 1 + a.shift, to_words(1 + a.shift, a.images[k]));
        r.images.push_back(axpy(ab, Scalar(-1), ba));
    }
    return r;
}

HomDerivation DerivationLab::combination(const std::vector<HomDerivation>& basis, const std::vector<Scalar>& c) const {
    HomDerivation r;
    r.images.assign(n_, {});
    bool first = true;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (c[k] == 0) continue;
        if (first) r.shift = basis[k].shift;
        if (!first && basis[k].shift != r.shift) throw std::invalid_argument("combination of mixed shifts");
        first = false;
        for (int i = 0; i < n_; ++i) r.images[i] = axpy(r.images[i], c[k], basis[k].images[i]);
    }
    return r;
}

namespace {
// stacks the generator images into one vector
SparseVector flatten(const HomDerivation& d, int dim) {
    SparseVector v;
    for (std::size_t i = 0; i < d.images.size(); ++i)
        for (const auto& [k, c] : d.images[i]) v.emplace_back(static_cast<int>(i) * dim + k, c);
    return v;
}
}  // namespace

std::optional<std::vector<Scalar>> DerivationLab::express(const HomDerivation& d,
                                                          const std::vector<HomDerivation>& basis) const {
    const bool zero = std::all_of(d.images.begin(), d.images.end(), [](const SparseVector& v) { return v.empty(); });
    std::vector<int> use;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k].shift == d.shift) use.push_back(static_cast<int>(k));
    std::vector<Scalar> out(basis.size(), 0);
    if (use.empty()) {
        if (zero) return out;
        return std::nullopt;
    }
    const int dim = 1 + d.shift < 0 ? 0 : component(1 + d.shift).dim();
    std::vector<SparseVector> cols;
    for (int k : use) cols.push_back(flatten(basis[k], dim));
    const auto sol = solve_in_span(cols, flatten(d, dim));
    if (!sol) return std::nullopt;
    for (std::size_t t = 0; t < use.size(); ++t) out[use[t]] = (*sol)[t];
    return out;
}

HomDerivation DerivationLab::euler() const {
    HomDerivation d{"d_eu", 0, {}};
    for (int k = 0; k < n_; ++k) d.images.push_back(component(1).reduce({{word_code({k}, n_), Scalar(1)}}));
    return d;
}

HomDerivation DerivationLab::translation(int i) const {
    HomDerivation d{"d_" + std::to_string(i + 1), -1, {}};
    for (int k = 0; k < n_; ++k)
        d.images.push_back(k == i ? component(0).reduce({{0, Scalar(1)}}) : SparseVector{});
    return d;
}

HomDerivation DerivationLab::rotation(int i, int j) const {
    HomDerivation d{"d_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}", 0, {}};
    for (int k = 0; k < n_; ++k) {
        WordPoly p;
        if (k == j) p[word_code({i}, n_)] += 2;
        if (k == i) p[word_code({j}, n_)] -= 2;
        for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
        d.images.push_back(component(1).reduce(p));
    }
    return d;
}

std::vector<HomDerivation> DerivationLab::standard_derivations() const {
    std::vector<HomDerivation> out{euler()};
    for (int i = 0; i < n_; ++i) out.push_back(translation(i));
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) out.push_back(rotation(i, j));
    return out;
}

namespace {

struct StdIndex {
    int n;
    int size() const { return 1 + n + n * (n - 1) / 2; }
    int trans(int i) const { return 1 + i; }
    int rot(int i, int j) const {
        int r = 1 + n;
        for (int a = 0; a < i; ++a) r += n - 1 - a;
        return r + (j - i - 1);
    }
    // kind 0: euler, 1: translation, 2: rotation
    int kind(int a) const { return a == 0 ? 0 : a <= n ? 1 : 2; }
    std::pair<int, int> pair_of(int a) const {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rot(i, j) == a) return {i, j};
        throw std::out_of_range("not a rotation index");
    }
};

// adds c * d_{i,j}, with d_{j,i} = -d_{i,j} and d_{i,i} = 0
void add_rot(std::vector<Scalar>& v, const StdIndex& s, int i, int j, const Scalar& c) {
    if (i == j || c == 0) return;
    if (i < j)
        v[s.rot(i, j)] += c;
    else
        v[s.rot(j, i)] -= c;
}

}  // namespace

std::vector<Scalar> expected_standard_bracket(int n, int a, int b) {
    const StdIndex s{n};
    std::vector<Scalar> v(s.size(), 0);
    const int ka = s.kind(a), kb = s.kind(b);
    if (ka == 0 && kb == 1) v[b] = -1;
    if (ka == 1 && kb == 0) v[a] = 1;
    auto rot_trans = [&](int r, int t, int sign) {
        const auto [i, j] = s.pair_of(r);
        const int k = t - 1;
        if (j == k) v[s.trans(i)] += 2 * sign;
        if (i == k) v[s.trans(j)] -= 2 * sign;
    };
    if (ka == 2 && kb == 1) rot_trans(a, b, 1);
    if (ka == 1 && kb == 2) rot_trans(b, a, -1);
    if (ka == 2 && kb == 2) {
        const auto [i, j] = s.pair_of(a);
        const auto [k, l] = s.pair_of(b);
        add_rot(v, s, i, l, j == k ? 2 : 0);
        add_rot(v, s, j, l, i == k ? -2 : 0);
        add_rot(v, s, i, k, j == l ? -2 : 0);
        add_rot(v, s, j, k, i == l ? 2 : 0);
    }
    return v;
}

namespace {
std::string vec_text(const std::vector<Scalar>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + to_string(v[k]);
    return s;
}
}  // namespace

HH1Structure verify_hh1_structure(int n, int max_degree, const EngineOptions& opt) {
    if (n < 3) throw std::invalid_argument("verify_hh1_structure needs n >= 3");
    if (max_degree < 0) max_degree = n == 3 ? 8 : 6;
    if (max_degree < 4) throw std::invalid_argument("verify_hh1_structure needs max_degree >= 4");
    HH1Structure out;
    CheckReport& r = out.report;
    r.id = "hh1-structure n=" + std::to_string(n);
    r.claim = "HH^1(YM(n)) = V(n) x| (so(n) x k), spanned by d_eu, d_i, d_{i,j}";
    const DerivationLab lab(n);
    const auto basis = lab.standard_derivations();
    const int N = static_cast<int>(basis.size());
    for (const auto& d : basis) out.names.push_back(d.name);
    r.add("number of standard derivations", N, 1 + n + n * (n - 1) / 2);

    bool all_preserve = true;
    for (const auto& d : basis) all_preserve = all_preserve && lab.preserves_relations(d);
    r.add("each standard derivation kills the relations", all_preserve ? "yes" : "no", "yes", all_preserve);

    std::vector<std::vector<HomDerivation>> br(N, std::vector<HomDerivation>(N));
    bool table_ok = true, anti_ok = true;
    int mismatches = 0;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            br[a][b] = lab.bracket(basis[a], basis[b]);
            if (b < a) {
                anti_ok = anti_ok && lab.combination({br[a][b], br[b][a]}, {Scalar(1), Scalar(1)}).images ==
                                         std::vector<SparseVector>(n);
                continue;
            }
            BracketEntry e{a, b, {}, expected_standard_bracket(n, a, b)};
            const auto c = lab.express(br[a][b], basis);
            if (c) e.computed = *c;
            const bool ok = c && *c == e.expected && lab.preserves_relations(br[a][b]);
            if (!ok) {
                ++mismatches;
                r.add("[" + basis[a].name + "," + basis[b].name + "]", c ? vec_text(*c) : "outside span",
                      vec_text(e.expected), false);
            }
            table_ok = table_ok && ok;
            out.brackets.push_back(std::move(e));
        }
    r.add("bracket table entries matching (pairs a <= b)", static_cast<long>(out.brackets.size()) - mismatches,
          static_cast<long>(out.brackets.size()));
    r.add("antisymmetry", anti_ok ? "yes" : "no", "yes", anti_ok);

    bool jacobi = true;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            for (int c = b + 1; c < N; ++c) {
                const HomDerivation s = lab.combination(
                    {lab.bracket(basis[a], br[b][c]), lab.bracket(basis[b], br[c][a]), lab.bracket(basis[c], br[a][b])},
                    {Scalar(1), Scalar(1), Scalar(1)});
                for (const auto& v : s.images) jacobi = jacobi && v.empty();
            }
    r.add("Jacobi on all triples", jacobi ? "yes" : "no", "yes", jacobi);

    // inner derivations ad(y) have shift |y| >= 1, so in shifts <= 0 the span is the outer span
    const YMPresentation p = ym_presentation(n, max_degree);
    const HochschildResult h = hochschild_table(p, max_degree, opt);
    std::vector<int> span, hh1;
    long total_span = 0, total_hh = 0;
    for (int e = h.cohomology.lo; e <= std::min(0, h.cohomology.hi); ++e) {
        std::vector<SparseVector> vs;
        const int dim = 1 + e < 0 ? 0 : lab.component(1 + e).dim();
        for (const auto& d : basis)
            if (d.shift == e) {
                SparseVector v;
                for (int i = 0; i < n; ++i)
                    for (const auto& [k, c] : d.images[i]) v.emplace_back(i * dim + k, c);
                vs.push_back(v);
            }
        span.push_back(rank_of_vectors(vs));
        hh1.push_back(h.cohomology.dim(1, e));
        total_span += span.back();
        total_hh += hh1.back();
    }
    r.add("span of standard derivations vs dim HH^1, degrees " + std::to_string(h.cohomology.lo) + "..0", join(span),
          join(hh1), span == hh1);
    std::vector<int> positive;
    for (int e = 1; e <= h.cohomology.hi; ++e) positive.push_back(h.cohomology.dim(1, e));
    r.add("dim HH^1 in degrees 1.." + std::to_string(h.cohomology.hi), join(positive),
          join(std::vector<int>(positive.size(), 0)), positive == std::vector<int>(positive.size(), 0));
    r.add("total dim HH^1", total_hh, 1 + n + n * (n - 1) / 2);
    r.add("total span of standard derivations", total_span, 1 + n + n * (n - 1) / 2);
    r.add("HH^1 at degree -1 (= HH_2 at degree 3)", h.cohomology.dim(1, -1), n);
    r.add("HH^1 at degree 0 (= HH_2 at degree 4)", h.cohomology.dim(1, 0), 1 + n * (n - 1) / 2);
    return out;
}

}  // namespace ymh
