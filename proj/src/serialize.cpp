#include "ymh/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace ymh {

using nlohmann::ordered_json;

namespace {

ordered_json vector_to_json(const SparseVector& v) {
    ordered_json a = ordered_json::array();
    for (const auto& [i, x] : v) a.push_back(ordered_json::array({i, to_string(x)}));
    return a;
}

SparseVector vector_from_json(const ordered_json& a) {
    SparseVector v;
    for (const auto& e : a) v.emplace_back(e.at(0).get<int>(), parse_scalar(e.at(1).get<std::string>()));
    const SparseVector raw = v;
    canonicalize(v);
    if (v != raw) throw std::runtime_error("sparse vector is not in canonical form");
    return v;
}

void expect_header(const ordered_json& j, const std::string& kind) {
    if (!j.is_object()) throw std::runtime_error("expected a JSON object");
    if (j.value("schema_version", -1) != kSchemaVersion)
        throw std::runtime_error("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
    if (j.value("kind", std::string()) != kind) throw std::runtime_error("expected kind '" + kind + "'");
}

}  // namespace

ordered_json presentation_to_json(const YMPresentation& p) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "ym-presentation";
    j["n"] = p.n;
    j["max_degree"] = p.max_degree;
    j["dims"] = p.dims;
    ordered_json basis = ordered_json::array();
    for (const auto& ls : p.lifts) {
        ordered_json deg = ordered_json::array();
        for (const auto& h : ls)
            deg.push_back({{"word", word_text(h.word)}, {"letters", h.word}, {"split", h.split},
                           {"bracket", h.bracket_text()}});
        basis.push_back(deg);
    }
    j["basis"] = basis;
    ordered_json br = ordered_json::array();
    for (const auto& [k, v] : p.brackets)
        if (k.first < k.second) br.push_back({{"a", k.first}, {"b", k.second}, {"value", vector_to_json(v)}});
    j["brackets"] = br;
    j["fingerprint"] = p.fingerprint();
    return j;
}

YMPresentation presentation_from_json(const ordered_json& j) {
    expect_header(j, "ym-presentation");
    YMPresentation p;
    try {
        p.n = j.at("n").get<int>();
        p.max_degree = j.at("max_degree").get<int>();
        p.dims = j.at("dims").get<std::vector<int>>();
        if (p.n < 2 || p.max_degree < 1 || static_cast<int>(p.dims.size()) != p.max_degree + 1)
            throw std::runtime_error("inconsistent n / max_degree / dims");
        const auto& basis = j.at("basis");
        if (static_cast<int>(basis.size()) != p.max_degree + 1) throw std::runtime_error("basis length mismatch");
        p.lifts.resize(p.max_degree + 1);
        for (int d = 0; d <= p.max_degree; ++d) {
            if (static_cast<int>(basis[d].size()) != p.dims[d]) throw std::runtime_error("basis size mismatch");
            const auto hall = d >= 1 ? hall_basis(p.n, d) : std::vector<HallMonomial>{};
            for (const auto& e : basis[d]) {
                HallMonomial h{e.at("letters").get<Word>(), e.at("split").get<int>()};
                if (h.degree() != d) throw std::runtime_error("basis word of the wrong degree");
                bool found = false;
                for (const auto& s : hall) found = found || (s.word == h.word && s.split == h.split);
                if (!found) throw std::runtime_error("basis element is not a Hall monomial: " + word_text(h.word));
                p.lifts[d].push_back(std::move(h));
            }
        }
        p.offsets.assign(p.max_degree + 2, 0);
        for (int d = 0; d <= p.max_degree; ++d) p.offsets[d + 1] = p.offsets[d] + p.dims[d];
        for (const auto& e : j.at("brackets")) {
            const int a = e.at("a").get<int>(), b = e.at("b").get<int>();
            if (a >= b || a < 0 || b >= p.total_dim()) throw std::runtime_error("bad bracket indices");
            SparseVector v = vector_from_json(e.at("value"));
            p.brackets[{b, a}] = scaled(v, Scalar(-1));
            p.brackets[{a, b}] = std::move(v);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed presentation: ") + e.what());
    }
    const std::string err = validate_presentation(p);
    if (!err.empty()) throw std::runtime_error("presentation fails invariants: " + err);
    if (j.contains("fingerprint") && j["fingerprint"].get<std::string>() != p.fingerprint())
        throw std::runtime_error("presentation fingerprint mismatch");
    return p;
}

ordered_json module_to_json(const GradedModule& y) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "graded-module";
    j["name"] = y.name;
    j["algebra"] = tag_name(y.tag);
    j["n"] = y.n;
    j["min_degree"] = y.min_degree;
    j["max_degree"] = y.max_degree;
    j["dims"] = y.dims;
    ordered_json acts = ordered_json::array();
    for (int m = y.min_degree; m < y.max_degree; ++m)
        for (int i = 0; i < y.n; ++i) {
            const SparseMatrix a = y.action(i, m);
            ordered_json cols = ordered_json::array();
            for (int c = 0; c < a.cols(); ++c) cols.push_back(vector_to_json(a.column(c)));
            acts.push_back({{"degree", m}, {"generator", i}, {"rows", a.rows()}, {"cols", a.cols()}, {"columns", cols}});
        }
    j["actions"] = acts;
    return j;
}

GradedModule module_from_json(const ordered_json& j) {
    expect_header(j, "graded-module");
    GradedModule y;
    try {
        y.name = j.at("name").get<std::string>();
        const std::string alg = j.at("algebra").get<std::string>();
        if (alg == tag_name(AlgebraTag::SV))
            y.tag = AlgebraTag::SV;
        else if (alg == tag_name(AlgebraTag::YM))
            y.tag = AlgebraTag::YM;
        else
            throw std::runtime_error("unknown algebra '" + alg + "'");
        y.n = j.at("n").get<int>();
        y.min_degree = j.at("min_degree").get<int>();
        y.max_degree = j.at("max_degree").get<int>();
        y.dims = j.at("dims").get<std::vector<int>>();
        const int span = y.max_degree - y.min_degree + 1;
        if (span < 1 || static_cast<int>(y.dims.size()) != span) throw std::runtime_error("dims length mismatch");
        y.labels.assign(span, {});
        y.actions.assign(span - 1, {});
        std::size_t k = 0;
        const auto& acts = j.at("actions");
        for (int m = y.min_degree; m < y.max_degree; ++m)
            for (int i = 0; i < y.n; ++i, ++k) {
                const auto& e = acts.at(k);
                if (e.at("degree").get<int>() != m || e.at("generator").get<int>() != i)
                    throw std::runtime_error("actions out of order");
                const int rows = e.at("rows").get<int>(), cols = e.at("cols").get<int>();
                if (rows != y.dims[m + 1 - y.min_degree] || cols != y.dims[m - y.min_degree])
                    throw std::runtime_error("action shape mismatch");
                std::vector<SparseVector> cs;
                for (const auto& c : e.at("columns")) cs.push_back(vector_from_json(c));
                if (static_cast<int>(cs.size()) != cols) throw std::runtime_error("action column count mismatch");
                y.actions[m - y.min_degree].push_back(SparseMatrix::from_columns(rows, cs));
            }
        if (k != acts.size()) throw std::runtime_error("extra action entries");
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed module: ") + e.what());
    }
    const std::string err = check_module_invariants(y);
    if (!err.empty()) throw std::runtime_error("module fails invariants: " + err);
    return y;
}

ordered_json table_to_json(const HomologyTable& t) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "homology-table";
    j["complex"] = t.kind;
    j["coefficient"] = t.coefficient;
    j["n"] = t.n;
    j["degrees"] = {t.lo, t.hi};
    j["length"] = t.length;
    ordered_json cells = ordered_json::array();
    for (const auto& c : t.cells) {
        ordered_json e{{"p", c.p}, {"degree", c.degree}};
        e["chain_dim"] = c.chain_dim < 0 ? ordered_json(nullptr) : ordered_json(c.chain_dim);
        e["dim"] = c.dim < 0 ? ordered_json(nullptr) : ordered_json(c.dim);
        e["expected"] = c.expected ? ordered_json(*c.expected) : ordered_json(nullptr);
        e["status"] = c.dim < 0 ? "not-computed" : !c.expected ? "computed" : c.ok() ? "pass" : "fail";
        if (!c.note.empty()) e["note"] = c.note;
        cells.push_back(e);
    }
    j["cells"] = cells;
    return j;
}

ordered_json report_to_json(const CheckReport& r) {
    ordered_json j;
    j["id"] = r.id;
    j["claim"] = r.claim;
    j["status"] = r.pass ? "pass" : "fail";
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"key", row.key}, {"computed", row.computed}, {"expected", row.expected},
                        {"status", row.pass ? "pass" : "fail"}});
    j["rows"] = rows;
    j["notes"] = r.notes;
    ordered_json tables = ordered_json::array();
    for (const auto& t : r.tables) tables.push_back(table_to_json(t));
    j["tables"] = tables;
    return j;
}

ordered_json bracket_table_to_json(int n, const HH1Structure& h) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "hh1-bracket-table";
    j["n"] = n;
    j["basis"] = h.names;
    ordered_json br = ordered_json::array();
    auto text = [](const std::vector<Scalar>& v) {
        std::vector<std::string> s;
        for (const auto& x : v) s.push_back(to_string(x));
        return s;
    };
    for (const auto& e : h.brackets)
        br.push_back({{"a", h.names[e.a]}, {"b", h.names[e.b]}, {"coefficients", text(e.computed)},
                      {"expected", text(e.expected)}, {"status", e.computed == e.expected ? "pass" : "fail"}});
    j["brackets"] = br;
    return j;
}

void save_json(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(1) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace ymh
