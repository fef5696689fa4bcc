#include "ymh/complex.hpp"
#include "ymh/derivation.hpp"
#include "ymh/lie.hpp"
#include "ymh/module.hpp"
#include "ymh/parallel.hpp"
#include "ymh/serialize.hpp"
#include "ymh/series.hpp"
#include "ymh/suites.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

using namespace ymh;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void check_format(const std::string& f) {
    if (f != "json" && f != "tsv") throw UsageError("format must be json or tsv");
}

// ---------------------------------------------------------------- series

struct SeriesArgs {
    int n = 3;
    std::string which = "ym";
    int order = 10;
    int i = 0;
    bool cyclic = false;
    std::string format = "tsv";
};

int cmd_series(const SeriesArgs& a) {
    check_format(a.format);
    if (a.order < 0) throw UsageError("order must be nonnegative");
    TruncatedSeries s(a.order);
    if (a.which == "ym") {
        s = ym_hilbert(a.n, a.order);
    } else if (a.which == "w") {
        s = w_hilbert(a.n, a.order);
    } else if (a.which == "chi") {
        s = chi_hc(a.n, a.order);
    } else if (a.which == "hh" || a.which == "hc") {
        if (a.n < 3) throw UsageError("--which hh/hc needs n >= 3; use --which ym2 for n = 2");
        if (a.i < 0) throw UsageError("--i must be nonnegative");
        s = a.which == "hh" ? hh_series(a.n, a.i, a.order) : hc_series(a.n, a.i, a.order);
    } else if (a.which == "ym2") {
        if (a.i < 0) throw UsageError("--i must be nonnegative");
        s = a.cyclic ? ym2_hc_series(a.i, a.order) : ym2_hh_series(a.i, a.order);
    } else {
        throw UsageError("unknown series '" + a.which + "'");
    }
    if (a.format == "json") {
        std::vector<std::string> cs;
        for (int k = 0; k <= s.order(); ++k) cs.push_back(to_string(s[k]));
        ordered_json j{{"schema_version", kSchemaVersion}, {"kind", "series"}, {"which", a.which}};
        if (a.which != "ym2") j["n"] = a.n;
        if (a.which == "hh" || a.which == "hc" || a.which == "ym2") j["i"] = a.i;
        if (a.which == "ym2") j["cyclic"] = a.cyclic;
        j["order"] = a.order;
        j["text"] = s.to_string();
        j["coefficients"] = cs;
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << s.to_string() << "\n" << s.coeff_list() << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ dims

struct DimsArgs {
    std::string what = "ym";
    int n = 3;
    int max_degree = 6;
    std::string format = "tsv";
};

int cmd_dims(const DimsArgs& a) {
    check_format(a.format);
    if (a.n < 2 || a.max_degree < 1) throw UsageError("need n >= 2 and max-degree >= 1");
    std::vector<long> dims;
    int lo = 1;
    if (a.what == "ym" || a.what == "ideal") {
        const YMBuilder b(a.n, a.max_degree);
        for (int d = 1; d <= a.max_degree; ++d)
            dims.push_back(a.what == "ym" ? b.presentation().dim(d) : b.ideal_dim(d));
    } else if (a.what == "free") {
        for (int d = 1; d <= a.max_degree; ++d) dims.push_back(witt_dimension(a.n, d));
    } else if (a.what == "assoc") {
        lo = 0;
        for (int d = 0; d <= a.max_degree; ++d) dims.push_back(assoc_dimension(a.n, d));
    } else if (a.what == "pbw") {
        lo = 0;
        const YMPresentation p = ym_presentation(a.n, a.max_degree);
        for (int d = 0; d <= a.max_degree; ++d) dims.push_back(static_cast<long>(pbw_basis(p, d).size()));
    } else if (a.what == "w") {
        lo = 0;
        const GradedModule w = w_module(a.n, a.max_degree);
        for (int d = 0; d <= a.max_degree; ++d) dims.push_back(w.dim(d));
    } else {
        throw UsageError("unknown dims target '" + a.what + "'");
    }
    if (a.format == "json") {
        ordered_json j{{"schema_version", kSchemaVersion}, {"kind", "dims"}, {"what", a.what}, {"n", a.n},
                       {"degrees", {lo, a.max_degree}}, {"dims", dims}};
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << join(dims) << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- homology

struct HomologyArgs {
    std::string complex = "koszul";
    std::string coeff = "trivial";
    int n = 3;
    int max_degree = 6;
    int min_degree = 0;
    int p = -1;
    int length = -1;
    int workers = 1;
    bool paranoid = false;
    std::string format = "tsv";
    std::string cache_dir;
};

GradedModule coefficient_module(const HomologyArgs& a, bool& is_ym) {
    const int D = a.max_degree;
    is_ym = false;
    if (a.coeff == "trivial") return trivial_module(a.n, D);
    if (a.coeff == "sv") return sv_regular_module(a.n, D);
    if (a.coeff == "w") return w_module(a.n, D);
    if (a.coeff.rfind("w-tensor:", 0) == 0) {
        int i = 0;
        try {
            i = std::stoi(a.coeff.substr(9));
        } catch (const std::exception&) {
            throw UsageError("bad tensor power in '" + a.coeff + "'");
        }
        if (i < 1) throw UsageError("tensor power must be at least 1");
        return tensor_power(w_module(a.n, std::max(2, D - 2 * (i - 1))), i);
    }
    if (a.coeff == "sym-adjoint" || a.coeff == "s-tym") {
        is_ym = true;
        const YMPresentation p = obtain_presentation(a.n, D, a.cache_dir);
        return a.coeff == "sym-adjoint" ? sym_adjoint_module(p, D) : s_tym_adjoint_module(p, D, a.length);
    }
    throw UsageError("unknown coefficient module '" + a.coeff + "'");
}

int cmd_homology(const HomologyArgs& a) {
    check_format(a.format);
    if (a.complex != "koszul" && a.complex != "ce") throw UsageError("complex must be koszul or ce");
    if (a.n < 2 || a.max_degree < 1) throw UsageError("need n >= 2 and max-degree >= 1");
    if (a.min_degree > a.max_degree) throw UsageError("min-degree above max-degree");
    bool is_ym = false;
    const GradedModule y = coefficient_module(a, is_ym);
    if (a.complex == "ce" && is_ym) throw UsageError("the CE complex of V needs an S(V)-module coefficient");
    EngineOptions opt;
    opt.workers = a.workers;
    opt.paranoid = a.paranoid;
    const ComplexKind kind = a.complex == "koszul" ? ComplexKind::Koszul : ComplexKind::CE;
    const int length = kind == ComplexKind::Koszul ? 3 : a.n;
    if (a.p >= 0) {
        if (a.p > length) throw UsageError("--p beyond the length of the complex");
        opt.homological = {a.p};
    }
    const int hi = std::min(a.max_degree, y.max_degree);
    HomologyTable t = homology_table(kind, y, a.min_degree, hi, opt);
    if (a.p >= 0) {
        std::vector<HomologyCell> keep;
        for (const auto& c : t.cells)
            if (c.p == a.p) keep.push_back(c);
        t.cells = keep;
    }
    if (a.format == "json")
        std::cout << table_to_json(t).dump(1) << "\n";
    else
        std::cout << t.to_tsv();
    return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(RunConfig cfg, const std::string& format, const std::string& out) {
    check_format(format);
    std::vector<std::string> split;
    for (const auto& s : cfg.suites) {
        std::size_t start = 0;
        while (start <= s.size()) {
            const std::size_t e = s.find(',', start);
            const std::string part = s.substr(start, e == std::string::npos ? std::string::npos : e - start);
            if (!part.empty()) split.push_back(part);
            if (e == std::string::npos) break;
            start = e + 1;
        }
    }
    if (split.empty()) split.push_back("all");
    cfg.suites = split;
    try {
        resolve_suites(cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const VerificationReport rep = run_verification(cfg);
    const std::string text = format == "json" ? verification_to_json(rep).dump(1) + "\n" : verification_to_tsv(rep);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!(f << text)) throw std::runtime_error("cannot write " + out);
        std::cerr << (rep.pass() ? "pass" : "fail") << "\n";
    }
    return rep.pass() ? 0 : 1;
}

// ----------------------------------------------------------- derivations

int cmd_derivations(int n, int D, const std::string& format, int workers) {
    check_format(format);
    if (n < 3) throw UsageError("derivations needs n >= 3");
    EngineOptions opt;
    opt.workers = workers;
    const HH1Structure h = verify_hh1_structure(n, D, opt);
    if (format == "json") {
        ordered_json j = bracket_table_to_json(n, h);
        j["check"] = report_to_json(h.report);
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << "a\tb\tcoefficients\texpected\tstatus\n";
        for (const auto& e : h.brackets) {
            std::vector<std::string> c, x;
            for (const auto& v : e.computed) c.push_back(to_string(v));
            for (const auto& v : e.expected) x.push_back(to_string(v));
            auto text = [](const std::vector<std::string>& v) {
                std::string s;
                for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k];
                return s;
            };
            std::cout << h.names[e.a] << '\t' << h.names[e.b] << '\t' << text(c) << '\t' << text(x) << '\t'
                      << (e.computed == e.expected ? "pass" : "fail") << '\n';
        }
        std::cout << "# overall\t" << (h.report.pass ? "pass" : "fail") << '\n';
    }
    return h.report.pass ? 0 : 1;
}

// ----------------------------------------------------------------- cache

int cmd_cache_save(int n, int D, const std::string& dir, const std::string& file) {
    const YMPresentation p = ym_presentation(n, D);
    const std::string path = file.empty() ? cache_file(dir, n, D) : file;
    if (file.empty()) std::filesystem::create_directories(dir);
    save_json(path, presentation_to_json(p));
    std::cout << path << "\t" << p.fingerprint() << "\n";
    return 0;
}

int cmd_cache_inspect(const std::string& path) {
    const YMPresentation p = presentation_from_json(load_json(path));
    std::cout << "n\t" << p.n << "\nmax_degree\t" << p.max_degree << "\ndims\t" << join(p.dims) << "\nbrackets\t"
              << p.brackets.size() / 2 << "\nfingerprint\t" << p.fingerprint() << "\nvalid\tyes\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Yang-Mills algebra homology toolkit"};
    app.require_subcommand(1);

    SeriesArgs sa;
    auto* series = app.add_subcommand("series", "print closed-form Hilbert series");
    series->add_option("--n", sa.n, "number of generators");
    series->add_option("--which", sa.which, "ym | w | chi | hh | hc | ym2");
    series->add_option("--order,--N", sa.order, "truncation order");
    series->add_option("--i", sa.i, "homological degree for hh / hc / ym2");
    series->add_flag("--cyclic", sa.cyclic, "with ym2: cyclic instead of Hochschild homology");
    series->add_option("--format", sa.format, "tsv | json");

    DimsArgs da;
    auto* dims = app.add_subcommand("dims", "graded dimensions");
    dims->add_option("what", da.what, "ym | free | ideal | assoc | pbw | w")->required();
    dims->add_option("--n", da.n);
    dims->add_option("--max-degree,-D", da.max_degree);
    dims->add_option("--format", da.format);

    HomologyArgs ha;
    ha.workers = default_workers();
    ha.cache_dir = "";
    auto* homology = app.add_subcommand("homology", "homology table of a complex with coefficients");
    homology->add_option("complex", ha.complex, "koszul | ce")->required();
    homology->add_option("--coeff", ha.coeff, "trivial | sv | sym-adjoint | s-tym | w | w-tensor:i");
    homology->add_option("--n", ha.n);
    homology->add_option("--max-degree,-D", ha.max_degree);
    homology->add_option("--min-degree", ha.min_degree);
    homology->add_option("--p", ha.p, "restrict to one homological degree");
    homology->add_option("--length", ha.length, "with s-tym: symmetric power (default: all)");
    homology->add_option("--workers", ha.workers);
    homology->add_flag("--paranoid", ha.paranoid, "rank-nullity cross-check on every matrix");
    homology->add_option("--format", ha.format);
    homology->add_option("--cache-dir", ha.cache_dir, "presentation cache directory");

    RunConfig cfg;
    cfg.workers = default_workers();
    cfg.suites.clear();
    std::string vformat = "json", vout;
    bool use_cache = false;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--n", cfg.n);
    verify->add_option("--max-degree,-D", cfg.max_degree);
    verify->add_option("--order,--N", cfg.order, "series truncation order");
    verify->add_option("--suite", cfg.suites, "suite name(s), comma separated or repeated; 'all'");
    verify->add_option("--workers", cfg.workers);
    verify->add_option("--format", vformat, "json | tsv");
    verify->add_option("--out", vout, "write the report to a file");
    verify->add_flag("--timings", cfg.timings, "include elapsed times (not byte-stable)");
    verify->add_flag("--use-cache", use_cache, "load / store presentations in the cache directory");
    verify->add_option("--cache-dir", cfg.cache_dir, "cache directory (default: $YMH_CACHE_DIR or .ymh-cache)");

    int dn = 3, dD = -1, dworkers = default_workers();
    std::string dformat = "json";
    auto* derivs = app.add_subcommand("derivations", "HH^1 bracket table of the standard derivations");
    derivs->add_option("--n", dn);
    derivs->add_option("--max-degree,-D", dD, "degree bound for the HH^1 comparison");
    derivs->add_option("--workers", dworkers);
    derivs->add_option("--format", dformat, "json | tsv");

    int cn = 3, cD = 6;
    std::string cdir, cfile;
    auto* cache = app.add_subcommand("cache", "presentation cache");
    cache->require_subcommand(1);
    auto* csave = cache->add_subcommand("save", "build and store a presentation");
    csave->add_option("--n", cn);
    csave->add_option("--max-degree,-D", cD);
    csave->add_option("--dir", cdir);
    csave->add_option("--file", cfile);
    auto* cload = cache->add_subcommand("load", "load and validate a cached presentation");
    cload->add_option("--n", cn);
    cload->add_option("--max-degree,-D", cD);
    cload->add_option("--dir", cdir);
    cload->add_option("--file", cfile);
    auto* cinspect = cache->add_subcommand("inspect", "summarize a presentation file");
    cinspect->add_option("file", cfile)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (series->parsed()) return cmd_series(sa);
        if (dims->parsed()) return cmd_dims(da);
        if (homology->parsed()) return cmd_homology(ha);
        if (verify->parsed()) {
            if (use_cache && cfg.cache_dir.empty()) cfg.cache_dir = default_cache_dir();
            if (!use_cache && !cfg.cache_dir.empty()) use_cache = true;
            return cmd_verify(cfg, vformat, vout);
        }
        if (derivs->parsed()) return cmd_derivations(dn, dD, dformat, dworkers);
        if (cdir.empty()) cdir = default_cache_dir();
        if (csave->parsed()) return cmd_cache_save(cn, cD, cdir, cfile);
        if (cload->parsed()) return cmd_cache_inspect(cfile.empty() ? cache_file(cdir, cn, cD) : cfile);
        if (cinspect->parsed()) return cmd_cache_inspect(cfile);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
