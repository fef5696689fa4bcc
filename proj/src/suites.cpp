#include "ymh/suites.hpp"

#include "ymh/derivation.hpp"
#include "ymh/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace ymh {

bool SuiteRecord::pass() const {
    return skipped || std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; });
}

bool VerificationReport::pass() const {
    return std::all_of(records.begin(), records.end(), [](const SuiteRecord& r) { return r.pass(); });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"series-identities", "lie-dims",       "w-module",     "teo-exacta",
                                                "hochschild",        "ym2",            "external-product",
                                                "tym-homology",      "hh1-structure",  "duality",      "h3-hn"};
    return names;
}

namespace {

bool needs_n3(const std::string& s) {
    return s == "teo-exacta" || s == "external-product" || s == "tym-homology" || s == "hh1-structure" ||
           s == "duality" || s == "h3-hn";
}

}  // namespace

std::vector<std::string> resolve_suites(const RunConfig& cfg) {
    if (cfg.n < 2) throw std::invalid_argument("n must be at least 2");
    if (cfg.max_degree < 1) throw std::invalid_argument("max-degree must be at least 1");
    if (cfg.order < cfg.max_degree) throw std::invalid_argument("series order must be at least max-degree");
    std::vector<std::string> out;
    for (const auto& s : cfg.suites) {
        if (s == "all") {
            for (const auto& t : suite_names())
                if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
            continue;
        }
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw std::invalid_argument("unknown suite '" + s + "'");
        if (needs_n3(s) && cfg.n < 3) throw std::invalid_argument("suite '" + s + "' needs n >= 3");
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    return out;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("YMH_CACHE_DIR"); env && *env) return env;
    return ".ymh-cache";
}

std::string cache_file(const std::string& dir, int n, int max_degree) {
    return (std::filesystem::path(dir) / ("ym-n" + std::to_string(n) + "-d" + std::to_string(max_degree) + ".json"))
        .string();
}

YMPresentation obtain_presentation(int n, int max_degree, const std::string& cache_dir) {
    if (cache_dir.empty()) return ym_presentation(n, max_degree);
    const std::string path = cache_file(cache_dir, n, max_degree);
    if (std::filesystem::exists(path)) return presentation_from_json(load_json(path));
    YMPresentation p = ym_presentation(n, max_degree);
    std::filesystem::create_directories(cache_dir);
    save_json(path, presentation_to_json(p));
    return p;
}

VerificationReport run_verification(const RunConfig& cfg) {
    VerificationReport rep;
    rep.config = cfg;
    const auto suites = resolve_suites(cfg);
    const int n = cfg.n, D = cfg.max_degree;
    EngineOptions opt;
    opt.workers = cfg.workers;
    std::optional<YMPresentation> pres;
    auto presentation = [&]() -> const YMPresentation& {
        if (!pres) pres = obtain_presentation(n, D, cfg.cache_dir);
        return *pres;
    };

    for (const auto& s : suites) {
        SuiteRecord rec;
        rec.suite = s;
        const auto t0 = std::chrono::steady_clock::now();
        if (needs_n3(s) && n < 3) {
            rec.skipped = true;
            rec.skip_reason = "needs n >= 3";
        } else if (s == "series-identities") {
            rec.checks.push_back(series_identities_check(n, cfg.order));
        } else if (s == "lie-dims") {
            rec.checks.push_back(lie_dims_check(n, D, &presentation()));
        } else if (s == "w-module") {
            rec.checks.push_back(w_module_check(n, D));
        } else if (s == "teo-exacta") {
            for (int i = 1; i <= 3; ++i) rec.checks.push_back(exacta_check(n, i, D, opt));
        } else if (s == "hochschild") {
            rec.checks.push_back(hochschild_check(presentation(), D, opt));
        } else if (s == "ym2") {
            const YMPresentation p2 = n == 2 ? presentation() : obtain_presentation(2, D, cfg.cache_dir);
            rec.checks.push_back(lie_dims_check(2, D, &p2));
            rec.checks.push_back(hochschild_check(p2, D, opt));
            rec.checks.push_back(series_identities_check(2, std::max(cfg.order, D)));
        } else if (s == "external-product") {
            rec.checks.push_back(minimal_resolution_check(n, D));
            rec.checks.push_back(external_product_check(n, 1));
        } else if (s == "tym-homology") {
            rec.checks.push_back(tym_homology_check(presentation(), D, opt));
        } else if (s == "hh1-structure") {
            rec.checks.push_back(verify_hh1_structure(n, std::max(D, 4), opt).report);
        } else if (s == "duality") {
            rec.checks.push_back(center_check(n, D, opt));
        } else if (s == "h3-hn") {
            rec.checks.push_back(h3_equals_hn_check(trivial_module(n, D), D, opt));
            rec.checks.push_back(h3_equals_hn_check(sv_regular_module(n, D), D, opt));
            rec.checks.push_back(h3_equals_hn_check(w_module(n, D), D, opt));
        }
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

nlohmann::ordered_json verification_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "verification-report";
    j["config"] = {{"n", r.config.n}, {"max_degree", r.config.max_degree}, {"order", r.config.order},
                   {"suites", r.config.suites}};
    j["status"] = r.pass() ? "pass" : "fail";
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const auto& rec : r.records) {
        nlohmann::ordered_json s;
        s["suite"] = rec.suite;
        s["status"] = rec.skipped ? "skipped" : rec.pass() ? "pass" : "fail";
        if (rec.skipped) s["reason"] = rec.skip_reason;
        if (r.config.timings) s["elapsed_seconds"] = rec.seconds;
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : rec.checks) checks.push_back(report_to_json(c));
        s["checks"] = checks;
        suites.push_back(s);
    }
    j["suites"] = suites;
    return j;
}

std::string verification_to_tsv(const VerificationReport& r) {
    std::ostringstream os;
    os << "suite\tcheck\tkey\tcomputed\texpected\tstatus\n";
    for (const auto& rec : r.records) {
        if (rec.skipped) {
            os << rec.suite << "\t-\t-\t-\t-\tskipped (" << rec.skip_reason << ")\n";
            continue;
        }
        for (const auto& c : rec.checks) {
            for (const auto& row : c.rows)
                os << rec.suite << '\t' << c.id << '\t' << row.key << '\t' << row.computed << '\t' << row.expected
                   << '\t' << (row.pass ? "pass" : "fail") << '\n';
            for (const auto& note : c.notes) os << "# " << c.id << ": " << note << '\n';
        }
        if (r.config.timings) os << "# " << rec.suite << " elapsed " << rec.seconds << " s\n";
    }
    os << "# overall\t" << (r.pass() ? "pass" : "fail") << '\n';
    return os.str();
}

}  // namespace ymh
