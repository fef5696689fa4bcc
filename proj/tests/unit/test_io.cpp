#include "ymh/serialize.hpp"
#include "ymh/suites.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace ymh;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
    auto d = std::filesystem::temp_directory_path() / ("ymh-unit-" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST(Serialize, PresentationRoundTrip) {
    const auto p = ym_presentation(3, 6);
    const auto j = presentation_to_json(p);
    const auto q = presentation_from_json(j);
    EXPECT_EQ(q.dims, p.dims);
    EXPECT_EQ(q.fingerprint(), p.fingerprint());
    EXPECT_EQ(q.brackets, p.brackets);
    EXPECT_EQ(presentation_to_json(q).dump(), j.dump());
}

TEST(Serialize, CorruptedPresentationIsRejected) {
    const auto j = presentation_to_json(ym_presentation(3, 5));

    auto bad_version = j;
    bad_version["schema_version"] = 99;
    EXPECT_THROW(presentation_from_json(bad_version), std::runtime_error);

    auto bad_kind = j;
    bad_kind["kind"] = "graded-module";
    EXPECT_THROW(presentation_from_json(bad_kind), std::runtime_error);

    auto bad_bracket = j;
    bad_bracket["brackets"][0]["value"] = nlohmann::ordered_json::array({nlohmann::ordered_json::array({0, "5"})});
    EXPECT_THROW(presentation_from_json(bad_bracket), std::runtime_error);

    auto bad_dims = j;
    bad_dims["dims"][3] = 4;
    EXPECT_THROW(presentation_from_json(bad_dims), std::runtime_error);

    auto bad_print = j;
    bad_print["fingerprint"] = "0";
    EXPECT_THROW(presentation_from_json(bad_print), std::runtime_error);

    auto missing = j;
    missing.erase("basis");
    EXPECT_THROW(presentation_from_json(missing), std::runtime_error);
}

TEST(Serialize, ModuleRoundTrip) {
    const auto w = w_module(3, 6);
    const auto j = module_to_json(w);
    const auto v = module_from_json(j);
    EXPECT_EQ(v.dims, w.dims);
    EXPECT_EQ(v.min_degree, w.min_degree);
    for (int m = w.min_degree; m < w.max_degree; ++m)
        for (int i = 0; i < 3; ++i) EXPECT_EQ(v.action(i, m), w.action(i, m));
    EXPECT_EQ(module_to_json(v).dump(), j.dump());
}

TEST(Serialize, CorruptedModuleIsRejected) {
    const auto j = module_to_json(sv_regular_module(2, 3));
    auto bad = j;
    // make x_1 act as zero on degree 0 only; x_1 x_2 = x_2 x_1 then fails
    bad["actions"][0]["columns"][0] = nlohmann::ordered_json::array();
    EXPECT_THROW(module_from_json(bad), std::runtime_error);
    auto noncanonical = j;
    noncanonical["actions"][0]["columns"][0] = nlohmann::ordered_json::array({nlohmann::ordered_json::array({0, "0"})});
    EXPECT_THROW(module_from_json(noncanonical), std::runtime_error);
}

TEST(Serialize, FileRoundTrip) {
    const auto dir = scratch_dir("file");
    const auto path = (dir / "t.json").string();
    const auto j = table_to_json(homology_table(ComplexKind::CE, w_module(3, 5), 0, 5));
    save_json(path, j);
    EXPECT_EQ(load_json(path).dump(), j.dump());
    EXPECT_THROW(load_json((dir / "missing.json").string()), std::runtime_error);
    std::filesystem::remove_all(dir);
}

TEST(Suites, ResolveExpandsAndValidates) {
    RunConfig cfg;
    EXPECT_EQ(resolve_suites(cfg), suite_names());
    cfg.suites = {"lie-dims", "lie-dims", "ym2"};
    EXPECT_EQ(resolve_suites(cfg), (std::vector<std::string>{"lie-dims", "ym2"}));
    cfg.suites = {"nonsense"};
    EXPECT_THROW(resolve_suites(cfg), std::invalid_argument);
    cfg.suites = {"teo-exacta"};
    cfg.n = 2;
    EXPECT_THROW(resolve_suites(cfg), std::invalid_argument);
    cfg.n = 3;
    cfg.order = 4;
    EXPECT_THROW(resolve_suites(cfg), std::invalid_argument);
}

TEST(Suites, SmallRunIsDeterministic) {
    RunConfig cfg;
    cfg.max_degree = 6;
    cfg.suites = {"series-identities", "lie-dims", "w-module", "hochschild"};
    const auto a = run_verification(cfg), b = run_verification(cfg);
    EXPECT_TRUE(a.pass());
    EXPECT_EQ(verification_to_json(a).dump(), verification_to_json(b).dump());
    EXPECT_EQ(verification_to_tsv(a), verification_to_tsv(b));
    EXPECT_FALSE(verification_to_json(a)["suites"][0].contains("elapsed_seconds"));
}

TEST(Suites, TwoGeneratorRunSkipsLargeSuites) {
    RunConfig cfg;
    cfg.n = 2;
    cfg.max_degree = 6;
    const auto r = run_verification(cfg);
    EXPECT_TRUE(r.pass());
    int skipped = 0;
    for (const auto& rec : r.records) skipped += rec.skipped;
    EXPECT_EQ(skipped, 6);
}

TEST(Suites, CacheIsReused) {
    const auto dir = scratch_dir("cache");
    const auto p = obtain_presentation(3, 5, dir.string());
    EXPECT_TRUE(std::filesystem::exists(cache_file(dir.string(), 3, 5)));
    const auto q = obtain_presentation(3, 5, dir.string());
    EXPECT_EQ(p.fingerprint(), q.fingerprint());
    std::filesystem::remove_all(dir);
}
