#include <gtest/gtest.h>

#include <fstream>

#include "relconv/corpus.hpp"
#include "relconv/error.hpp"
#include "relconv/family_gallery.hpp"
#include "relconv/fixtures.hpp"
#include "relconv/gallery.hpp"
#include "relconv/io.hpp"
#include "relconv/suite.hpp"

using namespace relconv;

namespace {

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / ("relconv_harness_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(Digest, Sha256KnownVectors) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Files, AtomicWriteAndMissingFile) {
    const auto path = scratch_dir() / "nested" / "out.json";
    write_file_atomic(path, "{\"a\": 1}\n");
    EXPECT_EQ(read_json_file(path)["a"], 1);
    write_file_atomic(path, "{\"a\": 2}\n");
    EXPECT_EQ(read_json_file(path)["a"], 2);
    for (const auto& entry : std::filesystem::directory_iterator(path.parent_path()))
        EXPECT_EQ(entry.path().filename(), "out.json");
    EXPECT_THROW(read_json_file(scratch_dir() / "absent.json"), InvalidInput);
    write_file_atomic(scratch_dir() / "bad.json", "{not json");
    EXPECT_THROW(read_json_file(scratch_dir() / "bad.json"), InvalidInput);
}

TEST(Json, ComplexRoundTrip) {
    for (const auto& c : {torus7(), grid_disk(3, 4), barycentric_subdivision(cycle_complex(3))}) {
        const auto back = complex_from_json(complex_to_json(c));
        EXPECT_EQ(back, c);
        EXPECT_EQ(back.labels(), c.labels());
    }
    EXPECT_EQ(complex_from_json(Json{{"gallery", "grid_disk"}, {"params", {3, 3}}}), grid_disk(3, 3));
    EXPECT_THROW(complex_from_json(Json{{"vertex_count", 2}, {"maximal_simplices", {{0, 5}}}}), InvalidInput);
    EXPECT_THROW(complex_from_json(Json{{"vertex_count", 2}, {"maximal_simplices", Json::array()}, {"extra", 1}}),
                 InvalidInput);
    EXPECT_THROW(complex_from_json(Json{{"gallery", "nope"}}), InvalidInput);
}

TEST(Json, FamilyRoundTrip) {
    const std::vector<std::pair<int, int>> arcs = {{0, 2}, {3, 5}};
    for (const auto& f : {star_family(3), intervals_family(4), arcs_family(6, arcs)}) {
        const auto back = family_from_json(family_to_json(f));
        ASSERT_EQ(back.size(), f.size());
        EXPECT_EQ(back.ambient(), f.ambient());
        EXPECT_EQ(back.labeled_points(), f.labeled_points());
        for (std::size_t i = 0; i < f.size(); ++i) {
            EXPECT_EQ(back.members()[i].name, f.members()[i].name);
            EXPECT_EQ(back.member(i).mask(), f.member(i).mask());
        }
    }
    Json bad = family_to_json(intervals_family(2));
    bad["members"][0]["maximal_simplices"] = {{0, 2}};
    EXPECT_THROW(family_from_json(bad), InvalidInput);
}

TEST(Json, ChainMapRoundTrip) {
    const auto map = k4_planar_drawing();
    const auto back = chain_map_from_json(chain_map_to_json(map));
    EXPECT_EQ(back.images(), map.images());
    Json j = chain_map_to_json(map);
    j["assignment"]["0,9"] = Json::array();
    EXPECT_THROW(chain_map_from_json(j), InvalidInput);
}

TEST(Json, ConstraintMapParsing) {
    const auto src = simplex_skeleton(1, 1);
    const auto phi = constraint_map_from_json(Json{{"0", {1}}, {"0,1", {1, 2}}}, src, 4);
    EXPECT_EQ(to_vertex_list(phi[2]), (std::vector<Vertex>{1, 2}));
    EXPECT_TRUE(phi[1].none());
    EXPECT_THROW(constraint_map_from_json(Json{{"0", {7}}}, src, 4), InvalidInput);
}

TEST(Json, OracleAndCertificate) {
    const auto o = oracle_from_json(Json{{"ground", 8}, {"k", 2}, {"colors", 2}, {"kind", "random"}, {"seed", 3}});
    const auto r = selection_search(o, 2, 3);
    ASSERT_TRUE(r.certificate);
    const auto back = certificate_from_json(certificate_to_json(*r.certificate));
    EXPECT_TRUE(validate_selection(back, o, 2, 3).ok);
    EXPECT_THROW(oracle_from_json(Json{{"ground", 8}, {"k", 2}, {"colors", 2}, {"kind", "magic"}}), InvalidInput);
    Json table = {{"ground", 3}, {"k", 2}, {"colors", 2}, {"kind", "table"},
                  {"table", {{{"subset", {0, 1}}, {"color", 1}}, {{"subset", {0, 2}}, {"color", 0}}}}};
    EXPECT_THROW(oracle_from_json(table), InvalidInput);  // {1,2} has no color
    table["table"].push_back({{"subset", {1, 2}}, {"color", 1}});
    EXPECT_EQ(oracle_from_json(table).color(Subset{0, 1, 2}, Subset{0, 2}), 0);
}

TEST(InvariantSpecs, ParsesOptionsAndRejectsUnknowns) {
    const auto specs = parse_invariant_specs("radon:cap=6,tverberg:k=3:cap=7,tc:inf,helly,tc:k=2:include_empty");
    ASSERT_EQ(specs.size(), 5U);
    EXPECT_EQ(specs[1].options.at("k"), "3");
    EXPECT_EQ(specs[2].options.at("k"), "inf");
    EXPECT_EQ(specs[4].options.at("include_empty"), "true");
    EXPECT_THROW(parse_invariant_specs("volume:cap=3"), InvalidInput);
    EXPECT_THROW(parse_invariant_specs("radon:k=3"), InvalidInput);
    EXPECT_THROW(parse_invariant_specs("radon,,helly"), InvalidInput);
    const auto f = intervals_family(4);
    EXPECT_THROW(compute_invariant(f, parse_invariant_specs("radon:cap=x")[0], {}), InvalidInput);
}

TEST(InvariantSpecs, ComputesThroughTheSameEntryPoint) {
    const auto f = intervals_family(8);
    const auto r = compute_invariant(f, parse_invariant_specs("tverberg:k=3:cap=7")[0], {});
    EXPECT_EQ(r["value"], 5);
    EXPECT_EQ(r["marker"], "exact");
    EXPECT_EQ(r["caps"]["cap"], 7);
    EXPECT_EQ(r["certificate"]["revalidated"], true);
    const auto t = compute_invariant(f, parse_invariant_specs("transversal:cap=3")[0], {});
    EXPECT_EQ(t["value"], 3);
    EXPECT_EQ(t["marker"], "greater_than");  // every edge is a member, so a vertex cover of the path is needed
    const auto u = compute_invariant(f, parse_invariant_specs("transversal:cap=5")[0], {});
    EXPECT_EQ(u["value"], 4);
    EXPECT_EQ(u["marker"], "exact");
    EXPECT_THROW(compute_invariant(f, parse_invariant_specs("tc:k=1")[0], {}), BudgetExceeded);
}

TEST(Report, EnvelopeFields) {
    const Json r = make_report({"compute", {{"x", 1}}, sha256_hex("abc"), 7}, Json{{"v", 1}}, 0.5);
    EXPECT_EQ(r["tool"], "relconv");
    EXPECT_EQ(r["rng"], "mt19937_64");
    EXPECT_EQ(r["seed"], 7);
    EXPECT_EQ(r["runtime"]["wall_seconds"], 0.5);
    EXPECT_EQ(r["result"]["v"], 1);
}

TEST(Ratio, Parsing) {
    EXPECT_EQ(parse_ratio("1/2"), Ratio(1, 2));
    EXPECT_EQ(parse_ratio("0.25"), Ratio(1, 4));
    EXPECT_EQ(parse_ratio("3"), Ratio(3));
    EXPECT_THROW(parse_ratio("1/0"), InvalidInput);
    EXPECT_THROW(parse_ratio("abc"), InvalidInput);
}

TEST(Corpus, EmptyGeneratorListGivesHeaderOnly) {
    const auto config = experiment_config_from_json(Json::object());
    const auto out = corpus_run(config);
    EXPECT_EQ(out.csv, std::string(corpus_csv_header) + "\n");
}

TEST(Corpus, UnknownKeysAreRejected) {
    EXPECT_THROW(experiment_config_from_json(Json{{"generatorz", Json::array()}}), InvalidInput);
    EXPECT_THROW(experiment_config_from_json(Json{{"generators", {{{"family", "star"}, {"colour", 1}}}}}),
                 InvalidInput);
    EXPECT_THROW(experiment_config_from_json(Json{{"invariants", {"radon:bogus=1"}}}), InvalidInput);
}

TEST(Corpus, DuplicateSeedsGiveIdenticalRows) {
    const Json j = {{"generators",
                     {{{"family", "random"}, {"params", {5, 1}}, {"ambient", "grid_disk"}, {"ambient_params", {4, 4}},
                       {"seeds", {9, 9}}}}}};
    const auto out = corpus_run(experiment_config_from_json(j));
    std::istringstream lines(out.csv);
    std::string header, a, b;
    std::getline(lines, header);
    std::getline(lines, a);
    std::getline(lines, b);
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("random,5 1 on grid_disk 4 4,9,5,"), std::string::npos);
}

TEST(Corpus, DiskFamiliesHaveNoHoles) {
    Json seeds = Json::array();
    for (int s = 0; s < 50; ++s) seeds.push_back(s);
    const Json j = {{"generators",
                     {{{"family", "disks_on_surface"}, {"params", {4}}, {"ambient", "octahedron_sphere"},
                       {"seeds", seeds}}}},
                    {"output", {{"reports_dir", "r"}}}};
    const auto out = corpus_run(experiment_config_from_json(j));
    std::istringstream lines(out.csv);
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        std::vector<std::string> cells;
        std::stringstream cs(line);
        std::string cell;
        while (std::getline(cs, cell, ',')) cells.push_back(cell);
        ASSERT_GE(cells.size(), 12U) << line;
        EXPECT_EQ(cells[10], "0") << line;
        EXPECT_EQ(cells[11], "exact") << line;
    }
    EXPECT_EQ(rows, 50);
    EXPECT_EQ(out.reports.size(), 50U);
}

TEST(Corpus, FailuresAreRecordedPerRow) {
    const Json j = {{"generators", {{{"family", "star"}, {"params", {9}}, {"seeds", {1}}},
                                    {{"family", "intervals"}, {"params", {3}}, {"seeds", {1}}}}}};
    const auto out = corpus_run(experiment_config_from_json(j));
    std::istringstream lines(out.csv);
    std::string header, bad, good;
    std::getline(lines, header);
    std::getline(lines, bad);
    std::getline(lines, good);
    EXPECT_NE(bad.back(), ',');  // error column filled
    EXPECT_EQ(good.back(), ',');
}

TEST(Suite, CriterionSelection) {
    EXPECT_EQ(suite_ids_for_criterion("7"), (std::vector<std::string>{"7a", "7b", "7r"}));
    EXPECT_EQ(suite_ids_for_criterion("1"), (std::vector<std::string>{"1"}));
    EXPECT_EQ(suite_ids_for_criterion("10"), (std::vector<std::string>{"10"}));
    EXPECT_THROW(run_suite_check("99", {}), InvalidInput);
}

TEST(Suite, ClosureCheckCatchesMutatedHull) {
    SuiteOptions honest;
    EXPECT_TRUE(run_suite_check("closure", honest).passed);
    SuiteOptions mutated;
    mutated.hull = [](const ConvexityFamily& f, const VertexSet& s) {
        VertexSet h = f.hull_vertices(s);
        if (s.any()) h.reset(s.find_first());  // drops a point of S
        return h;
    };
    const auto row = run_suite_check("closure", mutated);
    EXPECT_FALSE(row.passed);
    EXPECT_NE(row.detail.find("not extensive"), std::string::npos);
    SuiteOptions grown;
    grown.hull = [](const ConvexityFamily& f, const VertexSet& s) { return s.none() ? s : f.ambient_vertices(); };
    EXPECT_FALSE(run_suite_check("closure", grown).passed);
}

TEST(Suite, RowsAreIndependentOfJobs) {
    SuiteOptions one;
    SuiteOptions many;
    many.jobs = 4;
    const std::vector<std::string> ids = {"4", "7a", "9a", "10"};
    EXPECT_EQ(suite_to_json(verify_paper_suite(one, ids)), suite_to_json(verify_paper_suite(many, ids)));
}
