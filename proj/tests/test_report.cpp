#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "greedylab/config.hpp"
#include "greedylab/runner.hpp"

using namespace greedylab;
using Catch::Matchers::ContainsSubstring;
using nlohmann::json;

namespace {

json minimal_config() {
    return json{
        {"spaces", json::array({json{{"kind", "lp"}, {"dim", 4}, {"p", 2.0}}})},
        {"weights", json::array({json{{"kind", "constant"}}})},
    };
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) nl = text.size();
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

} // namespace

TEST_CASE("check-id registry is stable") {
    const auto& ids = all_check_ids();
    CHECK(ids.size() == 13);
    CHECK(ids.front() == "quasi-greedy-from-almost-greedy");
    CHECK(ids.back() == "fundamental-functions");
    CHECK(is_known_check_id("truncation-bound"));
    CHECK_FALSE(is_known_check_id("all"));
    CHECK_FALSE(is_known_check_id(""));
}

TEST_CASE("configuration defaults are filled in") {
    RunConfig cfg = parse_config(minimal_config());
    REQUIRE(cfg.spaces.size() == 1);
    CHECK(cfg.spaces[0].kind == "lp");
    CHECK(cfg.spaces[0].dim == 4);
    CHECK(cfg.weights.size() == 1);
    CHECK(cfg.suites.empty());
    CHECK(cfg.sample_plan.seed == 0);
    CHECK(cfg.sample_plan.random_count == 0);
    CHECK(cfg.sample_plan.structured);
    CHECK(cfg.guards.max_dim == 10);
    CHECK(cfg.guards.max_support == 8);
    CHECK(cfg.guards.tie_cap == 720);
    CHECK(cfg.output.format == "json");
    CHECK(cfg.output.path.empty());
    CHECK_FALSE(cfg.output.include_timing);

    // The echoed effective configuration must itself parse.
    CHECK_NOTHROW(parse_config(config_echo(cfg)));
    json echo = config_echo(cfg);
    CHECK(echo["guards"]["max_dim"] == 10);
    CHECK(echo["sample_plan"]["seed"] == 0);
    CHECK(echo["output"]["format"] == "json");
}

TEST_CASE("configuration errors name the offending field") {
    json bad_p = minimal_config();
    bad_p["spaces"][0]["p"] = 0.5;
    CHECK_THROWS_WITH(parse_config(bad_p), ContainsSubstring("spaces[0].p"));

    json big_dim = minimal_config();
    big_dim["spaces"][0]["dim"] = 30;
    CHECK_THROWS_WITH(parse_config(big_dim),
                      ContainsSubstring("guards.max_dim"));

    json bad_guard = minimal_config();
    bad_guard["guards"] = {{"max_dim", 30}};
    CHECK_THROWS_WITH(parse_config(bad_guard),
                      ContainsSubstring("guards.max_dim"));

    json bad_suite = minimal_config();
    bad_suite["suites"] = json::array({"no-such-check"});
    CHECK_THROWS_WITH(parse_config(bad_suite),
                      ContainsSubstring("suites[0]"));
    CHECK_THROWS_WITH(parse_config(bad_suite),
                      ContainsSubstring("unknown check id"));

    json no_seed = minimal_config();
    no_seed["sample_plan"] = {{"random_count", 5}};
    CHECK_THROWS_WITH(parse_config(no_seed),
                      ContainsSubstring("sample_plan.seed"));

    json no_spaces = json{{"weights", minimal_config()["weights"]}};
    CHECK_THROWS_WITH(parse_config(no_spaces), ContainsSubstring("spaces"));

    json no_weights = json{{"spaces", minimal_config()["spaces"]}};
    CHECK_THROWS_WITH(parse_config(no_weights), ContainsSubstring("weights"));

    json bare_explicit = minimal_config();
    bare_explicit["weights"][0] = {{"kind", "explicit"}};
    CHECK_THROWS_WITH(parse_config(bare_explicit),
                      ContainsSubstring("weights[0].entries"));

    json bad_format = minimal_config();
    bad_format["output"] = {{"format", "xml"}};
    CHECK_THROWS_WITH(parse_config(bad_format),
                      ContainsSubstring("output.format"));

    json bare_combo = minimal_config();
    bare_combo["spaces"][0] = {{"kind", "combination"}, {"dim", 3}};
    CHECK_THROWS_WITH(parse_config(bare_combo),
                      ContainsSubstring("spaces[0].components"));

    CHECK_THROWS_WITH(parse_config(json::array()), ContainsSubstring("$"));
}

TEST_CASE("weight factory applies tail rules and rejects short tables") {
    WeightConfig wc;
    wc.kind = "explicit";
    wc.entries = {1.0, 0.5, 0.25};

    CHECK_THROWS_WITH(make_weight(wc, 5), ContainsSubstring("3 entries"));
    CHECK_THROWS_WITH(make_weight(wc, 5), ContainsSubstring("5"));

    wc.tail = "harmonic";
    Weight w = make_weight(wc, 5);
    CHECK(w.at(2) == 0.5);
    CHECK(w.at(4) == Catch::Approx(0.25));
    CHECK(w.at(5) == Catch::Approx(0.2));

    wc.tail = "geometric";
    wc.ratio = 1.5;
    CHECK_THROWS_WITH(make_weight(wc, 5),
                      ContainsSubstring("ratio in (0, 1)"));
}

TEST_CASE("weight display names are human readable") {
    WeightConfig wc;
    CHECK(weight_display_name(wc) == "constant");
    wc.value = 2.5;
    CHECK(weight_display_name(wc) == "constant(2.5)");
    wc = WeightConfig{};
    wc.kind = "harmonic";
    CHECK(weight_display_name(wc) == "harmonic");
    wc.kind = "geometric";
    wc.ratio = 0.25;
    CHECK(weight_display_name(wc) == "geometric(0.25)");
    wc.kind = "explicit";
    wc.entries = {1.0, 1.0, 1.0};
    CHECK(weight_display_name(wc) == "explicit(3)");
    wc.name = "custom-w";
    CHECK(weight_display_name(wc) == "custom-w");
}

TEST_CASE("a full run visits every cell and every requested check") {
    RunConfig cfg;
    SpaceConfig s1;
    s1.kind = "lp";
    s1.dim = 4;
    s1.p = 2.0;
    SpaceConfig s2;
    s2.kind = "mixed";
    s2.dim = 5;
    s2.profile = "harmonic";
    cfg.spaces = {s1, s2};
    WeightConfig w1; // constant
    WeightConfig w2;
    w2.kind = "harmonic";
    cfg.weights = {w1, w2};
    cfg.suites = {"all"};
    cfg.sample_plan.seed = 42;
    cfg.sample_plan.random_count = 6;
    cfg.sample_plan.structured = true;

    Report rep = run(cfg);
    CHECK(rep.seed == 42);
    REQUIRE(rep.cells.size() == 4);
    for (const auto& cell : rep.cells) {
        CHECK_FALSE(cell.space.empty());
        CHECK_FALSE(cell.weight.empty());
        REQUIRE(cell.checks.size() == all_check_ids().size());
        for (std::size_t i = 0; i < cell.checks.size(); ++i) {
            CHECK(cell.checks[i].id == all_check_ids()[i]);
            CHECK(cell.checks[i].space == cell.space);
            CHECK(cell.checks[i].weight == cell.weight);
            CHECK(cell.checks[i].verdict != Verdict::fail);
        }
        for (const char* key :
             {"democracy_w", "superdemocracy_w", "conservative",
              "quasi_greedy_projection", "quasi_greedy_residual", "basis",
              "fundamental"})
            CHECK(cell.constants.count(key) == 1);
    }
    CHECK_FALSE(has_failures(rep));

    json doc = report_json(rep);
    CHECK(doc["tool"]["name"] == "greedylab");
    CHECK(doc["seed"] == 42);
    CHECK(doc["cells"].size() == 4);
    CHECK(doc["cells"][0].count("seconds") == 0); // timing off by default

    // Identical configuration, identical bytes.
    Report again = run(cfg);
    CHECK(emit_json(rep) == emit_json(again));
    CHECK(emit_csv(rep) == emit_csv(again));
}

TEST_CASE("csv output quotes awkward names") {
    RunConfig cfg;
    SpaceConfig sc;
    sc.kind = "lp";
    sc.dim = 2;
    sc.p = 1.0;
    sc.name = "ell, two";
    cfg.spaces = {sc};
    WeightConfig wc;
    wc.name = "w\"q";
    cfg.weights = {wc};
    cfg.suites = {"set-function-counterexample"};

    Report rep = run(cfg);
    std::string csv = emit_csv(rep);
    auto lines = split_lines(csv);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "check_id,space,weight,instances,max_ratio,bound,verdict");
    CHECK(lines[1] ==
          "set-function-counterexample,\"ell, two\",\"w\"\"q\",3,1.0,1.0,pass");

    CHECK(emit(rep, "csv") == csv);
    CHECK(emit(rep, "json") == emit_json(rep));
}

TEST_CASE("single-check dispatch guards its inputs") {
    NormedSpace small = NormedSpace::lp(3, 2.0);
    Weight w3 = Weight::constant(3);
    std::vector<CoefficientVector> plan;

    CHECK_THROWS_AS(run_single_check("bogus-id", small, w3, plan),
                    std::invalid_argument);

    // Guard trips inside a check degrade to a not-applicable record.
    NormedSpace big = NormedSpace::lp(13, 2.0);
    InequalityCheck c =
        run_single_check("almost-greedy-bound", big, Weight::constant(13), plan);
    CHECK(c.id == "almost-greedy-bound");
    CHECK(c.verdict == Verdict::not_applicable);
    CHECK_FALSE(c.note.empty());

    NormedSpace eleven = NormedSpace::lp(11, 2.0);
    InequalityCheck p = run_single_check("lebesgue-profile", eleven,
                                         Weight::constant(11), plan);
    CHECK(p.verdict == Verdict::not_applicable);
}

TEST_CASE("config files load from disk with clear failure modes") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();

    const fs::path good = dir / "greedylab_test_good.json";
    {
        std::ofstream out(good);
        out << R"({"spaces":[{"kind":"sup","dim":3}],)"
            << R"("weights":[{"kind":"harmonic"}]})";
    }
    RunConfig cfg = load_config(good.string());
    CHECK(cfg.spaces.at(0).kind == "sup");
    CHECK(cfg.spaces.at(0).dim == 3);
    CHECK(cfg.weights.at(0).kind == "harmonic");
    fs::remove(good);

    const fs::path bad = dir / "greedylab_test_bad.json";
    {
        std::ofstream out(bad);
        out << "{not json";
    }
    CHECK_THROWS_WITH(load_config(bad.string()),
                      ContainsSubstring("config parse error"));
    fs::remove(bad);

    CHECK_THROWS_WITH(load_config((dir / "greedylab_absent.json").string()),
                      ContainsSubstring("cannot open config file"));
}

TEST_CASE("report text lands on disk or fails loudly") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "greedylab_test_out.txt";
    write_text(path.string(), "hello\n");
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "hello");
    in.close();
    fs::remove(path);

    CHECK_THROWS_WITH(write_text("/nonexistent-dir-zz/out.txt", "x"),
                      ContainsSubstring("cannot open output path"));
}
