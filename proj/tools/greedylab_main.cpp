// greedylab command-line front end.
//
// Subcommands:
//   constants  constants tables only (suites are ignored)
//   greedy     greedy orderings/supports of an ad-hoc vector
//   sigma      exhaustive m-term oracle on an ad-hoc vector
//   verify     run configured checks, print one summary line per check
//   report     run configured checks, emit the full report
//
// Exit codes: 0 no check failed, 1 at least one check failed, 2 usage or
// runtime error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "greedylab/config.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/runner.hpp"
#include "greedylab/sigma.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string format;
    std::string out;
    std::vector<std::string> suites;
};

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--config", o.config_path, "configuration file (JSON)")
        ->required();
    auto* seed = sub->add_option("--seed", o.seed,
                                 "override the sample-plan seed");
    sub->parse_complete_callback([&o, seed] { o.seed_set = seed->count() > 0; });
    sub->add_option("--format", o.format, "override output format (json|csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "override output path");
    sub->add_option("--suite", o.suites,
                    "override the check suites (comma-separated ids)")
        ->delimiter(',');
}

greedylab::RunConfig load_with_overrides(const CommonOpts& o) {
    greedylab::RunConfig cfg = greedylab::load_config(o.config_path);
    if (o.seed_set) cfg.sample_plan.seed = o.seed;
    if (!o.format.empty()) cfg.output.format = o.format;
    if (!o.out.empty()) cfg.output.path = o.out;
    if (!o.suites.empty()) {
        for (const auto& id : o.suites)
            if (id != "all" && !greedylab::is_known_check_id(id))
                throw std::runtime_error("unknown check id '" + id + "'");
        cfg.suites = o.suites;
    }
    return cfg;
}

// Emit the rendered report to the configured path, or stdout when none.
void deliver(const greedylab::Report& rep, const greedylab::RunConfig& cfg) {
    const std::string payload = greedylab::emit(rep, cfg.output.format);
    if (cfg.output.path.empty()) {
        std::cout << payload;
    } else {
        greedylab::write_text(cfg.output.path, payload);
        std::cout << "report written to " << cfg.output.path << "\n";
    }
}

int exit_code(const greedylab::Report& rep) {
    return greedylab::has_failures(rep) ? 1 : 0;
}

void print_summary(const greedylab::Report& rep) {
    long pass = 0, fail = 0, empirical = 0, na = 0;
    for (const auto& cell : rep.cells)
        for (const auto& chk : cell.checks) {
            switch (chk.verdict) {
            case greedylab::Verdict::pass: ++pass; break;
            case greedylab::Verdict::fail: ++fail; break;
            case greedylab::Verdict::empirical_only: ++empirical; break;
            case greedylab::Verdict::not_applicable: ++na; break;
            }
            std::cout << greedylab::verdict_str(chk.verdict) << "  " << chk.id
                      << "  [" << chk.space << " | " << chk.weight << "]"
                      << "  instances=" << chk.instances
                      << " max_ratio=" << chk.max_ratio
                      << " bound=" << chk.bound;
            if (!chk.note.empty()) std::cout << "  (" << chk.note << ")";
            std::cout << "\n";
        }
    std::cout << pass << " pass, " << fail << " fail, " << empirical
              << " empirical-only, " << na << " not-applicable\n";
}

std::vector<double> require_vector(const std::vector<double>& x) {
    if (x.empty()) throw std::runtime_error("--x needs at least one entry");
    return x;
}

nlohmann::json ordering_json(const greedylab::GreedyOrdering& o) {
    return {{"rho", o.rho}, {"tie_groups", o.tie_groups}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted greedy approximation laboratory"};
    app.require_subcommand(1);

    CommonOpts oc, og, os, ov, or_;

    auto* c_constants = app.add_subcommand(
        "constants", "exhaustive constants tables for each space/weight cell");
    add_common(c_constants, oc);

    auto* c_greedy = app.add_subcommand(
        "greedy", "greedy orderings and supports of an ad-hoc vector");
    add_common(c_greedy, og);
    std::vector<double> gx;
    std::size_t g_space = 0;
    int g_m = 0;
    double g_tie_tol = 0.0;
    bool g_all_ties = false;
    c_greedy->add_option("--x", gx, "coefficient vector, comma-separated")
        ->required()
        ->delimiter(',');
    c_greedy->add_option("--space-index", g_space,
                         "which configured space to use (default 0)");
    c_greedy->add_option("--m", g_m, "single greedy level (default: all)");
    c_greedy->add_option("--tie-tol", g_tie_tol, "modulus tie tolerance");
    c_greedy->add_flag("--all-ties", g_all_ties,
                       "list every admissible ordering, not just canonical");

    auto* c_sigma = app.add_subcommand(
        "sigma", "exhaustive weighted m-term approximation oracle");
    add_common(c_sigma, os);
    std::vector<double> sx;
    std::size_t s_space = 0, s_weight = 0;
    double s_budget = 0.0;
    std::string s_mode = "best";
    c_sigma->add_option("--x", sx, "coefficient vector, comma-separated")
        ->required()
        ->delimiter(',');
    c_sigma->add_option("--budget", s_budget, "weight budget u")->required();
    c_sigma->add_option("--mode", s_mode, "best | expansional")
        ->check(CLI::IsMember({"best", "expansional"}));
    c_sigma->add_option("--space-index", s_space,
                        "which configured space to use (default 0)");
    c_sigma->add_option("--weight-index", s_weight,
                        "which configured weight to use (default 0)");

    auto* c_verify = app.add_subcommand(
        "verify", "run the configured checks and summarize verdicts");
    add_common(c_verify, ov);

    auto* c_report = app.add_subcommand(
        "report", "run the configured checks and emit the full report");
    add_common(c_report, or_);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_constants) {
            greedylab::RunConfig cfg = load_with_overrides(oc);
            cfg.suites.clear();
            greedylab::Report rep = greedylab::run(cfg);
            deliver(rep, cfg);
            return 0;
        }

        if (*c_greedy) {
            greedylab::RunConfig cfg = load_with_overrides(og);
            if (g_space >= cfg.spaces.size())
                throw std::runtime_error("--space-index out of range");
            const greedylab::NormedSpace space =
                greedylab::make_space(cfg.spaces[g_space]);
            const auto xv = require_vector(gx);
            if (xv.size() != space.dim())
                throw std::runtime_error(
                    "--x has " + std::to_string(xv.size()) +
                    " entries but the space has dimension " +
                    std::to_string(space.dim()));
            const greedylab::CoefficientVector x(xv);

            nlohmann::json j;
            j["space"] = space.name();
            j["x"] = xv;
            j["tie_tol"] = g_tie_tol;
            if (g_all_ties) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& o : greedylab::all_greedy_orderings(
                         x, g_tie_tol, static_cast<std::size_t>(cfg.guards.tie_cap)))
                    arr.push_back(ordering_json(o));
                j["orderings"] = std::move(arr);
            } else {
                j["orderings"] = nlohmann::json::array(
                    {ordering_json(greedylab::greedy_ordering(x, g_tie_tol))});
            }
            nlohmann::json levels = nlohmann::json::array();
            const int lo = g_m > 0 ? g_m : 1;
            const int hi = g_m > 0 ? g_m : static_cast<int>(space.dim());
            if (hi > static_cast<int>(space.dim()))
                throw std::runtime_error("--m exceeds the space dimension");
            for (int m = lo; m <= hi; ++m) {
                nlohmann::json lv;
                lv["m"] = m;
                nlohmann::json sup = nlohmann::json::array();
                for (const auto& s :
                     greedylab::admissible_supports(x, m, g_tie_tol)) {
                    const auto gsum = greedylab::project(x, s);
                    sup.push_back({{"support", s.indices()},
                                   {"greedy_norm", space.norm(gsum)},
                                   {"residual_norm", space.norm(x - gsum)}});
                }
                lv["supports"] = std::move(sup);
                levels.push_back(std::move(lv));
            }
            j["levels"] = std::move(levels);
            const std::string payload = j.dump(2) + "\n";
            if (og.out.empty())
                std::cout << payload;
            else
                greedylab::write_text(og.out, payload);
            return 0;
        }

        if (*c_sigma) {
            greedylab::RunConfig cfg = load_with_overrides(os);
            if (s_space >= cfg.spaces.size())
                throw std::runtime_error("--space-index out of range");
            if (s_weight >= cfg.weights.size())
                throw std::runtime_error("--weight-index out of range");
            const greedylab::NormedSpace space =
                greedylab::make_space(cfg.spaces[s_space]);
            const greedylab::Weight w =
                greedylab::make_weight(cfg.weights[s_weight], space.dim());
            const auto xv = require_vector(sx);
            if (xv.size() != space.dim())
                throw std::runtime_error(
                    "--x has " + std::to_string(xv.size()) +
                    " entries but the space has dimension " +
                    std::to_string(space.dim()));
            const greedylab::CoefficientVector x(xv);

            const auto mode = s_mode == "best" ? greedylab::SigmaMode::best
                                               : greedylab::SigmaMode::expansional;
            const auto res = greedylab::sigma_w(space, x, w, s_budget, mode, 1e-9,
                                                cfg.guards.max_support);
            nlohmann::json j;
            j["space"] = space.name();
            j["weight"] = greedylab::weight_display_name(cfg.weights[s_weight]);
            j["x"] = xv;
            j["budget"] = s_budget;
            j["mode"] = s_mode;
            j["value"] = res.value;
            j["optimal_set"] = res.optimal_set.indices();
            j["optimal_coefficients"] = res.optimal_coefficients;
            j["sets_examined"] = res.sets_examined;
            const std::string payload = j.dump(2) + "\n";
            if (os.out.empty())
                std::cout << payload;
            else
                greedylab::write_text(os.out, payload);
            return 0;
        }

        if (*c_verify) {
            greedylab::RunConfig cfg = load_with_overrides(ov);
            if (cfg.suites.empty()) cfg.suites = {"all"};
            greedylab::Report rep = greedylab::run(cfg);
            print_summary(rep);
            if (!cfg.output.path.empty()) {
                greedylab::write_text(cfg.output.path,
                                      greedylab::emit(rep, cfg.output.format));
                std::cout << "report written to " << cfg.output.path << "\n";
            }
            return exit_code(rep);
        }

        if (*c_report) {
            greedylab::RunConfig cfg = load_with_overrides(or_);
            if (cfg.suites.empty()) cfg.suites = {"all"};
            greedylab::Report rep = greedylab::run(cfg);
            deliver(rep, cfg);
            return exit_code(rep);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
