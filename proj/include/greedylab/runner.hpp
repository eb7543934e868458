#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "greedylab/checks.hpp"
#include "greedylab/config.hpp"
#include "greedylab/constants.hpp"
#include "greedylab/sample_plan.hpp"
#include "greedylab/version.hpp"

namespace greedylab {

struct CellResult {
    std::string space;
    std::string weight;
    nlohmann::json constants;
    std::vector<InequalityCheck> checks;
    double seconds = 0.0; // serialized only when timing is requested
};

struct Report {
    nlohmann::json config;
    std::uint64_t seed = 0;
    bool include_timing = false;
    std::vector<CellResult> cells;
};

namespace detail {

inline nlohmann::json constant_json(const ConstantEstimate& e) {
    nlohmann::json j{{"value", e.value}, {"exact", e.exact}};
    if (e.skipped > 0) j["skipped"] = e.skipped;
    if (e.pair_witness) {
        j["witness"] = {{"a", e.pair_witness->a.indices()},
                        {"b", e.pair_witness->b.indices()},
                        {"signs_a", e.pair_witness->signs_a},
                        {"signs_b", e.pair_witness->signs_b}};
    }
    if (e.greedy_witness) {
        j["witness"] = {{"x", e.greedy_witness->x.data()},
                        {"m", e.greedy_witness->m},
                        {"support", e.greedy_witness->support.indices()}};
    }
    return j;
}

inline nlohmann::json check_json(const InequalityCheck& c) {
    nlohmann::json j;
    j["id"] = c.id;
    j["space"] = c.space;
    j["weight"] = c.weight;
    j["formula"] = c.formula;
    j["inputs"] = c.inputs;
    j["input_exact"] = c.input_exact;
    j["instances"] = c.instances;
    j["skipped"] = c.skipped;
    j["max_ratio"] = c.max_ratio;
    j["bound"] = c.bound;
    j["verdict"] = verdict_str(c.verdict);
    j["details"] = c.details;
    if (!c.curves.empty()) {
        nlohmann::json cur;
        for (const auto& [name, pts] : c.curves) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& pt : pts) arr.push_back({pt[0], pt[1]});
            cur[name] = std::move(arr);
        }
        j["curves"] = std::move(cur);
    }
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

} // namespace detail

// Exhaustive constants table for one (space, weight) cell; guard-tripping
// entries degrade to an error note instead of aborting the cell.
inline nlohmann::json constants_table(const NormedSpace& space, const Weight& w,
                                      const std::vector<CoefficientVector>& plan) {
    nlohmann::json t;
    auto guarded = [&](const char* key, auto&& fn) {
        try {
            t[key] = detail::constant_json(fn());
        } catch (const std::domain_error& e) {
            t[key] = {{"error", e.what()}};
        }
    };
    guarded("democracy_w", [&] { return democracy_constant_w(space, w); });
    guarded("superdemocracy_w",
            [&] { return superdemocracy_constant_w(space, w); });
    guarded("conservative", [&] { return conservative_constant(space); });
    QuasiGreedyEstimate q = quasi_greedy_constant(space, plan);
    t["quasi_greedy_projection"] = detail::constant_json(q.projection);
    t["quasi_greedy_residual"] = detail::constant_json(q.residual);
    BasisConstantEstimate beta = basis_constant(space, plan);
    t["basis"] = {{"value", beta.value}, {"exact", beta.exact}};
    try {
        FundamentalFunctionTable f = fundamental_functions(space, w);
        t["fundamental"] = {{"budgets", f.budgets},
                            {"phi_upper", f.phi_upper},
                            {"phi_lower", f.phi_lower},
                            {"lower_defined", f.lower_defined}};
    } catch (const std::domain_error& e) {
        t["fundamental"] = {{"error", e.what()}};
    }
    return t;
}

// Run one check by id; guard violations become a not-applicable record so a
// single oversized cell cannot abort the whole run.
inline InequalityCheck run_single_check(const std::string& id,
                                        const NormedSpace& space,
                                        const Weight& w,
                                        const std::vector<CoefficientVector>& plan) {
    try {
        if (id == "quasi-greedy-from-almost-greedy")
            return verify_quasi_from_almost(space, w, plan);
        if (id == "w-democracy-from-almost-greedy")
            return verify_w_democracy_from_ag(space, w);
        if (id == "almost-greedy-bound")
            return verify_almost_greedy_bound(space, w, plan);
        if (id == "semi-greedy-bound")
            return verify_semi_greedy_bound(space, w, plan, 3);
        if (id == "truncation-bound") return verify_truncation(space, plan);
        if (id == "sign-unconditionality")
            return verify_sign_unconditionality(space, plan);
        if (id == "superdemocracy-transfer")
            return verify_superdemocracy_transfer(space, w);
        if (id == "weight-tail-bound") return verify_weight_properties(space, w);
        if (id == "conservative-chain")
            return verify_conservative_bounds(space, w);
        if (id == "c0-equivalence") return verify_c0_equivalence(space, w);
        if (id == "lebesgue-profile") return profile_lebesgue(space, w, plan);
        if (id == "set-function-counterexample")
            return verify_nu_counterexample();
        if (id == "fundamental-functions")
            return verify_fundamental_functions(space, w);
        throw std::invalid_argument("unknown check id: " + id);
    } catch (const std::domain_error& e) {
        InequalityCheck c;
        c.id = id;
        c.verdict = Verdict::not_applicable;
        c.note = e.what();
        return c;
    }
}

// Execute every (space × weight × suite) cell.  Deterministic for a fixed
// (config, seed): plans are keyed by cell labels, enumeration orders are
// fixed, and timing is excluded from the report unless requested.
inline Report run(const RunConfig& cfg) {
    Report rep;
    rep.config = config_echo(cfg);
    rep.seed = cfg.sample_plan.seed;
    rep.include_timing = cfg.output.include_timing;

    std::vector<std::string> suites;
    for (const auto& s : cfg.suites) {
        if (s == "all") {
            suites = all_check_ids();
            break;
        }
        suites.push_back(s);
    }

    for (const auto& sc : cfg.spaces) {
        const NormedSpace space = make_space(sc);
        for (const auto& wc : cfg.weights) {
            const Weight w = make_weight(wc, space.dim());
            CellResult cell;
            cell.space = space.name();
            cell.weight = weight_display_name(wc);
            const auto t0 = std::chrono::steady_clock::now();

            const auto plan = build_sample_plan(
                space.dim(), cfg.sample_plan,
                "cell/" + cell.space + "/" + cell.weight);
            cell.constants = constants_table(space, w, plan);
            for (const auto& id : suites) {
                InequalityCheck chk = run_single_check(id, space, w, plan);
                chk.space = cell.space;
                chk.weight = cell.weight;
                cell.checks.push_back(std::move(chk));
            }

            cell.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
            rep.cells.push_back(std::move(cell));
        }
    }
    return rep;
}

inline bool has_failures(const Report& rep) {
    for (const auto& cell : rep.cells)
        for (const auto& chk : cell.checks)
            if (chk.verdict == Verdict::fail) return true;
    return false;
}

inline nlohmann::json report_json(const Report& rep) {
    nlohmann::json j;
    j["tool"] = {{"name", "greedylab"}, {"version", version_string}};
    j["config"] = rep.config;
    j["seed"] = rep.seed;
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : rep.cells) {
        nlohmann::json cj;
        cj["space"] = cell.space;
        cj["weight"] = cell.weight;
        cj["constants"] = cell.constants;
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& chk : cell.checks)
            checks.push_back(detail::check_json(chk));
        cj["checks"] = std::move(checks);
        if (rep.include_timing) cj["seconds"] = cell.seconds;
        cells.push_back(std::move(cj));
    }
    j["cells"] = std::move(cells);
    return j;
}

inline std::string emit_json(const Report& rep) {
    return report_json(rep).dump(2) + "\n";
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string csv_number(double v) { return nlohmann::json(v).dump(); }

} // namespace detail

inline std::string emit_csv(const Report& rep) {
    std::string out = "check_id,space,weight,instances,max_ratio,bound,verdict\n";
    for (const auto& cell : rep.cells)
        for (const auto& chk : cell.checks) {
            out += detail::csv_field(chk.id);
            out += ',';
            out += detail::csv_field(chk.space);
            out += ',';
            out += detail::csv_field(chk.weight);
            out += ',';
            out += std::to_string(chk.instances);
            out += ',';
            out += detail::csv_number(chk.max_ratio);
            out += ',';
            out += detail::csv_number(chk.bound);
            out += ',';
            out += verdict_str(chk.verdict);
            out += '\n';
        }
    return out;
}

inline std::string emit(const Report& rep, const std::string& format) {
    if (format == "csv") return emit_csv(rep);
    return emit_json(rep);
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + path);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace greedylab
