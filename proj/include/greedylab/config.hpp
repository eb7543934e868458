#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "greedylab/checks.hpp"
#include "greedylab/normed_space.hpp"
#include "greedylab/sample_plan.hpp"
#include "greedylab/weight.hpp"

namespace greedylab {

// Stable identifiers of every check the suite can run, in report order.
inline const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids = {
        "quasi-greedy-from-almost-greedy",
        "w-democracy-from-almost-greedy",
        "almost-greedy-bound",
        "semi-greedy-bound",
        "truncation-bound",
        "sign-unconditionality",
        "superdemocracy-transfer",
        "weight-tail-bound",
        "conservative-chain",
        "c0-equivalence",
        "lebesgue-profile",
        "set-function-counterexample",
        "fundamental-functions",
    };
    return ids;
}

struct SpaceConfig {
    std::string kind;   // lp | sup | mixed | combination
    std::size_t dim = 0;
    double p = 2.0;                    // lp
    std::string profile = "harmonic";  // mixed: harmonic | geometric | explicit
    double ratio = 0.5;                // mixed geometric profile
    std::vector<double> entries;       // mixed explicit profile
    std::vector<CombinationComponent> components; // combination
    bool one_unconditional = false;    // combination only
    std::string name;                  // optional display-name override
};

struct WeightConfig {
    std::string kind = "constant"; // constant | harmonic | geometric | explicit
    double value = 1.0;            // constant
    double ratio = 0.5;            // geometric
    std::vector<double> entries;   // explicit
    std::string tail = "none";     // explicit: none | harmonic | geometric
    std::string name;              // optional display-name override
};

struct GuardConfig {
    std::size_t max_dim = 10;     // hard cap 12
    std::size_t max_support = 8;  // hard cap 8
    long tie_cap = 720;           // hard cap 5040
};

struct OutputConfig {
    std::string format = "json"; // json | csv
    std::string path;            // empty: stdout only
    bool include_timing = false; // timing breaks byte-identity; off by default
};

struct RunConfig {
    std::vector<SpaceConfig> spaces;
    std::vector<WeightConfig> weights;
    std::vector<std::string> suites; // check ids, or the single entry "all"
    SamplePlanSpec sample_plan;
    GuardConfig guards;
    OutputConfig output;
};

namespace cfgdetail {

[[noreturn]] inline void fail(const std::string& path, const std::string& msg) {
    throw std::runtime_error("config error at " + path + ": " + msg);
}

inline const nlohmann::json* find(const nlohmann::json& j, const char* key) {
    if (!j.is_object()) return nullptr;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

template <typename T>
T get_as(const nlohmann::json& j, const std::string& path) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        fail(path, "unexpected type");
    }
}

template <typename T>
T get_or(const nlohmann::json& j, const char* key, const std::string& path,
         T def) {
    const nlohmann::json* v = find(j, key);
    if (!v) return def;
    return get_as<T>(*v, path + "." + key);
}

} // namespace cfgdetail

inline bool is_known_check_id(const std::string& id) {
    for (const auto& k : all_check_ids())
        if (k == id) return true;
    return false;
}

// Parse and validate a configuration document.  Violations throw
// std::runtime_error whose message names the offending field path.
inline RunConfig parse_config(const nlohmann::json& j) {
    using cfgdetail::fail;
    using cfgdetail::find;
    using cfgdetail::get_as;
    using cfgdetail::get_or;

    if (!j.is_object()) fail("$", "document must be a JSON object");
    RunConfig cfg;

    // guards first: space dims validate against them
    if (const auto* g = find(j, "guards")) {
        const std::string gp = "guards";
        cfg.guards.max_dim = get_or<std::size_t>(*g, "max_dim", gp, 10);
        cfg.guards.max_support = get_or<std::size_t>(*g, "max_support", gp, 8);
        cfg.guards.tie_cap = get_or<long>(*g, "tie_cap", gp, 720);
    }
    if (cfg.guards.max_dim < 1 || cfg.guards.max_dim > 12)
        fail("guards.max_dim", "must lie in [1, 12]");
    if (cfg.guards.max_support < 1 || cfg.guards.max_support > 8)
        fail("guards.max_support", "must lie in [1, 8]");
    if (cfg.guards.tie_cap < 1 || cfg.guards.tie_cap > 5040)
        fail("guards.tie_cap", "must lie in [1, 5040]");

    const auto* spaces = find(j, "spaces");
    if (!spaces || !spaces->is_array() || spaces->empty())
        fail("spaces", "at least one space descriptor is required");
    for (std::size_t i = 0; i < spaces->size(); ++i) {
        const auto& s = (*spaces)[i];
        const std::string sp = "spaces[" + std::to_string(i) + "]";
        if (!s.is_object()) fail(sp, "must be an object");
        SpaceConfig sc;
        sc.kind = get_or<std::string>(s, "kind", sp, "");
        if (sc.kind != "lp" && sc.kind != "sup" && sc.kind != "mixed" &&
            sc.kind != "combination")
            fail(sp + ".kind", "must be one of lp, sup, mixed, combination");
        sc.dim = get_or<std::size_t>(s, "dim", sp, 0);
        if (sc.dim < 1) fail(sp + ".dim", "must be >= 1");
        if (sc.dim > cfg.guards.max_dim)
            fail("guards.max_dim", sp + ".dim = " + std::to_string(sc.dim) +
                                       " exceeds max_dim = " +
                                       std::to_string(cfg.guards.max_dim));
        sc.p = get_or<double>(s, "p", sp, 2.0);
        if (sc.kind == "lp" && !(sc.p >= 1.0 && std::isfinite(sc.p)))
            fail(sp + ".p", "must be a finite number >= 1");
        sc.profile = get_or<std::string>(s, "profile", sp, "harmonic");
        if (sc.kind == "mixed" && sc.profile != "harmonic" &&
            sc.profile != "geometric" && sc.profile != "explicit")
            fail(sp + ".profile", "must be harmonic, geometric or explicit");
        sc.ratio = get_or<double>(s, "ratio", sp, 0.5);
        if (sc.kind == "mixed" && sc.profile == "geometric" &&
            !(sc.ratio > 0.0 && sc.ratio < 1.0))
            fail(sp + ".ratio", "must lie in (0, 1)");
        sc.entries = get_or<std::vector<double>>(s, "entries", sp, {});
        if (sc.kind == "mixed" && sc.profile == "explicit") {
            if (sc.entries.size() < sc.dim)
                fail(sp + ".entries", "need at least dim entries");
            for (double v : sc.entries)
                if (!(v > 0.0 && v <= 1.0))
                    fail(sp + ".entries", "entries must lie in (0, 1]");
        }
        if (sc.kind == "combination") {
            const auto* comps = find(s, "components");
            if (!comps || !comps->is_array() || comps->empty())
                fail(sp + ".components", "at least one component is required");
            for (std::size_t k = 0; k < comps->size(); ++k) {
                const auto& cj = (*comps)[k];
                const std::string cp = sp + ".components[" + std::to_string(k) + "]";
                CombinationComponent comp;
                comp.p = get_or<double>(cj, "p", cp, 1.0);
                if (!(comp.p >= 1.0 && std::isfinite(comp.p)))
                    fail(cp + ".p", "must be a finite number >= 1");
                comp.weights =
                    get_or<std::vector<double>>(cj, "weights", cp, {});
                if (comp.weights.size() != sc.dim)
                    fail(cp + ".weights", "need exactly dim entries");
                for (double v : comp.weights)
                    if (!(v >= 0.0) || !std::isfinite(v))
                        fail(cp + ".weights", "entries must be >= 0 and finite");
                sc.components.push_back(std::move(comp));
            }
            sc.one_unconditional =
                get_or<bool>(s, "one_unconditional", sp, false);
        }
        sc.name = get_or<std::string>(s, "name", sp, "");
        cfg.spaces.push_back(std::move(sc));
    }

    const auto* weights = find(j, "weights");
    if (!weights || !weights->is_array() || weights->empty())
        fail("weights", "at least one weight descriptor is required");
    for (std::size_t i = 0; i < weights->size(); ++i) {
        const auto& wj = (*weights)[i];
        const std::string wp = "weights[" + std::to_string(i) + "]";
        if (!wj.is_object()) fail(wp, "must be an object");
        WeightConfig wc;
        wc.kind = get_or<std::string>(wj, "kind", wp, "constant");
        if (wc.kind != "constant" && wc.kind != "harmonic" &&
            wc.kind != "geometric" && wc.kind != "explicit")
            fail(wp + ".kind",
                 "must be one of constant, harmonic, geometric, explicit");
        wc.value = get_or<double>(wj, "value", wp, 1.0);
        if (wc.kind == "constant" && !(wc.value > 0.0 && std::isfinite(wc.value)))
            fail(wp + ".value", "must be positive and finite");
        wc.ratio = get_or<double>(wj, "ratio", wp, 0.5);
        if (wc.kind == "geometric" && !(wc.ratio > 0.0 && wc.ratio < 1.0))
            fail(wp + ".ratio", "must lie in (0, 1)");
        wc.entries = get_or<std::vector<double>>(wj, "entries", wp, {});
        if (wc.kind == "explicit") {
            if (wc.entries.empty())
                fail(wp + ".entries", "explicit weight needs entries");
            for (double v : wc.entries)
                if (!(v > 0.0) || !std::isfinite(v))
                    fail(wp + ".entries", "entries must be positive and finite");
        }
        wc.tail = get_or<std::string>(wj, "tail", wp, "none");
        if (wc.tail != "none" && wc.tail != "harmonic" && wc.tail != "geometric")
            fail(wp + ".tail", "must be none, harmonic or geometric");
        wc.name = get_or<std::string>(wj, "name", wp, "");
        cfg.weights.push_back(std::move(wc));
    }

    if (const auto* suites = find(j, "suites")) {
        if (!suites->is_array()) fail("suites", "must be an array of check ids");
        for (std::size_t i = 0; i < suites->size(); ++i) {
            const std::string spth = "suites[" + std::to_string(i) + "]";
            std::string id = get_as<std::string>((*suites)[i], spth);
            if (id != "all" && !is_known_check_id(id))
                fail(spth, "unknown check id '" + id + "'");
            cfg.suites.push_back(std::move(id));
        }
    }

    if (const auto* sp = find(j, "sample_plan")) {
        const std::string pp = "sample_plan";
        cfg.sample_plan.seed = get_or<std::uint64_t>(*sp, "seed", pp, 0);
        int rc = get_or<int>(*sp, "random_count", pp, 0);
        if (rc < 0) fail(pp + ".random_count", "must be >= 0");
        cfg.sample_plan.random_count = rc;
        cfg.sample_plan.structured = get_or<bool>(*sp, "structured", pp, true);
        if (rc > 0 && !find(*sp, "seed"))
            fail(pp + ".seed", "required whenever random_count > 0");
    }

    if (const auto* out = find(j, "output")) {
        const std::string op = "output";
        cfg.output.format = get_or<std::string>(*out, "format", op, "json");
        if (cfg.output.format != "json" && cfg.output.format != "csv")
            fail(op + ".format", "must be json or csv");
        cfg.output.path = get_or<std::string>(*out, "path", op, "");
        cfg.output.include_timing =
            get_or<bool>(*out, "include_timing", op, false);
    }

    return cfg;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config parse error in " + path + ": " +
                                 e.what());
    }
    return parse_config(j);
}

// Instantiate the space a descriptor names.
inline NormedSpace make_space(const SpaceConfig& sc) {
    NormedSpace s = [&] {
        if (sc.kind == "lp") return NormedSpace::lp(sc.dim, sc.p);
        if (sc.kind == "sup") return NormedSpace::sup(sc.dim);
        if (sc.kind == "mixed") {
            std::vector<double> w(sc.dim);
            std::string tag;
            if (sc.profile == "harmonic") {
                for (std::size_t n = 0; n < sc.dim; ++n)
                    w[n] = 1.0 / static_cast<double>(n + 1);
                tag = "1/n";
            } else if (sc.profile == "geometric") {
                double v = sc.ratio;
                for (std::size_t n = 0; n < sc.dim; ++n, v *= sc.ratio)
                    w[n] = v;
                tag = "r^n";
            } else {
                for (std::size_t n = 0; n < sc.dim; ++n) w[n] = sc.entries[n];
                tag = "custom";
            }
            return NormedSpace::mixed(sc.dim, w, tag);
        }
        return NormedSpace::combination(sc.dim, sc.components,
                                        sc.one_unconditional);
    }();
    if (!sc.name.empty()) s.set_name(sc.name);
    return s;
}

inline std::string weight_display_name(const WeightConfig& wc) {
    if (!wc.name.empty()) return wc.name;
    if (wc.kind == "constant") {
        if (wc.value == 1.0) return "constant";
        std::ostringstream os;
        os << "constant(" << wc.value << ")";
        return os.str();
    }
    if (wc.kind == "harmonic") return "harmonic";
    if (wc.kind == "geometric") {
        std::ostringstream os;
        os << "geometric(" << wc.ratio << ")";
        return os.str();
    }
    return "explicit(" + std::to_string(wc.entries.size()) + ")";
}

// Instantiate the weight a descriptor names, sized for the given dimension.
inline Weight make_weight(const WeightConfig& wc, std::size_t dim) {
    if (wc.kind == "constant") return Weight::constant(dim, wc.value);
    if (wc.kind == "harmonic") return Weight::harmonic(dim);
    if (wc.kind == "geometric") return Weight::geometric(dim, wc.ratio);
    Weight::Tail tail = Weight::Tail::none;
    if (wc.tail == "harmonic") tail = Weight::Tail::harmonic;
    if (wc.tail == "geometric") tail = Weight::Tail::geometric;
    if (tail == Weight::Tail::none && wc.entries.size() < dim)
        throw std::runtime_error(
            "weight '" + weight_display_name(wc) + "' has " +
            std::to_string(wc.entries.size()) + " entries but the space needs " +
            std::to_string(dim) + " and no tail rule is set");
    double ratio = wc.ratio;
    if (tail == Weight::Tail::geometric && !(ratio > 0.0 && ratio < 1.0))
        throw std::runtime_error("geometric tail needs ratio in (0, 1)");
    return Weight(wc.entries, tail, ratio);
}

// Effective configuration with defaults filled, for the report echo.
inline nlohmann::json config_echo(const RunConfig& cfg) {
    nlohmann::json j;
    for (const auto& sc : cfg.spaces) {
        nlohmann::json s{{"kind", sc.kind}, {"dim", sc.dim}};
        if (sc.kind == "lp") s["p"] = sc.p;
        if (sc.kind == "mixed") {
            s["profile"] = sc.profile;
            if (sc.profile == "geometric") s["ratio"] = sc.ratio;
            if (sc.profile == "explicit") s["entries"] = sc.entries;
        }
        if (sc.kind == "combination") {
            nlohmann::json comps = nlohmann::json::array();
            for (const auto& comp : sc.components)
                comps.push_back({{"p", comp.p}, {"weights", comp.weights}});
            s["components"] = std::move(comps);
            s["one_unconditional"] = sc.one_unconditional;
        }
        if (!sc.name.empty()) s["name"] = sc.name;
        j["spaces"].push_back(std::move(s));
    }
    for (const auto& wc : cfg.weights) {
        nlohmann::json w{{"kind", wc.kind}};
        if (wc.kind == "constant") w["value"] = wc.value;
        if (wc.kind == "geometric") w["ratio"] = wc.ratio;
        if (wc.kind == "explicit") {
            w["entries"] = wc.entries;
            w["tail"] = wc.tail;
        }
        if (!wc.name.empty()) w["name"] = wc.name;
        j["weights"].push_back(std::move(w));
    }
    j["suites"] = cfg.suites;
    j["sample_plan"] = {{"seed", cfg.sample_plan.seed},
                        {"random_count", cfg.sample_plan.random_count},
                        {"structured", cfg.sample_plan.structured}};
    j["guards"] = {{"max_dim", cfg.guards.max_dim},
                   {"max_support", cfg.guards.max_support},
                   {"tie_cap", cfg.guards.tie_cap}};
    j["output"] = {{"format", cfg.output.format},
                   {"path", cfg.output.path},
                   {"include_timing", cfg.output.include_timing}};
    return j;
}

} // namespace greedylab
