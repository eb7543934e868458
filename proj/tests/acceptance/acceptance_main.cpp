// Acceptance gate: one self-contained criterion per numbered block, each
// printing a single pass/FAIL line.  Run with no arguments for the full
// battery or with `--criterion N` for one block.  Exit code 0 iff everything
// requested passed.  All tolerances are pinned here, next to their use.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "greedylab/checks.hpp"
#include "greedylab/chebyshev.hpp"
#include "greedylab/coefficient_vector.hpp"
#include "greedylab/config.hpp"
#include "greedylab/constants.hpp"
#include "greedylab/feasibility.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/index_set.hpp"
#include "greedylab/normed_space.hpp"
#include "greedylab/runner.hpp"
#include "greedylab/sample_plan.hpp"
#include "greedylab/set_function.hpp"
#include "greedylab/sigma.hpp"
#include "greedylab/weight.hpp"

#include "support/grid_oracle.hpp"

namespace {

using namespace greedylab;

struct Ctx {
    std::vector<std::string> fails;
    void require(bool ok, const std::string& msg) {
        if (!ok) fails.push_back(msg);
    }
};

NormedSpace mixed_harmonic(std::size_t dim) {
    std::vector<double> w(dim);
    for (std::size_t n = 0; n < dim; ++n) w[n] = 1.0 / static_cast<double>(n + 1);
    return NormedSpace::mixed(dim, std::move(w), "1/n");
}

NormedSpace mixed_geometric(std::size_t dim, double ratio) {
    std::vector<double> w(dim);
    double v = ratio;
    for (std::size_t n = 0; n < dim; ++n, v *= ratio) w[n] = v;
    return NormedSpace::mixed(dim, std::move(w), "r^n");
}

std::vector<NormedSpace> core_spaces(std::size_t dim) {
    std::vector<NormedSpace> s;
    s.push_back(NormedSpace::lp(dim, 1.0));
    s.push_back(NormedSpace::lp(dim, 2.0));
    s.push_back(NormedSpace::sup(dim));
    s.push_back(mixed_harmonic(dim));
    return s;
}

std::string fnum(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// 1. The tabulated set function is strictly monotone and cancellation-stable
//    on an exhaustive 6-element universe, yet provably (exact rational
//    elimination) no weight induces its order on {1,2,3}.
void criterion1(Ctx& c) {
    SetFunction nu = SetFunction::counterexample();
    c.require(check_strict_monotone(nu, 6).holds,
              "strict monotonicity fails on the 6-element universe");
    c.require(check_property_star(nu, 6).holds,
              "cancellation property fails on the 6-element universe");
    FeasibilityResult rep = weight_representable(nu, 3);
    c.require(!rep.feasible, "a representing weight unexpectedly exists");
    c.require(rep.exact, "the representability decision was not exact");
    InequalityCheck chk = verify_nu_counterexample();
    c.require(chk.verdict == Verdict::pass,
              "packaged counterexample check reports " +
                  std::string(verdict_str(chk.verdict)));
}

// 2. Democracy-type constants: trivially 1 for the symmetric spaces, and for
//    the harmonic mixed norm at dim 12 they match the closed form
//    ‖1_A‖ = max(1, sqrt(w(A))) with a plain-democracy gap >= 1.56.
void criterion2(Ctx& c) {
    std::vector<NormedSpace> sym;
    for (double p : {1.0, 1.5, 2.0, 4.0}) sym.push_back(NormedSpace::lp(10, p));
    sym.push_back(NormedSpace::sup(10));
    const Weight unit10 = Weight::constant(10);
    for (const auto& s : sym) {
        ConstantEstimate d = democracy_constant_w(s, unit10);
        ConstantEstimate sd = superdemocracy_constant_w(s, unit10);
        ConstantEstimate cons = conservative_constant(s);
        for (const auto* e : {&d, &sd, &cons}) {
            c.require(e->exact, s.name() + ": constant not exact");
            c.require(std::fabs(e->value - 1.0) <= 1e-12,
                      s.name() + ": constant " + fnum(e->value) + " != 1");
        }
    }

    const std::size_t dim = 12;
    NormedSpace mx = mixed_harmonic(dim);
    ConstantEstimate dw = democracy_constant_w(mx, Weight::harmonic(dim));
    c.require(dw.exact && std::fabs(dw.value - 1.0) <= 1e-9,
              "weighted democracy " + fnum(dw.value) + " != 1");

    ConstantEstimate dp = democracy_constant_w(mx, Weight::constant(dim));
    c.require(dp.exact, "plain democracy not exact");
    c.require(dp.value >= 1.56,
              "plain democracy " + fnum(dp.value) + " < 1.56");
    IndexSet head, tail;
    for (int i = 1; i <= 6; ++i) head.insert(i);
    for (int i = 7; i <= 12; ++i) tail.insert(i);
    const double named =
        mx.norm_of_indicator(head) / mx.norm_of_indicator(tail);
    c.require(named >= 1.56,
              "witness pair ratio " + fnum(named) + " < 1.56");
    c.require(dp.value >= named * (1.0 - 1e-12),
              "enumerated constant misses the witness pair");

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << dim); ++mask) {
        IndexSet a = IndexSet::from_mask(mask);
        double wa = 0.0;
        for (int i : a) wa += 1.0 / static_cast<double>(i);
        const double closed = std::max(1.0, std::sqrt(wa));
        if (std::fabs(mx.norm_of_indicator(a) - closed) > 1e-12 * closed) {
            c.require(false, "indicator norm off closed form at " + a.str());
            break;
        }
    }
}

// 3. Greedy residuals against the exhaustive expansional oracle, all
//    admissible tie orderings, >= 1e4 instances per space; on the strictly
//    convex/flat symmetric spaces thresholding is outright optimal.
void criterion3(Ctx& c) {
    for (const auto& s : core_spaces(8)) {
        const auto plan = build_sample_plan(8, SamplePlanSpec{11, 1500, true},
                                            "acceptance/residual/" + s.name());
        InequalityCheck chk =
            verify_almost_greedy_bound(s, Weight::constant(8), plan);
        c.require(chk.verdict == Verdict::pass,
                  s.name() + ": verdict " + verdict_str(chk.verdict) +
                      ", worst ratio " + fnum(chk.max_ratio));
        c.require(chk.instances >= 10000,
                  s.name() + ": only " + std::to_string(chk.instances) +
                      " instances");
        if (s.name().rfind("lp(", 0) == 0)
            c.require(std::fabs(chk.max_ratio - 1.0) <= 1e-9,
                      s.name() + ": worst ratio " + fnum(chk.max_ratio) +
                          " != 1");
    }
}

// 4. Chebyshev-refined residuals against the free-coefficient oracle
//    (>= 1e3 instances, m <= 3, corollary penalty included by the check),
//    with the inner solver certified against an independent grid oracle.
void criterion4(Ctx& c) {
    long certified = 0;
    for (const auto& s : core_spaces(8)) {
        const auto plan = build_sample_plan(8, SamplePlanSpec{13, 200, true},
                                            "acceptance/refinement/" + s.name());
        InequalityCheck chk =
            verify_semi_greedy_bound(s, Weight::constant(8), plan, 3);
        c.require(chk.verdict == Verdict::pass,
                  s.name() + ": verdict " + verdict_str(chk.verdict) +
                      ", worst ratio " + fnum(chk.max_ratio));
        c.require(chk.instances >= 1000,
                  s.name() + ": only " + std::to_string(chk.instances) +
                      " instances");

        for (std::size_t i = 0; i < plan.size(); i += 7) {
            const auto& x = plan[i];
            if (s.norm(x) == 0.0) continue;
            for (int m = 1; m <= 3; ++m) {
                IndexSet S = admissible_supports(x, m, 0.0).front();
                const double fast = chebyshev_refine(s, x, S, 1e-9, false).value;
                const double slow = greedylab_test::grid_chebyshev(s, x, S).value;
                ++certified;
                if (std::fabs(fast - slow) > 1e-6 * std::max(1.0, slow)) {
                    c.require(false, s.name() + ": solver off grid oracle by " +
                                         fnum(std::fabs(fast - slow)));
                    break;
                }
            }
        }
    }
    c.require(certified >= 50, "too few certification probes ran");
}

// 5. Coordinatewise clamping: bounded by 1+3K generically and an outright
//    contraction in these lattice norms, over >= 1e4 sampled vectors.
void criterion5(Ctx& c) {
    for (const auto& s : core_spaces(8)) {
        const auto plan = build_sample_plan(8, SamplePlanSpec{17, 10000, true},
                                            "acceptance/truncation/" + s.name());
        InequalityCheck chk = verify_truncation(s, plan);
        c.require(chk.verdict == Verdict::pass,
                  s.name() + ": verdict " + verdict_str(chk.verdict));
        c.require(std::fabs(chk.bound - 4.0) <= 1e-12,
                  s.name() + ": bound " + fnum(chk.bound) + " != 4");
        c.require(chk.instances >= 10000,
                  s.name() + ": only " + std::to_string(chk.instances) +
                      " instances");
        c.require(chk.max_ratio <= 1.0 + 1e-9,
                  s.name() + ": clamping grew a norm, ratio " +
                      fnum(chk.max_ratio));
    }
}

// 6. Sign-flip envelopes (factors 2K and 4K^2) on every subset with
//    |A| <= 8 and every sign pattern — 2*(3^8 - 1) sign instances alone.
void criterion6(Ctx& c) {
    for (const auto& s : core_spaces(8)) {
        const auto plan = build_sample_plan(8, SamplePlanSpec{19, 8, true},
                                            "acceptance/signs/" + s.name());
        InequalityCheck chk = verify_sign_unconditionality(s, plan);
        c.require(chk.verdict == Verdict::pass,
                  s.name() + ": verdict " + verdict_str(chk.verdict) +
                      ", worst ratio " + fnum(chk.max_ratio));
        c.require(chk.instances >= 13120,
                  s.name() + ": only " + std::to_string(chk.instances) +
                      " instances");
    }
}

// 7. Fundamental function tables: upper envelope nondecreasing, lower
//    envelope nondecreasing where defined, and upper <= D * lower at every
//    budget, across the full shipped battery of space/weight pairs.
void criterion7(Ctx& c) {
    std::vector<NormedSpace> spaces;
    for (double p : {1.0, 1.5, 2.0, 4.0}) spaces.push_back(NormedSpace::lp(8, p));
    spaces.push_back(NormedSpace::sup(8));
    spaces.push_back(mixed_harmonic(8));
    for (const auto& s : spaces)
        for (const Weight& w : {Weight::constant(8), Weight::harmonic(8)}) {
            InequalityCheck chk = verify_fundamental_functions(s, w);
            c.require(chk.verdict == Verdict::pass,
                      s.name() + ": verdict " + verdict_str(chk.verdict));
        }

    InequalityCheck big =
        verify_fundamental_functions(mixed_harmonic(12), Weight::harmonic(12));
    c.require(big.verdict == Verdict::pass, "harmonic pair at dim 12 fails");
    InequalityCheck geo = verify_fundamental_functions(
        mixed_geometric(12, 0.5), Weight::geometric(12, 0.5));
    c.require(geo.verdict == Verdict::pass, "geometric pair at dim 12 fails");

    FundamentalFunctionTable t =
        fundamental_functions(mixed_harmonic(8), Weight::harmonic(8));
    c.require(!t.budgets.empty() && t.budgets.front() == 0.0,
              "budget grid does not start at 0");
    for (std::size_t j = 1; j < t.budgets.size(); ++j) {
        c.require(t.budgets[j] > t.budgets[j - 1], "budgets not increasing");
        c.require(t.phi_upper[j] >= t.phi_upper[j - 1] - 1e-12,
                  "upper envelope decreases");
    }
}

// 8. Geometric-profile chain at dim 12: every set avoiding index 1 has
//    indicator norm <= D_w, plain democracy <= 2*C*D_w*beta, and the trailing
//    block is two-sidedly equivalent to its sup-norm count within
//    [1/(2*beta), C*D_w].
void criterion8(Ctx& c) {
    const std::size_t dim = 12;
    NormedSpace s = mixed_geometric(dim, 0.5);
    Weight wg = Weight::geometric(dim, 0.5);

    ConstantEstimate dw = democracy_constant_w(s, wg);
    ConstantEstimate dp = democracy_constant_w(s, Weight::constant(dim));
    ConstantEstimate cons = conservative_constant(s);
    const auto plan =
        build_sample_plan(dim, SamplePlanSpec{29, 2, true}, "acceptance/chain");
    BasisConstantEstimate beta = basis_constant(s, plan);
    c.require(dw.exact && dp.exact && cons.exact && beta.exact,
              "an input constant is not exact");

    for (std::uint64_t inner = 1; inner < (std::uint64_t{1} << (dim - 1));
         ++inner) {
        IndexSet a = IndexSet::from_mask(inner << 1); // subsets of {2..12}
        if (s.norm_of_indicator(a) > dw.value * (1.0 + 1e-9)) {
            c.require(false, "indicator norm above D_w at " + a.str());
            break;
        }
    }

    c.require(dp.value <=
                  2.0 * cons.value * dw.value * beta.value * (1.0 + 1e-9),
              "plain democracy " + fnum(dp.value) +
                  " exceeds 2*C*D_w*beta = " +
                  fnum(2.0 * cons.value * dw.value * beta.value));

    InequalityCheck chain = verify_conservative_bounds(s, wg);
    c.require(chain.verdict == Verdict::pass,
              "conservative chain verdict " + std::string(verdict_str(chain.verdict)));

    InequalityCheck c0 = verify_c0_equivalence(s, wg);
    c.require(c0.verdict == Verdict::pass,
              "block equivalence verdict " + std::string(verdict_str(c0.verdict)));
    c.require(c0.details.at("block_start") == 5.0, "unexpected block start");
    const double U = c0.details.at("upper_equivalence");
    const double L = c0.details.at("lower_equivalence");
    c.require(L <= U, "equivalence window is empty");
    c.require(U <= cons.value * dw.value * (1.0 + 1e-9),
              "upper equivalence " + fnum(U) + " above C*D_w");
    c.require(L >= (1.0 - 1e-9) / (2.0 * beta.value),
              "lower equivalence " + fnum(L) + " below 1/(2*beta)");
}

// 9. Determinism: identical configuration and seed, byte-identical reports.
void criterion9(Ctx& c) {
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
    WeightConfig w1;
    WeightConfig w2;
    w2.kind = "harmonic";
    cfg.weights = {w1, w2};
    cfg.suites = {"all"};
    cfg.sample_plan.seed = 42;
    cfg.sample_plan.random_count = 6;

    Report a = run(cfg);
    Report b = run(cfg);
    c.require(emit_json(a) == emit_json(b), "JSON reports differ between runs");
    c.require(emit_csv(a) == emit_csv(b), "CSV reports differ between runs");
    c.require(!has_failures(a), "a verified bound failed during the run");
}

// 10. Unspecified-constant statements: the profile emits finite curves,
//     inline oracle invariants hold (the check throws otherwise), and no
//     numeric verdict is fabricated.
void criterion10(Ctx& c) {
    for (const auto& s : {NormedSpace::lp(6, 2.0), NormedSpace::sup(6)})
        for (const Weight& w : {Weight::constant(6), Weight::harmonic(6)}) {
            const auto plan = build_sample_plan(
                6, SamplePlanSpec{23, 10, true}, "acceptance/profile/" + s.name());
            InequalityCheck chk = profile_lebesgue(s, w, plan);
            c.require(chk.verdict == Verdict::empirical_only,
                      s.name() + ": verdict " + verdict_str(chk.verdict));
            c.require(chk.bound == 0.0, "a bound was invented");
            c.require(chk.curves.size() == 4,
                      s.name() + ": expected 4 curves, got " +
                          std::to_string(chk.curves.size()));
            for (const auto& [name, pts] : chk.curves) {
                c.require(!pts.empty(), name + " is empty");
                for (const auto& pt : pts)
                    if (!std::isfinite(pt[0]) || !std::isfinite(pt[1])) {
                        c.require(false, name + " has a non-finite point");
                        break;
                    }
            }

            for (const auto& x : plan) {
                if (s.norm(x) == 0.0) continue;
                double prev = -1.0;
                for (double budget : {1.0, 2.0, 3.0, 4.0}) {
                    double best =
                        sigma_w(s, x, w, budget, SigmaMode::best).value;
                    double expansional =
                        sigma_w(s, x, w, budget, SigmaMode::expansional).value;
                    c.require(best <= expansional + 1e-9 * (1.0 + expansional),
                              "free-coefficient oracle above expansional");
                    if (prev >= 0.0)
                        c.require(best <= prev * (1.0 + 1e-12) + 1e-15,
                                  "oracle not monotone in the budget");
                    prev = best;
                }
                break; // one vector per cell keeps this block quick
            }
        }
}

struct Criterion {
    int id;
    const char* what;
    void (*fn)(Ctx&);
};

const Criterion kCriteria[] = {
    {1, "set-function counterexample: cancellation without a representing weight", criterion1},
    {2, "democracy-type constants match closed forms", criterion2},
    {3, "greedy residuals beat the assembled expansional bound on 1e4+ instances", criterion3},
    {4, "refined residuals beat the free-coefficient bound; solver grid-certified", criterion4},
    {5, "coordinate clamping never grows these lattice norms", criterion5},
    {6, "sign-flip envelopes hold for every subset and sign pattern", criterion6},
    {7, "fundamental function tables are monotone and democracy-consistent", criterion7},
    {8, "geometric-profile chain and trailing-block equivalence", criterion8},
    {9, "identical configuration and seed give byte-identical reports", criterion9},
    {10, "oracle profiles stay finite with monotone budget curves", criterion10},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 3 && std::string(argv[1]) == "--criterion") {
        only = std::atoi(argv[2]);
        if (only < 1 || only > 10) {
            std::cerr << "usage: " << argv[0] << " [--criterion 1..10]\n";
            return 2;
        }
    } else if (argc != 1) {
        std::cerr << "usage: " << argv[0] << " [--criterion 1..10]\n";
        return 2;
    }

    bool all_ok = true;
    for (const auto& cr : kCriteria) {
        if (only != 0 && cr.id != only) continue;
        Ctx ctx;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.fn(ctx);
        } catch (const std::exception& e) {
            ctx.fails.push_back(std::string("exception: ") + e.what());
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        char line[256];
        std::snprintf(line, sizeof line, "criterion %d: %s — %s (%.2fs)",
                      cr.id, ctx.fails.empty() ? "pass" : "FAIL", cr.what, dt);
        std::cout << line << "\n";
        for (const auto& f : ctx.fails) std::cout << "    - " << f << "\n";
        if (!ctx.fails.empty()) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
