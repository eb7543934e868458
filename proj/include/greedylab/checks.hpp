#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greedylab/chebyshev.hpp"
#include "greedylab/constants.hpp"
#include "greedylab/feasibility.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/normed_space.hpp"
#include "greedylab/sample_plan.hpp"
#include "greedylab/set_function.hpp"
#include "greedylab/sigma.hpp"
#include "greedylab/weight.hpp"

namespace greedylab {

enum class Verdict { pass, fail, empirical_only, not_applicable };

inline const char* verdict_str(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::empirical_only: return "empirical-only";
    case Verdict::not_applicable: return "not-applicable";
    }
    return "unknown";
}

// One verified (or profiled) inequality: which statement, over which space and
// weight, with which constants, and the worst ratio observed.
//
// For checks bundling several sub-inequalities LHS_i <= RHS_i, each instance
// is folded as bound * LHS_i / RHS_i, so the single rule
//     max_ratio <= bound * (1 + 1e-9)
// holds iff every sub-inequality held; for single-bound checks the folded
// value reduces to the classic ratio LHS / (RHS / bound).
struct InequalityCheck {
    std::string id;
    std::string space;
    std::string weight;
    std::string formula;
    std::map<std::string, double> inputs;
    std::map<std::string, bool> input_exact;
    long instances = 0;
    long skipped = 0; // instances dropped by solver guards, not failures
    double max_ratio = 0.0;
    double bound = 0.0;
    Verdict verdict = Verdict::pass;
    std::map<std::string, double> details;
    std::vector<std::pair<std::string, std::vector<std::array<double, 2>>>> curves;
    std::string note;
};

namespace detail {

// Folds LHS <= RHS into a value comparable against `bound`; 0/0 counts as a
// satisfied ratio of 1, positive/0 is an internal inconsistency (the empty
// set always makes denominators of the sigma kind attainable).
inline double folded_ratio(double lhs, double rhs, double bound,
                           const char* what) {
    if (rhs == 0.0) {
        if (lhs == 0.0) return 1.0;
        throw std::logic_error(std::string(what) +
                               ": positive numerator over zero denominator");
    }
    return bound * (lhs / rhs);
}

inline void record(InequalityCheck& c, double folded) {
    ++c.instances;
    if (folded > c.max_ratio) c.max_ratio = folded;
}

// pass/fail only when every input constant is exact; any sampled constant
// demotes the verdict to empirical-only.
inline void settle(InequalityCheck& c) {
    if (c.verdict == Verdict::not_applicable) return;
    for (const auto& [k, exact] : c.input_exact)
        if (!exact) {
            c.verdict = Verdict::empirical_only;
            return;
        }
    c.verdict = c.max_ratio <= c.bound * (1.0 + 1e-9) ? Verdict::pass
                                                      : Verdict::fail;
}

// Two-sided quasi-greedy constant max(K_proj, K_resid) with exactness flag.
inline std::pair<double, bool> two_sided_quasi(
    const NormedSpace& space, const std::vector<CoefficientVector>& plan,
    double tie_tol = 0.0) {
    QuasiGreedyEstimate q = quasi_greedy_constant(space, plan, tie_tol);
    return {std::max(q.projection.value, q.residual.value),
            q.projection.exact && q.residual.exact};
}

// Internal deterministic plan for checks whose signature carries no plan.
inline std::vector<CoefficientVector> internal_plan(std::size_t dim) {
    SamplePlanSpec s;
    s.structured = true;
    s.random_count = 0;
    return build_sample_plan(dim, s, "internal");
}

inline bool strictly_decreasing_prefix(const Weight& w, std::size_t dim) {
    for (std::size_t n = 1; n < dim; ++n)
        if (!(w.at(static_cast<int>(n)) > w.at(static_cast<int>(n) + 1)))
            return false;
    return true;
}

inline double min_modulus_on(const CoefficientVector& x, const IndexSet& s) {
    double m = std::numeric_limits<double>::infinity();
    for (int i : s) m = std::min(m, std::fabs(x.coeff(i)));
    return s.empty() ? 0.0 : m;
}

// ‖Σ_{j} ε_j e_{idx[j]}‖ with ε read from the bits of smask.
inline double signed_indicator_norm(const NormedSpace& space,
                                    CoefficientVector& scratch,
                                    const std::vector<int>& idx,
                                    std::uint32_t smask) {
    for (std::size_t j = 0; j < idx.size(); ++j)
        scratch.set(idx[j], (smask >> j) & 1u ? -1.0 : 1.0);
    double v = space.norm(scratch);
    for (int i : idx) scratch.set(i, 0.0);
    return v;
}

} // namespace detail

// Residual and thresholding sums are norm-bounded once the almost-greedy
// constant is: ‖x − P_Λ(x)‖ <= Kag‖x‖ and ‖P_Λ(x)‖ <= (Kag+1)‖x‖ with the
// assembled upper bound Kag = 8K⁴D + K + 1.
inline InequalityCheck verify_quasi_from_almost(
    const NormedSpace& space, const Weight& w,
    const std::vector<CoefficientVector>& plan, double tie_tol = 0.0) {
    InequalityCheck c;
    c.id = "quasi-greedy-from-almost-greedy";
    c.space = space.name();
    c.formula = "Kag=8K^4*D+K+1; |x-P(x)| <= Kag*|x|; |P(x)| <= (Kag+1)*|x|";

    auto [K, k_exact] = detail::two_sided_quasi(space, plan, tie_tol);
    ConstantEstimate D = democracy_constant_w(space, w);
    c.inputs = {{"K", K}, {"D", D.value}};
    c.input_exact = {{"K", k_exact}, {"D", D.exact}};

    const double kag = 8.0 * K * K * K * K * D.value + K + 1.0;
    c.bound = kag + 1.0;
    c.details["K_ag_upper"] = kag;

    const std::size_t dim = space.dim();
    for (const auto& x : plan) {
        const double nx = space.norm(x);
        if (nx == 0.0) continue;
        for (int m = 1; m <= static_cast<int>(dim); ++m) {
            for (const auto& S : admissible_supports(x, m, tie_tol)) {
                const CoefficientVector p = x.restrict_to(S);
                detail::record(c, detail::folded_ratio(space.norm(x - p),
                                                       kag * nx, c.bound,
                                                       c.id.c_str()));
                detail::record(c, detail::folded_ratio(space.norm(p),
                                                       (kag + 1.0) * nx,
                                                       c.bound, c.id.c_str()));
            }
        }
    }
    detail::settle(c);
    return c;
}

// The enumerated weighted democracy constant stays below the assembled
// almost-greedy upper bound.
inline InequalityCheck verify_w_democracy_from_ag(const NormedSpace& space,
                                                  const Weight& w) {
    InequalityCheck c;
    c.id = "w-democracy-from-almost-greedy";
    c.space = space.name();
    c.formula = "D <= Kag = 8K^4*D+K+1";

    auto [K, k_exact] =
        detail::two_sided_quasi(space, detail::internal_plan(space.dim()));
    ConstantEstimate D = democracy_constant_w(space, w);
    c.inputs = {{"K", K}, {"D", D.value}};
    c.input_exact = {{"K", k_exact}, {"D", D.exact}};

    const double kag = 8.0 * K * K * K * K * D.value + K + 1.0;
    c.bound = kag;
    c.details["K_ag_upper"] = kag;
    detail::record(c, detail::folded_ratio(D.value, kag, c.bound, c.id.c_str()));
    detail::settle(c);
    return c;
}

// Greedy residuals against the exhaustive expansional oracle:
// ‖x − P_Λ(x)‖ <= (8K⁴D+K+1) · σ̃^w_{w(Λ)}(x) over every admissible tie
// support.  The oracle denominator is re-checked against ‖x‖ inline.
inline InequalityCheck verify_almost_greedy_bound(
    const NormedSpace& space, const Weight& w,
    const std::vector<CoefficientVector>& plan, double tie_tol = 0.0) {
    InequalityCheck c;
    c.id = "almost-greedy-bound";
    c.space = space.name();
    c.formula = "|x - P(x)| <= (8K^4*D+K+1) * sigma_exp(x; w(S))";

    const std::size_t dim = space.dim();
    if (dim > 12)
        throw std::domain_error("almost-greedy-bound: dimension guard (12) exceeded");

    auto [K, k_exact] = detail::two_sided_quasi(space, plan, tie_tol);
    ConstantEstimate D = democracy_constant_w(space, w);
    c.inputs = {{"K", K}, {"D", D.value}};
    c.input_exact = {{"K", k_exact}, {"D", D.exact}};
    c.bound = 8.0 * K * K * K * K * D.value + K + 1.0;

    for (const auto& x : plan) {
        const double nx = space.norm(x);
        if (nx == 0.0) continue;
        std::map<double, double> cache; // budget -> expansional oracle value
        for (int m = 1; m <= static_cast<int>(dim); ++m) {
            for (const auto& S : admissible_supports(x, m, tie_tol)) {
                const double budget = w_measure(w, S);
                auto it = cache.find(budget);
                if (it == cache.end())
                    it = cache
                             .emplace(budget,
                                      sigma_w(space, x, w, budget,
                                              SigmaMode::expansional)
                                          .value)
                             .first;
                const double den = it->second;
                if (den > nx * (1.0 + 1e-12))
                    throw std::logic_error(
                        "almost-greedy-bound: oracle exceeds the norm");
                detail::record(c, detail::folded_ratio(
                                      space.norm(x - x.restrict_to(S)),
                                      c.bound * den, c.bound, c.id.c_str()));
            }
        }
    }
    detail::settle(c);
    return c;
}

// Chebyshev-refined residuals against the free-coefficient oracle, plus the
// sharper variant that credits the smallest kept coefficient:
//   cheb(x, Λ) <= (1+3K+16K³D) σ^w
//   ‖x − P_Λ(x)‖ <= (1+3K+16K³D) σ^w + 2K·min_{Λ}|x_n|·‖1_Λ‖.
inline InequalityCheck verify_semi_greedy_bound(
    const NormedSpace& space, const Weight& w,
    const std::vector<CoefficientVector>& plan, int m_max = 3,
    double tie_tol = 0.0) {
    InequalityCheck c;
    c.id = "semi-greedy-bound";
    c.space = space.name();
    c.formula =
        "cheb(x,S) <= (1+3K+16K^3*D)*sigma(x; w(S)); "
        "|x-P(x)| <= (1+3K+16K^3*D)*sigma + 2K*min|x_S|*|1_S|";

    const std::size_t dim = space.dim();
    if (dim > 10)
        throw std::domain_error("semi-greedy-bound: dimension guard (10) exceeded");

    auto [K, k_exact] = detail::two_sided_quasi(space, plan, tie_tol);
    ConstantEstimate D = democracy_constant_w(space, w);
    c.inputs = {{"K", K}, {"D", D.value}};
    c.input_exact = {{"K", k_exact}, {"D", D.exact}};
    c.bound = 1.0 + 3.0 * K + 16.0 * K * K * K * D.value;

    const int top = m_max > 0 ? std::min<int>(m_max, static_cast<int>(dim))
                              : static_cast<int>(dim);
    for (const auto& x : plan) {
        const double nx = space.norm(x);
        if (nx == 0.0) continue;
        std::map<double, std::pair<double, double>> cache; // budget -> (best, expansional)
        for (int m = 1; m <= top; ++m) {
            for (const auto& S : admissible_supports(x, m, tie_tol)) {
                if (S.size() > 8) {
                    ++c.skipped;
                    continue;
                }
                const double budget = w_measure(w, S);
                auto it = cache.find(budget);
                if (it == cache.end()) {
                    double den;
                    try {
                        den = sigma_w(space, x, w, budget, SigmaMode::best)
                                  .value;
                    } catch (const std::domain_error&) {
                        ++c.skipped;
                        continue;
                    }
                    const double e =
                        sigma_w(space, x, w, budget, SigmaMode::expansional)
                            .value;
                    it = cache.emplace(budget, std::make_pair(den, e)).first;
                }
                const auto [den, exp_den] = it->second;
                if (den > exp_den * (1.0 + 1e-9) ||
                    exp_den > nx * (1.0 + 1e-12))
                    throw std::logic_error(
                        "semi-greedy-bound: oracle ordering violated");

                const double cheb =
                    chebyshev_refine(space, x, S, 1e-9, false).value;
                detail::record(c, detail::folded_ratio(cheb, c.bound * den,
                                                       c.bound, c.id.c_str()));
                const double extra = 2.0 * K * detail::min_modulus_on(x, S) *
                                     space.norm_of_indicator(S);
                detail::record(
                    c, detail::folded_ratio(space.norm(x - x.restrict_to(S)),
                                            c.bound * den + extra, c.bound,
                                            c.id.c_str()));
            }
        }
    }
    detail::settle(c);
    return c;
}

// Coordinatewise clamping grows the norm by at most 1+3K; in
// one-unconditional spaces it contracts, so there max_ratio also stays <= 1.
inline InequalityCheck verify_truncation(
    const NormedSpace& space, const std::vector<CoefficientVector>& plan) {
    InequalityCheck c;
    c.id = "truncation-bound";
    c.space = space.name();
    c.formula = "|clamp_M(x)| <= (1+3K)*|x|";

    auto [K, k_exact] =
        detail::two_sided_quasi(space, detail::internal_plan(space.dim()));
    c.inputs = {{"K", K}};
    c.input_exact = {{"K", k_exact}};
    c.bound = 1.0 + 3.0 * K;

    for (const auto& x : plan) {
        const double nx = space.norm(x);
        if (nx == 0.0) continue;
        std::vector<double> levels;
        for (std::size_t n = 1; n <= x.dim(); ++n) {
            double v = std::fabs(x.coeff(static_cast<int>(n)));
            if (v > 0.0) levels.push_back(v);
        }
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        std::vector<double> ms;
        ms.push_back(levels.front() / 2.0);
        for (std::size_t j = 0; j < levels.size(); ++j) {
            ms.push_back(levels[j]);
            if (j + 1 < levels.size())
                ms.push_back(0.5 * (levels[j] + levels[j + 1]));
        }
        ms.push_back(2.0 * levels.back());
        for (double M : ms)
            detail::record(c, detail::folded_ratio(space.norm(truncate(x, M)),
                                                   c.bound * nx, c.bound,
                                                   c.id.c_str()));
    }
    detail::settle(c);
    return c;
}

// Sign manipulation moves indicator-type norms by at most 2K each way, and
// the smallest coefficient is recovered within 4K²:
//   (1/2K)‖1_A‖ <= ‖Σ_A ε e‖ <= 2K‖1_A‖
//   ‖Σ_A a e‖ <= 2K‖1_A‖·max|a|,   ‖1_A‖·min|a| <= 4K²‖Σ_A a e‖
// over every A with |A| <= 8 and every sign pattern.
inline InequalityCheck verify_sign_unconditionality(
    const NormedSpace& space, const std::vector<CoefficientVector>& plan) {
    InequalityCheck c;
    c.id = "sign-unconditionality";
    c.space = space.name();
    c.formula =
        "|sum eps e| <= 2K*|1_A|; |1_A| <= 2K*|sum eps e|; "
        "|sum a e| <= 2K*|1_A|*max|a|; |1_A|*min|a| <= 4K^2*|sum a e|";

    const std::size_t dim = space.dim();
    if (dim > 12)
        throw std::domain_error(
            "sign-unconditionality: dimension guard (12) exceeded");

    auto [K, k_exact] = detail::two_sided_quasi(space, detail::internal_plan(dim));
    c.inputs = {{"K", K}};
    c.input_exact = {{"K", k_exact}};
    c.bound = 2.0 * K;

    CoefficientVector scratch(dim);
    const std::size_t nmask = std::size_t{1} << dim;
    for (std::size_t mask = 1; mask < nmask; ++mask) {
        if (std::popcount(mask) > 8) continue;
        const IndexSet A = IndexSet::from_mask(mask);
        const auto& idx = A.indices();
        const double n1 = space.norm_of_indicator(A);
        for (std::uint32_t s = 0; s < (1u << idx.size()); ++s) {
            const double sn = detail::signed_indicator_norm(space, scratch, idx, s);
            detail::record(c, detail::folded_ratio(sn, 2.0 * K * n1, c.bound,
                                                   c.id.c_str()));
            detail::record(c, detail::folded_ratio(n1, 2.0 * K * sn, c.bound,
                                                   c.id.c_str()));
        }
        for (const auto& y : plan) {
            if (y.dim() != dim) continue;
            const CoefficientVector a = y.restrict_to(A);
            double amax = 0.0, amin = std::numeric_limits<double>::infinity();
            for (int i : idx) {
                amax = std::max(amax, std::fabs(y.coeff(i)));
                amin = std::min(amin, std::fabs(y.coeff(i)));
            }
            const double na = space.norm(a);
            detail::record(c, detail::folded_ratio(na, 2.0 * K * n1 * amax,
                                                   c.bound, c.id.c_str()));
            detail::record(c, detail::folded_ratio(n1 * amin, 4.0 * K * K * na,
                                                   c.bound, c.id.c_str()));
        }
    }
    detail::settle(c);
    return c;
}

// With the weight normalized to sup w_n = 1 and alpha = min w_n, the
// weighted and plain superdemocracy constants control one another:
//   Dbar_plain <= max(2/alpha², 2·Dbar_w/alpha)
//   Dbar_w <= Dbar_plain·(1+alpha)/alpha.
inline InequalityCheck verify_superdemocracy_transfer(const NormedSpace& space,
                                                      const Weight& w) {
    InequalityCheck c;
    c.id = "superdemocracy-transfer";
    c.space = space.name();
    c.formula =
        "Dbar_plain <= max(2/alpha^2, 2*Dbar_w/alpha); "
        "Dbar_w <= Dbar_plain*(1+alpha)/alpha";

    const std::size_t dim = space.dim();
    double wmax = 0.0;
    for (std::size_t n = 1; n <= dim; ++n)
        wmax = std::max(wmax, w.at(static_cast<int>(n)));
    std::vector<double> entries(dim);
    double alpha = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= dim; ++n) {
        entries[n - 1] = w.at(static_cast<int>(n)) / wmax;
        alpha = std::min(alpha, entries[n - 1]);
    }
    const Weight wn{entries};

    ConstantEstimate dbar_w = superdemocracy_constant_w(space, wn);
    ConstantEstimate dbar_plain =
        superdemocracy_constant_w(space, Weight::constant(dim));

    c.inputs = {{"alpha", alpha},
                {"Dbar_w", dbar_w.value},
                {"Dbar_plain", dbar_plain.value}};
    c.input_exact = {{"alpha", true},
                     {"Dbar_w", dbar_w.exact},
                     {"Dbar_plain", dbar_plain.exact}};

    c.bound = std::max(2.0 / (alpha * alpha), 2.0 * dbar_w.value / alpha);
    c.details["bound_weighted_from_plain"] =
        dbar_plain.value * (1.0 + alpha) / alpha;
    detail::record(c, detail::folded_ratio(dbar_plain.value, c.bound, c.bound,
                                           c.id.c_str()));
    detail::record(c,
                   detail::folded_ratio(dbar_w.value,
                                        dbar_plain.value * (1.0 + alpha) / alpha,
                                        c.bound, c.id.c_str()));
    detail::settle(c);
    return c;
}

// Sets whose measure fits under the largest weight outside them keep all
// their sign combinations below 2β·(1+3K+16K³D) — the finite-scale analogue
// of "small measure relative to the tail" being norm-bounded.
inline InequalityCheck verify_weight_properties(const NormedSpace& space,
                                                const Weight& w) {
    InequalityCheck c;
    c.id = "weight-tail-bound";
    c.space = space.name();
    c.formula =
        "max_sign |sum_A eps e| <= 2*beta*(1+3K+16K^3*D) when w(A) <= max "
        "outside weight";

    const std::size_t dim = space.dim();
    if (dim > 12)
        throw std::domain_error("weight-tail-bound: dimension guard (12) exceeded");

    const auto plan = detail::internal_plan(dim);
    auto [K, k_exact] = detail::two_sided_quasi(space, plan);
    ConstantEstimate D = democracy_constant_w(space, w);
    BasisConstantEstimate beta = basis_constant(space, plan);
    c.inputs = {{"K", K}, {"D", D.value}, {"beta", beta.value}};
    c.input_exact = {{"K", k_exact}, {"D", D.exact}, {"beta", beta.exact}};

    const double kbar = 1.0 + 3.0 * K + 16.0 * K * K * K * D.value;
    c.bound = 2.0 * beta.value * kbar;
    c.details["K_semi_upper"] = kbar;

    const auto ws = detail::measure_table(w, dim);
    CoefficientVector scratch(dim);
    const std::size_t nmask = std::size_t{1} << dim;
    for (std::size_t mask = 1; mask < nmask; ++mask) {
        double outside = 0.0;
        bool any_outside = false;
        for (std::size_t n = 0; n < dim; ++n)
            if (!(mask & (std::size_t{1} << n))) {
                outside = std::max(outside, w.at(static_cast<int>(n) + 1));
                any_outside = true;
            }
        if (!any_outside || ws[mask] > outside) {
            if (!any_outside) ++c.skipped; // full set has no outside weight
            continue;
        }
        const IndexSet A = IndexSet::from_mask(mask);
        if (A.size() > 8) {
            ++c.skipped;
            continue;
        }
        const auto& idx = A.indices();
        double hi = 0.0;
        for (std::uint32_t s = 0; s < (1u << idx.size()); ++s)
            hi = std::max(hi,
                          detail::signed_indicator_norm(space, scratch, idx, s));
        detail::record(c, detail::folded_ratio(hi, c.bound, c.bound,
                                               c.id.c_str()));
    }
    detail::settle(c);
    return c;
}

// For strictly decreasing weights, conservativeness plus weighted democracy
// yields plain democracy (factor 2CDβ) and uniform indicator bounds:
// ‖1_A‖ <= D_w when w(A) <= w({1}), and ‖1_A‖ <= C·D_w whenever a same-size
// witness set fits to the right of A within the dimension.
inline InequalityCheck verify_conservative_bounds(const NormedSpace& space,
                                                  const Weight& w) {
    InequalityCheck c;
    c.id = "conservative-chain";
    c.space = space.name();
    c.formula =
        "D_plain <= 2*C*D_w*beta; |1_A| <= D_w when w(A) <= w({1}); "
        "|1_A| <= C*D_w via right witness";

    const std::size_t dim = space.dim();
    if (dim > 12)
        throw std::domain_error("conservative-chain: dimension guard (12) exceeded");
    if (!detail::strictly_decreasing_prefix(w, dim)) {
        c.verdict = Verdict::not_applicable;
        c.note = "weight prefix is not strictly decreasing";
        return c;
    }

    const auto plan = detail::internal_plan(dim);
    ConstantEstimate C = conservative_constant(space);
    ConstantEstimate Dw = democracy_constant_w(space, w);
    ConstantEstimate Dplain =
        democracy_constant_w(space, Weight::constant(dim));
    BasisConstantEstimate beta = basis_constant(space, plan);
    c.inputs = {{"C", C.value},
                {"D_w", Dw.value},
                {"D_plain", Dplain.value},
                {"beta", beta.value}};
    c.input_exact = {{"C", C.exact},
                     {"D_w", Dw.exact},
                     {"D_plain", Dplain.exact},
                     {"beta", beta.exact}};

    c.bound = 2.0 * C.value * Dw.value * beta.value;
    detail::record(c, detail::folded_ratio(Dplain.value, c.bound, c.bound,
                                           c.id.c_str()));

    const auto norm1 = detail::indicator_norm_table(space);
    const auto ws = detail::measure_table(w, dim);
    const double w1 = w.at(1);
    // measure of the trailing block of size k, summed in ascending order
    std::vector<double> tail_ws(dim + 1, 0.0);
    for (std::size_t k = 1; k <= dim; ++k) {
        double acc = 0.0;
        for (std::size_t n = dim - k + 1; n <= dim; ++n)
            acc += w.at(static_cast<int>(n));
        tail_ws[k] = acc;
    }

    const std::size_t nmask = std::size_t{1} << dim;
    for (std::size_t mask = 1; mask < nmask; ++mask) {
        if (ws[mask] <= w1)
            detail::record(c, detail::folded_ratio(norm1[mask], Dw.value,
                                                   c.bound, c.id.c_str()));
        const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
        const std::size_t hi = static_cast<std::size_t>(std::bit_width(mask));
        if (hi < dim - k + 1 && tail_ws[k] <= w1)
            detail::record(c, detail::folded_ratio(norm1[mask],
                                                   C.value * Dw.value, c.bound,
                                                   c.id.c_str()));
        else
            ++c.skipped; // no room (or budget) for a same-size right witness
    }
    detail::settle(c);
    return c;
}

// Spaces passing the quasi-greedy + conservative + weighted-democracy gates
// behave like the sup-norm basis on a trailing block: every sign combination
// has norm in [1/(2β), C·D_w].
inline InequalityCheck verify_c0_equivalence(const NormedSpace& space,
                                             const Weight& w) {
    InequalityCheck c;
    c.id = "c0-equivalence";
    c.space = space.name();
    c.formula = "1/(2*beta) <= |sum_block eps e| <= C*D_w for all signs";

    const std::size_t dim = space.dim();
    if (dim > 12)
        throw std::domain_error("c0-equivalence: dimension guard (12) exceeded");

    if (!space.exact_quasi_greedy_constant() ||
        !detail::strictly_decreasing_prefix(w, dim)) {
        c.verdict = Verdict::not_applicable;
        c.note = "gates: exact quasi-greedy constant and strictly decreasing "
                 "weight required";
        return c;
    }
    const double K = *space.exact_quasi_greedy_constant();
    ConstantEstimate C = conservative_constant(space);
    ConstantEstimate Dw = democracy_constant_w(space, w);
    BasisConstantEstimate beta = basis_constant(space, detail::internal_plan(dim));
    if (!beta.exact) {
        c.verdict = Verdict::not_applicable;
        c.note = "gates: exact basis constant required";
        return c;
    }
    c.inputs = {{"K", K},
                {"C", C.value},
                {"D_w", Dw.value},
                {"beta", beta.value}};
    c.input_exact = {{"K", true},
                     {"C", C.exact},
                     {"D_w", Dw.exact},
                     {"beta", true}};

    // trailing block, shrunk until its measure fits under w({1})
    std::size_t b0 = dim / 3 + 1;
    if (dim >= 8 && dim - b0 + 1 > 8) b0 = dim - 7;
    const double w1 = w.at(1);
    auto block_measure = [&](std::size_t from) {
        double acc = 0.0;
        for (std::size_t n = from; n <= dim; ++n)
            acc += w.at(static_cast<int>(n));
        return acc;
    };
    while (b0 < dim && block_measure(b0) > w1) ++b0;
    if (block_measure(b0) > w1) {
        c.verdict = Verdict::not_applicable;
        c.note = "no trailing block with measure below w({1})";
        return c;
    }

    IndexSet block;
    for (std::size_t n = b0; n <= dim; ++n) block.insert(static_cast<int>(n));
    const auto& idx = block.indices();

    c.bound = C.value * Dw.value;
    CoefficientVector scratch(dim);
    double U = 0.0, L = std::numeric_limits<double>::infinity();
    for (std::uint32_t s = 0; s < (1u << idx.size()); ++s) {
        double v = detail::signed_indicator_norm(space, scratch, idx, s);
        U = std::max(U, v);
        L = std::min(L, v);
        ++c.instances;
    }
    c.details["block_start"] = static_cast<double>(b0);
    c.details["block_size"] = static_cast<double>(idx.size());
    c.details["upper_equivalence"] = U;
    c.details["lower_equivalence"] = L;
    c.details["upper_route_constant"] = 2.0 * K * Dw.value;

    c.max_ratio = std::max(
        detail::folded_ratio(U, C.value * Dw.value, c.bound, c.id.c_str()),
        detail::folded_ratio(1.0 / (2.0 * beta.value), L, c.bound,
                             c.id.c_str()));
    detail::settle(c);
    return c;
}

// Ratio curves for the statements whose constants are not pinned down:
// projection growth against ln(m+1), expansional-over-best at doubled
// budgets against 1 + φ(u)/ϕ(u), and residuals against half-budget oracles.
// No pass/fail: the check only asserts finiteness and oracle monotonicity.
inline InequalityCheck profile_lebesgue(const NormedSpace& space,
                                        const Weight& w,
                                        const std::vector<CoefficientVector>& plan,
                                        double tie_tol = 0.0) {
    InequalityCheck c;
    c.id = "lebesgue-profile";
    c.space = space.name();
    c.formula = "profile curves only (constants unspecified)";
    c.verdict = Verdict::empirical_only;
    c.note = "no explicit constant available; curves reported for inspection";

    const std::size_t dim = space.dim();
    if (dim > 10)
        throw std::domain_error("lebesgue-profile: dimension guard (10) exceeded");

    std::vector<CoefficientVector> xs;
    for (const auto& x : plan) {
        if (space.norm(x) == 0.0) continue;
        xs.push_back(x);
        if (xs.size() >= 12) break;
    }

    const auto table = fundamental_functions(space, w);

    std::vector<double> grid(dim); // prefix measures as budget grid
    {
        double acc = 0.0;
        for (std::size_t n = 1; n <= dim; ++n) {
            acc += w.at(static_cast<int>(n));
            grid[n - 1] = acc;
        }
    }

    std::vector<double> proj_max(dim, 0.0), resid_ratio(dim, 0.0);
    std::vector<bool> resid_seen(dim, false);
    std::vector<double> ratio_at_grid(dim, 0.0);
    std::vector<bool> grid_seen(dim, false);

    auto check_finite = [&](double v) {
        if (!std::isfinite(v))
            throw std::logic_error("lebesgue-profile: non-finite ratio");
        return v;
    };

    for (const auto& x : xs) {
        const double nx = space.norm(x);

        // oracle ladder on the budget grid: monotone and below the norm
        std::vector<double> exp_ladder(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            exp_ladder[j] =
                sigma_w(space, x, w, grid[j], SigmaMode::expansional).value;
            if (exp_ladder[j] > nx * (1.0 + 1e-12))
                throw std::logic_error("lebesgue-profile: oracle exceeds norm");
            if (j > 0 &&
                exp_ladder[j] > exp_ladder[j - 1] * (1.0 + 1e-9) + 1e-12)
                throw std::logic_error(
                    "lebesgue-profile: oracle not monotone in the budget");
        }

        for (int m = 1; m <= static_cast<int>(dim); ++m) {
            for (const auto& S : admissible_supports(x, m, tie_tol)) {
                const CoefficientVector p = x.restrict_to(S);
                proj_max[m - 1] = std::max(
                    proj_max[m - 1], check_finite(space.norm(p) / nx));

                const double half = w_measure(w, S) / 2.0;
                try {
                    const double den =
                        sigma_w(space, x, w, half, SigmaMode::best).value;
                    const double num = space.norm(x - p);
                    double r = (num == 0.0 && den == 0.0) ? 1.0 : num / den;
                    if (den == 0.0 && num > 0.0)
                        throw std::logic_error(
                            "lebesgue-profile: positive residual over zero "
                            "oracle");
                    resid_ratio[m - 1] =
                        std::max(resid_ratio[m - 1], check_finite(r));
                    resid_seen[m - 1] = true;
                } catch (const std::domain_error&) {
                    ++c.skipped;
                }
            }
            ++c.instances;
        }

        for (std::size_t j = 0; j < dim; ++j) {
            try {
                const double den =
                    sigma_w(space, x, w, grid[j], SigmaMode::best).value;
                const double num =
                    sigma_w(space, x, w, 2.0 * grid[j],
                            SigmaMode::expansional)
                        .value;
                if (den == 0.0) continue; // fully representable already
                ratio_at_grid[j] =
                    std::max(ratio_at_grid[j], check_finite(num / den));
                grid_seen[j] = true;
            } catch (const std::domain_error&) {
                ++c.skipped;
            }
        }
    }

    std::vector<std::array<double, 2>> curve1, curve2, curve2ref, curve3;
    for (std::size_t m = 1; m <= dim; ++m) {
        curve1.push_back({std::log(static_cast<double>(m) + 1.0),
                          proj_max[m - 1]});
        if (resid_seen[m - 1])
            curve3.push_back({static_cast<double>(m), resid_ratio[m - 1]});
    }
    for (std::size_t j = 0; j < dim; ++j) {
        if (grid_seen[j]) curve2.push_back({grid[j], ratio_at_grid[j]});
        if (auto lo = table.phi_lower_at(grid[j]); lo && *lo > 0.0)
            curve2ref.push_back(
                {grid[j], 1.0 + table.phi_upper_at(grid[j]) / *lo});
    }
    c.curves.emplace_back("greedy-projection-vs-log", std::move(curve1));
    c.curves.emplace_back("expansional-vs-best-budget", std::move(curve2));
    c.curves.emplace_back("expansional-vs-best-reference", std::move(curve2ref));
    c.curves.emplace_back("residual-vs-half-budget", std::move(curve3));

    double worst = 0.0;
    for (const auto& [name, pts] : c.curves)
        for (const auto& pt : pts) worst = std::max(worst, pt[1]);
    c.max_ratio = worst;
    c.bound = 0.0;
    return c;
}

// The tabulated counterexample set function is strictly monotone and
// cancellation-stable on {1..6}, yet provably has no representing weight on
// {1,2,3} (exact rational reasoning); pass iff all three findings agree.
inline InequalityCheck verify_nu_counterexample() {
    InequalityCheck c;
    c.id = "set-function-counterexample";
    c.space = "-";
    c.weight = "-";
    c.formula =
        "strictly monotone and cancellation-stable, yet not "
        "weight-representable on {1,2,3}";

    const SetFunction f = SetFunction::counterexample();
    const SetPairCheck mono = check_strict_monotone(f, 6);
    const SetPairCheck star = check_property_star(f, 6);
    const FeasibilityResult rep = weight_representable(f, 3);

    c.details["strictly_monotone"] = mono.holds ? 1.0 : 0.0;
    c.details["cancellation_stable"] = star.holds ? 1.0 : 0.0;
    c.details["weight_representable"] = rep.feasible ? 1.0 : 0.0;
    c.details["representability_exact"] = rep.exact ? 1.0 : 0.0;
    c.input_exact = {{"table", true}};
    c.instances = 3;

    const bool ok = mono.holds && star.holds && !rep.feasible && rep.exact;
    // encoded as a ratio so the uniform pass rule applies: 1 = agree, 2 = not
    c.max_ratio = ok ? 1.0 : 2.0;
    c.bound = 1.0;
    detail::settle(c);
    return c;
}

// The tabulated fundamental functions are monotone and democracy-consistent:
// φ nondecreasing, ϕ nondecreasing where defined, and φ(u) <= D·ϕ(u) at
// every grid point with a defined lower value.
inline InequalityCheck verify_fundamental_functions(const NormedSpace& space,
                                                    const Weight& w) {
    InequalityCheck c;
    c.id = "fundamental-functions";
    c.space = space.name();
    c.formula =
        "phi_upper nondecreasing; phi_lower nondecreasing; "
        "phi_upper(u) <= D*phi_lower(u)";

    ConstantEstimate D = democracy_constant_w(space, w);
    c.inputs = {{"D", D.value}};
    c.input_exact = {{"D", D.exact}};
    c.bound = D.value;

    const auto t = fundamental_functions(space, w);
    for (std::size_t j = 0; j + 1 < t.budgets.size(); ++j) {
        detail::record(c, detail::folded_ratio(t.phi_upper[j],
                                               t.phi_upper[j + 1], c.bound,
                                               c.id.c_str()));
        if (t.lower_defined[j] && t.lower_defined[j + 1])
            detail::record(c, detail::folded_ratio(t.phi_lower[j],
                                                   t.phi_lower[j + 1], c.bound,
                                                   c.id.c_str()));
    }
    for (std::size_t j = 0; j < t.budgets.size(); ++j)
        if (t.lower_defined[j])
            detail::record(c, detail::folded_ratio(t.phi_upper[j],
                                                   D.value * t.phi_lower[j],
                                                   c.bound, c.id.c_str()));
    detail::settle(c);
    return c;
}

} // namespace greedylab
