#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greedylab/chebyshev.hpp"
#include "greedylab/coefficient_vector.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/index_set.hpp"
#include "greedylab/normed_space.hpp"
#include "greedylab/rng.hpp"
#include "greedylab/sigma.hpp"
#include "greedylab/weight.hpp"

namespace greedylab {

enum class ConstantKind {
    democracy,
    superdemocracy,
    conservative,
    quasi_greedy_projection,
    quasi_greedy_residual,
    almost_greedy,
    semi_greedy,
};

// Pair of index sets (with sign choices) realizing a constant.
struct PairWitness {
    IndexSet a;
    IndexSet b;
    std::vector<int> signs_a; // aligned with a's indices, entries ±1
    std::vector<int> signs_b;
};

// Vector, step count and greedy support realizing a constant.
struct GreedyWitness {
    CoefficientVector x;
    int m;
    IndexSet support;
};

struct ConstantEstimate {
    ConstantKind kind;
    double value = 1.0;
    bool exact = false; // exhaustive enumeration vs sampled lower bound
    std::optional<PairWitness> pair_witness;
    std::optional<GreedyWitness> greedy_witness;
    long skipped = 0; // instances dropped by solver guards
};

namespace detail {

// ‖1_A‖ for every subset mask of {1..dim}.
inline std::vector<double> indicator_norm_table(const NormedSpace& space) {
    const std::size_t n = std::size_t{1} << space.dim();
    std::vector<double> t(n);
    for (std::size_t m = 0; m < n; ++m)
        t[m] = space.norm_of_indicator(IndexSet::from_mask(m));
    return t;
}

// w(A) for every subset mask, accumulated in ascending index order (the same
// order Weight::measure uses, so equal sets compare consistently).
inline std::vector<double> measure_table(const Weight& w, std::size_t dim) {
    const std::size_t n = std::size_t{1} << dim;
    std::vector<double> t(n);
    for (std::size_t m = 0; m < n; ++m) {
        double acc = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            if (m & (std::size_t{1} << i)) acc += w.at(static_cast<int>(i) + 1);
        t[m] = acc;
    }
    return t;
}

inline std::vector<int> signs_from_mask(std::uint32_t smask, std::size_t size) {
    std::vector<int> s(size);
    for (std::size_t j = 0; j < size; ++j)
        s[j] = (smask >> j) & 1u ? -1 : 1;
    return s;
}

} // namespace detail

// D = sup ‖1_A‖ / ‖1_B‖ over pairs with w(A) <= w(B), by exhaustive pair
// enumeration.  Always >= 1 (take A = B).
inline ConstantEstimate democracy_constant_w(const NormedSpace& space,
                                             const Weight& w,
                                             std::size_t max_dim = 12) {
    const std::size_t dim = space.dim();
    if (dim == 0 || dim > std::min<std::size_t>(max_dim, 12))
        throw std::domain_error("democracy_constant_w: dimension guard exceeded");

    const auto norm1 = detail::indicator_norm_table(space);
    const auto ws = detail::measure_table(w, dim);
    const std::size_t n = norm1.size();

    ConstantEstimate est;
    est.kind = ConstantKind::democracy;
    est.exact = true;
    est.value = 1.0;
    std::size_t wa = 1, wb = 1;
    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b) {
            if (ws[a] > ws[b]) continue;
            double r = norm1[a] / norm1[b];
            if (r > est.value) {
                est.value = r;
                wa = a;
                wb = b;
            }
        }
    PairWitness pw;
    pw.a = IndexSet::from_mask(wa);
    pw.b = IndexSet::from_mask(wb);
    pw.signs_a.assign(pw.a.size(), 1);
    pw.signs_b.assign(pw.b.size(), 1);
    est.pair_witness = std::move(pw);
    return est;
}

// D̄ = sup ‖Σ_A ε e‖ / ‖Σ_B δ e‖ over w(A) <= w(B) and sign choices ε, δ.
// One-unconditional norms are sign-invariant, so there this collapses to the
// democracy constant (and inherits its larger dimension guard).  Otherwise
// signs are enumerated exactly up to |A| = 8 and sampled beyond.
inline ConstantEstimate superdemocracy_constant_w(const NormedSpace& space,
                                                  const Weight& w,
                                                  std::size_t max_dim = 10) {
    const std::size_t dim = space.dim();
    if (space.one_unconditional()) {
        ConstantEstimate est = democracy_constant_w(space, w, 12);
        est.kind = ConstantKind::superdemocracy;
        return est;
    }
    if (dim == 0 || dim > std::min<std::size_t>(max_dim, 10))
        throw std::domain_error("superdemocracy_constant_w: dimension guard exceeded");

    const auto ws = detail::measure_table(w, dim);
    const std::size_t n = std::size_t{1} << dim;

    std::vector<double> maxsign(n, 0.0), minsign(n, 0.0);
    std::vector<std::uint32_t> argmax(n, 0), argmin(n, 0);
    bool all_exact = true;

    CoefficientVector scratch(dim);
    auto signed_norm = [&](const std::vector<int>& idx, std::uint32_t smask) {
        for (std::size_t j = 0; j < idx.size(); ++j)
            scratch.set(idx[j], (smask >> j) & 1u ? -1.0 : 1.0);
        double v = space.norm(scratch);
        for (int i : idx) scratch.set(i, 0.0);
        return v;
    };

    for (std::size_t m = 1; m < n; ++m) {
        const IndexSet A = IndexSet::from_mask(m);
        const auto& idx = A.indices();
        const std::size_t k = idx.size();
        double hi = -1.0, lo = -1.0;
        std::uint32_t hi_s = 0, lo_s = 0;
        auto consider = [&](std::uint32_t s) {
            double v = signed_norm(idx, s);
            if (hi < 0.0 || v > hi) { hi = v; hi_s = s; }
            if (lo < 0.0 || v < lo) { lo = v; lo_s = s; }
        };
        if (k <= 8) {
            for (std::uint32_t s = 0; s < (1u << k); ++s) consider(s);
        } else {
            all_exact = false;
            consider(0); // anchor with the plain indicator
            Rng rng(static_cast<std::uint64_t>(m), "superdemocracy-signs");
            for (int t = 0; t < 256; ++t)
                consider(static_cast<std::uint32_t>(rng.next_u64() & ((1u << k) - 1u)));
        }
        maxsign[m] = hi;
        minsign[m] = lo;
        argmax[m] = hi_s;
        argmin[m] = lo_s;
    }

    ConstantEstimate est;
    est.kind = ConstantKind::superdemocracy;
    est.exact = all_exact;
    est.value = 1.0;
    std::size_t wa = 1, wb = 1;
    std::uint32_t sa = 0, sb = 0;
    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b) {
            if (ws[a] > ws[b]) continue;
            double r = maxsign[a] / minsign[b];
            if (r > est.value) {
                est.value = r;
                wa = a;
                wb = b;
                sa = argmax[a];
                sb = argmin[b];
            }
        }
    PairWitness pw;
    pw.a = IndexSet::from_mask(wa);
    pw.b = IndexSet::from_mask(wb);
    pw.signs_a = detail::signs_from_mask(sa, pw.a.size());
    pw.signs_b = detail::signs_from_mask(sb, pw.b.size());
    est.pair_witness = std::move(pw);
    return est;
}

// C = sup ‖1_A‖ / ‖1_B‖ over pairs with |A| <= |B| and max A < min B.
inline ConstantEstimate conservative_constant(const NormedSpace& space,
                                              std::size_t max_dim = 12) {
    const std::size_t dim = space.dim();
    if (dim == 0 || dim > std::min<std::size_t>(max_dim, 12))
        throw std::domain_error("conservative_constant: dimension guard exceeded");

    const auto norm1 = detail::indicator_norm_table(space);
    const std::size_t n = norm1.size();
    std::vector<int> card(n), hi_bit(n), lo_bit(n);
    for (std::size_t m = 1; m < n; ++m) {
        card[m] = std::popcount(m);
        lo_bit[m] = std::countr_zero(m) + 1;
        hi_bit[m] = std::bit_width(m); // position of highest set bit, 1-based
    }

    ConstantEstimate est;
    est.kind = ConstantKind::conservative;
    est.exact = true;
    est.value = 1.0;
    std::size_t wa = 1, wb = 2; // {1}, {2}: the smallest admissible pair
    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b) {
            if (card[a] > card[b] || hi_bit[a] >= lo_bit[b]) continue;
            double r = norm1[a] / norm1[b];
            if (r > est.value) {
                est.value = r;
                wa = a;
                wb = b;
            }
        }
    if (dim >= 2) {
        PairWitness pw;
        pw.a = IndexSet::from_mask(wa);
        pw.b = IndexSet::from_mask(wb);
        pw.signs_a.assign(pw.a.size(), 1);
        pw.signs_b.assign(pw.b.size(), 1);
        est.pair_witness = std::move(pw);
    }
    return est;
}

// Exhaustive tabulation of the weighted fundamental functions
//   φ(u) = sup { ‖1_A‖ : w(A) <= u }   (= 0 below the cheapest set)
//   ϕ(u) = inf { ‖1_A‖ : w(A) >  u }   (undefined above the largest budget)
// on the grid of all realized measures w(A).
struct FundamentalFunctionTable {
    std::vector<double> budgets;   // ascending, distinct; budgets[0] = 0 (A = ∅)
    std::vector<double> phi_upper; // φ at each budget
    std::vector<double> phi_lower; // ϕ at each budget, where defined
    std::vector<bool> lower_defined;

    double phi_upper_at(double u) const {
        if (budgets.empty() || u < budgets.front()) return 0.0;
        auto it = std::upper_bound(budgets.begin(), budgets.end(), u);
        return phi_upper[static_cast<std::size_t>(it - budgets.begin()) - 1];
    }

    std::optional<double> phi_lower_at(double u) const {
        if (budgets.empty()) return std::nullopt;
        if (u < budgets.front()) return 0.0; // even A = ∅ exceeds the budget
        auto it = std::upper_bound(budgets.begin(), budgets.end(), u);
        std::size_t j = static_cast<std::size_t>(it - budgets.begin());
        if (j == budgets.size()) return std::nullopt;
        return phi_lower[j - 1];
    }
};

inline FundamentalFunctionTable fundamental_functions(const NormedSpace& space,
                                                      const Weight& w,
                                                      std::size_t max_dim = 16) {
    const std::size_t dim = space.dim();
    if (dim == 0 || dim > std::min<std::size_t>(max_dim, 16))
        throw std::domain_error("fundamental_functions: dimension guard exceeded");

    const auto norm1 = detail::indicator_norm_table(space);
    const auto ws = detail::measure_table(w, dim);
    const std::size_t n = norm1.size();

    std::vector<std::size_t> order(n);
    for (std::size_t m = 0; m < n; ++m) order[m] = m;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ws[a] < ws[b];
    });

    FundamentalFunctionTable t;
    // group equal budgets; per group track max and min of ‖1_A‖
    std::vector<double> group_max, group_min;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t m = order[k];
        if (t.budgets.empty() || ws[m] != t.budgets.back()) {
            t.budgets.push_back(ws[m]);
            group_max.push_back(norm1[m]);
            group_min.push_back(norm1[m]);
        } else {
            group_max.back() = std::max(group_max.back(), norm1[m]);
            group_min.back() = std::min(group_min.back(), norm1[m]);
        }
    }
    const std::size_t g = t.budgets.size();
    t.phi_upper.resize(g);
    t.phi_lower.assign(g, 0.0);
    t.lower_defined.assign(g, false);
    double run = 0.0;
    for (std::size_t j = 0; j < g; ++j) {
        run = std::max(run, group_max[j]);
        t.phi_upper[j] = run;
    }
    double suffix = 0.0;
    for (std::size_t j = g; j-- > 1;) {
        suffix = (j == g - 1) ? group_min[j] : std::min(suffix, group_min[j]);
        t.phi_lower[j - 1] = suffix;
        t.lower_defined[j - 1] = true;
    }
    return t;
}

// Largest observed ratios ‖x|_Λ‖/‖x‖ (projection) and ‖x − x|_Λ‖/‖x‖
// (residual) over the plan and every admissible greedy support.  Spaces with
// a known exact constant short-circuit.
struct QuasiGreedyEstimate {
    ConstantEstimate projection;
    ConstantEstimate residual;
};

inline QuasiGreedyEstimate quasi_greedy_constant(
    const NormedSpace& space, const std::vector<CoefficientVector>& plan,
    double tie_tol = 0.0) {
    QuasiGreedyEstimate q{{}, {}};
    q.projection.kind = ConstantKind::quasi_greedy_projection;
    q.residual.kind = ConstantKind::quasi_greedy_residual;

    if (auto k = space.exact_quasi_greedy_constant()) {
        q.projection.value = q.residual.value = *k;
        q.projection.exact = q.residual.exact = true;
        return q;
    }

    const std::size_t dim = space.dim();
    for (const auto& x : plan) {
        const double nx = space.norm(x);
        if (nx == 0.0) continue;
        for (int m = 1; m <= static_cast<int>(dim); ++m) {
            for (const auto& S : admissible_supports(x, m, tie_tol)) {
                const CoefficientVector p = x.restrict_to(S);
                const double rp = space.norm(p) / nx;
                const double rr = space.norm(x - p) / nx;
                if (rp > q.projection.value) {
                    q.projection.value = rp;
                    q.projection.greedy_witness = GreedyWitness{x, m, S};
                }
                if (rr > q.residual.value) {
                    q.residual.value = rr;
                    q.residual.greedy_witness = GreedyWitness{x, m, S};
                }
            }
        }
    }
    return q;
}

// Sampled lower bound for the w-almost-greedy constant:
//   sup ‖x − x|_Λ‖ / σ̃^w_{w(Λ)}(x)
// over the plan and all admissible greedy supports Λ.
inline ConstantEstimate almost_greedy_constant_lb(
    const NormedSpace& space, const Weight& w,
    const std::vector<CoefficientVector>& plan, double tie_tol = 0.0,
    std::size_t max_dim = 12) {
    const std::size_t dim = space.dim();
    if (dim == 0 || dim > std::min<std::size_t>(max_dim, 12))
        throw std::domain_error("almost_greedy_constant_lb: dimension guard exceeded");

    ConstantEstimate est;
    est.kind = ConstantKind::almost_greedy;
    est.value = 1.0;
    est.exact = false;

    for (const auto& x : plan) {
        if (space.norm(x) == 0.0) continue;
        std::map<double, double> sigma_cache; // budget -> σ̃ value
        for (int m = 1; m <= static_cast<int>(dim); ++m) {
            for (const auto& S : admissible_supports(x, m, tie_tol)) {
                const double budget = w_measure(w, S);
                auto it = sigma_cache.find(budget);
                if (it == sigma_cache.end())
                    it = sigma_cache
                             .emplace(budget, sigma_w(space, x, w, budget,
                                                      SigmaMode::expansional)
                                                  .value)
                             .first;
                const double den = it->second;
                const double num = space.norm(x - x.restrict_to(S));
                double ratio;
                if (num == 0.0 && den == 0.0) {
                    ratio = 1.0;
                } else if (den == 0.0) {
                    // impossible: the expansional infimum is attained no
                    // worse than at Λ itself
                    throw std::logic_error(
                        "almost_greedy_constant_lb: zero approximant under "
                        "nonzero residual");
                } else {
                    ratio = num / den;
                }
                if (ratio > est.value) {
                    est.value = ratio;
                    est.greedy_witness = GreedyWitness{x, m, S};
                }
            }
        }
    }
    return est;
}

// Sampled lower bound for the w-semi-greedy constant:
//   sup inf_{supp(y) ⊆ Λ} ‖x − y‖ / σ^w_{w(Λ)}(x).
// Steps whose Chebyshev or oracle set sizes exceed the solver guard are
// skipped and counted.
inline ConstantEstimate semi_greedy_constant_lb(
    const NormedSpace& space, const Weight& w,
    const std::vector<CoefficientVector>& plan, double tie_tol = 0.0,
    std::size_t max_dim = 12, std::size_t max_support = 8) {
    const std::size_t dim = space.dim();
    if (dim == 0 || dim > std::min<std::size_t>(max_dim, 12))
        throw std::domain_error("semi_greedy_constant_lb: dimension guard exceeded");

    ConstantEstimate est;
    est.kind = ConstantKind::semi_greedy;
    est.value = 1.0;
    est.exact = false;

    for (const auto& x : plan) {
        if (space.norm(x) == 0.0) continue;
        std::map<double, double> sigma_cache; // budget -> σ value
        for (int m = 1; m <= static_cast<int>(dim); ++m) {
            for (const auto& S : admissible_supports(x, m, tie_tol)) {
                if (S.size() > max_support) {
                    ++est.skipped;
                    continue;
                }
                const double budget = w_measure(w, S);
                auto it = sigma_cache.find(budget);
                if (it == sigma_cache.end()) {
                    double den;
                    try {
                        den = sigma_w(space, x, w, budget, SigmaMode::best,
                                      1e-9, max_support)
                                  .value;
                    } catch (const std::domain_error&) {
                        ++est.skipped;
                        continue;
                    }
                    it = sigma_cache.emplace(budget, den).first;
                }
                const double den = it->second;
                const double num =
                    chebyshev_refine(space, x, S, 1e-9, false, max_support).value;
                double ratio;
                if (num == 0.0 && den == 0.0) {
                    ratio = 1.0;
                } else if (den == 0.0) {
                    throw std::logic_error(
                        "semi_greedy_constant_lb: zero approximant under "
                        "nonzero residual");
                } else {
                    ratio = num / den;
                }
                if (ratio > est.value) {
                    est.value = ratio;
                    est.greedy_witness = GreedyWitness{x, m, S};
                }
            }
        }
    }
    return est;
}

} // namespace greedylab
