#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "greedylab/chebyshev.hpp"
#include "greedylab/coefficient_vector.hpp"
#include "greedylab/index_set.hpp"
#include "greedylab/normed_space.hpp"
#include "greedylab/weight.hpp"

namespace greedylab {

enum class SigmaMode { best, expansional };

// Weighted m-term approximation error at budget u:
//   best:        inf over w(A) <= u and free coefficients on A
//   expansional: inf over w(A) <= u keeping x's own coefficients on A
struct SigmaResult {
    double value = 0.0;
    IndexSet optimal_set;
    std::vector<double> optimal_coefficients; // aligned with optimal_set
    SigmaMode mode = SigmaMode::expansional;
    long sets_examined = 0;
};

namespace detail {

// Largest cardinality whose cheapest representatives fit the budget.
inline std::size_t max_admissible_cardinality(const std::vector<double>& weights,
                                              double budget_with_slack) {
    std::vector<double> sorted = weights;
    std::sort(sorted.begin(), sorted.end());
    double acc = 0.0;
    std::size_t c = 0;
    for (double v : sorted) {
        acc += v;
        if (acc > budget_with_slack) break;
        ++c;
    }
    return c;
}

} // namespace detail

// Exhaustive weighted best-/expansional-m-term oracle.  Subsets are
// enumerated by cardinality then lexicographically, pruned by sorted
// cumulative weights, so the reported witness is deterministic (the first
// minimizer in enumeration order).  The empty set is always admissible, so
// the value never exceeds ‖x‖.
inline SigmaResult sigma_w(const NormedSpace& space, const CoefficientVector& x,
                           const Weight& w, double budget, SigmaMode mode,
                           double cheb_tol = 1e-9,
                           std::size_t max_support_best = 8) {
    const std::size_t dim = space.dim();
    if (dim > 20) throw std::domain_error("sigma_w: dimension guard (20) exceeded");
    if (x.dim() != dim) throw std::invalid_argument("sigma_w: dimension mismatch");
    if (!(budget >= 0.0)) throw std::invalid_argument("sigma_w: budget must be >= 0");

    // Admission is slightly generous: borderline sets enter the infimum,
    // which can only lower the reported value.
    const double slack = 1e-9 * std::max(1.0, std::fabs(budget));
    const double cap = budget + slack;

    std::vector<double> weights(dim);
    for (std::size_t i = 0; i < dim; ++i) weights[i] = w.at(static_cast<int>(i) + 1);

    const std::size_t max_card = detail::max_admissible_cardinality(weights, cap);
    if (mode == SigmaMode::best && max_card > max_support_best)
        throw std::domain_error(
            "sigma_w: best mode would need candidate sets of size " +
            std::to_string(max_card) + " > solver guard " +
            std::to_string(max_support_best));

    // tail_min_sums[p][c] = sum of the c smallest weights among indices > p
    // (0-based), used to prune partial selections.
    std::vector<std::vector<double>> tail_min_sums(dim + 1);
    for (std::size_t p = 0; p <= dim; ++p) {
        std::vector<double> tail(weights.begin() + p, weights.end());
        std::sort(tail.begin(), tail.end());
        tail_min_sums[p].assign(tail.size() + 1, 0.0);
        for (std::size_t c = 0; c < tail.size(); ++c)
            tail_min_sums[p][c + 1] = tail_min_sums[p][c] + tail[c];
    }

    SigmaResult res;
    res.mode = mode;
    res.optimal_set = IndexSet{};
    res.value = space.norm(x); // A = ∅
    res.sets_examined = 1;
    bool have_best = true;

    CoefficientVector scratch = x; // entries zeroed on the current set

    std::vector<int> chosen;
    auto consider = [&](const std::vector<int>& set_indices) {
        double value;
        std::vector<double> coeffs;
        if (mode == SigmaMode::expansional) {
            value = space.norm(scratch);
            coeffs.reserve(set_indices.size());
            for (int i : set_indices) coeffs.push_back(x.coeff(i));
        } else {
            auto cheb = chebyshev_refine(space, x, IndexSet(set_indices), cheb_tol,
                                         /*resolve_flat=*/false, max_support_best);
            value = cheb.value;
            coeffs = cheb.coefficients;
        }
        ++res.sets_examined;
        if (!have_best || value < res.value) {
            res.value = value;
            res.optimal_set = IndexSet(set_indices);
            res.optimal_coefficients = std::move(coeffs);
            have_best = true;
        }
    };

    // Lexicographic enumeration of c-subsets with cumulative-weight pruning.
    auto enumerate = [&](auto&& self, std::size_t next0, std::size_t remaining,
                         double used) -> void {
        if (remaining == 0) {
            consider(chosen);
            return;
        }
        for (std::size_t i = next0; i + remaining <= dim; ++i) {
            double used2 = used + weights[i];
            // cheapest completion with remaining-1 more picks after index i
            if (used2 + tail_min_sums[i + 1][remaining - 1] > cap) continue;
            chosen.push_back(static_cast<int>(i) + 1);
            double saved = scratch.coeff(static_cast<int>(i) + 1);
            scratch.set(static_cast<int>(i) + 1, 0.0);
            self(self, i + 1, remaining - 1, used2);
            scratch.set(static_cast<int>(i) + 1, saved);
            chosen.pop_back();
        }
    };

    for (std::size_t c = 1; c <= max_card; ++c)
        enumerate(enumerate, 0, c, 0.0);

    return res;
}

} // namespace greedylab
