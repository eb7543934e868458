#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "greedylab/coefficient_vector.hpp"
#include "greedylab/index_set.hpp"
#include "greedylab/normed_space.hpp"

namespace greedylab_test {

struct GridOracleResult {
    double value = 0.0;
    std::vector<double> argmin;
    long evaluations = 0;
};

// Independent Chebyshev oracle: exhaustive shrinking-grid minimization of
// g(a) = ||x - sum_{j in support} a_j e_j||, no line searches, no descent.
//
// Correctness: g is jointly convex, and every minimizer satisfies
// |a_j| <= 2||x|| (coordinate functionals have norm <= 1 in every shipped
// space, so g(a) >= |a_j| - ||x||, while g(a) <= g(0) = ||x||).  The box
// starts at that radius and halves each round while spanning +-3 grid cells
// around the per-round argmin, so the minimizer cannot escape.  40 rounds
// leave box width ~1e-11 of the start, far below the 1e-6 certification.
inline GridOracleResult grid_chebyshev(const greedylab::NormedSpace& space,
                                       const greedylab::CoefficientVector& x,
                                       const greedylab::IndexSet& support,
                                       int rounds = 40) {
    const std::size_t k = support.size();
    if (k > 3)
        throw std::invalid_argument("grid oracle handles supports of size <= 3");
    const std::vector<int> idx(support.begin(), support.end());

    GridOracleResult res;
    greedylab::CoefficientVector scratch = x;
    auto eval = [&](const std::vector<double>& a) {
        for (std::size_t j = 0; j < k; ++j)
            scratch.set(idx[j], x.coeff(idx[j]) - a[j]);
        ++res.evaluations;
        return space.norm(scratch);
    };

    if (k == 0) {
        res.value = space.norm(x);
        res.evaluations = 1;
        return res;
    }

    constexpr int kPoints = 13; // odd: the exact center is always a grid point
    std::vector<double> center(k, 0.0);
    double half = 2.0 * space.norm(x) + 1.0;

    std::vector<double> a(k), best_a(k, 0.0);
    double best = eval(best_a);

    for (int round = 0; round < rounds; ++round) {
        std::vector<int> at(k, 0);
        std::vector<int> best_at(k, kPoints / 2);
        bool improved_here = false;
        for (;;) {
            for (std::size_t j = 0; j < k; ++j)
                a[j] = center[j] + half * (2.0 * at[j] / (kPoints - 1) - 1.0);
            const double v = eval(a);
            if (v < best) {
                best = v;
                best_a = a;
                best_at = at;
                improved_here = true;
            }
            std::size_t j = 0;
            while (j < k && ++at[j] == kPoints) {
                at[j] = 0;
                ++j;
            }
            if (j == k) break;
        }
        if (improved_here)
            for (std::size_t j = 0; j < k; ++j)
                center[j] =
                    center[j] + half * (2.0 * best_at[j] / (kPoints - 1) - 1.0);
        half *= 0.5;
    }

    res.value = best;
    res.argmin = best_a;
    return res;
}

} // namespace greedylab_test
