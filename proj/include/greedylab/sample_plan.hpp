#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "greedylab/coefficient_vector.hpp"
#include "greedylab/rng.hpp"

namespace greedylab {

// How a deterministic batch of test vectors is generated.
struct SamplePlanSpec {
    std::uint64_t seed = 0;
    int random_count = 0;
    bool structured = true;
};

namespace detail {

inline void push_unique(std::vector<CoefficientVector>& plan,
                        const CoefficientVector& x) {
    for (const auto& y : plan)
        if (y == x) return;
    plan.push_back(x);
}

inline void structured_family(std::vector<CoefficientVector>& plan,
                              std::size_t dim) {
    const int d = static_cast<int>(dim);

    // singletons and one-sided indicators
    for (int i = 1; i <= d; ++i) {
        CoefficientVector e(dim);
        e.set(i, 1.0);
        push_unique(plan, e);
    }
    for (int k = 1; k <= d; ++k) {
        CoefficientVector x(dim);
        for (int i = 1; i <= k; ++i) x.set(i, 1.0);
        push_unique(plan, x);
    }
    for (int k = 2; k <= d; ++k) {
        CoefficientVector x(dim);
        for (int i = k; i <= d; ++i) x.set(i, 1.0);
        push_unique(plan, x);
    }

    // full alternating signs
    {
        CoefficientVector x(dim);
        for (int i = 1; i <= d; ++i) x.set(i, (i % 2 == 1) ? 1.0 : -1.0);
        push_unique(plan, x);
    }

    // near-tie block pairs: a flat block next to a slightly larger one, so the
    // greedy ordering is forced through the "wrong" half first
    for (int k = 1; 2 * k <= d; ++k) {
        for (double delta : {1e-3, 1e-1, 1.0}) {
            CoefficientVector a(dim), b(dim);
            for (int i = 1; i <= k; ++i) {
                a.set(i, 1.0);
                b.set(i, 1.0 + delta);
            }
            for (int i = k + 1; i <= 2 * k; ++i) {
                a.set(i, 1.0 + delta);
                b.set(i, 1.0);
            }
            push_unique(plan, a);
            push_unique(plan, b);
        }
    }
    if (d >= 2) {
        CoefficientVector x(dim);
        for (int i = 1; i <= d; ++i) x.set(i, (i % 2 == 1) ? 1.0 : 1.1);
        push_unique(plan, x);
    }

    // alternating signs on the first half, plain ones on the rest
    if (d >= 2) {
        CoefficientVector x(dim);
        const int h = d / 2;
        for (int i = 1; i <= h; ++i) x.set(i, (i % 2 == 1) ? 1.0 : -1.0);
        for (int i = h + 1; i <= d; ++i) x.set(i, 1.0);
        push_unique(plan, x);
    }

    // two-level tie plateaus (kept small so tie enumeration stays cheap)
    for (int t : {2, 4}) {
        if (2 * t > d) continue;
        CoefficientVector x(dim);
        for (int i = 1; i <= t; ++i) x.set(i, 1.0);
        for (int i = t + 1; i <= 2 * t; ++i) x.set(i, 0.5);
        push_unique(plan, x);
    }

    // decaying profiles
    for (double r : {0.5, 1.0 / 3.0}) {
        CoefficientVector x(dim), y(dim);
        double v = 1.0;
        for (int i = 1; i <= d; ++i, v *= r) {
            x.set(i, v);
            y.set(i, (i % 2 == 1) ? v : -v);
        }
        push_unique(plan, x);
        push_unique(plan, y);
    }
    {
        CoefficientVector x(dim), y(dim);
        for (int i = 1; i <= d; ++i) {
            x.set(i, 1.0 / i);
            y.set(i, ((i % 2 == 1) ? 1.0 : -1.0) / i);
        }
        push_unique(plan, x);
        push_unique(plan, y);
    }

    // plateau followed by geometric decay
    if (d >= 3) {
        CoefficientVector x(dim);
        const int plateau = (d + 2) / 3;
        for (int i = 1; i <= plateau; ++i) x.set(i, 1.0);
        double v = 0.5;
        for (int i = plateau + 1; i <= d; ++i, v *= 0.5) x.set(i, v);
        push_unique(plan, x);
    }
}

inline CoefficientVector random_vector(std::size_t dim, Rng& rng, int kind) {
    const int d = static_cast<int>(dim);
    for (;;) {
        CoefficientVector x(dim);
        bool nonzero = false;
        for (int i = 1; i <= d; ++i) {
            double v = 0.0;
            switch (kind % 4) {
            case 0: v = rng.gaussian(); break;
            case 1: v = rng.uniform(-1.0, 1.0); break;
            case 2: v = (rng.uniform01() < 0.5) ? 0.0 : rng.gaussian(); break;
            default: {
                double g = rng.gaussian();
                v = g * g * g;
                break;
            }
            }
            x.set(i, v);
            if (v != 0.0) nonzero = true;
        }
        if (nonzero) return x;
    }
}

} // namespace detail

// Deterministic batch of test vectors: a structured core (indicators, tie
// plateaus, near-tie blocks, sign patterns, decay profiles) plus optional
// seeded random draws.  The label keys the random stream, so distinct
// call sites get independent but reproducible batches.
inline std::vector<CoefficientVector> build_sample_plan(std::size_t dim,
                                                        const SamplePlanSpec& spec,
                                                        std::string_view label) {
    std::vector<CoefficientVector> plan;
    if (dim == 0) return plan;
    if (spec.structured) detail::structured_family(plan, dim);
    if (spec.random_count > 0) {
        Rng rng(spec.seed, std::string(label) + "/random");
        for (int k = 0; k < spec.random_count; ++k)
            plan.push_back(detail::random_vector(dim, rng, k));
    }
    return plan;
}

} // namespace greedylab
