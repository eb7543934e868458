#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "greedylab/coefficient_vector.hpp"
#include "greedylab/index_set.hpp"
#include "greedylab/normed_space.hpp"
#include "greedylab/rng.hpp"

namespace greedylab {

// Result of minimizing g(a) = ‖x − Σ_{n∈support} a_n e_n‖ over free a.
struct ChebyshevResult {
    std::vector<int> support;         // ascending indices
    std::vector<double> coefficients; // aligned with support
    double value = 0.0;               // g at the reported coefficients
    long evaluations = 0;
};

namespace detail {

// Objective evaluator with a reusable scratch vector.
class ChebObjective {
public:
    ChebObjective(const NormedSpace& space, const CoefficientVector& x,
                  const std::vector<int>& support)
        : space_(space), scratch_(x), x_(x), support_(support) {}

    double operator()(const std::vector<double>& a) {
        for (std::size_t j = 0; j < support_.size(); ++j)
            scratch_.set(support_[j], x_.coeff(support_[j]) - a[j]);
        ++count_;
        return space_.norm(scratch_);
    }

    long count() const { return count_; }

private:
    const NormedSpace& space_;
    CoefficientVector scratch_;
    const CoefficientVector& x_;
    const std::vector<int>& support_;
    long count_ = 0;
};

// Golden-section minimum of a convex function on [lo, hi] to interval width
// xtol; returns the midpoint of the final bracket.
template <class F>
double golden_min(F&& f, double lo, double hi, double xtol) {
    constexpr double invphi = 0.6180339887498949;
    constexpr double invphi2 = 1.0 - invphi;
    double a = lo, b = hi;
    double c = a + invphi2 * (b - a), d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = a + invphi2 * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace detail

// Chebyshev refinement on a fixed support: coordinate descent with
// golden-section line searches, started from the expansional coefficients
// (which are already optimal in one-unconditional norms).  For spaces not
// flagged one-unconditional, random-direction line searches guard against
// coordinate-descent stalls at nonsmooth points.  Flat optima are resolved,
// when resolve_flat is set, by replacing each coordinate with the midpoint of
// its certified optimal interval (value-preserving within tolerance).
inline ChebyshevResult chebyshev_refine(const NormedSpace& space,
                                        const CoefficientVector& x,
                                        const IndexSet& support,
                                        double tol = 1e-9,
                                        bool resolve_flat = true,
                                        std::size_t max_support = 8) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (support.size() > max_support)
        throw std::domain_error("chebyshev support exceeds solver guard (" +
                                std::to_string(max_support) + ")");
    if (!support.empty() && support.max_index() > static_cast<int>(space.dim()))
        throw std::invalid_argument("support outside space dimension");

    ChebyshevResult res;
    res.support = std::vector<int>(support.begin(), support.end());
    const std::size_t k = res.support.size();
    if (k == 0) {
        res.value = space.norm(x);
        res.evaluations = 1;
        return res;
    }

    detail::ChebObjective g(space, x, res.support);
    std::vector<double> a(k);
    for (std::size_t j = 0; j < k; ++j) a[j] = x.coeff(res.support[j]);
    double best = g(a);
    std::vector<double> best_a = a;

    auto line_min = [&](const std::vector<double>& dir) {
        // g(a + t*dir) is convex in t; if g(a + t*dir) <= g(a) then
        // |t|*‖Σ dir_j e_j‖ <= 2 g(a), which brackets every useful minimizer.
        CoefficientVector dvec(space.dim());
        for (std::size_t j = 0; j < k; ++j) dvec.set(res.support[j], dir[j]);
        double dnorm = space.norm(dvec);
        if (dnorm == 0.0) return;
        double radius = 2.0 * best / dnorm + 1.0;
        auto h = [&](double t) {
            std::vector<double> probe = a;
            for (std::size_t j = 0; j < k; ++j) probe[j] += t * dir[j];
            return g(probe);
        };
        double width = tol * 0.01 * (1.0 + best) + 1e-13;
        double t = detail::golden_min(h, -radius, radius, width);
        double v = h(t);
        if (v < best) {
            for (std::size_t j = 0; j < k; ++j) a[j] += t * dir[j];
            best = v;
            best_a = a;
        }
    };

    const int max_passes = 60;
    for (int pass = 0; pass < max_passes; ++pass) {
        double before = best;
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<double> dir(k, 0.0);
            dir[j] = 1.0;
            line_min(dir);
        }
        double gain = before - best;
        if (gain <= tol * 0.25 * (1.0 + best)) {
            bool improved = false;
            if (!space.one_unconditional()) {
                // Random-direction probes escape coordinate-descent stalls at
                // nonsmooth minima; deterministic per (dim, support).
                Rng rng(static_cast<std::uint64_t>(space.dim()) * 1315423911ull ^
                            support.mask(),
                        "chebyshev-probe");
                for (int p = 0; p < 12 && !improved; ++p) {
                    std::vector<double> dir(k);
                    double mx = 0.0;
                    for (auto& d : dir) {
                        d = rng.gaussian();
                        mx = std::max(mx, std::fabs(d));
                    }
                    if (mx == 0.0) continue;
                    for (auto& d : dir) d /= mx;
                    double before_probe = best;
                    line_min(dir);
                    improved = best < before_probe - tol * 0.25 * (1.0 + best);
                }
            }
            if (!improved) break;
        }
    }

    a = best_a;
    if (resolve_flat) {
        // Per coordinate, certify the interval where g stays within
        // flat_tol of the optimum and report its midpoint.
        double flat_tol = tol * (1.0 + best);
        for (std::size_t j = 0; j < k; ++j) {
            auto h = [&](double t) {
                double saved = a[j];
                a[j] = t;
                double v = g(a);
                a[j] = saved;
                return v;
            };
            double center = a[j];
            double cutoff = best + flat_tol;
            auto edge = [&](double sign) {
                double step = std::max(1e-9, tol * (1.0 + std::fabs(center)));
                double inside = center, outside = center + sign * step;
                int grow = 0;
                while (h(outside) <= cutoff && grow++ < 80) {
                    inside = outside;
                    step *= 2.0;
                    outside = center + sign * step;
                }
                // bisect between inside (<= cutoff) and outside (> cutoff)
                for (int it = 0; it < 60 && std::fabs(outside - inside) >
                                                 tol * 0.5 * (1.0 + std::fabs(inside));
                     ++it) {
                    double mid = 0.5 * (inside + outside);
                    if (h(mid) <= cutoff)
                        inside = mid;
                    else
                        outside = mid;
                }
                return inside;
            };
            double lo = edge(-1.0), hi = edge(+1.0);
            double mid = 0.5 * (lo + hi);
            if (h(mid) <= cutoff) a[j] = mid;
        }
        double v = g(a);
        if (v > best + flat_tol) {
            a = best_a; // revert; midpointing drifted (should not happen)
        }
    }

    res.coefficients = a;
    res.value = g(a);
    if (res.value > best + tol * (1.0 + best)) {
        res.coefficients = best_a;
        res.value = g(best_a);
    }
    res.evaluations = g.count();
    return res;
}

} // namespace greedylab
