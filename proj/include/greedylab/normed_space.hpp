#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greedylab/coefficient_vector.hpp"

namespace greedylab {

enum class SpaceKind { lp, sup, mixed, combination };

// One weighted lp component of a combination norm:
// (sum_n weights[n] * |x_n|^p)^(1/p).
struct CombinationComponent {
    double p = 1.0;
    std::vector<double> weights;
};

// Finite-dimensional real normed space over the canonical basis (e_n).
// Kinds:
//   lp(p)        ‖x‖ = (Σ |x_n|^p)^{1/p},  p ≥ 1
//   sup          ‖x‖ = max |x_n|
//   mixed(w)     ‖x‖ = max( max |x_n|, (Σ x_n² w_n)^{1/2} ),  0 < w_n ≤ 1
//   combination  ‖x‖ = max_j of weighted lp components, coordinates rescaled
//                so every basis vector has norm exactly 1
// The basis is normalized in every kind.
class NormedSpace {
public:
    static NormedSpace lp(std::size_t dim, double p) {
        check_dim(dim);
        if (!(p >= 1.0) || !std::isfinite(p))
            throw std::invalid_argument("lp exponent must satisfy p >= 1");
        NormedSpace s(SpaceKind::lp, dim);
        s.p_ = p;
        s.one_unconditional_ = true;
        s.exact_quasi_greedy_ = 1.0;
        s.name_ = "lp(" + trim_num(p) + ",d=" + std::to_string(dim) + ")";
        return s;
    }

    static NormedSpace sup(std::size_t dim) {
        check_dim(dim);
        NormedSpace s(SpaceKind::sup, dim);
        s.one_unconditional_ = true;
        s.exact_quasi_greedy_ = 1.0;
        s.name_ = "sup(d=" + std::to_string(dim) + ")";
        return s;
    }

    // ‖x‖ = max( sup_n |x_n| , (Σ x_n² w_n)^{1/2} ).  Entries of w must lie
    // in (0, 1] so that ‖e_n‖ = max(1, √w_n) = 1.
    static NormedSpace mixed(std::size_t dim, std::vector<double> w,
                             std::string weight_tag = "") {
        check_dim(dim);
        if (w.size() != dim)
            throw std::invalid_argument("mixed norm needs a weight of length dim");
        for (double v : w)
            if (!(v > 0.0 && v <= 1.0) || !std::isfinite(v))
                throw std::invalid_argument(
                    "mixed norm weight entries must lie in (0,1]");
        NormedSpace s(SpaceKind::mixed, dim);
        s.mixed_w_ = std::move(w);
        s.one_unconditional_ = true;
        s.exact_quasi_greedy_ = 1.0;
        s.name_ = "mixed(" + (weight_tag.empty() ? std::string("w") : weight_tag) +
                  ",d=" + std::to_string(dim) + ")";
        return s;
    }

    // Max of finitely many weighted lp components.  Coordinates are rescaled
    // so that ‖e_n‖ = 1.  The flag `one_unconditional` is caller-declared
    // metadata: when false the space is treated as empirical (sampled lower
    // bounds only, no exact quasi-greedy constant).
    static NormedSpace combination(std::size_t dim,
                                   std::vector<CombinationComponent> comps,
                                   bool one_unconditional = false) {
        check_dim(dim);
        if (comps.empty())
            throw std::invalid_argument("combination norm needs >= 1 component");
        for (const auto& c : comps) {
            if (!(c.p >= 1.0) || !std::isfinite(c.p))
                throw std::invalid_argument("component exponent must satisfy p >= 1");
            if (c.weights.size() != dim)
                throw std::invalid_argument(
                    "component weights must have length dim");
            for (double v : c.weights)
                if (!(v >= 0.0) || !std::isfinite(v))
                    throw std::invalid_argument(
                        "component weights must be nonnegative and finite");
        }
        NormedSpace s(SpaceKind::combination, dim);
        s.comps_ = std::move(comps);
        s.scale_.assign(dim, 0.0);
        for (std::size_t n = 0; n < dim; ++n) {
            double raw = 0.0;
            for (const auto& c : s.comps_)
                raw = std::max(raw, std::pow(c.weights[n], 1.0 / c.p));
            if (!(raw > 0.0))
                throw std::invalid_argument(
                    "every coordinate needs positive weight in some component");
            s.scale_[n] = 1.0 / raw;
        }
        s.one_unconditional_ = one_unconditional;
        if (one_unconditional) s.exact_quasi_greedy_ = 1.0;
        s.name_ = "combination(" + std::to_string(s.comps_.size()) +
                  "comp,d=" + std::to_string(dim) + ")";
        return s;
    }

    SpaceKind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    bool one_unconditional() const { return one_unconditional_; }
    std::optional<double> exact_quasi_greedy_constant() const {
        return exact_quasi_greedy_;
    }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    double p() const { return p_; }
    const std::vector<double>& mixed_weight() const { return mixed_w_; }

    double norm(const CoefficientVector& x) const {
        if (x.dim() != dim_)
            throw std::invalid_argument("norm: dimension mismatch");
        const auto& v = x.data();
        for (double c : v)
            if (!std::isfinite(c))
                throw std::invalid_argument("norm: non-finite entry");
        switch (kind_) {
        case SpaceKind::sup:
            return x.max_abs();
        case SpaceKind::lp:
            return weighted_lp(v, nullptr, nullptr, p_);
        case SpaceKind::mixed: {
            double q = 0.0;
            for (std::size_t n = 0; n < dim_; ++n) q += v[n] * v[n] * mixed_w_[n];
            return std::max(x.max_abs(), std::sqrt(q));
        }
        case SpaceKind::combination: {
            double best = 0.0;
            for (const auto& c : comps_)
                best = std::max(best,
                                weighted_lp(v, &c.weights, &scale_, c.p));
            return best;
        }
        }
        throw std::logic_error("unreachable");
    }

    double norm_of_indicator(const IndexSet& a) const {
        return norm(CoefficientVector::indicator(dim_, a));
    }

private:
    NormedSpace(SpaceKind k, std::size_t d) : kind_(k), dim_(d) {}

    static void check_dim(std::size_t dim) {
        if (dim < 1) throw std::invalid_argument("dim must be >= 1");
    }

    // (Σ a_n |s_n x_n|^p)^{1/p} with max-scaling for numerical stability;
    // null a / null s mean all-ones.
    static double weighted_lp(const std::vector<double>& x,
                              const std::vector<double>* a,
                              const std::vector<double>* s, double p) {
        double m = 0.0;
        for (std::size_t n = 0; n < x.size(); ++n) {
            double t = std::fabs(x[n]) * (s ? (*s)[n] : 1.0);
            if (!a || (*a)[n] > 0.0) m = std::max(m, t);
        }
        if (m == 0.0) return 0.0;
        double acc = 0.0;
        for (std::size_t n = 0; n < x.size(); ++n) {
            double t = std::fabs(x[n]) * (s ? (*s)[n] : 1.0);
            if (t == 0.0) continue;
            double coef = a ? (*a)[n] : 1.0;
            if (coef == 0.0) continue;
            acc += coef * std::pow(t / m, p);
        }
        return m * std::pow(acc, 1.0 / p);
    }

    static std::string trim_num(double v) {
        std::string s = std::to_string(v);
        while (s.find('.') != std::string::npos &&
               (s.back() == '0' || s.back() == '.')) {
            bool dot = s.back() == '.';
            s.pop_back();
            if (dot) break;
        }
        return s;
    }

    SpaceKind kind_;
    std::size_t dim_;
    double p_ = 2.0;
    std::vector<double> mixed_w_;
    std::vector<CombinationComponent> comps_;
    std::vector<double> scale_;
    bool one_unconditional_ = false;
    std::optional<double> exact_quasi_greedy_;
    std::string name_;
};

// Result of estimating the basis constant β = sup ‖P_m x‖ / ‖x‖ over
// initial-segment projections P_m.
struct BasisConstantEstimate {
    double value = 1.0;
    bool exact = false;
    // Witness attaining the reported value: (vector, split index m).
    std::optional<std::pair<CoefficientVector, int>> witness;
};

// For one-unconditional spaces β = 1 exactly (coordinate projections are
// contractions).  Otherwise maximizes ‖P_m x‖/‖x‖ over the samples and all
// split indices; the result is a certified lower bound.
inline BasisConstantEstimate basis_constant(
    const NormedSpace& space, const std::vector<CoefficientVector>& samples) {
    if (space.one_unconditional()) return {1.0, true, std::nullopt};
    if (samples.empty())
        throw std::invalid_argument("basis_constant: empty sample plan");
    BasisConstantEstimate est;
    est.value = 1.0;
    est.exact = false;
    for (const auto& x : samples) {
        double nx = space.norm(x);
        if (nx == 0.0) continue;
        for (int m = 1; m <= static_cast<int>(space.dim()); ++m) {
            CoefficientVector px(space.dim());
            for (int i = 1; i <= m; ++i) px.set(i, x.coeff(i));
            double r = space.norm(px) / nx;
            if (r > est.value) {
                est.value = r;
                est.witness = {x, m};
            }
        }
    }
    return est;
}

} // namespace greedylab
