#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "greedylab/rational.hpp"
#include "greedylab/set_function.hpp"

namespace greedylab {

// Outcome of deciding whether a set function is representable by a weight:
// does a weight w with w_i >= eps exist such that
//   f(A) <= f(B)  =>  w(A) <= w(B)      and
//   f(A) >  f(B)  =>  w(A) >= w(B) + eps
// for all subsets A, B of {1..universe}?  (The margin encodes the converse
// implication: together the two clauses force f(A) <= f(B) <=> w(A) <= w(B).)
struct FeasibilityResult {
    bool feasible = false;
    std::optional<std::vector<double>> witness; // w_1..w_N when feasible
    bool exact = false;                         // rational elimination path
};

namespace lin {

// One linear constraint sum_i c[i] * x_i <= rhs over rationals.
struct Row {
    std::vector<Rational> c;
    Rational rhs;
};

inline bool is_zero_row(const Row& r) {
    for (const auto& v : r.c)
        if (v.sign() != 0) return false;
    return true;
}

// Scale so the largest |coefficient| is 1; canonicalizes duplicates.
inline void normalize(Row& r) {
    Rational m(0);
    for (const auto& v : r.c) {
        Rational a = v.sign() < 0 ? -v : v;
        if (m < a) m = a;
    }
    if (m.sign() == 0) return;
    for (auto& v : r.c) v /= m;
    r.rhs /= m;
}

// Keep, per coefficient pattern, only the tightest right-hand side.
inline std::vector<Row> dedup(std::vector<Row> rows) {
    std::map<std::vector<std::pair<std::int64_t, std::int64_t>>, Rational> best;
    for (auto& r : rows) {
        normalize(r);
        std::vector<std::pair<std::int64_t, std::int64_t>> key;
        key.reserve(r.c.size());
        for (const auto& v : r.c) key.emplace_back(v.num(), v.den());
        auto it = best.find(key);
        if (it == best.end())
            best.emplace(std::move(key), r.rhs);
        else if (r.rhs < it->second)
            it->second = r.rhs;
    }
    std::vector<Row> out;
    out.reserve(best.size());
    for (auto& [key, rhs] : best) {
        Row r;
        r.c.reserve(key.size());
        for (auto& [n, d] : key) r.c.emplace_back(n, d);
        r.rhs = rhs;
        out.push_back(std::move(r));
    }
    return out;
}

// Exact Fourier-Motzkin feasibility with witness by back-substitution.
// Suitable only for a handful of variables (rows square per elimination).
class FourierMotzkin {
public:
    explicit FourierMotzkin(std::vector<Row> rows, std::size_t nvars)
        : nvars_(nvars) {
        levels_.resize(nvars + 1);
        levels_[nvars] = dedup(std::move(rows));
    }

    // Returns a satisfying point if one exists.
    std::optional<std::vector<Rational>> solve() {
        for (std::size_t k = nvars_; k >= 1; --k) {
            std::vector<Row> lower, upper, rest;
            for (const auto& r : levels_[k]) {
                int s = r.c[k - 1].sign();
                if (s > 0)
                    upper.push_back(r);
                else if (s < 0)
                    lower.push_back(r);
                else
                    rest.push_back(r);
            }
            for (const auto& u : upper)
                for (const auto& l : lower) {
                    // u: a_u x + ru <= bu (a_u > 0); l: a_l x + rl <= bl (a_l < 0).
                    // (-a_l) * u + a_u * l eliminates x.
                    Rational au = u.c[k - 1], al = l.c[k - 1];
                    Row combo;
                    combo.c.resize(k - 1);
                    for (std::size_t i = 0; i + 1 < k; ++i)
                        combo.c[i] = (-al) * u.c[i] + au * l.c[i];
                    combo.rhs = (-al) * u.rhs + au * l.rhs;
                    rest.push_back(std::move(combo));
                }
            std::vector<Row> next;
            for (auto& r : rest) {
                Row rr;
                rr.c.assign(r.c.begin(), r.c.begin() + (k - 1));
                rr.rhs = r.rhs;
                if (is_zero_row(rr)) {
                    if (rr.rhs < Rational(0)) return std::nullopt; // 0 <= rhs fails
                    continue;
                }
                next.push_back(std::move(rr));
            }
            levels_[k - 1] = dedup(std::move(next));
        }
        // Feasible; back-substitute from x_1 upward, taking interval midpoints
        // (or the finite end when one side is unbounded).
        std::vector<Rational> x(nvars_);
        for (std::size_t k = 1; k <= nvars_; ++k) {
            std::optional<Rational> lo, hi;
            for (const auto& r : levels_[k]) {
                Rational a = r.c[k - 1];
                if (a.sign() == 0) continue;
                Rational rest(0);
                for (std::size_t i = 0; i + 1 < k; ++i) rest += r.c[i] * x[i];
                Rational bound = (r.rhs - rest) / a;
                if (a.sign() > 0) {
                    if (!hi || bound < *hi) hi = bound;
                } else {
                    if (!lo || bound > *lo) lo = bound;
                }
            }
            if (lo && hi) {
                if (*hi < *lo)
                    throw std::logic_error("elimination invariant violated");
                x[k - 1] = (*lo + *hi) / Rational(2);
            } else if (lo) {
                x[k - 1] = *lo;
            } else if (hi) {
                x[k - 1] = *hi;
            } else {
                x[k - 1] = Rational(0);
            }
        }
        return x;
    }

private:
    std::size_t nvars_;
    std::vector<std::vector<Row>> levels_;
};

// Phase-1 simplex (single artificial column, Bland's rule) for
//   does u >= 0 exist with C u <= b ?
// Minimizes t subject to C u - t*1 <= b, t >= 0; feasible iff min t ~ 0.
class Phase1Simplex {
public:
    Phase1Simplex(std::vector<std::vector<double>> C, std::vector<double> b)
        : C_(std::move(C)), b_(std::move(b)) {}

    std::optional<std::vector<double>> solve() {
        std::size_t m = C_.size();
        std::size_t nu = C_.empty() ? 0 : C_[0].size();
        bool need_t = false;
        for (double v : b_)
            if (v < 0.0) need_t = true;
        if (!need_t) return std::vector<double>(nu, 0.0);

        std::size_t tcol = nu, ncols = nu + 1 + m; // u..., t, slacks
        std::vector<std::vector<double>> T(m + 1, std::vector<double>(ncols + 1, 0.0));
        std::vector<std::size_t> basis(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < nu; ++j) T[i][j] = C_[i][j];
            T[i][tcol] = -1.0;
            T[i][nu + 1 + i] = 1.0;
            T[i][ncols] = b_[i];
            basis[i] = nu + 1 + i;
        }
        // Objective row: minimize t  (stored as reduced costs; value in corner).
        T[m][tcol] = 1.0;

        // Driving pivot: bring t into the basis at the most negative rhs row.
        std::size_t r = 0;
        for (std::size_t i = 1; i < m; ++i)
            if (T[i][ncols] < T[r][ncols]) r = i;
        pivot(T, basis, r, tcol, ncols);

        const double tol = 1e-9;
        for (long iter = 0; iter < 200000; ++iter) {
            // Bland: smallest-index column with negative reduced cost.
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j)
                if (T[m][j] < -tol) {
                    enter = j;
                    break;
                }
            if (enter == ncols) break; // optimal
            std::size_t leave = m;
            double best_ratio = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                if (T[i][enter] > tol) {
                    double ratio = T[i][ncols] / T[i][enter];
                    if (leave == m || ratio < best_ratio - 1e-15 ||
                        (std::abs(ratio - best_ratio) <= 1e-15 &&
                         basis[i] < basis[leave]))
                    {
                        leave = i;
                        best_ratio = ratio;
                    }
                }
            }
            if (leave == m)
                throw std::runtime_error("phase-1 objective unbounded");
            pivot(T, basis, leave, enter, ncols);
        }
        double tstar = -T[m][ncols]; // corner holds -objective
        if (tstar > 1e-7) return std::nullopt;
        std::vector<double> u(nu, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < nu) u[basis[i]] = std::max(0.0, T[i][ncols]);
        return u;
    }

private:
    static void pivot(std::vector<std::vector<double>>& T,
                      std::vector<std::size_t>& basis, std::size_t r,
                      std::size_t c, std::size_t ncols) {
        double piv = T[r][c];
        for (auto& v : T[r]) v /= piv;
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (i == r) continue;
            double f = T[i][c];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= ncols; ++j) T[i][j] -= f * T[r][j];
        }
        if (r < basis.size()) basis[r] = c;
    }

    std::vector<std::vector<double>> C_;
    std::vector<double> b_;
};

} // namespace lin

namespace detail {

// Constraint patterns for weight representability on {1..n}: for each ordered
// subset pair the difference vector 1_{A\B} - 1_{B\A}, with right-hand side 0
// (when f(A) <= f(B)) or -eps (encoding w(B\A) - w(A\B) <= -eps after sign
// flip of the strict case).  Patterns are deduplicated to the tightest rhs.
inline std::vector<lin::Row> representability_rows(const SetFunction& f, int n,
                                                   const Rational& eps) {
    auto vals = all_subset_values(f, n);
    std::size_t total = vals.size();
    std::vector<lin::Row> rows;
    // w_i >= eps.
    for (int i = 0; i < n; ++i) {
        lin::Row r;
        r.c.assign(n, Rational(0));
        r.c[i] = Rational(-1);
        r.rhs = -eps;
        rows.push_back(std::move(r));
    }
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b) {
            if (a == b) continue;
            std::size_t aonly = a & ~b, bonly = b & ~a;
            lin::Row r;
            r.c.assign(n, Rational(0));
            if (vals[a] <= vals[b]) {
                // w(A\B) - w(B\A) <= 0
                for (int i = 0; i < n; ++i) {
                    if (aonly >> i & 1) r.c[i] = Rational(1);
                    if (bonly >> i & 1) r.c[i] = Rational(-1);
                }
                r.rhs = Rational(0);
            } else {
                // w(A) >= w(B) + eps  <=>  w(B\A) - w(A\B) <= -eps
                for (int i = 0; i < n; ++i) {
                    if (bonly >> i & 1) r.c[i] = Rational(1);
                    if (aonly >> i & 1) r.c[i] = Rational(-1);
                }
                r.rhs = -eps;
            }
            rows.push_back(std::move(r));
        }
    return lin::dedup(std::move(rows));
}

} // namespace detail

// Decide weight representability of f on {1..universe}.  Exact rational
// elimination for universe <= 3; floating phase-1 simplex with margin beyond
// that (universe <= 6).
inline FeasibilityResult weight_representable(const SetFunction& f, int universe,
                                              double epsilon = 1.0) {
    if (universe < 1 || universe > 6)
        throw std::invalid_argument("weight_representable: universe must lie in [1,6]");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("weight_representable: epsilon must be > 0");
    // The system is positively homogeneous: scale to eps = 1, scale back after.
    auto rows = detail::representability_rows(f, universe, Rational(1));

    if (universe <= 3) {
        lin::FourierMotzkin fm(rows, static_cast<std::size_t>(universe));
        auto sol = fm.solve();
        if (!sol) return {false, std::nullopt, true};
        std::vector<double> w(universe);
        for (int i = 0; i < universe; ++i)
            w[i] = sol->at(i).to_double() * epsilon;
        return {true, std::move(w), true};
    }

    // Substitute w = 1 + u, u >= 0, dropping the w_i >= 1 rows (automatic).
    std::vector<std::vector<double>> C;
    std::vector<double> b;
    for (const auto& r : rows) {
        bool bound_row = false;
        int nonzero = 0;
        for (const auto& v : r.c)
            if (v.sign() != 0) ++nonzero;
        if (nonzero == 1)
            for (int i = 0; i < universe; ++i)
                if (r.c[i] == Rational(-1) && r.rhs == Rational(-1)) bound_row = true;
        if (bound_row) continue;
        std::vector<double> cc(universe);
        double shift = 0.0;
        for (int i = 0; i < universe; ++i) {
            cc[i] = r.c[i].to_double();
            shift += cc[i];
        }
        C.push_back(std::move(cc));
        b.push_back(r.rhs.to_double() - shift);
    }
    lin::Phase1Simplex lp(std::move(C), std::move(b));
    auto u = lp.solve();
    if (!u) return {false, std::nullopt, false};
    std::vector<double> w(universe);
    for (int i = 0; i < universe; ++i) w[i] = (1.0 + (*u)[i]) * epsilon;
    return {true, std::move(w), false};
}

} // namespace greedylab
