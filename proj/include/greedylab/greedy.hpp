#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "greedylab/coefficient_vector.hpp"
#include "greedylab/index_set.hpp"

namespace greedylab {

// A greedy ordering: permutation rho of {1..dim} along which the coefficient
// moduli are nonincreasing, together with the maximal tie groups (runs of
// equal modulus within tie_tol), listed in rho order.
struct GreedyOrdering {
    std::vector<int> rho;
    std::vector<std::vector<int>> tie_groups;
};

enum class TiePolicy { lowest_index, all, given };

namespace detail {

// Indices 1..dim grouped by modulus: groups in decreasing-modulus order,
// ascending indices inside each group.  Ties chain within tie_tol.
inline std::vector<std::vector<int>> modulus_groups(const CoefficientVector& x,
                                                    double tie_tol) {
    if (tie_tol < 0.0) throw std::invalid_argument("tie_tol must be >= 0");
    std::vector<int> idx(x.dim());
    std::iota(idx.begin(), idx.end(), 1);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        double ma = std::fabs(x.coeff(a)), mb = std::fabs(x.coeff(b));
        if (ma != mb) return ma > mb;
        return a < b;
    });
    std::vector<std::vector<int>> groups;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        double m = std::fabs(x.coeff(idx[k]));
        if (groups.empty() ||
            std::fabs(x.coeff(groups.back().back())) - m > tie_tol)
            groups.push_back({});
        groups.back().push_back(idx[k]);
    }
    return groups;
}

inline GreedyOrdering ordering_from_groups(std::vector<std::vector<int>> groups) {
    GreedyOrdering o;
    for (auto& g : groups)
        for (int i : g) o.rho.push_back(i);
    o.tie_groups = std::move(groups);
    return o;
}

} // namespace detail

// Canonical ordering: ties broken by ascending index.
inline GreedyOrdering greedy_ordering(const CoefficientVector& x,
                                      double tie_tol = 0.0) {
    return detail::ordering_from_groups(detail::modulus_groups(x, tie_tol));
}

// Every admissible ordering under ties, as the product of per-group
// permutations.  The count is capped; exceeding the cap either throws or
// truncates (truncation yields a deterministic prefix, still admissible).
inline std::vector<GreedyOrdering> all_greedy_orderings(
    const CoefficientVector& x, double tie_tol = 0.0, std::size_t cap = 720,
    bool throw_on_cap = true) {
    auto groups = detail::modulus_groups(x, tie_tol);
    if (throw_on_cap) {
        std::size_t count = 1;
        for (const auto& g : groups) {
            for (std::size_t k = 2; k <= g.size(); ++k) {
                count *= k;
                if (count > cap)
                    throw std::domain_error(
                        "tie-enumeration cap exceeded (" + std::to_string(cap) +
                        " orderings)");
            }
        }
    }
    std::vector<GreedyOrdering> out;
    std::vector<std::vector<int>> current(groups.size());
    for (std::size_t k = 0; k < groups.size(); ++k) current[k] = groups[k];
    // Odometer over per-group permutations, last group fastest.
    while (true) {
        out.push_back(detail::ordering_from_groups(current));
        if (out.size() >= cap && !throw_on_cap) break;
        std::size_t k = groups.size();
        bool advanced = false;
        while (k-- > 0) {
            if (std::next_permutation(current[k].begin(), current[k].end())) {
                advanced = true;
                break;
            }
            // wrapped to ascending; carry to previous group
        }
        if (!advanced) break;
    }
    return out;
}

// Validate a caller-supplied permutation as an admissible greedy ordering.
inline GreedyOrdering ordering_from_permutation(const CoefficientVector& x,
                                                const std::vector<int>& perm,
                                                double tie_tol = 0.0) {
    if (perm.size() != x.dim())
        throw std::invalid_argument("permutation length must equal dim");
    auto groups = detail::modulus_groups(x, tie_tol);
    std::size_t pos = 0;
    std::vector<std::vector<int>> permuted_groups;
    for (const auto& g : groups) {
        std::vector<int> slice(perm.begin() + pos, perm.begin() + pos + g.size());
        std::vector<int> sorted_slice = slice;
        std::sort(sorted_slice.begin(), sorted_slice.end());
        if (sorted_slice != g)
            throw std::invalid_argument(
                "permutation is not admissible: moduli not nonincreasing");
        permuted_groups.push_back(std::move(slice));
        pos += g.size();
    }
    GreedyOrdering o;
    o.rho = perm;
    o.tie_groups = std::move(permuted_groups);
    return o;
}

inline IndexSet greedy_support(const GreedyOrdering& o, int m) {
    if (m < 0 || static_cast<std::size_t>(m) > o.rho.size())
        throw std::out_of_range("greedy level m out of range");
    return IndexSet(std::vector<int>(o.rho.begin(), o.rho.begin() + m));
}

// Keep x's entries on the support, zero elsewhere.
inline CoefficientVector project(const CoefficientVector& x, const IndexSet& s) {
    return x.restrict_to(s);
}

inline CoefficientVector greedy_sum(const CoefficientVector& x,
                                    const GreedyOrdering& o, int m) {
    return project(x, greedy_support(o, m));
}

// All supports Lambda_m achievable by some admissible ordering: the union of
// full tie groups above the boundary plus every r-subset of the boundary
// group.  Enumerated in lexicographic order of the chosen boundary subset.
inline std::vector<IndexSet> admissible_supports(const CoefficientVector& x,
                                                 int m, double tie_tol = 0.0) {
    if (m < 0 || static_cast<std::size_t>(m) > x.dim())
        throw std::out_of_range("greedy level m out of range");
    auto groups = detail::modulus_groups(x, tie_tol);
    std::vector<int> fixed;
    std::size_t need = static_cast<std::size_t>(m), gi = 0;
    while (gi < groups.size() && need >= groups[gi].size()) {
        fixed.insert(fixed.end(), groups[gi].begin(), groups[gi].end());
        need -= groups[gi].size();
        ++gi;
    }
    std::vector<IndexSet> out;
    if (need == 0) {
        out.push_back(IndexSet(fixed));
        return out;
    }
    const auto& boundary = groups[gi]; // ascending
    std::vector<std::size_t> pick(need);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<int> s = fixed;
        for (std::size_t p : pick) s.push_back(boundary[p]);
        out.push_back(IndexSet(std::move(s)));
        // next combination in lexicographic order
        std::size_t i = need;
        while (i-- > 0) {
            if (pick[i] + (need - i) < boundary.size()) {
                ++pick[i];
                for (std::size_t j = i + 1; j < need; ++j)
                    pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

// Coordinatewise clamp to [-M, M].
inline CoefficientVector truncate(const CoefficientVector& x, double M) {
    if (!(M > 0.0) || !std::isfinite(M))
        throw std::invalid_argument("truncation level M must be positive");
    CoefficientVector r(x.dim());
    for (int i = 1; i <= static_cast<int>(x.dim()); ++i) {
        double v = x.coeff(i);
        r.set(i, std::clamp(v, -M, M));
    }
    return r;
}

// A bundle of x with the orderings under consideration.
struct GreedyRun {
    CoefficientVector x;
    std::vector<GreedyOrdering> orderings;

    IndexSet support(std::size_t ordering_index, int m) const {
        return greedy_support(orderings.at(ordering_index), m);
    }
    CoefficientVector greedy(std::size_t ordering_index, int m) const {
        return project(x, support(ordering_index, m));
    }
    CoefficientVector residual(std::size_t ordering_index, int m) const {
        return x - greedy(ordering_index, m);
    }
};

inline GreedyRun make_greedy_run(const CoefficientVector& x, TiePolicy policy,
                                 double tie_tol = 0.0, std::size_t cap = 720,
                                 const std::vector<int>* given = nullptr) {
    GreedyRun run;
    run.x = x;
    switch (policy) {
    case TiePolicy::lowest_index:
        run.orderings.push_back(greedy_ordering(x, tie_tol));
        break;
    case TiePolicy::all:
        run.orderings = all_greedy_orderings(x, tie_tol, cap, true);
        break;
    case TiePolicy::given:
        if (!given)
            throw std::invalid_argument("given-permutation policy needs a permutation");
        run.orderings.push_back(ordering_from_permutation(x, *given, tie_tol));
        break;
    }
    return run;
}

} // namespace greedylab
