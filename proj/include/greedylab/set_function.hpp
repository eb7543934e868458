#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "greedylab/index_set.hpp"
#include "greedylab/rational.hpp"
#include "greedylab/weight.hpp"

namespace greedylab {

// Convert a double to the exact rational it represents.  Throws on values
// whose dyadic representation does not fit int64 numerator/denominator.
inline Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("non-finite value");
    if (v == 0.0) return Rational(0);
    int e = 0;
    double m = std::frexp(v, &e); // v = m * 2^e, 0.5 <= |m| < 1
    auto num = static_cast<std::int64_t>(std::ldexp(m, 53)); // |num| < 2^53
    int shift = e - 53;
    while (shift < 0 && (num % 2) == 0) { // reduce before range checks
        num /= 2;
        ++shift;
    }
    if (shift >= 0) {
        if (shift > 9) throw std::overflow_error("value too large for exact rational");
        return Rational(num << shift);
    }
    if (shift < -62) throw std::overflow_error("value too small for exact rational");
    return Rational(num, std::int64_t{1} << (-shift));
}

// Strictly monotone set function with the cancellation property
//   f(A) <= f(B)  implies  f(A\B) <= f(B\A)
// that is nevertheless not induced by any weight.  Values on subsets of
// {1,2,3} come from a fixed table; beyond that, nu(A) = nu(A1) + |A2| with
// A1 = A ∩ {1,2,3} and A2 = A \ {1,2,3}.
inline Rational nu_eval(const IndexSet& a) {
    // Indexed by mask over {1,2,3}: bit0=1, bit1=2, bit2=3.
    static const std::array<Rational, 8> table = {
        Rational(0),     // {}
        Rational(1, 4),  // {1}
        Rational(1, 4),  // {2}
        Rational(5, 16), // {1,2}
        Rational(1, 4),  // {3}
        Rational(7, 16), // {1,3}
        Rational(3, 8),  // {2,3}
        Rational(1, 2),  // {1,2,3}
    };
    unsigned core = 0;
    std::int64_t extra = 0;
    for (int i : a) {
        if (i <= 3)
            core |= 1u << (i - 1);
        else
            ++extra;
    }
    return table[core] + Rational(extra);
}

// Nonnegative set function with f(∅) = 0, evaluated exactly.
class SetFunction {
public:
    enum class Kind { weight_induced, counterexample, table };

    static SetFunction weight_induced(Weight w) {
        SetFunction f(Kind::weight_induced);
        f.weight_ = std::move(w);
        return f;
    }

    static SetFunction counterexample() { return SetFunction(Kind::counterexample); }

    // Explicit table keyed by subset mask (bit i-1 <-> index i).  Must map
    // the empty set to 0 and every value must be nonnegative.
    static SetFunction table(std::map<std::uint64_t, Rational> values) {
        SetFunction f(Kind::table);
        auto it = values.find(0);
        if (it == values.end() || it->second != Rational(0))
            throw std::invalid_argument("table set function needs value 0 on {}");
        for (const auto& [mask, v] : values)
            if (v < Rational(0))
                throw std::invalid_argument("set function values must be >= 0");
        f.table_ = std::move(values);
        return f;
    }

    Kind kind() const { return kind_; }

    Rational value(const IndexSet& a) const {
        switch (kind_) {
        case Kind::counterexample:
            return nu_eval(a);
        case Kind::weight_induced: {
            Rational s(0);
            for (int i : a) s += rational_from_double(weight_->at(i));
            return s;
        }
        case Kind::table: {
            auto it = table_.find(a.mask());
            if (it == table_.end())
                throw std::out_of_range("table set function has no entry for " +
                                        a.str());
            return it->second;
        }
        }
        throw std::logic_error("unreachable");
    }

private:
    explicit SetFunction(Kind k) : kind_(k) {}

    Kind kind_;
    std::optional<Weight> weight_;
    std::map<std::uint64_t, Rational> table_;
};

struct SetPairCheck {
    bool holds = true;
    std::optional<std::pair<IndexSet, IndexSet>> witness; // first violating (A,B)
};

namespace detail {

inline std::vector<Rational> all_subset_values(const SetFunction& f, int universe) {
    if (universe < 1 || universe > 12)
        throw std::invalid_argument("universe size must lie in [1,12]");
    std::size_t total = std::size_t{1} << universe;
    std::vector<Rational> vals(total);
    for (std::size_t m = 0; m < total; ++m)
        vals[m] = f.value(IndexSet::from_mask(m));
    return vals;
}

} // namespace detail

// Cancellation property: f(A) <= f(B) implies f(A\B) <= f(B\A), checked
// exhaustively over all ordered pairs of subsets of {1..universe}.
// Values are cached per subset, so the pair loop is pure comparisons.
inline SetPairCheck check_property_star(const SetFunction& f, int universe) {
    auto vals = detail::all_subset_values(f, universe);
    std::size_t total = vals.size();
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b) {
            if (!(vals[a] <= vals[b])) continue;
            if (vals[a & ~b] > vals[b & ~a])
                return {false, std::make_pair(IndexSet::from_mask(a),
                                              IndexSet::from_mask(b))};
        }
    return {};
}

// Strict monotonicity: A ⊊ B implies f(A) < f(B), checked exhaustively.
inline SetPairCheck check_strict_monotone(const SetFunction& f, int universe) {
    auto vals = detail::all_subset_values(f, universe);
    std::size_t total = vals.size();
    for (std::size_t b = 1; b < total; ++b) {
        // Proper submasks of b, including the empty set.
        std::size_t a = (b - 1) & b;
        while (true) {
            if (!(vals[a] < vals[b]))
                return {false, std::make_pair(IndexSet::from_mask(a),
                                              IndexSet::from_mask(b))};
            if (a == 0) break;
            a = (a - 1) & b;
        }
    }
    return {};
}

} // namespace greedylab
