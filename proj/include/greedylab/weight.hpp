#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "greedylab/index_set.hpp"

namespace greedylab {

// Positive weight sequence w = (w_1, w_2, ...).  The first `explicit_size()`
// entries are stored; an optional tail rule extends the sequence beyond them:
//   none       — querying past the stored entries is an error
//   geometric  — w_{d+k} = w_d * r^k for 0 < r < 1
//   harmonic   — w_n = 1/n past the stored entries
class Weight {
public:
    enum class Tail { none, geometric, harmonic };

    explicit Weight(std::vector<double> entries, Tail tail = Tail::none,
                    double ratio = 0.0)
        : entries_(std::move(entries)), tail_(tail), ratio_(ratio) {
        if (entries_.empty())
            throw std::invalid_argument("weight sequence must be nonempty");
        for (double v : entries_)
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::invalid_argument("weight entries must be positive and finite");
        if (tail_ == Tail::geometric && !(ratio_ > 0.0 && ratio_ < 1.0))
            throw std::invalid_argument("geometric tail ratio must lie in (0,1)");
    }

    static Weight constant(std::size_t d, double c = 1.0) {
        return Weight(std::vector<double>(d, c));
    }

    // w_n = 1/n, extended harmonically past the stored entries.
    static Weight harmonic(std::size_t d) {
        std::vector<double> e(d);
        for (std::size_t n = 0; n < d; ++n) e[n] = 1.0 / static_cast<double>(n + 1);
        return Weight(std::move(e), Tail::harmonic);
    }

    // w_n = r^{n-1}, extended geometrically past the stored entries.
    static Weight geometric(std::size_t d, double r) {
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("geometric ratio must lie in (0,1)");
        std::vector<double> e(d);
        double v = 1.0;
        for (std::size_t n = 0; n < d; ++n, v *= r) e[n] = v;
        return Weight(std::move(e), Tail::geometric, r);
    }

    std::size_t explicit_size() const { return entries_.size(); }
    Tail tail() const { return tail_; }
    double ratio() const { return ratio_; }

    double at(int i) const {
        if (i < 1) throw std::out_of_range("weight index is 1-based");
        std::size_t k = static_cast<std::size_t>(i);
        if (k <= entries_.size()) return entries_[k - 1];
        switch (tail_) {
        case Tail::none:
            throw std::out_of_range("weight index " + std::to_string(i) +
                                    " beyond stored entries and no tail rule");
        case Tail::geometric:
            return entries_.back() *
                   std::pow(ratio_, static_cast<double>(k - entries_.size()));
        case Tail::harmonic:
            return 1.0 / static_cast<double>(k);
        }
        throw std::logic_error("unreachable");
    }

    double measure(const IndexSet& a) const {
        double s = 0.0;
        for (int i : a) s += at(i);
        return s;
    }

    double min_explicit() const {
        double m = entries_[0];
        for (double v : entries_) m = std::min(m, v);
        return m;
    }

    double max_explicit() const {
        double m = entries_[0];
        for (double v : entries_) m = std::max(m, v);
        return m;
    }

    const std::vector<double>& entries() const { return entries_; }

private:
    std::vector<double> entries_;
    Tail tail_;
    double ratio_;
};

// w(A) = sum of w_i over A.
inline double w_measure(const Weight& w, const IndexSet& a) {
    return w.measure(a);
}

} // namespace greedylab
