#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "greedylab/index_set.hpp"

namespace greedylab {

// Finite real coefficient sequence x = x_1 e_1 + ... + x_d e_d against the
// canonical basis.  Coefficient access is 1-based to match the index
// convention used throughout.
class CoefficientVector {
public:
    CoefficientVector() = default;

    explicit CoefficientVector(std::size_t dim) : c_(dim, 0.0) {}

    CoefficientVector(std::initializer_list<double> cs) : c_(cs) {}

    explicit CoefficientVector(std::vector<double> cs) : c_(std::move(cs)) {}

    static CoefficientVector indicator(std::size_t dim, const IndexSet& a) {
        CoefficientVector x(dim);
        for (int i : a) x.set(i, 1.0);
        return x;
    }

    std::size_t dim() const { return c_.size(); }

    double coeff(int i) const {
        check(i);
        return c_[static_cast<std::size_t>(i) - 1];
    }

    void set(int i, double v) {
        check(i);
        c_[static_cast<std::size_t>(i) - 1] = v;
    }

    const std::vector<double>& data() const { return c_; }
    std::vector<double>& data() { return c_; }

    IndexSet support() const {
        std::vector<int> s;
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0.0) s.push_back(static_cast<int>(k) + 1);
        return IndexSet(std::move(s));
    }

    // Keep coefficients on `a`, zero elsewhere.
    CoefficientVector restrict_to(const IndexSet& a) const {
        CoefficientVector r(c_.size());
        for (int i : a)
            if (i <= static_cast<int>(c_.size())) r.set(i, coeff(i));
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : c_) m = std::max(m, std::fabs(v));
        return m;
    }

    friend CoefficientVector operator+(const CoefficientVector& a,
                                       const CoefficientVector& b) {
        check_dims(a, b);
        CoefficientVector r(a.c_.size());
        for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }

    friend CoefficientVector operator-(const CoefficientVector& a,
                                       const CoefficientVector& b) {
        check_dims(a, b);
        CoefficientVector r(a.c_.size());
        for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }

    friend CoefficientVector operator*(double s, const CoefficientVector& a) {
        CoefficientVector r(a.c_.size());
        for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = s * a.c_[k];
        return r;
    }

    friend bool operator==(const CoefficientVector& a, const CoefficientVector& b) {
        return a.c_ == b.c_;
    }

private:
    void check(int i) const {
        if (i < 1 || static_cast<std::size_t>(i) > c_.size())
            throw std::out_of_range("coefficient index out of range");
    }

    static void check_dims(const CoefficientVector& a, const CoefficientVector& b) {
        if (a.c_.size() != b.c_.size())
            throw std::invalid_argument("dimension mismatch");
    }

    std::vector<double> c_;
};

} // namespace greedylab
