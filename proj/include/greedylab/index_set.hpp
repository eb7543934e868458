#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace greedylab {

// Finite set of basis indices (1-based), kept sorted ascending.
class IndexSet {
public:
    IndexSet() = default;

    IndexSet(std::initializer_list<int> is) : idx_(is) { normalize(); }

    explicit IndexSet(std::vector<int> is) : idx_(std::move(is)) { normalize(); }

    // Bit i of the mask corresponds to index i + 1.
    static IndexSet from_mask(std::uint64_t mask) {
        IndexSet s;
        for (int i = 0; mask != 0; ++i, mask >>= 1)
            if (mask & 1u) s.idx_.push_back(i + 1);
        return s;
    }

    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (int i : idx_) {
            if (i > 64) throw std::domain_error("index too large for mask");
            m |= std::uint64_t{1} << (i - 1);
        }
        return m;
    }

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }

    bool contains(int i) const {
        return std::binary_search(idx_.begin(), idx_.end(), i);
    }

    void insert(int i) {
        if (i < 1) throw std::domain_error("basis indices are 1-based");
        auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
        if (it == idx_.end() || *it != i) idx_.insert(it, i);
    }

    int max_index() const { return idx_.empty() ? 0 : idx_.back(); }
    int min_index() const { return idx_.empty() ? 0 : idx_.front(); }

    bool subset_of(const IndexSet& other) const {
        return std::includes(other.idx_.begin(), other.idx_.end(),
                             idx_.begin(), idx_.end());
    }

    friend IndexSet set_union(const IndexSet& a, const IndexSet& b) {
        IndexSet r;
        std::set_union(a.idx_.begin(), a.idx_.end(), b.idx_.begin(), b.idx_.end(),
                       std::back_inserter(r.idx_));
        return r;
    }

    friend IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
        IndexSet r;
        std::set_intersection(a.idx_.begin(), a.idx_.end(), b.idx_.begin(),
                              b.idx_.end(), std::back_inserter(r.idx_));
        return r;
    }

    friend IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
        IndexSet r;
        std::set_difference(a.idx_.begin(), a.idx_.end(), b.idx_.begin(),
                            b.idx_.end(), std::back_inserter(r.idx_));
        return r;
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.idx_ == b.idx_;
    }
    friend bool operator!=(const IndexSet& a, const IndexSet& b) {
        return !(a == b);
    }
    friend bool operator<(const IndexSet& a, const IndexSet& b) {
        return a.idx_ < b.idx_;
    }

    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

    const std::vector<int>& indices() const { return idx_; }

    std::string str() const {
        std::string s = "{";
        for (std::size_t k = 0; k < idx_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(idx_[k]);
        }
        s += "}";
        return s;
    }

private:
    void normalize() {
        for (int i : idx_)
            if (i < 1) throw std::domain_error("basis indices are 1-based");
        std::sort(idx_.begin(), idx_.end());
        idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
    }

    std::vector<int> idx_;
};

} // namespace greedylab
