#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace homreconf {

/// Union-find with path halving and union by size.
class DisjointSet {
public:
    explicit DisjointSet(std::size_t n = 0) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t i)
    {
        while (parent_[i] != i)
            i = parent_[i] = parent_[parent_[i]];
        return i;
    }

    /// Returns true if a union was performed.
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace homreconf
