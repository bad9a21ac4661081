#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace reeb::detail {

/// Union-find with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(int n = 0) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    int add()
    {
        parent_.push_back(static_cast<int>(parent_.size()));
        size_.push_back(1);
        return parent_.back();
    }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns the surviving root.
    int unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return a;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }

    bool same(int a, int b) { return find(a) == find(b); }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

}  // namespace reeb::detail
