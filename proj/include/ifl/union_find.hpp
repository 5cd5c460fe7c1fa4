#pragma once

#include <numeric>
#include <vector>

namespace ifl {

/// Disjoint sets with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(int n = 0) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int i) {
        while (parent_[i] != i) {
            i = parent_[i] = parent_[parent_[i]];
        }
        return i;
    }

    /// returns true if a union was performed
    bool unite(int i, int j) {
        int pi = find(i);
        int pj = find(j);
        if (pi == pj) {
            return false;
        }
        if (size_[pi] < size_[pj]) {
            std::swap(pi, pj);
        }
        parent_[pj] = pi;
        size_[pi] += size_[pj];
        return true;
    }

    bool same(int i, int j) { return find(i) == find(j); }
    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

/// Union by size without path compression so that unions can be undone in
/// LIFO order. Used by the backtracking searches.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n = 0) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int i) const {
        while (parent_[i] != i) {
            i = parent_[i];
        }
        return i;
    }

    bool unite(int i, int j) {
        int pi = find(i);
        int pj = find(j);
        if (pi == pj) {
            return false;
        }
        if (size_[pi] < size_[pj]) {
            std::swap(pi, pj);
        }
        parent_[pj] = pi;
        size_[pi] += size_[pj];
        history_.push_back(pj);
        return true;
    }

    int checkpoint() const { return static_cast<int>(history_.size()); }

    void rollback(int mark) {
        while (static_cast<int>(history_.size()) > mark) {
            int child = history_.back();
            history_.pop_back();
            size_[parent_[child]] -= size_[child];
            parent_[child] = child;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

} // namespace ifl
