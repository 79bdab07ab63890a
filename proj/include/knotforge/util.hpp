#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace knotforge {

// Thrown when an input violates an operation's precondition.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal consistency check fails: a construction step
// produced contradictory data, or two independent computations of the same
// quantity disagree. Maps to CLI exit code 3.
class IntegrityError : public std::runtime_error {
public:
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

/// Union-find over dense integer ids with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
    }

    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --sets_;
        return true;
    }

    bool same(int a, int b) { return find(a) == find(b); }
    std::size_t set_count() const { return sets_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::size_t sets_;
};

} // namespace knotforge
