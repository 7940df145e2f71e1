#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hooklen/enumerate.hpp"
#include "hooklen/tree.hpp"

namespace hooklen {

/// Rooted plane tree with any number of ordered children.
struct PlaneTree {
    std::vector<PlaneTree> children;

    std::size_t vertex_count() const;
    friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// Linearly ordered sequence of plane trees.
struct PlaneForest {
    std::vector<PlaneTree> trees;

    std::size_t vertex_count() const;
    /// Bracket notation, one "(...)" per vertex: the 2-vertex path is "(())".
    std::string to_string() const;
    friend bool operator==(const PlaneForest&, const PlaneForest&) = default;
};

/// Forest -> complete binary tree: the first tree's root becomes the binary
/// root, its children (as a forest) go left and the remaining trees go right.
MAryTree psi(const PlaneForest& forest);

/// Exact inverse of `psi`; throws ParameterError unless `tree` has arity 2.
PlaneForest psi_inverse(const MAryTree& tree);

/// Every forest with n vertices, in the order of enumerate(2, n) pulled back through psi.
class ForestEnumerator {
public:
    explicit ForestEnumerator(int vertices);

    bool next();
    const PlaneForest& current() const { return current_; }

private:
    TreeEnumerator trees_;
    PlaneForest current_;
};

template <class Fn>
void for_each_forest(int vertices, Fn&& fn) {
    ForestEnumerator e(vertices);
    while (e.next()) {
        fn(e.current());
    }
}

} // namespace hooklen
