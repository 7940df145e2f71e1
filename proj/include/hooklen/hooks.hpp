#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hooklen/forest.hpp"
#include "hooklen/tree.hpp"

namespace hooklen {

/// A set of 1-based child positions, S in {1, ..., 63}.
class PositionSet {
public:
    PositionSet() = default;
    static PositionSet of(std::span<const int> positions);
    static PositionSet of(std::initializer_list<int> positions);
    /// {1, ..., k}
    static PositionSet first(int k);
    /// Every subset of {1, ..., m}, ordered by bitmask.
    static std::vector<PositionSet> all_subsets(int m);
    /// Parses "1,2" (and "" as the empty set).
    static PositionSet parse(const std::string& text);

    bool contains(int position) const {
        return position >= 1 && position <= 63 && ((mask_ >> (position - 1)) & 1U) != 0;
    }
    int size() const;
    /// Largest member, 0 when empty.
    int max() const;
    std::vector<int> to_vector() const;
    /// "{1,2}"
    std::string to_string() const;
    std::uint64_t mask() const { return mask_; }

    friend bool operator==(PositionSet, PositionSet) = default;

private:
    std::uint64_t mask_ = 0;
};

/// One value per internal vertex, in preorder.
using HookValues = std::vector<int>;

/// h_v: internal vertices in the subtree rooted at v.
HookValues standard_hooks(const MAryTree& tree);

/// First kind: internal vertices of T_v once the rightmost subtree of v is removed.
HookValues first_kind_hooks(const MAryTree& tree);

/// Second kind: internal vertices of T_v after recursively deleting the
/// children at positions in S from every surviving vertex. Defined for every
/// internal vertex of the input, each pruned inside its own subtree.
/// Requires S within [arity - 1] (ParameterError otherwise).
HookValues second_kind_hooks(const MAryTree& tree, PositionSet subset);

/// Subtree vertex counts H_v for every vertex of the forest, in preorder.
HookValues forest_hooks(const PlaneForest& forest);

struct HookProfile {
    std::vector<std::size_t> positions; ///< preorder positions of internal vertices
    HookValues standard;
    HookValues first_kind;
    std::vector<std::pair<PositionSet, HookValues>> second_kind;
};

HookProfile hook_profile(const MAryTree& tree, std::span<const PositionSet> subsets = {});

/// T^S: keep, at every internal vertex, only the children outside S. The
/// result has arity (arity - |S|). Requires S within [arity - 1].
MAryTree prune(const MAryTree& tree, PositionSet subset);

struct Decomposition {
    MAryTree skeleton;
    std::vector<MAryTree> forest;
};

/// Splits a tree with at least one internal vertex into prune(tree, S) and
/// the deleted subtrees, ordered by the skeleton preorder index of the
/// vertex they hung from, then by ascending position.
Decomposition decompose(const MAryTree& tree, PositionSet subset);

/// Inverse of `decompose`. Needs skeleton arity = target_arity - |S|,
/// |S| trees of arity target_arity per internal skeleton vertex.
MAryTree compose(const MAryTree& skeleton, std::span<const MAryTree> forest, PositionSet subset,
                 int target_arity);

} // namespace hooklen
