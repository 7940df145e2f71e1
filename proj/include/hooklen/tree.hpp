#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hooklen {

class TreeEnumerator;

/// Immutable complete m-ary tree: every internal vertex has exactly `arity`
/// ordered children.
///
/// Stored as its preorder code ('1' internal, '0' leaf), so a vertex is
/// identified by its preorder position and a subtree is a contiguous slice.
/// Arity 1 is allowed: pruning every non-final position yields paths.
class MAryTree {
public:
    /// A single leaf.
    explicit MAryTree(int arity);

    /// Internal root whose children are `children`; arity is children.size()
    /// and every child must have the same arity.
    static MAryTree node(std::span<const MAryTree> children);

    int arity() const { return arity_; }
    bool is_leaf() const { return code_.size() == 1; }
    std::size_t internal_count() const { return internal_; }
    std::size_t leaf_count() const { return code_.size() - internal_; }
    std::size_t node_count() const { return code_.size(); }

    /// Preorder code; see `encode`.
    const std::string& code() const { return code_; }

    bool is_internal(std::size_t pos) const { return code_[pos] == '1'; }
    /// One past the last position of the subtree rooted at `pos`.
    std::size_t subtree_end(std::size_t pos) const;
    /// Positions of the children of the internal vertex at `pos`, left to right.
    std::vector<std::size_t> child_positions(std::size_t pos) const;
    MAryTree subtree(std::size_t pos) const;
    /// Subtrees of the root, left to right; empty for a leaf.
    std::vector<MAryTree> children() const;
    /// Preorder positions of the internal vertices.
    std::vector<std::size_t> internal_positions() const;

    friend bool operator==(const MAryTree&, const MAryTree&) = default;

private:
    friend class TreeEnumerator;
    friend MAryTree decode(std::string_view text, int arity);

    MAryTree(int arity, std::string code, std::size_t internal)
        : arity_(arity), code_(std::move(code)), internal_(internal) {}

    int arity_;
    std::string code_;
    std::size_t internal_;
};

/// Preorder code: '1' per internal vertex, '0' per leaf.
std::string encode(const MAryTree& tree);

/// Inverse of `encode`. Throws DecodeError naming the offending position for
/// a bad symbol, a prefix that already closed the tree (trailing tokens), or
/// a truncated code.
MAryTree decode(std::string_view text, int arity);

} // namespace hooklen
