#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

#include "hooklen/rational.hpp"
#include "hooklen/tree.hpp"

namespace hooklen {

/// Fuss-Catalan number (1/(mn+1)) binom(mn+1, n): the number of complete
/// m-ary trees with n internal vertices. m = 1 counts the single path.
BigInt count_trees(int m, int n);

/// All compositions (i_1, ..., i_m) of n-1 into m nonnegative parts in
/// increasing lexicographic order; empty for n = 0.
std::vector<std::vector<int>> root_compositions(int m, int n);

/// Streaming generator over the complete m-ary trees with n internal vertices.
///
/// Order: root compositions in increasing lexicographic order, then the
/// product of the subtree streams with the last subtree varying fastest.
/// State is one slot per vertex of the current tree, never the whole family.
///
///     TreeEnumerator e(3, 4);
///     while (e.next()) use(e.current());
class TreeEnumerator {
public:
    TreeEnumerator(int arity, int internal);
    /// Only the trees whose root subtrees have exactly these internal counts.
    /// Streams for distinct compositions partition the full stream.
    TreeEnumerator(int arity, int internal, std::vector<int> root_composition);

    /// Moves to the next tree; false once the stream is exhausted.
    bool next();
    const MAryTree& current() const { return current_; }

    class iterator {
    public:
        using value_type = MAryTree;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        explicit iterator(TreeEnumerator* owner) : owner_(owner) { advance(); }
        const MAryTree& operator*() const { return owner_->current(); }
        const MAryTree* operator->() const { return &owner_->current(); }
        iterator& operator++() { advance(); return *this; }
        void operator++(int) { advance(); }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.owner_ == nullptr; }

    private:
        void advance() {
            if (owner_ != nullptr && !owner_->next()) {
                owner_ = nullptr;
            }
        }
        TreeEnumerator* owner_ = nullptr;
    };

    /// Single pass: begin() consumes the stream.
    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() const { return {}; }

private:
    struct Slot {
        int internal = 0;
        std::vector<int> composition;
        std::vector<Slot> kids;
    };

    void reset(Slot& slot, int internal) const;
    bool advance(Slot& slot, bool is_root);
    void write(const Slot& slot, std::string& out) const;

    int arity_;
    int internal_;
    bool fixed_root_ = false;
    bool started_ = false;
    bool done_ = false;
    Slot root_;
    MAryTree current_;
};

template <class Fn>
void for_each_tree(int arity, int internal, Fn&& fn) {
    TreeEnumerator e(arity, internal);
    while (e.next()) {
        fn(e.current());
    }
}

} // namespace hooklen
