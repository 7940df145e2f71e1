#include "hooklen/hooks.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "hooklen/error.hpp"

namespace hooklen {

PositionSet PositionSet::of(std::span<const int> positions) {
    PositionSet s;
    for (int p : positions) {
        if (p < 1 || p > 63) {
            throw ParameterError("PositionSet: position " + std::to_string(p) + " outside 1..63");
        }
        s.mask_ |= std::uint64_t{1} << (p - 1);
    }
    return s;
}

PositionSet PositionSet::of(std::initializer_list<int> positions) {
    return of(std::span<const int>(positions.begin(), positions.size()));
}

PositionSet PositionSet::first(int k) {
    if (k < 0 || k > 63) {
        throw ParameterError("PositionSet::first: k outside 0..63");
    }
    PositionSet s;
    s.mask_ = (std::uint64_t{1} << k) - 1;
    return s;
}

std::vector<PositionSet> PositionSet::all_subsets(int m) {
    if (m < 0 || m > 20) {
        throw ParameterError("PositionSet::all_subsets: m outside 0..20");
    }
    std::vector<PositionSet> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        PositionSet s;
        s.mask_ = mask;
        out.push_back(s);
    }
    return out;
}

PositionSet PositionSet::parse(const std::string& text) {
    std::vector<int> positions;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) {
            throw ParameterError("PositionSet: cannot parse '" + item + "'");
        }
        positions.push_back(value);
    }
    return of(positions);
}

int PositionSet::size() const {
    return std::popcount(mask_);
}

int PositionSet::max() const {
    return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_);
}

std::vector<int> PositionSet::to_vector() const {
    std::vector<int> out;
    for (int p = 1; p <= 63; ++p) {
        if (contains(p)) {
            out.push_back(p);
        }
    }
    return out;
}

std::string PositionSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int p : to_vector()) {
        out += (first ? "" : ",") + std::to_string(p);
        first = false;
    }
    return out + "}";
}

namespace {

void require_subset(const MAryTree& tree, PositionSet subset, const char* what) {
    if (subset.max() > tree.arity() - 1) {
        throw ParameterError(std::string(what) + ": S = " + subset.to_string() +
                             " is not a subset of [" + std::to_string(tree.arity() - 1) + "]");
    }
}

/// Bottom-up fold over the preorder code. `combine` receives the values of
/// the children (left to right) and returns the value of the vertex; leaves
/// have value 0. Results are collected for internal vertices in preorder.
template <class Combine>
HookValues fold_internal(const MAryTree& tree, Combine combine) {
    const std::string& code = tree.code();
    const auto arity = static_cast<std::size_t>(tree.arity());
    std::vector<int> stack;
    stack.reserve(code.size());
    HookValues out;
    out.reserve(tree.internal_count());
    std::vector<int> kids(arity);
    for (std::size_t i = code.size(); i-- > 0;) {
        if (code[i] == '0') {
            stack.push_back(0);
            continue;
        }
        // Reverse preorder pushes the last child first, so the top is child 1.
        for (std::size_t j = 0; j < arity; ++j) {
            kids[j] = stack.back();
            stack.pop_back();
        }
        const int value = combine(std::span<const int>(kids));
        stack.push_back(value);
        out.push_back(value);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace

HookValues standard_hooks(const MAryTree& tree) {
    return fold_internal(tree, [](std::span<const int> kids) {
        int h = 1;
        for (int k : kids) {
            h += k;
        }
        return h;
    });
}

HookValues first_kind_hooks(const MAryTree& tree) {
    // Needs the standard hooks of children positions 1..m-1, so fold over h
    // and read the first kind off the same child values.
    HookValues out;
    out.reserve(tree.internal_count());
    fold_internal(tree, [&](std::span<const int> kids) {
        int h = 1;
        int first = 1;
        for (std::size_t j = 0; j < kids.size(); ++j) {
            h += kids[j];
            if (j + 1 < kids.size()) {
                first += kids[j];
            }
        }
        out.push_back(first);
        return h;
    });
    std::reverse(out.begin(), out.end());
    return out;
}

HookValues second_kind_hooks(const MAryTree& tree, PositionSet subset) {
    require_subset(tree, subset, "second_kind_hooks");
    return fold_internal(tree, [subset](std::span<const int> kids) {
        int h = 1;
        for (std::size_t j = 0; j < kids.size(); ++j) {
            if (!subset.contains(static_cast<int>(j) + 1)) {
                h += kids[j];
            }
        }
        return h;
    });
}

namespace {

int forest_hooks_at(const PlaneTree& t, HookValues& out) {
    const std::size_t slot = out.size();
    out.push_back(0);
    int n = 1;
    for (const auto& c : t.children) {
        n += forest_hooks_at(c, out);
    }
    out[slot] = n;
    return n;
}

} // namespace

HookValues forest_hooks(const PlaneForest& forest) {
    HookValues out;
    for (const auto& t : forest.trees) {
        forest_hooks_at(t, out);
    }
    return out;
}

HookProfile hook_profile(const MAryTree& tree, std::span<const PositionSet> subsets) {
    HookProfile p;
    p.positions = tree.internal_positions();
    p.standard = standard_hooks(tree);
    p.first_kind = first_kind_hooks(tree);
    for (PositionSet s : subsets) {
        p.second_kind.emplace_back(s, second_kind_hooks(tree, s));
    }
    return p;
}

namespace {

std::size_t prune_at(const MAryTree& tree, std::size_t pos, PositionSet subset, std::string& out) {
    if (!tree.is_internal(pos)) {
        out.push_back('0');
        return pos + 1;
    }
    out.push_back('1');
    std::size_t p = pos + 1;
    for (int j = 1; j <= tree.arity(); ++j) {
        p = subset.contains(j) ? tree.subtree_end(p) : prune_at(tree, p, subset, out);
    }
    return p;
}

std::size_t collect_deleted(const MAryTree& tree, std::size_t pos, PositionSet subset,
                            std::vector<MAryTree>& forest) {
    if (!tree.is_internal(pos)) {
        return pos + 1;
    }
    const std::vector<std::size_t> kids = tree.child_positions(pos);
    // This vertex's deleted subtrees precede everything below it in skeleton preorder.
    for (int j = 1; j <= tree.arity(); ++j) {
        if (subset.contains(j)) {
            forest.push_back(tree.subtree(kids[j - 1]));
        }
    }
    for (int j = 1; j <= tree.arity(); ++j) {
        if (!subset.contains(j)) {
            collect_deleted(tree, kids[j - 1], subset, forest);
        }
    }
    return tree.subtree_end(pos);
}

struct ComposeState {
    const std::string& skeleton;
    std::span<const MAryTree> forest;
    PositionSet subset;
    int target_arity;
    std::size_t next_tree = 0;
};

std::size_t compose_at(ComposeState& st, std::size_t pos, std::string& out) {
    if (st.skeleton[pos] == '0') {
        out.push_back('0');
        return pos + 1;
    }
    out.push_back('1');
    // This vertex owns the next |S| trees; deeper vertices come after them.
    std::size_t own = st.next_tree;
    st.next_tree += static_cast<std::size_t>(st.subset.size());
    std::size_t p = pos + 1;
    for (int j = 1; j <= st.target_arity; ++j) {
        if (st.subset.contains(j)) {
            out += st.forest[own++].code();
        } else {
            p = compose_at(st, p, out);
        }
    }
    return p;
}

} // namespace

MAryTree prune(const MAryTree& tree, PositionSet subset) {
    require_subset(tree, subset, "prune");
    std::string code;
    code.reserve(tree.node_count());
    prune_at(tree, 0, subset, code);
    return decode(code, tree.arity() - subset.size());
}

Decomposition decompose(const MAryTree& tree, PositionSet subset) {
    require_subset(tree, subset, "decompose");
    if (tree.internal_count() == 0) {
        throw ParameterError("decompose: the tree needs at least one internal vertex");
    }
    Decomposition d{prune(tree, subset), {}};
    d.forest.reserve(d.skeleton.internal_count() * static_cast<std::size_t>(subset.size()));
    collect_deleted(tree, 0, subset, d.forest);
    return d;
}

MAryTree compose(const MAryTree& skeleton, std::span<const MAryTree> forest, PositionSet subset,
                 int target_arity) {
    const int s = subset.size();
    if (target_arity < 1 || subset.max() > target_arity - 1) {
        throw ParameterError("compose: S = " + subset.to_string() + " is not a subset of [" +
                             std::to_string(target_arity - 1) + "]");
    }
    if (skeleton.arity() != target_arity - s) {
        throw ParameterError("compose: skeleton arity " + std::to_string(skeleton.arity()) +
                             " != " + std::to_string(target_arity - s));
    }
    const std::size_t expected = skeleton.internal_count() * static_cast<std::size_t>(s);
    if (forest.size() != expected) {
        throw ParameterError("compose: forest has " + std::to_string(forest.size()) +
                             " trees, expected " + std::to_string(expected));
    }
    for (const auto& t : forest) {
        if (t.arity() != target_arity) {
            throw ParameterError("compose: forest tree arity " + std::to_string(t.arity()) +
                                 " != " + std::to_string(target_arity));
        }
    }
    ComposeState st{skeleton.code(), forest, subset, target_arity};
    std::string code;
    compose_at(st, 0, code);
    return decode(code, target_arity);
}

} // namespace hooklen
