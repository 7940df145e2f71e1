#include "hooklen/tree.hpp"

#include <algorithm>

#include "hooklen/error.hpp"

namespace hooklen {

MAryTree::MAryTree(int arity) : arity_(arity), code_("0"), internal_(0) {
    if (arity < 1) {
        throw ParameterError("MAryTree: arity must be >= 1");
    }
}

MAryTree MAryTree::node(std::span<const MAryTree> children) {
    if (children.empty()) {
        throw ParameterError("MAryTree::node: an internal vertex needs at least one child");
    }
    const int arity = static_cast<int>(children.size());
    std::string code = "1";
    std::size_t internal = 1;
    for (const auto& c : children) {
        if (c.arity_ != arity) {
            throw ParameterError("MAryTree::node: child arity " + std::to_string(c.arity_) +
                                 " does not match " + std::to_string(arity) + " children");
        }
        code += c.code_;
        internal += c.internal_;
    }
    return MAryTree(arity, std::move(code), internal);
}

std::size_t MAryTree::subtree_end(std::size_t pos) const {
    // Open slots still to be filled: a leaf closes one, an internal vertex adds arity-1.
    std::size_t open = 1;
    while (open > 0) {
        open = code_[pos] == '1' ? open + arity_ - 1 : open - 1;
        ++pos;
    }
    return pos;
}

std::vector<std::size_t> MAryTree::child_positions(std::size_t pos) const {
    std::vector<std::size_t> out;
    if (!is_internal(pos)) {
        return out;
    }
    out.reserve(arity_);
    std::size_t p = pos + 1;
    for (int j = 0; j < arity_; ++j) {
        out.push_back(p);
        p = subtree_end(p);
    }
    return out;
}

MAryTree MAryTree::subtree(std::size_t pos) const {
    const std::size_t end = subtree_end(pos);
    std::string code = code_.substr(pos, end - pos);
    auto internal = static_cast<std::size_t>(std::count(code.begin(), code.end(), '1'));
    return MAryTree(arity_, std::move(code), internal);
}

std::vector<MAryTree> MAryTree::children() const {
    std::vector<MAryTree> out;
    for (std::size_t p : child_positions(0)) {
        out.push_back(subtree(p));
    }
    return out;
}

std::vector<std::size_t> MAryTree::internal_positions() const {
    std::vector<std::size_t> out;
    out.reserve(internal_);
    for (std::size_t i = 0; i < code_.size(); ++i) {
        if (code_[i] == '1') {
            out.push_back(i);
        }
    }
    return out;
}

std::string encode(const MAryTree& tree) {
    return tree.code();
}

MAryTree decode(std::string_view text, int arity) {
    if (arity < 1) {
        throw ParameterError("decode: arity must be >= 1");
    }
    if (text.empty()) {
        throw DecodeError("truncated code: empty input", 0);
    }
    std::size_t open = 1;
    std::size_t internal = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw DecodeError(std::string("unexpected symbol '") + c + "'", i);
        }
        if (open == 0) {
            throw DecodeError("trailing tokens after a complete tree", i);
        }
        if (c == '1') {
            open += static_cast<std::size_t>(arity) - 1;
            ++internal;
        } else {
            --open;
        }
    }
    if (open != 0) {
        throw DecodeError("truncated code: " + std::to_string(open) + " subtree(s) missing",
                          text.size());
    }
    return MAryTree(arity, std::string(text), internal);
}

} // namespace hooklen
