#include "hooklen/forest.hpp"


#include "hooklen/error.hpp"

namespace hooklen {

std::size_t PlaneTree::vertex_count() const {
    std::size_t n = 1;
    for (const auto& c : children) {
        n += c.vertex_count();
    }
    return n;
}

std::size_t PlaneForest::vertex_count() const {
    std::size_t n = 0;
    for (const auto& t : trees) {
        n += t.vertex_count();
    }
    return n;
}

namespace {

void brackets(const PlaneTree& t, std::string& out) {
    out.push_back('(');
    for (const auto& c : t.children) {
        brackets(c, out);
    }
    out.push_back(')');
}

// Appends psi of trees[first..] to the code.
void psi_code(const std::vector<PlaneTree>& trees, std::size_t first, std::string& out) {
    if (first == trees.size()) {
        out.push_back('0');
        return;
    }
    out.push_back('1');
    psi_code(trees[first].children, 0, out);
    psi_code(trees, first + 1, out);
}

// Reads the binary subtree starting at `pos` as a forest; returns the end position.
std::size_t unpsi(const std::string& code, std::size_t pos, std::vector<PlaneTree>& out) {
    // The right spine of a binary subtree lists the forest's trees in order.
    while (code[pos] == '1') {
        PlaneTree t;
        pos = unpsi(code, pos + 1, t.children);
        out.push_back(std::move(t));
    }
    return pos + 1;
}

} // namespace

std::string PlaneForest::to_string() const {
    std::string out;
    for (const auto& t : trees) {
        brackets(t, out);
    }
    return out;
}

MAryTree psi(const PlaneForest& forest) {
    std::string code;
    code.reserve(2 * forest.vertex_count() + 1);
    psi_code(forest.trees, 0, code);
    return decode(code, 2);
}

PlaneForest psi_inverse(const MAryTree& tree) {
    if (tree.arity() != 2) {
        throw ParameterError("psi_inverse: expects a complete binary tree");
    }
    PlaneForest f;
    unpsi(tree.code(), 0, f.trees);
    return f;
}

ForestEnumerator::ForestEnumerator(int vertices) : trees_(2, vertices) {}

bool ForestEnumerator::next() {
    if (!trees_.next()) {
        return false;
    }
    current_ = psi_inverse(trees_.current());
    return true;
}

} // namespace hooklen
