#include "hooklen/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "hooklen/error.hpp"

namespace hooklen {

namespace {

void require_arity(int arity, int internal, const char* what) {
    if (arity < 1) {
        throw ParameterError(std::string(what) + ": arity must be >= 1");
    }
    if (internal < 0) {
        throw ParameterError(std::string(what) + ": internal vertex count must be >= 0");
    }
}

std::vector<int> first_composition(int parts, int total) {
    std::vector<int> c(parts, 0);
    c.back() = total;
    return c;
}

/// Next composition with the same sum in increasing lexicographic order.
bool next_composition(std::vector<int>& c) {
    const std::size_t last = c.size() - 1;
    int tail = c[last];
    for (std::size_t j = last; j-- > 0;) {
        if (tail > 0) {
            ++c[j];
            for (std::size_t k = j + 1; k < last; ++k) {
                c[k] = 0;
            }
            c[last] = tail - 1;
            return true;
        }
        tail += c[j];
    }
    return false;
}

} // namespace

BigInt count_trees(int m, int n) {
    require_arity(m, n, "count_trees");
    const unsigned long top = static_cast<unsigned long>(m) * n + 1;
    BigInt result = binomial(top, static_cast<unsigned long>(n));
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), top);
    return result;
}

std::vector<std::vector<int>> root_compositions(int m, int n) {
    require_arity(m, n, "root_compositions");
    std::vector<std::vector<int>> out;
    if (n == 0) {
        return out;
    }
    std::vector<int> c = first_composition(m, n - 1);
    do {
        out.push_back(c);
    } while (next_composition(c));
    return out;
}

TreeEnumerator::TreeEnumerator(int arity, int internal)
    : arity_(arity), internal_(internal), current_(arity < 1 ? 1 : arity) {
    require_arity(arity, internal, "TreeEnumerator");
}

TreeEnumerator::TreeEnumerator(int arity, int internal, std::vector<int> root_composition)
    : TreeEnumerator(arity, internal) {
    if (internal == 0) {
        throw ParameterError("TreeEnumerator: a leaf has no root composition");
    }
    if (static_cast<int>(root_composition.size()) != arity ||
        std::accumulate(root_composition.begin(), root_composition.end(), 0) != internal - 1 ||
        std::any_of(root_composition.begin(), root_composition.end(), [](int v) { return v < 0; })) {
        throw ParameterError("TreeEnumerator: root composition must split n-1 into arity parts");
    }
    fixed_root_ = true;
    root_.internal = internal;
    root_.composition = std::move(root_composition);
}

void TreeEnumerator::reset(Slot& slot, int internal) const {
    slot.internal = internal;
    if (internal == 0) {
        slot.composition.clear();
        slot.kids.clear();
        return;
    }
    slot.composition = first_composition(arity_, internal - 1);
    slot.kids.resize(arity_);
    for (int j = 0; j < arity_; ++j) {
        reset(slot.kids[j], slot.composition[j]);
    }
}

bool TreeEnumerator::advance(Slot& slot, bool is_root) {
    if (slot.internal == 0) {
        return false;
    }
    for (int j = arity_; j-- > 0;) {
        if (advance(slot.kids[j], false)) {
            for (int k = j + 1; k < arity_; ++k) {
                reset(slot.kids[k], slot.composition[k]);
            }
            return true;
        }
    }
    if (is_root && fixed_root_) {
        return false;
    }
    if (!next_composition(slot.composition)) {
        return false;
    }
    for (int j = 0; j < arity_; ++j) {
        reset(slot.kids[j], slot.composition[j]);
    }
    return true;
}

void TreeEnumerator::write(const Slot& slot, std::string& out) const {
    if (slot.internal == 0) {
        out.push_back('0');
        return;
    }
    out.push_back('1');
    for (const auto& k : slot.kids) {
        write(k, out);
    }
}

bool TreeEnumerator::next() {
    if (done_) {
        return false;
    }
    if (!started_) {
        started_ = true;
        if (fixed_root_) {
            std::vector<int> comp = root_.composition;
            root_.kids.resize(arity_);
            for (int j = 0; j < arity_; ++j) {
                reset(root_.kids[j], comp[j]);
            }
        } else {
            reset(root_, internal_);
        }
    } else if (!advance(root_, true)) {
        done_ = true;
        return false;
    }
    std::string code;
    code.reserve(static_cast<std::size_t>(arity_) * internal_ + 1);
    write(root_, code);
    current_ = MAryTree(arity_, std::move(code), static_cast<std::size_t>(internal_));
    return true;
}

} // namespace hooklen
