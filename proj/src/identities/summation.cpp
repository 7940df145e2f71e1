#include <algorithm>
#include <exception>
#include <thread>
#include <utility>

#include "hooklen/enumerate.hpp"
#include "hooklen/error.hpp"
#include "hooklen/identities.hpp"

namespace hooklen {

namespace {

using FactorTable = std::vector<std::pair<BigRational, BigRational>>;

void accumulate(TreeEnumerator& trees, const HookFunction& hooks, const FactorTable& table, TreeSum& out) {
    while (trees.next()) {
        Poly product(1);
        for (int v : hooks(trees.current())) {
            const auto& [c0, c1] = table.at(static_cast<std::size_t>(v));
            product.multiply_linear(c0, c1);
        }
        out.total += product;
        ++out.trees;
    }
}

} // namespace

TreeSum sum_hook_products(int arity, int n, const HookFunction& hooks, const LinearFactor& factor,
                          const RunOptions& options) {
    if (n < 0) {
        throw ParameterError("sum_hook_products: n must be >= 0");
    }
    FactorTable table(static_cast<std::size_t>(n) + 1);
    for (int h = 1; h <= n; ++h) {
        table[static_cast<std::size_t>(h)] = factor(h);
    }

    const auto compositions = root_compositions(arity, n);
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(options.threads, compositions.size()));
    if (workers == 1) {
        TreeSum out;
        TreeEnumerator trees(arity, n);
        accumulate(trees, hooks, table, out);
        return out;
    }

    std::vector<TreeSum> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < compositions.size(); i += workers) {
                    TreeEnumerator trees(arity, n, compositions[i]);
                    accumulate(trees, hooks, table, partial[w]);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    TreeSum out;
    for (std::size_t w = 0; w < workers; ++w) {
        if (errors[w]) {
            std::rethrow_exception(errors[w]);
        }
        out.total += partial[w].total;
        out.trees += partial[w].trees;
    }
    return out;
}

int max_internal_within(int arity, const BigInt& budget) {
    int n = 0;
    while (count_trees(arity, n + 1) <= budget) {
        ++n;
    }
    return n;
}

} // namespace hooklen
