#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hooklen/hooks.hpp"
#include "hooklen/poly.hpp"
#include "hooklen/series.hpp"

namespace hooklen {

enum class Family {
    postnikov,
    lascoux_1_1,
    duliu_1_2a,
    duliu_1_2b,
    forest_1_3a,
    forest_1_3b,
    thm1_1_eq1_6,
    thm1_1_eq1_7,
    thm1_2_eq5_1a,
    thm1_2_eq5_1b,
    cor1_first,
    cor1_second,
    cor2_first,
    cor2_second,
    cor2_third,
    recurrence_thm1_1, ///< convolution recurrence vs enumeration (n = order checked)
    gf_relations,      ///< truncated generating-function relations (n = series order)
};

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();
/// Families whose trees are pruned by a position set S.
bool uses_subset(Family family);

/// One identity instance. `m` follows the formula's own convention: trees of
/// arity m for the thm1_1 and cor1 families, arity m+1 for the thm1_2, cor2
/// and duliu families; the binary-only families ignore it.
struct IdentitySpec {
    Family family = Family::thm1_1_eq1_7;
    int m = 2;
    int n = 0;
    std::optional<PositionSet> subset;
};

struct VerificationReport {
    IdentitySpec spec;
    Poly lhs; ///< constant polynomial for the numeric families
    Poly rhs;
    bool pass = false;
    std::uint64_t trees_visited = 0;
    std::chrono::nanoseconds elapsed{0};
    std::string detail; ///< empty on success; otherwise why the check failed
};

struct RunOptions {
    /// Workers per summation; the root-composition space is split among them.
    unsigned threads = 1;
};

/// Exact sum over all trees of the product of per-vertex factors.
struct TreeSum {
    Poly total;
    std::uint64_t trees = 0;
};

/// Per-vertex statistic extracted from each tree.
using HookFunction = std::function<HookValues(const MAryTree&)>;
/// Linear factor c0 + c1 x as a function of the statistic value.
using LinearFactor = std::function<std::pair<BigRational, BigRational>(int)>;

/// Sum over enumerate(arity, n) of prod_v factor(hook_v). Factors are
/// tabulated once for statistic values 1..n. Parallel workers take disjoint
/// root compositions; the exact partial sums make the result independent of
/// the thread count.
TreeSum sum_hook_products(int arity, int n, const HookFunction& hooks, const LinearFactor& factor,
                          const RunOptions& options = {});

enum class Thm11Form { eq1_6, eq1_7 };
enum class Thm12Form { eq5_1a, eq5_1b };
enum class ForestForm { eq1_3a, eq1_3b };

Poly lhs_thm1_1(int m, int n, Thm11Form form, const RunOptions& options = {});
Poly lhs_thm1_2(int m, PositionSet subset, int n, Thm12Form form, const RunOptions& options = {});
Poly lhs_forests(int n, ForestForm form, const RunOptions& options = {});

enum class PriorForm { postnikov, eq1_1 };
VerificationReport check_postnikov_lascoux(int n, PriorForm form, const RunOptions& options = {});

/// Builds both sides of any family and compares them exactly. Throws
/// ParameterError for an out-of-range spec.
VerificationReport check_identity(const IdentitySpec& spec, const RunOptions& options = {});

/// Enumerated eq1_7 sums against the convolution over root compositions of
/// memoized smaller values.
VerificationReport check_recurrence_thm1_1(int m, int n, const RunOptions& options = {});

/// Generating-function relations of the pruned sums at truncation order N,
/// representative S = {1, ..., s}: the ODE residuals for the empty set and
/// for S must vanish through t^(N-1), and the skeleton/forest composition
/// must reproduce the series through t^N.
VerificationReport check_gf_relations(int m, int s, int order, const RunOptions& options = {});

struct GridEntry {
    IdentitySpec spec;
    /// Test hook: perturbs the RHS by +1 so the check must fail.
    bool corrupt_rhs = false;
};

struct SuiteResult {
    std::vector<VerificationReport> reports;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

/// Runs every grid entry; errors become failed reports, never exceptions.
SuiteResult verify_suite(const std::vector<GridEntry>& grid, const RunOptions& options = {});

/// Largest n with count_trees(arity, n) <= budget.
int max_internal_within(int arity, const BigInt& budget);

} // namespace hooklen
