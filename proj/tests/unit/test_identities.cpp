#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hooklen/enumerate.hpp"
#include "hooklen/error.hpp"
#include "hooklen/identities.hpp"
#include "hooklen/solvers.hpp"
#include "test_support.hpp"

using namespace hooklen;
using hooklen::testing::poly_of;
using hooklen::testing::q;

// Expected sums below were produced by tests/oracle/hook_oracle.py, which
// enumerates trees by filtering bitstrings and counts hooks on explicit copies.

TEST(Frozen, FirstKindSums) {
    EXPECT_EQ(lhs_thm1_1(2, 2, Thm11Form::eq1_6), poly_of({"3/2", "7/2", "2"}));
    EXPECT_EQ(lhs_thm1_1(2, 2, Thm11Form::eq1_7), poly_of({"0", "-1/2", "5/2"}));
    EXPECT_EQ(lhs_thm1_1(2, 3, Thm11Form::eq1_6), poly_of({"5/2", "29/3", "73/6", "5"}));
    EXPECT_EQ(lhs_thm1_1(2, 3, Thm11Form::eq1_7), poly_of({"0", "1/3", "-7/2", "49/6"}));
    EXPECT_EQ(lhs_thm1_1(3, 3, Thm11Form::eq1_6), poly_of({"14/3", "20", "82/3", "12"}));
    EXPECT_EQ(lhs_thm1_1(3, 3, Thm11Form::eq1_7), poly_of({"0", "1/3", "-5", "50/3"}));
    EXPECT_EQ(lhs_thm1_1(4, 3, Thm11Form::eq1_6), poly_of({"15/2", "34", "97/2", "22"}));
    EXPECT_EQ(lhs_thm1_1(4, 3, Thm11Form::eq1_7), poly_of({"0", "1/3", "-13/2", "169/6"}));
}

TEST(Frozen, SecondKindSums) {
    EXPECT_EQ(lhs_thm1_2(1, PositionSet(), 2, Thm12Form::eq5_1a), poly_of({"1", "3", "2"}));
    EXPECT_EQ(lhs_thm1_2(1, PositionSet(), 2, Thm12Form::eq5_1b), poly_of({"0", "-1/2", "3/2"}));
    for (int pos : {1, 2}) {
        const PositionSet s = PositionSet::of({pos});
        EXPECT_EQ(lhs_thm1_2(2, s, 3, Thm12Form::eq5_1a), poly_of({"5", "62/3", "83/3", "12"}));
        EXPECT_EQ(lhs_thm1_2(2, s, 3, Thm12Form::eq5_1b), poly_of({"0", "1/3", "-7/2", "49/6"}));
    }
    EXPECT_EQ(lhs_thm1_2(2, PositionSet::of({1, 2}), 3, Thm12Form::eq5_1a), poly_of({"49/6", "28", "191/6", "12"}));
    EXPECT_EQ(lhs_thm1_2(2, PositionSet::of({1, 2}), 3, Thm12Form::eq5_1b), poly_of({"0", "1/3", "-7/2", "49/6"}));
    EXPECT_EQ(lhs_thm1_2(3, PositionSet::of({1, 3}), 3, Thm12Form::eq5_1a), poly_of({"12", "134/3", "164/3", "22"}));
    EXPECT_EQ(lhs_thm1_2(3, PositionSet::of({1, 3}), 3, Thm12Form::eq5_1b), poly_of({"0", "1/3", "-5", "50/3"}));
}

TEST(Frozen, ForestSums) {
    EXPECT_EQ(lhs_forests(2, ForestForm::eq1_3a), poly_of({"3/2", "7/2", "2"}));
    EXPECT_EQ(lhs_forests(2, ForestForm::eq1_3b), poly_of({"0", "-1/2", "5/2"}));
    EXPECT_EQ(lhs_forests(3, ForestForm::eq1_3a), poly_of({"5/2", "29/3", "73/6", "5"}));
    EXPECT_EQ(lhs_forests(3, ForestForm::eq1_3b), poly_of({"0", "1/3", "-7/2", "49/6"}));
    EXPECT_EQ(lhs_forests(4, ForestForm::eq1_3a), poly_of({"35/8", "97/4", "393/8", "173/4", "14"}));
    EXPECT_EQ(lhs_forests(4, ForestForm::eq1_3b), poly_of({"0", "-1/4", "33/8", "-81/4", "243/8"}));
}

TEST(Frozen, NumericFamilies) {
    const long expected[] = {1, 3, 16, 125, 1296};
    for (int n = 1; n <= 5; ++n) {
        const VerificationReport r = check_postnikov_lascoux(n, PriorForm::postnikov);
        EXPECT_TRUE(r.pass) << n;
        EXPECT_EQ(r.lhs, Poly(expected[n - 1]));
        EXPECT_EQ(r.rhs, Poly(expected[n - 1]));
        EXPECT_EQ(r.trees_visited, count_trees(2, n).get_ui());
    }
    auto lhs_of = [](Family f, int m, int n, std::optional<PositionSet> s = std::nullopt) {
        const VerificationReport r = check_identity({f, m, n, s});
        EXPECT_TRUE(r.pass) << to_string(f) << " " << r.detail;
        return r.lhs;
    };
    EXPECT_EQ(lhs_of(Family::cor1_first, 2, 2), Poly(q("3/2")));
    EXPECT_EQ(lhs_of(Family::cor1_second, 2, 2), Poly(q("5/2")));
    EXPECT_EQ(lhs_of(Family::cor1_first, 3, 3), Poly(q("14/3")));
    EXPECT_EQ(lhs_of(Family::cor1_second, 3, 3), Poly(q("400/3")));
    EXPECT_EQ(lhs_of(Family::cor2_first, 2, 3, PositionSet::of({1})), Poly(5));
    EXPECT_EQ(lhs_of(Family::cor2_second, 2, 3, PositionSet::of({1})), Poly(q("196/3")));
    EXPECT_EQ(lhs_of(Family::cor2_first, 3, 3, PositionSet::of({2, 3})), Poly(12));
    EXPECT_EQ(lhs_of(Family::cor2_second, 3, 3, PositionSet::of({2, 3})), Poly(q("400/3")));
}

TEST(Frozen, OmegaSpotValue) {
    // Independent of the library: printed by the oracle script.
    EXPECT_EQ(closed_omega(1, 1, 3).eval(2), BigRational(14));
}

TEST(Identities, EveryFamilyHoldsOnSmallCases) {
    for (Family f : all_families()) {
        for (int m = 1; m <= 3; ++m) {
            for (int n = 1; n <= 4; ++n) {
                std::vector<std::optional<PositionSet>> subsets = {std::nullopt};
                if (uses_subset(f) && f != Family::cor2_third) {
                    subsets.clear();
                    for (const PositionSet& s : PositionSet::all_subsets(m)) {
                        subsets.emplace_back(s);
                    }
                }
                for (const auto& s : subsets) {
                    const IdentitySpec spec{f, m, n, s};
                    VerificationReport r;
                    try {
                        r = check_identity(spec);
                    } catch (const ParameterError&) {
                        // m = 1 is outside the arity-m families.
                        ASSERT_EQ(m, 1) << to_string(f);
                        continue;
                    }
                    EXPECT_TRUE(r.pass) << to_string(f) << " m=" << m << " n=" << n << " " << r.detail;
                    EXPECT_TRUE(r.detail.empty()) << r.detail;
                }
            }
        }
    }
}

TEST(Identities, LhsMatchesClosedForms) {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 0; n <= 5; ++n) {
            EXPECT_EQ(lhs_thm1_1(m, n, Thm11Form::eq1_6), rhs_product_poly(ProductFamily::thm1_1_eq16, m, 0, n));
            EXPECT_EQ(lhs_thm1_1(m, n, Thm11Form::eq1_7), rhs_binomial_poly(m, n));
        }
    }
}

TEST(Identities, AtOneTheSumsCountTrees) {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 0; n <= 5; ++n) {
            EXPECT_EQ(lhs_thm1_1(m, n, Thm11Form::eq1_7).eval(1), BigRational(count_trees(m, n)));
        }
    }
    // The pruned family sums over arity m+1 trees, yet collapses to the arity m count.
    for (int m = 1; m <= 3; ++m) {
        for (int n = 0; n <= 4; ++n) {
            for (const PositionSet& s : PositionSet::all_subsets(m)) {
                EXPECT_EQ(lhs_thm1_2(m, s, n, Thm12Form::eq5_1b).eval(1), BigRational(count_trees(m, n)))
                    << m << " " << n << " " << s.to_string();
            }
        }
    }
    EXPECT_NE(BigRational(count_trees(2, 2)), lhs_thm1_2(1, PositionSet(), 2, Thm12Form::eq5_1b).eval(1));
}

TEST(Identities, PrunedSumsDependOnlyOnSubsetSize) {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 0; n <= 4; ++n) {
            for (const PositionSet& s : PositionSet::all_subsets(m)) {
                const PositionSet rep = PositionSet::first(s.size());
                for (Thm12Form form : {Thm12Form::eq5_1a, Thm12Form::eq5_1b}) {
                    ASSERT_EQ(lhs_thm1_2(m, s, n, form), lhs_thm1_2(m, rep, n, form)) << s.to_string();
                }
            }
        }
    }
}

TEST(Identities, ForestSumsEqualBinaryFirstKindSums) {
    for (int n = 0; n <= 8; ++n) {
        EXPECT_EQ(lhs_forests(n, ForestForm::eq1_3a), lhs_thm1_1(2, n, Thm11Form::eq1_6)) << n;
        EXPECT_EQ(lhs_forests(n, ForestForm::eq1_3b), lhs_thm1_1(2, n, Thm11Form::eq1_7)) << n;
    }
}

TEST(Identities, ParameterErrors) {
    EXPECT_THROW(check_identity({Family::thm1_1_eq1_7, 1, 3, std::nullopt}), ParameterError);
    EXPECT_THROW(check_identity({Family::thm1_2_eq5_1a, 2, 3, PositionSet::of({3})}), ParameterError);
    EXPECT_THROW(check_identity({Family::thm1_2_eq5_1a, 0, 3, std::nullopt}), ParameterError);
    EXPECT_THROW(check_identity({Family::cor2_third, 2, 3, PositionSet::of({1})}), ParameterError);
    EXPECT_THROW(check_identity({Family::thm1_1_eq1_6, 2, -1, std::nullopt}), ParameterError);
    EXPECT_THROW(lhs_thm1_2(2, PositionSet::of({3}), 3, Thm12Form::eq5_1a), ParameterError);
}

TEST(Identities, FamilyNames) {
    for (Family f : all_families()) {
        EXPECT_EQ(parse_family(to_string(f)), f);
    }
    EXPECT_EQ(all_families().size(), 17U);
    EXPECT_FALSE(parse_family("nope").has_value());
}

TEST(Recurrence, MatchesEnumeration) {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 1; n <= 6; ++n) {
            const VerificationReport r = check_recurrence_thm1_1(m, n);
            EXPECT_TRUE(r.pass) << m << " " << n << " " << r.detail;
            EXPECT_EQ(r.lhs, rhs_binomial_poly(m, n));
        }
    }
}

TEST(GeneratingFunctions, RelationsHold) {
    for (int m = 1; m <= 3; ++m) {
        for (int s = 0; s <= m; ++s) {
            for (int order = 1; order <= 5; ++order) {
                const VerificationReport r = check_gf_relations(m, s, order);
                EXPECT_TRUE(r.pass) << m << " " << s << " " << order << " " << r.detail;
                EXPECT_EQ(r.lhs, lhs_thm1_2(m, PositionSet::first(s), order, Thm12Form::eq5_1a));
            }
        }
    }
}

TEST(Summation, ConstantFactorCountsTrees) {
    const HookFunction hooks = [](const MAryTree& t) { return standard_hooks(t); };
    const LinearFactor one = [](int) { return std::pair<BigRational, BigRational>{1, 0}; };
    for (int m = 2; m <= 4; ++m) {
        for (int n = 0; n <= 5; ++n) {
            const TreeSum s = sum_hook_products(m, n, hooks, one);
            EXPECT_EQ(s.total, Poly(BigRational(count_trees(m, n))));
            EXPECT_EQ(BigInt(static_cast<unsigned long>(s.trees)), count_trees(m, n));
        }
    }
    // x per internal vertex: n trees-worth of x^n.
    const LinearFactor x = [](int) { return std::pair<BigRational, BigRational>{0, 1}; };
    Poly xn(1);
    for (int i = 0; i < 4; ++i) {
        xn *= Poly::x();
    }
    EXPECT_EQ(sum_hook_products(3, 4, hooks, x).total, xn * BigRational(count_trees(3, 4)));
}

TEST(Summation, ThreadCountDoesNotChangeResults) {
    for (unsigned threads : {2U, 3U, 7U, 64U}) {
        const RunOptions opt{threads};
        EXPECT_EQ(lhs_thm1_1(3, 6, Thm11Form::eq1_7, opt), lhs_thm1_1(3, 6, Thm11Form::eq1_7));
        EXPECT_EQ(lhs_thm1_2(2, PositionSet::of({2}), 5, Thm12Form::eq5_1b, opt),
                  lhs_thm1_2(2, PositionSet::of({2}), 5, Thm12Form::eq5_1b));
        EXPECT_EQ(lhs_forests(6, ForestForm::eq1_3a, opt), lhs_forests(6, ForestForm::eq1_3a));
        const VerificationReport a = check_identity({Family::thm1_1_eq1_6, 2, 7, std::nullopt}, opt);
        EXPECT_TRUE(a.pass);
        EXPECT_EQ(a.trees_visited, count_trees(2, 7).get_ui());
    }
}

TEST(Suite, EmptyGrid) {
    const SuiteResult r = verify_suite({});
    EXPECT_TRUE(r.reports.empty());
    EXPECT_EQ(r.passed, 0U);
    EXPECT_EQ(r.failed, 0U);
}

TEST(Suite, CorruptedRhsIsCaught) {
    const std::vector<GridEntry> grid = {
        {{Family::thm1_1_eq1_7, 2, 4, std::nullopt}, false},
        {{Family::thm1_1_eq1_7, 2, 4, std::nullopt}, true},
        {{Family::thm1_2_eq5_1a, 2, 3, PositionSet::of({1})}, true},
        {{Family::postnikov, 2, 3, std::nullopt}, true},
    };
    const SuiteResult r = verify_suite(grid);
    ASSERT_EQ(r.reports.size(), 4U);
    EXPECT_TRUE(r.reports[0].pass);
    EXPECT_FALSE(r.reports[1].pass);
    EXPECT_FALSE(r.reports[2].pass);
    EXPECT_FALSE(r.reports[3].pass);
    EXPECT_EQ(r.reports[1].rhs, r.reports[0].rhs + Poly(1));
    EXPECT_EQ(r.passed, 1U);
    EXPECT_EQ(r.failed, 3U);
}

TEST(Suite, BadSpecBecomesFailedReport) {
    const SuiteResult r = verify_suite({{{Family::thm1_1_eq1_6, 1, 3, std::nullopt}, false}});
    ASSERT_EQ(r.reports.size(), 1U);
    EXPECT_FALSE(r.reports[0].pass);
    EXPECT_FALSE(r.reports[0].detail.empty());
    EXPECT_EQ(r.failed, 1U);
}

TEST(Suite, BudgetedGridSizes) {
    EXPECT_EQ(max_internal_within(2, 200000), 11);
    EXPECT_EQ(max_internal_within(3, 200000), 8);
    EXPECT_EQ(max_internal_within(4, 200000), 7);
    EXPECT_EQ(max_internal_within(5, 200000), 6);
    EXPECT_EQ(max_internal_within(2, 50000), 10);
    EXPECT_EQ(max_internal_within(3, 50000), 8);
    EXPECT_EQ(max_internal_within(4, 50000), 6);
}
