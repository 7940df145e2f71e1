#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hooklen/enumerate.hpp"
#include "hooklen/error.hpp"
#include "hooklen/forest.hpp"
#include "hooklen/tree.hpp"
#include "test_support.hpp"

using namespace hooklen;

namespace {

std::vector<std::string> stream_codes(int arity, int n) {
    std::vector<std::string> out;
    for (const MAryTree& t : TreeEnumerator(arity, n)) {
        out.push_back(t.code());
    }
    return out;
}

std::size_t decode_error_position(const std::string& text, int arity) {
    try {
        decode(text, arity);
    } catch (const DecodeError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no DecodeError for " << text;
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST(Count, SmallValues) {
    EXPECT_EQ(count_trees(2, 3), 5);
    EXPECT_EQ(count_trees(3, 3), 12);
    EXPECT_EQ(count_trees(3, 2), 3);
    EXPECT_EQ(count_trees(4, 4), 140);
    EXPECT_EQ(count_trees(2, 0), 1);
    EXPECT_EQ(count_trees(1, 7), 1);
    EXPECT_EQ(count_trees(2, 30), BigInt("3814986502092304"));
    EXPECT_THROW(count_trees(0, 3), ParameterError);
    EXPECT_THROW(count_trees(2, -1), ParameterError);
}

TEST(Enumerate, OrderExamples) {
    EXPECT_EQ(stream_codes(2, 2), (std::vector<std::string>{"10100", "11000"}));
    EXPECT_EQ(stream_codes(3, 2), (std::vector<std::string>{"1001000", "1010000", "1100000"}));
    EXPECT_EQ(stream_codes(2, 0), (std::vector<std::string>{"0"}));
    EXPECT_EQ(stream_codes(4, 1), (std::vector<std::string>{"10000"}));
    EXPECT_EQ(stream_codes(1, 3), (std::vector<std::string>{"1110"}));
}

TEST(Enumerate, MatchesBruteForceFamily) {
    for (int m = 2; m <= 5; ++m) {
        for (int n = 0; m * n + 1 <= 16; ++n) {
            const auto codes = stream_codes(m, n);
            auto sorted = codes;
            std::sort(sorted.begin(), sorted.end());
            ASSERT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end()) << "duplicate at " << m << "," << n;
            ASSERT_EQ(sorted, hooklen::testing::brute_force_codes(m, n)) << m << "," << n;
            ASSERT_EQ(BigInt(static_cast<unsigned long>(codes.size())), count_trees(m, n));
        }
    }
}

TEST(Enumerate, StreamCountMatchesFormula) {
    const std::vector<std::pair<int, int>> cases = {{2, 9}, {3, 6}, {4, 5}, {5, 4}};
    for (auto [m, n] : cases) {
        std::size_t seen = 0;
        std::size_t nodes = 0;
        for_each_tree(m, n, [&](const MAryTree& t) {
            ++seen;
            nodes += t.node_count();
        });
        EXPECT_EQ(BigInt(static_cast<unsigned long>(seen)), count_trees(m, n));
        EXPECT_EQ(nodes, seen * static_cast<std::size_t>(m * n + 1));
    }
}

TEST(Enumerate, RootCompositionsPartitionTheStream) {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 1; n <= 5; ++n) {
            std::vector<std::string> joined;
            const auto comps = root_compositions(m, n);
            for (std::size_t i = 1; i < comps.size(); ++i) {
                ASSERT_LT(comps[i - 1], comps[i]);
            }
            for (const auto& c : comps) {
                for (const MAryTree& t : TreeEnumerator(m, n, c)) {
                    std::vector<int> kids;
                    for (const MAryTree& k : t.children()) {
                        kids.push_back(static_cast<int>(k.internal_count()));
                    }
                    ASSERT_EQ(kids, c);
                    joined.push_back(t.code());
                }
            }
            ASSERT_EQ(joined, stream_codes(m, n)) << m << "," << n;
        }
    }
    EXPECT_TRUE(root_compositions(3, 0).empty());
    EXPECT_THROW(TreeEnumerator(2, 3, std::vector<int>{1, 0}), ParameterError);
    EXPECT_THROW(TreeEnumerator(2, 3, std::vector<int>{1}), ParameterError);
}

TEST(Enumerate, BadParameters) {
    EXPECT_THROW(TreeEnumerator(0, 2), ParameterError);
    EXPECT_THROW(TreeEnumerator(2, -1), ParameterError);
}

TEST(Codec, EncodeExamples) {
    const MAryTree leaf(2);
    EXPECT_EQ(encode(leaf), "0");
    const std::vector<MAryTree> inner = {leaf, leaf};
    const MAryTree cherry = MAryTree::node(inner);
    const std::vector<MAryTree> outer = {cherry, leaf};
    EXPECT_EQ(encode(MAryTree::node(outer)), "11000");

    const MAryTree l3(3);
    const std::vector<MAryTree> k3 = {l3, l3, l3};
    const MAryTree c3 = MAryTree::node(k3);
    const std::vector<MAryTree> r3 = {c3, c3, l3};
    const MAryTree t3 = MAryTree::node(r3);
    EXPECT_EQ(encode(t3), "1100010000");
    EXPECT_EQ(t3.internal_count(), 3U);
    EXPECT_EQ(t3.leaf_count(), 7U);
    EXPECT_EQ(t3.child_positions(0), (std::vector<std::size_t>{1, 5, 9}));
    EXPECT_EQ(t3.internal_positions(), (std::vector<std::size_t>{0, 1, 5}));
    EXPECT_EQ(t3.subtree_end(5), 9U);
    EXPECT_EQ(t3.subtree(5).code(), "1000");
}

TEST(Codec, NodeRejectsMixedArity) {
    const std::vector<MAryTree> mixed = {MAryTree(2), MAryTree(3)};
    EXPECT_THROW(MAryTree::node(mixed), ParameterError);
    EXPECT_THROW(MAryTree(0), ParameterError);
}

TEST(Codec, DecodeErrors) {
    EXPECT_EQ(decode_error_position("10201", 2), 2U);  // alphabet
    EXPECT_EQ(decode_error_position("1000", 2), 3U);   // trailing tokens
    EXPECT_EQ(decode_error_position("110", 2), 3U);    // truncated
    EXPECT_EQ(decode_error_position("", 2), 0U);
    EXPECT_EQ(decode_error_position("1 00", 2), 1U);
    try {
        decode("110", 2);
        FAIL();
    } catch (const DecodeError& e) {
        EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(decode("0", 0), ParameterError);
}

TEST(Codec, RoundTrip) {
    for (int m = 1; m <= 4; ++m) {
        for (int n = 0; n <= 5; ++n) {
            for_each_tree(m, n, [&](const MAryTree& t) {
                ASSERT_EQ(decode(encode(t), m), t);
                ASSERT_EQ(t.leaf_count(), static_cast<std::size_t>((m - 1) * n + 1));
                ASSERT_EQ(t.internal_count(), static_cast<std::size_t>(n));
            });
        }
    }
}

TEST(Forest, Counts) {
    std::size_t zero = 0;
    for_each_forest(0, [&](const PlaneForest& f) {
        EXPECT_TRUE(f.trees.empty());
        ++zero;
    });
    EXPECT_EQ(zero, 1U);
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> seen;
        for_each_forest(n, [&](const PlaneForest& f) {
            EXPECT_EQ(f.vertex_count(), static_cast<std::size_t>(n));
            seen.insert(f.to_string());
        });
        EXPECT_EQ(BigInt(static_cast<unsigned long>(seen.size())), count_trees(2, n)) << n;
    }
}

TEST(Forest, PsiExamples) {
    EXPECT_EQ(psi(PlaneForest{}).code(), "0");
    const PlaneTree single{};
    EXPECT_EQ(psi(PlaneForest{{single}}).code(), "100");
    const PlaneTree path{{single}};
    EXPECT_EQ(psi(PlaneForest{{path}}).code(), "11000");
    EXPECT_EQ(psi(PlaneForest{{single, single}}).code(), "10100");
    EXPECT_EQ((PlaneForest{{path}}).to_string(), "(())");
    EXPECT_EQ((PlaneForest{{single, single}}).to_string(), "()()");

    std::vector<std::string> n2;
    for_each_forest(2, [&](const PlaneForest& f) { n2.push_back(psi(f).code()); });
    EXPECT_EQ(n2, (std::vector<std::string>{"10100", "11000"}));
    EXPECT_THROW(psi_inverse(decode("1000", 3)), ParameterError);
}

TEST(Forest, PsiRoundTrip) {
    for (int n = 0; n <= 8; ++n) {
        for_each_tree(2, n, [&](const MAryTree& t) {
            const PlaneForest f = psi_inverse(t);
            ASSERT_EQ(f.vertex_count(), static_cast<std::size_t>(n));
            ASSERT_EQ(psi(f), t);
        });
    }
}
