#include <gtest/gtest.h>

#include "oracle.hpp"
#include "patmaj/containment.hpp"
#include "patmaj/pattern_set.hpp"
#include "patmaj/permutation.hpp"

using namespace patmaj;

namespace {

Permutation P(std::string_view s) { return parse_permutation(s); }

std::vector<Permutation> small_patterns() {
    std::vector<Permutation> out;
    for (const auto& v : oracle::perms_up_to(4)) out.emplace_back(v);
    return out;
}

std::vector<int> to_vec(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(Permutation, RejectsNonPermutations) {
    EXPECT_THROW(Permutation({1, 1}), InvalidInput);
    EXPECT_THROW(Permutation({0, 1}), InvalidInput);
    EXPECT_THROW(Permutation({1, 3}), InvalidInput);
    EXPECT_NO_THROW(Permutation(std::vector<int>{}));
}

TEST(Permutation, TextForms) {
    EXPECT_EQ(P("1324"), Permutation({1, 3, 2, 4}));
    EXPECT_EQ(P("10,1,2,3,4,5,6,7,8,9").size(), 10);
    EXPECT_EQ(to_string(P("10,1,2,3,4,5,6,7,8,9")), "10,1,2,3,4,5,6,7,8,9");
    EXPECT_EQ(to_string(P("3,1,2")), "312");
    EXPECT_THROW(P("12a"), ParseError);
    EXPECT_THROW(P("122"), InvalidInput);
}

TEST(Permutation, OrderPattern) {
    EXPECT_EQ(order_pattern({3, 8, 7}), P("132"));
    EXPECT_EQ(order_pattern({1, 3}), P("12"));
    EXPECT_THROW(order_pattern({2, 2}), InvalidInput);
}

TEST(Containment, Examples) {
    EXPECT_TRUE(contains(P("387124569"), P("132")));
    EXPECT_FALSE(contains(P("123"), P("21")));
    EXPECT_TRUE(contains(P("1324"), P("1324")));
    EXPECT_TRUE(contains(P("1"), Permutation{}));
    EXPECT_FALSE(contains(P("12"), P("123")));
}

TEST(Containment, AgreesWithSubsetOracle) {
    const auto patterns = small_patterns();
    for (const auto& pv : oracle::perms_up_to(7)) {
        const Permutation pi(pv);
        for (const auto& s : patterns) {
            const std::vector<int> sv(s.begin(), s.end());
            ASSERT_EQ(contains(pi, s), oracle::contains(pv, sv)) << to_string(pi) << " vs " << to_string(s);
        }
    }
}

TEST(Containment, ThroughIndexMatchesRemovalCheck) {
    // Subset oracle restricted to index sets containing k.
    const Permutation sigma = P("231");
    const PatternMatcher m(sigma);
    for (const auto& pv : oracle::perms_up_to(6)) {
        for (int k = 0; k < static_cast<int>(pv.size()); ++k) {
            bool expected = false;
            oracle::for_each_subset(static_cast<int>(pv.size()), 3, [&](const std::vector<int>& idx) {
                if (std::find(idx.begin(), idx.end(), k) == idx.end()) return;
                expected = expected || oracle::same_order({pv[idx[0]], pv[idx[1]], pv[idx[2]]}, {2, 3, 1});
            });
            ASSERT_EQ(m.occurs_through(pv, k), expected);
        }
    }
}

TEST(Statistics, MajorIndex) {
    EXPECT_EQ(major_index(Permutation::identity(7)), 0);
    EXPECT_EQ(major_index(P("387124569")), 5);
    EXPECT_EQ(to_vec(descents(P("387124569")).positions()), (std::vector<int>{2, 3}));
    EXPECT_EQ(maj_plus(P("132")), 5);
    EXPECT_EQ(maj_plus(Permutation{}), 0);
    for (const auto& pv : oracle::perms_up_to(6)) ASSERT_EQ(major_index(Permutation(pv)), oracle::maj(pv));
}

TEST(Statistics, TailAndSlope) {
    EXPECT_EQ(tail(P("4213567")), 3);
    EXPECT_EQ(slope(P("4213567")), 5);
    EXPECT_EQ(slope(P("421356")), 4);
    EXPECT_EQ(tail(P("231")), 0);
    EXPECT_EQ(tail(Permutation{}), 0);
    EXPECT_EQ(slope(Permutation{}), 0);
    EXPECT_EQ(tail(Permutation::identity(5)), 5);
    EXPECT_EQ(slope(Permutation::identity(5)), 5);
}

TEST(Statistics, Magnitude) {
    EXPECT_TRUE(magnitude(P("321")).is_infinite());
    EXPECT_EQ(magnitude(Permutation::identity(4)), Magnitude::finite(0));
    EXPECT_EQ(magnitude(Permutation{}), Magnitude::finite(0));
    EXPECT_EQ(magnitude(P("1324")), Magnitude::finite(2));
    EXPECT_EQ(set_magnitude(parse_pattern_set("3412,1324")), Magnitude::finite(2));
    EXPECT_TRUE(set_magnitude(PatternSet{}).is_infinite());
    EXPECT_LT(Magnitude::finite(100), Magnitude::infinite());
    EXPECT_LT(Magnitude::finite(1), Magnitude::finite(2));
    EXPECT_EQ(Magnitude::infinite(), Magnitude::infinite());
    EXPECT_TRUE(Magnitude::infinite().exceeds(1000000));
    EXPECT_FALSE(Magnitude::finite(2).exceeds(2));
}

TEST(Insertion, Examples) {
    EXPECT_EQ(insert(P("23154"), 3, 2), P("342165"));
    EXPECT_EQ(insert(Permutation{}, 1, 1), P("1"));
    EXPECT_EQ(insert(Permutation::identity(5), 6, 6), Permutation::identity(6));
    EXPECT_THROW(insert(P("12"), 4, 1), InvalidInput);
    EXPECT_THROW(insert(P("12"), 1, 0), InvalidInput);
}

TEST(Insertion, RemoveRecoversAndRestIsOrderIsomorphic) {
    for (const auto& pv : oracle::perms_up_to(6)) {
        const Permutation pi(pv);
        const int n = pi.size();
        for (int k = 1; k <= n + 1; ++k) {
            for (int l = 1; l <= n + 1; ++l) {
                const Permutation img = insert(pi, k, l);
                ASSERT_EQ(img.at(k), l);
                ASSERT_EQ(remove_at(img, k), pi);
            }
        }
    }
}

TEST(Insertion, MaxInsertionNeverLowersMaj) {
    for (const auto& pv : oracle::perms_up_to(6)) {
        const Permutation pi(pv);
        for (int k = 1; k <= pi.size() + 1; ++k) ASSERT_GE(major_index(insert(pi, k, pi.size() + 1)), major_index(pi));
    }
}

// Containment pushes maj+ and magnitude up.
TEST(Properties, ContainmentIsMonotoneInMajPlusAndMagnitude) {
    const auto patterns = small_patterns();
    for (const auto& pv : oracle::perms_up_to(8)) {
        const Permutation pi(pv);
        const int mp = maj_plus(pi);
        const Magnitude mg = magnitude(pi);
        for (const auto& s : patterns) {
            if (s.size() > pi.size() || !contains(pi, s)) continue;
            ASSERT_GE(mp, maj_plus(s)) << to_string(pi) << " " << to_string(s);
            ASSERT_GE(mg, magnitude(s)) << to_string(pi) << " " << to_string(s);
        }
    }
}

// Every occurrence in an inserted permutation uses the inserted letter when the original avoids.
TEST(Properties, OccurrencesAfterInsertionUseTheNewLetter) {
    for (const auto& s : small_patterns()) {
        if (s.size() < 3) continue;
        const std::vector<int> sv(s.begin(), s.end());
        const int len = s.size();
        for (const auto& pv : oracle::perms_up_to(7)) {
            const Permutation pi(pv);
            if (contains(pi, s)) continue;
            for (int k = 1; k <= pi.size() + 1; ++k) {
                for (int l = 1; l <= pi.size() + 1; ++l) {
                    const Permutation img = insert(pi, k, l);
                    if (!contains(img, s)) continue;
                    std::vector<int> iv(img.begin(), img.end());
                    oracle::for_each_subset(img.size(), len, [&](const std::vector<int>& idx) {
                        std::vector<int> sub;
                        for (int i : idx) sub.push_back(iv[i]);
                        if (oracle::same_order(sub, sv)) {
                            ASSERT_NE(std::find(idx.begin(), idx.end(), k - 1), idx.end());
                        }
                    });
                }
            }
        }
    }
}

// Inserting below pi_k with only earlier descents, keeping the comparison with pi_{k-1}, preserves Desc.
TEST(Properties, InsertionPreservesDescentsUnderSideCondition) {
    std::size_t checked = 0;
    for (const auto& pv : oracle::perms_up_to(7)) {
        const Permutation pi(pv);
        const auto d = descents(pi);
        for (int k = 1; k <= pi.size(); ++k) {
            if (d.last() > k - 1) continue;
            for (int l = 1; l <= pi.at(k); ++l) {
                if (k > 1 && ((pi.at(k - 1) < l) != (pi.at(k - 1) < pi.at(k)))) continue;
                ASSERT_EQ(descents(insert(pi, k, l)), d) << to_string(pi) << " k=" << k << " l=" << l;
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 10000u);
}

TEST(PatternSet, ParseAndDerivedFields) {
    const PatternSet s = parse_pattern_set("3412,1324,1324");
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.max_length(), 4);
    EXPECT_EQ(s.cap(), 4);
    EXPECT_FALSE(s.contains_increasing());
    EXPECT_TRUE(parse_pattern_set("21,123").contains_increasing());
    EXPECT_TRUE(parse_pattern_set("").empty());
    EXPECT_EQ(PatternSet{}.cap(), 1);
    const PatternSet longp = parse_pattern_set("10,1,2,3,4,5,6,7,8,9;1324");
    EXPECT_EQ(longp.size(), 2u);
    EXPECT_EQ(parse_pattern_set(to_string(longp)), longp);
    const PatternSet lone = parse_pattern_set("10,1,2,3,4,5,6,7,8,9;");
    EXPECT_EQ(lone.size(), 1u);
    EXPECT_EQ(parse_pattern_set(to_string(lone)), lone);
    EXPECT_THROW(parse_pattern_set("13a"), InvalidInput);
}
