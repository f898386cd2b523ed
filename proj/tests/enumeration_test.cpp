#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "patmaj/enumeration.hpp"

using namespace patmaj;

namespace {

Permutation P(std::string_view s) { return parse_permutation(s); }
PatternSet S(std::string_view s) { return parse_pattern_set(s); }

std::vector<std::vector<int>> as_vectors(const PatternSet& ps) {
    std::vector<std::vector<int>> out;
    for (const auto& p : ps.patterns()) out.emplace_back(p.begin(), p.end());
    return out;
}

// Every pattern set used by the dual-path sweep: all singletons of length <= 4 plus two pairs.
std::vector<PatternSet> sweep_sets() {
    std::vector<PatternSet> out;
    for (const auto& v : oracle::perms_up_to(4)) out.push_back(PatternSet{Permutation(v)});
    out.push_back(S("3412,1324"));
    out.push_back(S("132,231"));
    return out;
}

const std::vector<std::vector<Count>> kTable1 = {
    {1},
    {1, 1},
    {1, 2, 2, 1},
    {1, 3, 4, 6, 5, 3, 1},
    {1, 4, 6, 12, 16, 19, 16, 15, 9, 4, 1},
    {1, 5, 8, 19, 29, 45, 58, 65, 73, 65, 57, 39, 29},
    {1, 6, 10, 27, 44, 76, 119, 164, 212, 260, 287, 299, 303},
};

}  // namespace

TEST(Arith, CheckedOperationsThrowOnOverflow) {
    EXPECT_EQ(binomial(10, 3), 120u);
    EXPECT_EQ(binomial(3, 5), 0u);
    EXPECT_EQ(binomial(60, 30), 118264581564861424ULL);
    EXPECT_THROW(binomial(70, 35), ResourceLimit);
    EXPECT_THROW(checked_add(~Count{0}, 1), ResourceLimit);
    EXPECT_THROW(checked_mul(Count{1} << 40, Count{1} << 30), ResourceLimit);
}

TEST(Avoiders, Counts) {
    EXPECT_EQ(count_avoiders(4, S("1324")), 23u);
    EXPECT_EQ(count_avoiders(5, S("1324")), 103u);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(count_avoiders(n, PatternSet{}), oracle::factorial(n));
    // Catalan numbers for a length-3 pattern
    EXPECT_EQ(count_avoiders(9, S("231")), 4862u);
}

TEST(Avoiders, GeneratedSetMatchesOracle) {
    for (const auto& ps : {S("1324"), S("3412,1324"), S("21"), S("132,231")}) {
        for (int n = 1; n <= 7; ++n) {
            std::set<std::vector<int>> expected, got;
            for (const auto& p : oracle::all_perms(n)) {
                if (oracle::avoids_all(p, as_vectors(ps))) expected.insert(p);
            }
            for (const auto& p : generate_avoiders(n, ps)) got.insert({p.begin(), p.end()});
            ASSERT_EQ(got, expected) << to_string(ps) << " n=" << n;
        }
    }
}

TEST(Avoiders, LimitsRaiseResourceErrors) {
    SearchLimits tight;
    tight.max_n = 5;
    EXPECT_THROW(count_avoiders(6, PatternSet{}, tight), ResourceLimit);
    tight.max_n = 16;
    tight.max_nodes = 100;
    EXPECT_THROW(count_avoiders(7, PatternSet{}, tight), ResourceLimit);
    EXPECT_THROW(core_table(8, 10, PatternSet{}, tight), ResourceLimit);
    EXPECT_THROW(count_avoiders(-1, PatternSet{}), InvalidInput);
}

TEST(Table, ReproducesThe1324Table) {
    for (Algorithm a : {Algorithm::brute, Algorithm::cores, Algorithm::both}) {
        const MajTable t = maj_table(7, 12, S("1324"), a);
        for (int n = 1; n <= 7; ++n) {
            for (int m = 0; m <= 12; ++m) {
                const Count want = m < static_cast<int>(kTable1[n - 1].size()) ? kTable1[n - 1][m] : 0;
                ASSERT_EQ(t.at(n, m), want) << "n=" << n << " m=" << m;
            }
        }
    }
}

TEST(Table, Examples) {
    EXPECT_EQ(maj_table(5, 5, S("1324")).at(5, 5), 19u);
    EXPECT_EQ(maj_table(7, 5, S("3412,1324")).at(7, 5), 20u);
    EXPECT_EQ(maj_table(3, 2, PatternSet{}).at(3, 2), 2u);
}

TEST(Table, NonMonotoneColumnForThePair) {
    const MajTable t = maj_table(8, 5, S("3412,1324"));
    const std::vector<Count> expected{0, 0, 0, 3, 16, 21, 20, 21};
    EXPECT_EQ(t.column(5), expected);
}

TEST(Table, MahonianRows) {
    const MajTable t = maj_table(8, 28, PatternSet{});
    for (int n = 1; n <= 8; ++n) {
        const auto row = t.row(n);
        EXPECT_EQ(std::vector<Count>(row.begin(), row.end()), oracle::mahonian_row(n)) << "n=" << n;
    }
}

TEST(Table, AgreesWithExhaustiveOracle) {
    for (const auto& ps : {S("1324"), S("3412,1324"), S("132,231"), S("2314,321"), S("4123"), PatternSet{}}) {
        const auto want = oracle::table(7, as_vectors(ps));
        const MajTable got = maj_table(7, 21, ps, Algorithm::both);
        for (int n = 1; n <= 7; ++n) {
            const auto row = got.row(n);
            ASSERT_EQ(std::vector<Count>(row.begin(), row.end()), want[n]) << to_string(ps) << " n=" << n;
        }
    }
}

// Brute force and the core path agree on every cell with n <= 9.
TEST(Table, DualPathAgreement) {
    for (const auto& ps : sweep_sets()) {
        const MajTable brute = brute_force_table(9, 36, ps);
        const MajTable cores = core_table(9, 36, ps);
        const auto d = first_difference(brute, cores);
        ASSERT_FALSE(d.has_value()) << to_string(ps) << " n=" << d->n << " m=" << d->m << " " << d->left << " vs "
                                    << d->right;
    }
}

TEST(Table, RowSumAndFirstColumnIdentities) {
    for (const auto& ps : sweep_sets()) {
        const MajTable t = maj_table(8, 28, ps, Algorithm::cores);
        const auto inc = ps.shortest_increasing();
        for (int n = 1; n <= 8; ++n) {
            ASSERT_EQ(t.row_sum(n), count_avoiders(n, ps)) << to_string(ps);
            ASSERT_EQ(t.at(n, 0), inc && *inc <= n ? 0u : 1u) << to_string(ps) << " n=" << n;
        }
    }
}

TEST(Table, ParallelResultsAreIdentical) {
    SearchLimits four;
    four.jobs = 4;
    for (const auto& ps : {S("1324"), S("132,231"), PatternSet{}}) {
        EXPECT_EQ(brute_force_table(9, 20, ps), brute_force_table(9, 20, ps, four));
        EXPECT_EQ(core_table(10, 20, ps), core_table(10, 20, ps, four));
    }
}

TEST(Table, ShapeAndCells) {
    MajTable t(S("12"), 4, 10);
    EXPECT_EQ(t.width(1), 1);
    EXPECT_EQ(t.width(4), 7);
    EXPECT_TRUE(t.row_is_full(4));
    EXPECT_FALSE(MajTable(S("12"), 6, 10).row_is_full(6));
    EXPECT_EQ(t.at(2, 9), 0u);
    EXPECT_THROW(t.set(2, 5, 1), InvalidInput);
    EXPECT_NO_THROW(t.set(2, 5, 0));
    EXPECT_THROW(t.at(5, 0), InvalidInput);
    EXPECT_THROW(MajTable(PatternSet{}, 0, 1), InvalidInput);
    MajTable u = t;
    u.set(3, 1, 7);
    u.set(2, 0, 1);
    const auto d = first_difference(t, u);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->n, 2);
    EXPECT_EQ(d->m, 0);
}

// With 12...k forbidden, columns m >= 1 vanish past m(k-1)+1. Column 0 is the
// identity alone and vanishes from n = k on, which can be later than m(k-1)+1 = 1.
TEST(Table, IncreasingPatternsGiveEventuallyZeroColumns) {
    for (int k : {2, 3, 4}) {
        const PatternSet ps{Permutation::identity(k)};
        const auto col0 = column_by_cores(0, k + 3, ps);
        for (int n = 1; n <= k + 3; ++n) ASSERT_EQ(col0[n - 1], n < k ? 1u : 0u) << "k=" << k << " n=" << n;
        for (int m = 1; m <= 5; ++m) {
            const int last = m * (k - 1) + 1;
            const auto col = column_by_cores(m, last + 6, ps);
            for (int n = last + 1; n <= last + 6; ++n) ASSERT_EQ(col[n - 1], 0u) << "k=" << k << " m=" << m << " n=" << n;
        }
    }
}

TEST(Cores, Examples) {
    EXPECT_EQ(core_set(0, S("1324")).cores, std::vector<Permutation>{Permutation{}});
    EXPECT_EQ(core_set(1, PatternSet{}).cores, std::vector<Permutation>{P("1")});
    EXPECT_EQ(core_set(2, PatternSet{}).cores, std::vector<Permutation>{P("12")});
    EXPECT_THROW(core_set(-1, PatternSet{}), InvalidInput);
}

// C(m, Pi) is exactly the set of cores of avoiders with major index m.
TEST(Cores, MatchDecomposedAvoiders) {
    for (const auto& ps : {PatternSet{}, S("1324"), S("3412,1324"), S("132,231"), S("4123")}) {
        for (int m = 0; m <= 6; ++m) {
            std::set<Permutation> expected;
            for (const auto& v : oracle::perms_up_to(m + 1)) {
                if (oracle::maj(v) == m && oracle::avoids_all(v, as_vectors(ps))) expected.insert(core_of(Permutation(v)));
            }
            const CoreSet got = core_set(m, ps);
            ASSERT_EQ(std::set<Permutation>(got.cores.begin(), got.cores.end()), expected) << to_string(ps) << " m=" << m;
            for (const auto& g : got.cores) {
                ASSERT_EQ(maj_plus(g), m);
                ASSERT_LE(g.size(), std::max(m, 0));
            }
        }
    }
}

TEST(Cores, CountByCoreExamples) {
    for (int n = 2; n <= 40; ++n) EXPECT_EQ(count_by_core(P("12"), n, PatternSet{}), oracle::choose(n, 2) - 1);
    EXPECT_EQ(count_by_core(P("12"), 4, PatternSet{}), 5u);
    EXPECT_EQ(count_by_core(P("12"), 4, S("1324")), 4u);
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(count_by_core(Permutation{}, n, S("1324")), 1u);
    EXPECT_THROW(count_by_core(P("123"), 2, PatternSet{}), InvalidInput);
}

TEST(Cores, CountByCoreMatchesOracle) {
    for (const auto& ps : {PatternSet{}, S("1324"), S("3412,1324"), S("231")}) {
        std::map<Permutation, std::vector<Count>> expected;
        for (const auto& v : oracle::perms_up_to(8)) {
            if (!oracle::avoids_all(v, as_vectors(ps))) continue;
            auto& row = expected[core_of(Permutation(v))];
            row.resize(9, 0);
            ++row[v.size()];
        }
        for (const auto& [gamma, row] : expected) {
            const auto got = count_by_core_series(gamma, 8, ps);
            for (int n = std::max(1, gamma.size()); n <= 8; ++n) {
                ASSERT_EQ(got[n], row[n]) << to_string(ps) << " core " << to_string(gamma) << " n=" << n;
            }
        }
    }
}

// Avoiding profiles of each admissible core are closed downward.
TEST(Cores, DownSetSampling) {
    std::uint64_t seed = 20240601;
    for (const auto& ps : {S("1324"), S("3412,1324"), S("132,231"), S("2314,321"), S("1243")}) {
        for (int m = 1; m <= 8; ++m) {
            for (const auto& g : core_set(m, ps).cores) {
                const auto bad = sample_downset(g, ps, 300, seed++);
                ASSERT_FALSE(bad.has_value()) << to_string(ps) << " core " << to_string(g) << " "
                                              << to_string(bad->upper) << " / " << to_string(bad->lower);
            }
        }
    }
}

// Members of the family insert(insert(12...(n-2), m-1, 1), 1, k) avoid {3412, 1324} with maj m.
TEST(Cores, PairFamilyHasMajorIndexM) {
    const PatternSet ps = S("3412,1324");
    for (int m = 3; m <= 8; ++m) {
        for (int n = m; n <= 11; ++n) {
            for (int k = 3; k <= n; ++k) {
                const Permutation p = insert(insert(Permutation::identity(n - 2), m - 1, 1), 1, k);
                ASSERT_EQ(major_index(p), m) << to_string(p);
                ASSERT_TRUE(ps.avoided_by(p)) << to_string(p);
            }
        }
    }
}

TEST(Eventual, Examples) {
    const auto e1 = eventual_polynomial(1, PatternSet{});
    EXPECT_EQ(e1.polynomial, Polynomial({Rational(-1), Rational(1)}));
    EXPECT_LE(e1.onset, 2);

    const auto e0 = eventual_polynomial(0, S("1324"));
    EXPECT_EQ(e0.polynomial, Polynomial::constant(1));

    const auto e2 = eventual_polynomial(2, S("1324"));
    EXPECT_EQ(e2.polynomial, Polynomial({Rational(-4), Rational(2)}));
    EXPECT_LE(e2.onset, 3);

    const auto single = eventual_polynomial(P("12"), PatternSet{});
    EXPECT_EQ(single.polynomial, Polynomial({Rational(-1), Rational(-1, 2), Rational(1, 2)}));
}

// The polynomial reproduces the exact column from its onset on, and not just before it.
TEST(Eventual, AgreesWithExactCountsFromTheOnset) {
    for (const auto& ps : {PatternSet{}, S("1324"), S("3412,1324"), S("132,231"), S("1243"), S("123")}) {
        for (int m = 0; m <= 7; ++m) {
            const auto e = eventual_polynomial(m, ps);
            ASSERT_LE(e.onset, e.onset_bound) << to_string(ps) << " m=" << m;
            const int top = e.onset + 12;
            const auto col = column_by_cores(m, top, ps);
            for (int n = e.onset; n <= top; ++n) {
                ASSERT_TRUE(e.polynomial.equals_count(n, col[n - 1])) << to_string(ps) << " m=" << m << " n=" << n;
            }
            if (e.onset > 1) {
                ASSERT_FALSE(e.polynomial.equals_count(e.onset - 1, col[e.onset - 2])) << to_string(ps) << " m=" << m;
            }
        }
    }
}
