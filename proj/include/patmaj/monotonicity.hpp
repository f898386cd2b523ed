#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "patmaj/containment.hpp"
#include "patmaj/enumeration.hpp"
#include "patmaj/error.hpp"
#include "patmaj/permutation.hpp"

namespace patmaj {

enum class InjectionCaseTag { AppendMax, ExpandAtTail, InsertMinIntoSlope };

inline const char* to_string(InjectionCaseTag tag) {
    switch (tag) {
        case InjectionCaseTag::AppendMax: return "AppendMax";
        case InjectionCaseTag::ExpandAtTail: return "ExpandAtTail";
        case InjectionCaseTag::InsertMinIntoSlope: return "InsertMinIntoSlope";
    }
    return "?";
}

// Which branch produced an image, and the insertion it performed.
struct InjectionCase {
    InjectionCaseTag tag;
    int position;
    int value;

    bool operator==(const InjectionCase&) const = default;
};

struct InjectionResult {
    Permutation image;
    InjectionCase applied;
};

// The branch the injection takes for (pi, sigma), from tail(sigma) and slope(pi).
inline InjectionCaseTag select_case(const Permutation& pi, const Permutation& sigma) {
    const int t = tail(sigma);
    if (t == 0) return InjectionCaseTag::AppendMax;
    if (slope(pi) >= t) return InjectionCaseTag::ExpandAtTail;
    return InjectionCaseTag::InsertMinIntoSlope;
}

inline void require_descent(const Permutation& sigma) {
    if (descents(sigma).empty()) {
        throw UnsupportedPattern("pattern " + to_string(sigma) +
                                 " is increasing; for 12...k every column M_n^m is eventually zero "
                                 "(an Erdos-Szekeres argument: major index m allows at most m descents, hence at "
                                 "most m+1 increasing runs, each shorter than k), so no length-increasing injection "
                                 "exists");
    }
}

/**
 * Maps a sigma-avoider pi of length n to a sigma-avoider of length n+1 with
 * the same major index. The three branches are selected by tail(sigma)
 * and slope(pi):
 *   tail(sigma) = 0              append n+1;
 *   slope(pi) >= tail(sigma)     duplicate the letter at t = n+1-tail(sigma);
 *   otherwise                    put 1 at position n+1-slope(pi).
 */
inline InjectionResult monotone_injection(const Permutation& pi, const Permutation& sigma) {
    require_descent(sigma);
    if (contains(pi, sigma)) {
        throw PreconditionViolation(to_string(pi) + " contains the pattern " + to_string(sigma));
    }
    const int n = pi.size();
    InjectionCase c{select_case(pi, sigma), 0, 0};
    switch (c.tag) {
        case InjectionCaseTag::AppendMax:
            c.position = n + 1;
            c.value = n + 1;
            break;
        case InjectionCaseTag::ExpandAtTail:
            c.position = n + 1 - tail(sigma);
            c.value = pi.at(c.position);
            break;
        case InjectionCaseTag::InsertMinIntoSlope:
            c.position = n + 1 - slope(pi);
            c.value = 1;
            break;
    }
    return {insert(pi, c.position, c.value), c};
}

struct CaseTally {
    std::uint64_t append_max = 0;
    std::uint64_t expand_at_tail = 0;
    std::uint64_t insert_min_into_slope = 0;

    void add(InjectionCaseTag tag) {
        switch (tag) {
            case InjectionCaseTag::AppendMax: ++append_max; break;
            case InjectionCaseTag::ExpandAtTail: ++expand_at_tail; break;
            case InjectionCaseTag::InsertMinIntoSlope: ++insert_min_into_slope; break;
        }
    }
    std::uint64_t total() const { return append_max + expand_at_tail + insert_min_into_slope; }
};

struct Counterexample {
    Permutation pi;
    std::string reason;
};

struct ColumnCheck {
    int m;
    Count count_n;         // M_n^m(sigma)
    Count count_next;      // M_{n+1}^m(sigma), recomputed independently
};

struct MonotonicityReport {
    Permutation sigma;
    int n = 0;
    int m_max = 0;
    bool verified = false;
    std::optional<Counterexample> counterexample;
    CaseTally tally;
    std::vector<ColumnCheck> columns;
};

/**
 * Applies the injection to every pi in M_n^m(sigma), m <= m_max, and checks
 * that each image lies in M_{n+1}^m(sigma), that no two images coincide,
 * and that M_n^m(sigma) <= M_{n+1}^m(sigma) with the right side counted by
 * a separate enumeration. Stops at the first failure.
 */
inline MonotonicityReport verify_monotonicity(const Permutation& sigma, int n, int m_max,
                                              const SearchLimits& limits = {}) {
    require_descent(sigma);
    if (n < 0 || m_max < 0) throw InvalidInput("n and m_max must be non-negative");
    MonotonicityReport report;
    report.sigma = sigma;
    report.n = n;
    report.m_max = m_max;
    const PatternSet single{sigma};
    const PatternMatcher matcher(sigma);

    auto fail = [&](const Permutation& pi, std::string why) {
        report.counterexample = Counterexample{pi, std::move(why)};
        report.verified = false;
        return report;
    };

    // One walk per length gives every column at once.
    std::vector<std::vector<Permutation>> by_maj(static_cast<std::size_t>(m_max) + 1);
    for_each_avoider(
        n, single,
        [&](std::span<const int> v) {
            by_maj[major_index(v)].push_back(Permutation::from_trusted({v.begin(), v.end()}));
        },
        limits, m_max);
    std::vector<Count> next(static_cast<std::size_t>(m_max) + 1, 0);
    for_each_avoider(n + 1, single, [&](std::span<const int> v) { ++next[major_index(v)]; }, limits, m_max);

    for (int m = 0; m <= m_max; ++m) {
        std::unordered_map<Permutation, Permutation> preimage;
        for (const auto& pi : by_maj[m]) {
            const auto [image, applied] = monotone_injection(pi, sigma);
            if (applied.tag != select_case(pi, sigma)) return fail(pi, "case selection drifted");
            report.tally.add(applied.tag);
            if (image.size() != n + 1) return fail(pi, "image has the wrong length");
            if (major_index(image) != m) {
                return fail(pi, "major index changed: " + std::to_string(m) + " -> " +
                                    std::to_string(major_index(image)) + " (image " + to_string(image) + ")");
            }
            if (matcher.occurs_in(image.values())) return fail(pi, "image " + to_string(image) + " contains the pattern");
            auto [it, inserted] = preimage.emplace(image, pi);
            if (!inserted) {
                return fail(pi, "image " + to_string(image) + " also reached from " + to_string(it->second));
            }
        }
        report.columns.push_back({m, by_maj[m].size(), next[m]});
        if (by_maj[m].size() > next[m]) {
            return fail(by_maj[m].empty() ? Permutation{} : by_maj[m].front(),
                        "column " + std::to_string(m) + " decreases: " + std::to_string(by_maj[m].size()) + " > " +
                            std::to_string(next[m]));
        }
        if (preimage.size() > next[m]) return fail(Permutation{}, "more distinct images than targets");
    }
    report.verified = true;
    return report;
}

}  // namespace patmaj
