#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patmaj/arith.hpp"
#include "patmaj/containment.hpp"
#include "patmaj/decomposition.hpp"
#include "patmaj/enumeration.hpp"
#include "patmaj/error.hpp"
#include "patmaj/pattern_set.hpp"
#include "patmaj/permutation.hpp"
#include "patmaj/polynomial.hpp"

namespace patmaj {

// ---------------------------------------------------------------------------
// Closed forms

struct LayeredDegree {
    long long value;  // floor((d-1)(k-1)/2 + m/d)
    long long d;      // smallest d >= 1 with d(d+1)/2 * (k-1) >= m
};

/// Degree for sets whose members all have finite magnitude, minimum k. Integer-only.
inline LayeredDegree layered_degree(long long m, long long k) {
    if (k < 2) throw InvalidInput("layered_degree needs k >= 2");
    if (m < 1) throw InvalidInput("layered_degree needs m >= 1");
    // d ~ sqrt(2m/(k-1)); start from the integer root and correct.
    long long d = std::max(1LL, isqrt((2 * m) / (k - 1)));
    while (d * (d + 1) * (k - 1) < 2 * m) ++d;
    while (d > 1 && (d - 1) * d * (k - 1) >= 2 * m) --d;
    const long long value = ((d - 1) * (k - 1) * d + 2 * m) / (2 * d);
    return {value, d};
}

/// floor((-1 + sqrt(1 + 8m)) / 2): the largest l with l(l+1)/2 <= m.
inline long long triangular_degree(long long m) {
    if (m < 0) throw InvalidInput("triangular_degree needs m >= 0");
    return (isqrt(1 + 8 * m) - 1) / 2;
}

/**
 * Coordinate i in {1,2,3} such that every magnitude-2 member has a nonzero
 * i-th padding coordinate (its core has length 2, so the profile has three
 * coordinates). Smallest such i, or nullopt.
 */
inline std::optional<int> magnitude_two_coordinate(const PatternSet& patterns) {
    bool any = false;
    bool ok[3] = {true, true, true};
    for (const auto& p : patterns.patterns()) {
        if (magnitude(p) != Magnitude::finite(2)) continue;
        any = true;
        const auto profile = decompose(p).profile;
        for (int i = 1; i <= 3; ++i) ok[i - 1] = ok[i - 1] && profile.at(i) != 0;
    }
    if (!any) return std::nullopt;
    for (int i = 1; i <= 3; ++i) {
        if (ok[i - 1]) return i;
    }
    return std::nullopt;
}

/**
 * (k-1)(l-1) when Pi has a member whose core is 12...k and one whose core
 * is l...1, minimized over such pairs; cores of length <= 1 count as both
 * and give 0.
 */
inline std::optional<int> bounded_degree_criterion(const PatternSet& patterns) {
    std::optional<int> best_inc, best_dec;
    for (const auto& p : patterns.patterns()) {
        const Permutation core = core_of(p);
        const int len = core.size();
        if (core == Permutation::identity(len)) best_inc = best_inc ? std::min(*best_inc, len) : len;
        if (core == Permutation::decreasing(len)) best_dec = best_dec ? std::min(*best_dec, len) : len;
    }
    if (!best_inc || !best_dec) return std::nullopt;
    return std::max(*best_inc - 1, 0) * std::max(*best_dec - 1, 0);
}

enum class PredictionKind { exact, upper_bound, zero_sequence };

inline const char* to_string(PredictionKind k) {
    switch (k) {
        case PredictionKind::exact: return "exact";
        case PredictionKind::upper_bound: return "upper_bound";
        case PredictionKind::zero_sequence: return "zero_sequence";
    }
    return "?";
}

struct DegreePrediction {
    PredictionKind kind = PredictionKind::exact;
    long long value = 0;
    std::string rule;
    // Mixed finite/infinite magnitudes: the degree is not determined, only bounded.
    bool mixed_magnitude = false;
    std::optional<int> magnitude_two_index;
};

inline DegreePrediction predicted_degree(long long m, const PatternSet& patterns) {
    if (m < 0) throw InvalidInput("major index must be non-negative");
    const Magnitude mg = patterns.magnitude();
    DegreePrediction out;
    if (mg.is_infinite()) {
        out.value = m;
        out.rule = "infinite magnitude";
        return out;
    }
    const int k = mg.value();
    if (k <= 1) {
        if (patterns.contains_increasing()) {
            out.kind = PredictionKind::zero_sequence;
            out.rule = "increasing pattern: column eventually zero";
        } else {
            out.rule = "magnitude 1";
        }
        return out;
    }
    if (m == 0) {
        out.rule = "m = 0";
        return out;
    }
    const bool all_finite = patterns.all_finite_magnitude();
    if (all_finite && k >= 3) {
        out.value = layered_degree(m, k).value;
        out.rule = "finite magnitude k >= 3";
        return out;
    }
    if (all_finite && k == 2) {
        if (auto i = magnitude_two_coordinate(patterns)) {
            out.value = triangular_degree(m);
            out.rule = "magnitude 2 with shared nonzero coordinate";
            out.magnitude_two_index = i;
            return out;
        }
    }
    out.kind = PredictionKind::upper_bound;
    out.mixed_magnitude = !all_finite;
    out.value = layered_degree(m, k).value;
    out.rule = all_finite ? "magnitude 2 without shared coordinate: bound from a minimum-magnitude member"
                          : "mixed finite and infinite magnitudes: bound from a minimum-magnitude member";
    if (auto clamp = bounded_degree_criterion(patterns); clamp && *clamp < out.value) {
        out.value = *clamp;
        out.rule += ", clamped by increasing/decreasing cores";
    }
    return out;
}

// 1 when a random permutation with major index m avoids Pi with probability -> 1, else 0.
inline int limit_probability(long long m, const PatternSet& patterns) { return patterns.magnitude().exceeds(m) ? 1 : 0; }

// ---------------------------------------------------------------------------
// Witness cores

/**
 * A longest 12...k-avoider with maj+ = m: the co-layered permutation with
 * descents d_1 < ... < d_{d-1} and length d_d, where
 *   d_i = i(k-1) - s       for i <= d - p,
 *   d_i = i(k-1) - s - 1   otherwise,
 * with T = d(d+1)/2 (k-1), s = floor((T - m)/d) and p = T - ds - m.
 */
inline Permutation colayered_witness(long long m, int k) {
    if (k < 3) throw InvalidInput("colayered_witness needs k >= 3");
    if (m < 1) throw InvalidInput("colayered_witness needs m >= 1");
    const long long d = layered_degree(m, k).d;
    const long long total = d * (d + 1) / 2 * (k - 1);
    const long long s = (total - m) / d;
    const long long p = total - d * s - m;
    std::vector<int> cuts;
    for (long long i = 1; i <= d; ++i) {
        cuts.push_back(static_cast<int>(i <= d - p ? i * (k - 1) - s : i * (k - 1) - s - 1));
    }
    const int length = cuts.back();
    cuts.pop_back();
    Permutation w = co_layered(DescentSet(std::move(cuts)), length);
    if (maj_plus(w) != m || contains(w, Permutation::identity(k)) || length != layered_degree(m, k).value) {
        throw VerificationFailure("colayered_witness(" + std::to_string(m) + ", " + std::to_string(k) +
                                  ") produced invalid " + to_string(w));
    }
    return w;
}

/**
 * Core of length l or l+1 with maj+ = m for magnitude-2 sets whose members
 * share nonzero padding coordinate i. l is the largest with l(l+1)/2 <= m;
 * a triangular m gives l...1, otherwise one letter is inserted into l...1.
 */
inline Permutation magnitude_two_witness(long long m, int i) {
    if (m < 1) throw InvalidInput("magnitude_two_witness needs m >= 1");
    if (i < 1 || i > 3) throw InvalidInput("coordinate index must be 1, 2 or 3");
    const int l = static_cast<int>(triangular_degree(m));
    const Permutation eps = Permutation::decreasing(l);
    Permutation w;
    const long long rest = m - static_cast<long long>(l) * (l + 1) / 2;
    if (rest == 0) {
        w = eps;
    } else {
        const int d = static_cast<int>(rest);
        switch (i) {
            case 1: w = insert(eps, l + 1 - d, 1); break;
            case 2: w = insert(eps, l + 1 - d, d); break;
            default: w = insert(eps, l + 2 - d, l + 1); break;
        }
    }
    if (maj_plus(w) != m) {
        throw VerificationFailure("magnitude_two_witness(" + std::to_string(m) + ", " + std::to_string(i) +
                                  ") produced " + to_string(w) + " with maj+ " + std::to_string(maj_plus(w)));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Empirical detection

struct DetectedDegree {
    bool conclusive = false;
    int degree = 0;
    Polynomial polynomial;
    int onset = 0;  // smallest n from which polynomial matches every later computed value
};

/**
 * Finds the first difference order whose trailing `window` + 1 entries are
 * constant, interpolates the tail with that degree, and reports from which
 * n on the polynomial matches the whole computed series. `first_n` is the
 * n of series[0].
 */
inline DetectedDegree detect_degree(std::span<const Count> series, int first_n, int window = 3) {
    if (window < 1) throw InvalidInput("window must be at least 1");
    if (series.size() < static_cast<std::size_t>(window) + 2) {
        throw InvalidInput("series of length " + std::to_string(series.size()) + " is too short for window " +
                           std::to_string(window) + " (need " + std::to_string(window + 2) + ")");
    }
    std::vector<BigInt> cur;
    for (Count c : series) cur.emplace_back(c);
    DetectedDegree out;
    const std::size_t need = static_cast<std::size_t>(window) + 1;
    for (int d = 0; cur.size() >= need; ++d) {
        if (std::all_of(cur.end() - static_cast<std::ptrdiff_t>(need), cur.end(),
                        [&](const BigInt& x) { return x == cur.back(); })) {
            out.conclusive = true;
            out.degree = d;
            break;
        }
        std::vector<BigInt> next;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) next.push_back(cur[i + 1] - cur[i]);
        cur = std::move(next);
    }
    if (!out.conclusive) return out;

    const std::size_t len = series.size();
    const std::size_t start = len - static_cast<std::size_t>(out.degree) - 1;
    std::vector<Rational> ys;
    for (std::size_t i = start; i < len; ++i) ys.emplace_back(BigInt(series[i]));
    out.polynomial = Polynomial::interpolate(first_n + static_cast<long long>(start), ys);
    std::size_t onset = len;
    while (onset > 0 && out.polynomial.equals_count(first_n + static_cast<long long>(onset) - 1, series[onset - 1])) {
        --onset;
    }
    out.onset = first_n + static_cast<int>(onset);
    return out;
}

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { match, mismatch, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::mismatch: return "mismatch";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct DegreeReport {
    long long m = 0;
    PatternSet patterns;
    DegreePrediction prediction;
    std::optional<DetectedDegree> detected;
    std::optional<EventualPolynomial> eventual;
    std::optional<Permutation> witness;
    bool witness_admissible = false;
    Verdict verdict = Verdict::inconclusive;
};

// Core achieving the predicted lower bound, when the prediction comes with a construction.
inline std::optional<Permutation> witness_core(long long m, const PatternSet& patterns, const DegreePrediction& pred) {
    if (pred.kind != PredictionKind::exact) return std::nullopt;
    if (m == 0) return Permutation{};
    const Magnitude mg = patterns.magnitude();
    if (mg.is_infinite()) return Permutation::identity(static_cast<int>(m));
    if (mg.value() <= 1) return std::nullopt;
    if (mg.value() >= 3) return colayered_witness(m, mg.value());
    if (pred.magnitude_two_index) return magnitude_two_witness(m, *pred.magnitude_two_index);
    return std::nullopt;
}

inline Verdict judge(const DegreePrediction& pred, const std::optional<DetectedDegree>& detected) {
    if (!detected || !detected->conclusive) return Verdict::inconclusive;
    switch (pred.kind) {
        case PredictionKind::exact:
            return detected->degree == pred.value ? Verdict::match : Verdict::mismatch;
        case PredictionKind::upper_bound:
            return detected->degree <= pred.value ? Verdict::match : Verdict::mismatch;
        case PredictionKind::zero_sequence:
            return detected->polynomial.is_zero() ? Verdict::match : Verdict::mismatch;
    }
    return Verdict::inconclusive;
}

/// Prediction, exact eventual polynomial, and detection over `series` (series[0] is n = 1).
inline DegreeReport degree_report(long long m, const PatternSet& patterns, std::span<const Count> series,
                                  int window = 3, const SearchLimits& limits = {}) {
    DegreeReport r;
    r.m = m;
    r.patterns = patterns;
    r.prediction = predicted_degree(m, patterns);
    r.eventual = eventual_polynomial(static_cast<int>(m), patterns, limits);
    r.witness = witness_core(m, patterns, r.prediction);
    if (r.witness) r.witness_admissible = maj_plus(*r.witness) == m && is_admissible_core(*r.witness, patterns);
    if (series.size() >= static_cast<std::size_t>(window) + 2) r.detected = detect_degree(series, 1, window);
    r.verdict = judge(r.prediction, r.detected);
    return r;
}

// Series length that reaches d + window points past the onset for any degree d <= m.
inline int detection_length(const EventualPolynomial& eventual, long long m, int window) {
    return std::max(eventual.onset, 1) + static_cast<int>(m) + window + 1;
}

/// As above with the series computed by the core path; max_n <= 0 picks detection_length().
inline DegreeReport degree_report(long long m, const PatternSet& patterns, int max_n = 0, int window = 3,
                                  const SearchLimits& limits = {}) {
    if (max_n <= 0) max_n = detection_length(eventual_polynomial(static_cast<int>(m), patterns, limits), m, window);
    const auto series = column_by_cores(static_cast<int>(m), max_n, patterns, limits);
    return degree_report(m, patterns, std::span<const Count>(series), window, limits);
}

}  // namespace patmaj
