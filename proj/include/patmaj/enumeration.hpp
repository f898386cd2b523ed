#pragma once

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "patmaj/arith.hpp"
#include "patmaj/decomposition.hpp"
#include "patmaj/error.hpp"
#include "patmaj/pattern_set.hpp"
#include "patmaj/permutation.hpp"
#include "patmaj/polynomial.hpp"

namespace patmaj {

enum class Algorithm { brute, cores, both };

struct SearchLimits {
    // Longest permutation the brute-force generator will build.
    int max_n = 16;
    // Search nodes (generator nodes plus signature nodes) before giving up.
    std::uint64_t max_nodes = 4'000'000'000ULL;
    // Worker threads; results are identical for every value.
    unsigned jobs = 1;
};

namespace detail {

class NodeBudget {
public:
    explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

    void charge(std::uint64_t n = 1) {
        if (used_.fetch_add(n, std::memory_order_relaxed) + n > limit_) {
            throw ResourceLimit("search node ceiling of " + std::to_string(limit_) + " exceeded");
        }
    }

    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
};

/**
 * Depth-first walk over Pi-avoiders, growing each node by inserting the
 * next-largest value at every position.
 *
 * A child can only contain a pattern through the new letter (its parent
 * avoids), so only occurrences through that index are searched. Inserting
 * the maximum never lowers the major index, and the length grows by one,
 * so any `keep(length, maj)` that is monotone in both arguments may prune
 * whole subtrees.
 */
template <class Keep, class Visit>
void walk_avoiders(std::vector<int>& node, int node_maj, int max_len, const PatternSet& patterns, Keep&& keep,
                   Visit&& visit, NodeBudget& budget) {
    const int j = static_cast<int>(node.size());
    if (j >= max_len) return;
    std::vector<int> child(static_cast<std::size_t>(j) + 1);
    for (int p = 0; p <= j; ++p) {
        for (int i = 0, w = 0; i <= j; ++i) child[i] = i == p ? j + 1 : node[w++];
        const int m = major_index(child);
        if (!keep(j + 1, m)) continue;
        budget.charge();
        if (!patterns.avoided_through(child, p)) continue;
        visit(std::span<const int>(child), m);
        walk_avoiders(child, m, max_len, patterns, keep, visit, budget);
    }
    (void)node_maj;
}

inline Count signature_weight(int n, int k, int sum, int at_cap) {
    const long long extra = static_cast<long long>(n) - k - sum;
    if (extra < 0) return 0;
    if (at_cap == 0) return extra == 0 ? 1 : 0;
    return binomial(extra + at_cap - 1, at_cap - 1);
}

/**
 * Visits every capped signature c in {0..K}^{k+1} such that gamma . c
 * avoids Pi and c meets the last-descent condition; f(c, |c|, #{c_i = K}).
 *
 * Coordinates are assigned left to right with the rest held at zero. The
 * avoiding profiles form a down-set, so once gamma . (c_1..c_i, 0..0)
 * contains a pattern every larger value at coordinate i does too and the
 * value loop stops. `size_budget` >= 0 drops signatures with |c| above it.
 */
template <class F>
void for_each_signature(const Permutation& gamma, const PatternSet& patterns, int size_budget, F&& f,
                        NodeBudget& budget) {
    const int k = gamma.size();
    const int cap = patterns.cap();
    std::vector<int> c(static_cast<std::size_t>(k) + 1, 0);
    std::vector<int> text;
    compose_into(gamma.values(), c, text);
    if (!patterns.avoided_by(text)) return;

    std::function<void(int, int, int)> rec = [&](int i, int sum, int at_cap) {
        if (i == k + 1) {
            if (satisfies_last_descent(gamma, c)) f(std::span<const int>(c), sum, at_cap);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            if (size_budget >= 0 && sum + v > size_budget) break;
            c[i] = v;
            if (v > 0) {
                budget.charge();
                compose_into(gamma.values(), c, text);
                if (!patterns.avoided_by(text)) break;
            }
            rec(i + 1, sum + v, at_cap + (v == cap ? 1 : 0));
        }
        c[i] = 0;
    };
    rec(0, 0, 0);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Brute force

/// Calls f(values) for each Pi-avoider of length n (and maj <= max_maj when given).
template <class F>
void for_each_avoider(int n, const PatternSet& patterns, F&& f, const SearchLimits& limits = {},
                      int max_maj = INT_MAX) {
    if (n < 0) throw InvalidInput("length must be non-negative");
    if (n > limits.max_n) {
        throw ResourceLimit("n = " + std::to_string(n) + " exceeds the configured search bound " +
                            std::to_string(limits.max_n));
    }
    if (n == 0) {
        std::vector<int> empty;
        f(std::span<const int>(empty));
        return;
    }
    detail::NodeBudget budget(limits.max_nodes);
    std::vector<int> root;
    detail::walk_avoiders(
        root, 0, n, patterns, [&](int, int m) { return m <= max_maj; },
        [&](std::span<const int> v, int) {
            if (static_cast<int>(v.size()) == n) f(v);
        },
        budget);
}

inline std::vector<Permutation> generate_avoiders(int n, const PatternSet& patterns, const SearchLimits& limits = {}) {
    std::vector<Permutation> out;
    for_each_avoider(
        n, patterns, [&](std::span<const int> v) { out.push_back(Permutation::from_trusted({v.begin(), v.end()})); },
        limits);
    return out;
}

// All members of M_n^m(Pi).
inline std::vector<Permutation> avoiders_with_maj(int n, int m, const PatternSet& patterns,
                                                  const SearchLimits& limits = {}) {
    std::vector<Permutation> out;
    for_each_avoider(
        n, patterns,
        [&](std::span<const int> v) {
            if (major_index(v) == m) out.push_back(Permutation::from_trusted({v.begin(), v.end()}));
        },
        limits, m);
    return out;
}

inline Count count_avoiders(int n, const PatternSet& patterns, const SearchLimits& limits = {}) {
    Count total = 0;
    for_each_avoider(n, patterns, [&](std::span<const int>) { total = checked_add(total, 1); }, limits);
    return total;
}

// ---------------------------------------------------------------------------
// Tables

/**
 * Exact counts M_n^m(Pi) for 1 <= n <= max_n, 0 <= m <= max_maj.
 *
 * Row n stores min(max_maj, n(n-1)/2) + 1 entries; cells past the largest
 * possible major index of a row are structurally zero and not stored.
 */
class MajTable {
public:
    MajTable() = default;
    MajTable(PatternSet patterns, int max_n, int max_maj) : patterns_(std::move(patterns)), max_n_(max_n), max_maj_(max_maj) {
        if (max_n < 1) throw InvalidInput("max_n must be at least 1");
        if (max_maj < 0) throw InvalidInput("max_maj must be non-negative");
        rows_.resize(static_cast<std::size_t>(max_n));
        for (int n = 1; n <= max_n; ++n) rows_[n - 1].assign(static_cast<std::size_t>(width(n)), 0);
    }

    static int max_maj_of_length(int n) { return n * (n - 1) / 2; }

    const PatternSet& patterns() const noexcept { return patterns_; }
    int max_n() const noexcept { return max_n_; }
    int max_maj() const noexcept { return max_maj_; }

    // Number of stored cells in row n.
    int width(int n) const { return std::min(max_maj_, max_maj_of_length(n)) + 1; }
    bool row_is_full(int n) const { return max_maj_ >= max_maj_of_length(n); }

    Count at(int n, int m) const {
        check_cell(n, m);
        return m < width(n) ? rows_[n - 1][m] : 0;
    }

    void set(int n, int m, Count value) {
        check_cell(n, m);
        if (m >= width(n)) {
            if (value != 0) throw InvalidInput("nonzero count beyond the largest major index of its row");
            return;
        }
        rows_[n - 1][m] = value;
    }

    std::span<const Count> row(int n) const { return rows_.at(static_cast<std::size_t>(n - 1)); }

    std::vector<Count> column(int m) const {
        std::vector<Count> out;
        for (int n = 1; n <= max_n_; ++n) out.push_back(at(n, m));
        return out;
    }

    Count row_sum(int n) const {
        Count s = 0;
        for (Count c : row(n)) s = checked_add(s, c);
        return s;
    }

    bool operator==(const MajTable& o) const {
        return patterns_ == o.patterns_ && max_n_ == o.max_n_ && max_maj_ == o.max_maj_ && rows_ == o.rows_;
    }

private:
    void check_cell(int n, int m) const {
        if (n < 1 || n > max_n_ || m < 0 || m > max_maj_) {
            throw InvalidInput("cell (" + std::to_string(n) + ", " + std::to_string(m) + ") outside the table");
        }
    }

    PatternSet patterns_;
    int max_n_ = 0;
    int max_maj_ = 0;
    std::vector<std::vector<Count>> rows_;
};

struct CellDifference {
    int n;
    int m;
    Count left;
    Count right;
};

// First cell (column-major: m, then n) where two tables of equal shape differ.
inline std::optional<CellDifference> first_difference(const MajTable& a, const MajTable& b) {
    if (a.max_n() != b.max_n() || a.max_maj() != b.max_maj()) throw InvalidInput("tables have different shapes");
    for (int m = 0; m <= a.max_maj(); ++m) {
        for (int n = 1; n <= a.max_n(); ++n) {
            if (a.at(n, m) != b.at(n, m)) return CellDifference{n, m, a.at(n, m), b.at(n, m)};
        }
    }
    return std::nullopt;
}

namespace detail {

inline void accumulate(std::vector<std::vector<Count>>& acc, const std::vector<std::vector<Count>>& part) {
    for (std::size_t i = 0; i < acc.size(); ++i) {
        for (std::size_t j = 0; j < acc[i].size(); ++j) acc[i][j] = checked_add(acc[i][j], part[i][j]);
    }
}

}  // namespace detail

/// Brute force: one pruned walk fills every (n, m) cell at once.
inline MajTable brute_force_table(int max_n, int max_maj, const PatternSet& patterns, const SearchLimits& limits = {}) {
    MajTable table(patterns, max_n, max_maj);
    if (max_n > limits.max_n) {
        throw ResourceLimit("n = " + std::to_string(max_n) + " exceeds the configured search bound " +
                            std::to_string(limits.max_n));
    }
    using Grid = std::vector<std::vector<Count>>;
    auto fresh = [&] { return Grid(static_cast<std::size_t>(max_n) + 1, std::vector<Count>(max_maj + 1, 0)); };
    detail::NodeBudget budget(limits.max_nodes);
    auto keep = [&](int, int m) { return m <= max_maj; };

    Grid total = fresh();
    const unsigned jobs = std::max(1u, limits.jobs);
    std::vector<std::vector<int>> seeds;
    const int seed_depth = jobs > 1 ? std::min(max_n, 6) : max_n;
    {
        std::vector<int> root;
        detail::walk_avoiders(
            root, 0, seed_depth, patterns, keep,
            [&](std::span<const int> v, int m) {
                total[v.size()][m] = checked_add(total[v.size()][m], 1);
                if (static_cast<int>(v.size()) == seed_depth && seed_depth < max_n) seeds.emplace_back(v.begin(), v.end());
            },
            budget);
    }
    if (!seeds.empty()) {
        std::vector<Grid> parts(jobs, fresh());
        std::vector<std::exception_ptr> errors(jobs);
        {
            std::vector<std::jthread> workers;
            for (unsigned t = 0; t < jobs; ++t) {
                workers.emplace_back([&, t] {
                    try {
                        for (std::size_t s = t; s < seeds.size(); s += jobs) {
                            std::vector<int> node = seeds[s];
                            detail::walk_avoiders(
                                node, major_index(node), max_n, patterns, keep,
                                [&](std::span<const int> v, int m) {
                                    parts[t][v.size()][m] = checked_add(parts[t][v.size()][m], 1);
                                },
                                budget);
                        }
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
        for (auto& p : parts) detail::accumulate(total, p);
    }
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 0; m < table.width(n); ++m) table.set(n, m, total[n][m]);
    }
    return table;
}

// ---------------------------------------------------------------------------
// Cores

struct CoreSet {
    int m = 0;
    std::vector<Permutation> cores;  // sorted by length, then lexicographically
};

/// Indices i <= gamma_k whose unit profile e_i gives a Pi-avoider; all admissible
/// profiles dominate one of these because avoiding profiles form a down-set.
inline std::vector<int> admissible_unit_indices(const Permutation& gamma, const PatternSet& patterns) {
    std::vector<int> out;
    if (gamma.empty()) return out;
    std::vector<int> c(static_cast<std::size_t>(gamma.size()) + 1, 0);
    std::vector<int> text;
    for (int i = 1; i <= gamma.back(); ++i) {
        c[i - 1] = 1;
        compose_into(gamma.values(), c, text);
        if (patterns.avoided_by(text)) out.push_back(i);
        c[i - 1] = 0;
    }
    return out;
}

inline bool is_admissible_core(const Permutation& gamma, const PatternSet& patterns) {
    if (gamma.empty()) return true;
    return !admissible_unit_indices(gamma, patterns).empty();
}

struct DownsetViolation {
    PaddingProfile upper;  // gamma . upper avoids Pi
    PaddingProfile lower;  // dominated by upper, yet gamma . lower contains a pattern
};

/**
 * Random spot check that avoiding profiles of gamma are closed downward:
 * draws `samples` profiles with coordinates in 0..K + 1 and, for each one
 * that avoids, a random profile below it.
 */
inline std::optional<DownsetViolation> sample_downset(const Permutation& gamma, const PatternSet& patterns, int samples,
                                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int len = gamma.size() + 1;
    std::uniform_int_distribution<int> coord(0, patterns.cap() + 1);
    std::vector<int> upper(static_cast<std::size_t>(len)), lower(static_cast<std::size_t>(len));
    std::vector<int> text;
    for (int s = 0; s < samples; ++s) {
        for (auto& x : upper) x = coord(rng);
        compose_into(gamma.values(), upper, text);
        if (!patterns.avoided_by(text)) continue;
        for (int i = 0; i < len; ++i) lower[i] = std::uniform_int_distribution<int>(0, upper[i])(rng);
        compose_into(gamma.values(), lower, text);
        if (!patterns.avoided_by(text)) return DownsetViolation{PaddingProfile(upper), PaddingProfile(lower)};
    }
    return std::nullopt;
}

namespace detail {

// Calls f(core) for every admissible core with 1 <= length <= max_len and maj+ <= max_maj_plus.
template <class F>
void for_each_core(int max_maj_plus, int max_len, const PatternSet& patterns, F&& f, NodeBudget& budget) {
    std::vector<int> root;
    walk_avoiders(
        root, 0, max_len, patterns, [&](int len, int m) { return len + m <= max_maj_plus; },
        [&](std::span<const int> v, int) {
            Permutation g = Permutation::from_trusted({v.begin(), v.end()});
            if (is_admissible_core(g, patterns)) f(std::move(g));
        },
        budget);
}

}  // namespace detail

/// C(m, Pi): distinct cores of Pi-avoiders with major index m (optionally capped in length).
inline CoreSet core_set(int m, const PatternSet& patterns, const SearchLimits& limits = {},
                        std::optional<int> max_length = std::nullopt) {
    if (m < 0) throw InvalidInput("major index must be non-negative");
    CoreSet out{m, {}};
    if (m == 0) {
        out.cores.emplace_back();
        return out;
    }
    detail::NodeBudget budget(limits.max_nodes);
    const int len = max_length ? std::min(*max_length, m) : m;
    detail::for_each_core(m, len, patterns,
                          [&](Permutation g) {
                              if (maj_plus(g) == m) out.cores.push_back(std::move(g));
                          },
                          budget);
    std::sort(out.cores.begin(), out.cores.end());
    return out;
}

/// |M_n^[gamma](Pi)| for every n in 0..max_n (index n), via capped signatures.
inline std::vector<Count> count_by_core_series(const Permutation& gamma, int max_n, const PatternSet& patterns,
                                               const SearchLimits& limits = {}) {
    std::vector<Count> out(static_cast<std::size_t>(max_n) + 1, 0);
    const int k = gamma.size();
    if (max_n < k) return out;
    detail::NodeBudget budget(limits.max_nodes);
    detail::for_each_signature(
        gamma, patterns, max_n - k,
        [&](std::span<const int>, int sum, int at_cap) {
            for (int n = k + sum; n <= max_n; ++n) {
                out[n] = checked_add(out[n], detail::signature_weight(n, k, sum, at_cap));
                if (at_cap == 0) break;
            }
        },
        budget);
    return out;
}

inline Count count_by_core(const Permutation& gamma, int n, const PatternSet& patterns, const SearchLimits& limits = {}) {
    if (n < gamma.size()) throw InvalidInput("n must be at least the core length");
    return count_by_core_series(gamma, n, patterns, limits)[n];
}

/// Core path: M_n^m(Pi) = sum over cores gamma in C(m, Pi) of |M_n^[gamma](Pi)|.
inline MajTable core_table(int max_n, int max_maj, const PatternSet& patterns, const SearchLimits& limits = {}) {
    MajTable table(patterns, max_n, max_maj);
    detail::NodeBudget budget(limits.max_nodes);
    std::vector<Permutation> cores;
    cores.emplace_back();  // empty core: the identity, m = 0
    if (max_maj >= 1 && max_n >= 2) {
        detail::for_each_core(max_maj, max_n - 1, patterns, [&](Permutation g) { cores.push_back(std::move(g)); },
                              budget);
    }

    using Grid = std::vector<std::vector<Count>>;
    auto fresh = [&] { return Grid(static_cast<std::size_t>(max_n) + 1, std::vector<Count>(max_maj + 1, 0)); };
    const unsigned jobs = std::max(1u, std::min<unsigned>(limits.jobs, static_cast<unsigned>(cores.size())));
    std::vector<Grid> parts(jobs, fresh());
    std::vector<std::exception_ptr> errors(jobs);
    auto work = [&](unsigned t) {
        try {
            for (std::size_t i = t; i < cores.size(); i += jobs) {
                const Permutation& g = cores[i];
                const int m = maj_plus(g);
                const int k = g.size();
                detail::for_each_signature(
                    g, patterns, max_n - k,
                    [&](std::span<const int>, int sum, int at_cap) {
                        for (int n = std::max(1, k + sum); n <= max_n; ++n) {
                            parts[t][n][m] = checked_add(parts[t][n][m], detail::signature_weight(n, k, sum, at_cap));
                            if (at_cap == 0) break;
                        }
                    },
                    budget);
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < jobs; ++t) workers.emplace_back(work, t);
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Grid total = fresh();
    for (auto& p : parts) detail::accumulate(total, p);
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 0; m < table.width(n); ++m) table.set(n, m, total[n][m]);
    }
    return table;
}

/// M_n^m(Pi) table by the chosen path; `both` throws VerificationFailure on the first disagreeing cell.
inline MajTable maj_table(int max_n, int max_maj, const PatternSet& patterns, Algorithm algorithm = Algorithm::both,
                          const SearchLimits& limits = {}) {
    switch (algorithm) {
        case Algorithm::brute:
            return brute_force_table(max_n, max_maj, patterns, limits);
        case Algorithm::cores:
            return core_table(max_n, max_maj, patterns, limits);
        case Algorithm::both: {
            MajTable brute = brute_force_table(max_n, max_maj, patterns, limits);
            MajTable cores = core_table(max_n, max_maj, patterns, limits);
            if (auto d = first_difference(brute, cores)) {
                throw VerificationFailure("brute-force and core counts disagree at n=" + std::to_string(d->n) +
                                          ", m=" + std::to_string(d->m) + ": " + std::to_string(d->left) + " vs " +
                                          std::to_string(d->right));
            }
            return brute;
        }
    }
    throw InvalidInput("unknown algorithm");
}

// ---------------------------------------------------------------------------
// Eventual polynomials

struct EventualPolynomial {
    Polynomial polynomial;
    // Smallest n >= 1 from which the count equals polynomial(n) for every larger n.
    int onset = 1;
    // Generic bound k + K(k+1), maximized over the contributing cores.
    int onset_bound = 1;
};

namespace detail {

struct SignatureSummary {
    Polynomial polynomial;
    int valid_from = 1;  // the signature formula equals the polynomial for n >= valid_from
};

inline SignatureSummary summarize_signatures(const Permutation& gamma, const PatternSet& patterns, NodeBudget& budget) {
    const int k = gamma.size();
    // (shift, r) -> multiplicity of binom(n + shift, r)
    std::map<std::pair<long long, int>, Count> terms;
    int valid_from = 1;
    for_each_signature(
        gamma, patterns, -1,
        [&](std::span<const int>, int sum, int at_cap) {
            if (at_cap == 0) {
                valid_from = std::max(valid_from, k + sum + 1);
                return;
            }
            // binom(n - k - sum + s - 1, s - 1) vanishes exactly where the true count
            // is zero for n - k - sum in [-(s-1), -1]; below that the two may differ.
            valid_from = std::max(valid_from, k + sum - at_cap + 1);
            auto& mult = terms[{static_cast<long long>(at_cap) - 1 - k - sum, at_cap - 1}];
            mult = checked_add(mult, 1);
        },
        budget);
    SignatureSummary out;
    for (const auto& [key, mult] : terms) {
        out.polynomial += Polynomial::binomial_in_n(key.first, key.second) * Polynomial::constant(Rational(BigInt(mult)));
    }
    out.valid_from = valid_from;
    return out;
}

// Walks the onset down from `valid_from` while exact counts keep matching.
inline int refine_onset(const Polynomial& p, int valid_from, const std::function<Count(int)>& exact) {
    int onset = valid_from;
    while (onset > 1 && p.equals_count(onset - 1, exact(onset - 1))) --onset;
    return onset;
}

}  // namespace detail

inline EventualPolynomial eventual_polynomial(const Permutation& gamma, const PatternSet& patterns,
                                              const SearchLimits& limits = {}) {
    detail::NodeBudget budget(limits.max_nodes);
    auto summary = detail::summarize_signatures(gamma, patterns, budget);
    const int k = gamma.size();
    EventualPolynomial out;
    out.polynomial = summary.polynomial;
    out.onset_bound = k + patterns.cap() * (k + 1);
    auto series = count_by_core_series(gamma, summary.valid_from, patterns, limits);
    out.onset = detail::refine_onset(out.polynomial, summary.valid_from, [&](int n) { return series[n]; });
    return out;
}

/// The polynomial P with M_n^m(Pi) = P(n) for n >= onset, summed over C(m, Pi).
inline EventualPolynomial eventual_polynomial(int m, const PatternSet& patterns, const SearchLimits& limits = {}) {
    const CoreSet cores = core_set(m, patterns, limits);
    detail::NodeBudget budget(limits.max_nodes);
    EventualPolynomial out;
    int valid_from = 1;
    for (const auto& g : cores.cores) {
        auto summary = detail::summarize_signatures(g, patterns, budget);
        out.polynomial += summary.polynomial;
        valid_from = std::max(valid_from, summary.valid_from);
        out.onset_bound = std::max(out.onset_bound, g.size() + patterns.cap() * (g.size() + 1));
    }
    std::vector<Count> series(static_cast<std::size_t>(valid_from) + 1, 0);
    for (const auto& g : cores.cores) {
        auto s = count_by_core_series(g, valid_from, patterns, limits);
        for (std::size_t n = 0; n < series.size(); ++n) series[n] = checked_add(series[n], s[n]);
    }
    out.onset = detail::refine_onset(out.polynomial, valid_from, [&](int n) { return series[n]; });
    return out;
}

/// M_n^m(Pi) for n = 1..max_n via the core path (index 0 holds n = 1).
inline std::vector<Count> column_by_cores(int m, int max_n, const PatternSet& patterns, const SearchLimits& limits = {}) {
    const CoreSet cores = core_set(m, patterns, limits, max_n);
    std::vector<Count> out(static_cast<std::size_t>(max_n), 0);
    for (const auto& g : cores.cores) {
        auto s = count_by_core_series(g, max_n, patterns, limits);
        for (int n = 1; n <= max_n; ++n) out[n - 1] = checked_add(out[n - 1], s[n]);
    }
    return out;
}

}  // namespace patmaj
