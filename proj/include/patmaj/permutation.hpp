#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patmaj/error.hpp"

namespace patmaj {

/**
 * A permutation of 1..n stored as its sequence of values.
 *
 * Positions are 1-based in the public interface (`at(i)`, `insert(k, l)`,
 * descent positions); `values()` exposes the raw storage for algorithms
 * that iterate. The empty permutation is a valid value.
 */
class Permutation {
public:
    Permutation() = default;

    // Throws InvalidInput unless `values` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        std::vector<bool> seen(values_.size() + 1, false);
        for (int v : values_) {
            if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v]) {
                throw InvalidInput("not a permutation of 1.." + std::to_string(values_.size()));
            }
            seen[v] = true;
        }
    }

    Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return from_trusted(std::move(v));
    }

    static Permutation decreasing(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[i] = n - i;
        return from_trusted(std::move(v));
    }

    // Skips validation; callers guarantee the bijection.
    static Permutation from_trusted(std::vector<int> values) {
        Permutation p;
        p.values_ = std::move(values);
        return p;
    }

    int size() const noexcept { return static_cast<int>(values_.size()); }
    bool empty() const noexcept { return values_.empty(); }

    // 1-based access.
    int at(int position) const { return values_.at(static_cast<std::size_t>(position - 1)); }
    int front() const { return values_.front(); }
    int back() const { return values_.back(); }

    std::span<const int> values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    bool operator==(const Permutation&) const = default;
    // Shorter permutations first, then lexicographic.
    std::strong_ordering operator<=>(const Permutation& other) const {
        if (auto c = size() <=> other.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(values_.begin(), values_.end(), other.values_.begin(),
                                                      other.values_.end());
    }

private:
    std::vector<int> values_;
};

/// Sorted set of descent positions, each in [n-1].
class DescentSet {
public:
    DescentSet() = default;
    explicit DescentSet(std::vector<int> positions) : positions_(std::move(positions)) {
        for (std::size_t i = 0; i < positions_.size(); ++i) {
            if (positions_[i] < 1 || (i > 0 && positions_[i] <= positions_[i - 1])) {
                throw InvalidInput("descent positions must be positive and strictly increasing");
            }
        }
    }

    std::span<const int> positions() const noexcept { return positions_; }
    std::size_t size() const noexcept { return positions_.size(); }
    bool empty() const noexcept { return positions_.empty(); }
    bool contains(int i) const { return std::binary_search(positions_.begin(), positions_.end(), i); }
    int sum() const { return std::accumulate(positions_.begin(), positions_.end(), 0); }
    int last() const { return positions_.empty() ? 0 : positions_.back(); }

    bool operator==(const DescentSet&) const = default;

private:
    std::vector<int> positions_;
};

/**
 * Magnitude of a permutation: 0 with no descents, k when the only descent
 * is at k, infinite with two or more. Infinite compares above every finite
 * value.
 */
class Magnitude {
public:
    static constexpr Magnitude finite(int k) { return Magnitude(k); }
    static constexpr Magnitude infinite() { return Magnitude(-1); }

    constexpr bool is_infinite() const noexcept { return value_ < 0; }
    constexpr bool is_finite() const noexcept { return value_ >= 0; }
    // Precondition: is_finite().
    constexpr int value() const { return value_; }

    constexpr bool operator==(const Magnitude&) const = default;
    constexpr std::strong_ordering operator<=>(const Magnitude& other) const {
        if (is_infinite() || other.is_infinite()) {
            return static_cast<int>(is_infinite()) <=> static_cast<int>(other.is_infinite());
        }
        return value_ <=> other.value_;
    }

    // True when the finite integer m is strictly below this magnitude.
    constexpr bool exceeds(long long m) const { return is_infinite() || m < value_; }

    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

private:
    constexpr explicit Magnitude(int v) : value_(v) {}
    int value_;
};

// ---------------------------------------------------------------------------
// Statistics

inline DescentSet descents(const Permutation& pi) {
    std::vector<int> d;
    auto v = pi.values();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] > v[i + 1]) d.push_back(static_cast<int>(i) + 1);
    }
    return DescentSet(std::move(d));
}

inline int major_index(std::span<const int> values) {
    int m = 0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i] > values[i + 1]) m += static_cast<int>(i) + 1;
    }
    return m;
}

inline int major_index(const Permutation& pi) { return major_index(pi.values()); }

inline int maj_plus(const Permutation& pi) { return pi.size() + major_index(pi); }

// Position of the last descent, 0 when increasing.
inline int last_descent(std::span<const int> values) {
    for (std::size_t i = values.size(); i-- > 1;) {
        if (values[i - 1] > values[i]) return static_cast<int>(i);
    }
    return 0;
}

// Length of the longest suffix of fixed points.
inline int tail(const Permutation& pi) {
    int t = 0;
    for (int i = pi.size(); i >= 1 && pi.at(i) == i; --i) ++t;
    return t;
}

// Length of the longest strictly increasing suffix.
inline int slope(const Permutation& pi) {
    if (pi.empty()) return 0;
    return pi.size() - last_descent(pi.values());
}

inline Magnitude magnitude(const Permutation& pi) {
    auto d = descents(pi);
    if (d.empty()) return Magnitude::finite(0);
    if (d.size() == 1) return Magnitude::finite(d.positions()[0]);
    return Magnitude::infinite();
}

inline bool is_increasing(const Permutation& pi) { return last_descent(pi.values()) == 0; }

// ---------------------------------------------------------------------------
// Construction

// The permutation order-isomorphic to `seq`; entries must be distinct.
inline Permutation order_pattern(std::span<const int> seq) {
    std::vector<int> idx(seq.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return seq[a] < seq[b]; });
    std::vector<int> out(seq.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (r > 0 && seq[idx[r]] == seq[idx[r - 1]]) {
            throw InvalidInput("order_pattern: duplicate entry " + std::to_string(seq[idx[r]]));
        }
        out[idx[r]] = static_cast<int>(r) + 1;
    }
    return Permutation::from_trusted(std::move(out));
}

inline Permutation order_pattern(std::initializer_list<int> seq) {
    return order_pattern(std::span<const int>(seq.begin(), seq.size()));
}

/// Inserts value `l` at position `k` (both in [n+1]); values >= l shift up by one.
inline Permutation insert(const Permutation& pi, int k, int l) {
    const int n = pi.size();
    if (k < 1 || k > n + 1 || l < 1 || l > n + 1) {
        throw InvalidInput("insert: position and value must lie in [1, " + std::to_string(n + 1) + "]");
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n + 1; ++i) {
        if (i == k) out.push_back(l);
        if (i <= n) {
            int v = pi.at(i);
            out.push_back(v >= l ? v + 1 : v);
        }
    }
    return Permutation::from_trusted(std::move(out));
}

/// Deletes the letter at position `k` and standardizes the rest.
inline Permutation remove_at(const Permutation& pi, int k) {
    if (k < 1 || k > pi.size()) throw InvalidInput("remove_at: position out of range");
    const int removed = pi.at(k);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(pi.size()) - 1);
    for (int i = 1; i <= pi.size(); ++i) {
        if (i == k) continue;
        int v = pi.at(i);
        out.push_back(v > removed ? v - 1 : v);
    }
    return Permutation::from_trusted(std::move(out));
}

// ---------------------------------------------------------------------------
// Text form: digit string for n <= 9 ("1324"), comma list otherwise ("10,1,2,...").

inline std::string to_string(const Permutation& pi) {
    std::string s;
    if (pi.size() <= 9) {
        for (int v : pi) s.push_back(static_cast<char>('0' + v));
        return s;
    }
    for (int i = 0; i < pi.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(pi.values()[i]);
    }
    return s;
}

inline Permutation parse_permutation(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    std::vector<int> v;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            auto tok = trim(text.substr(start, end - start));
            if (tok.empty()) throw ParseError("empty entry in permutation '" + std::string(text) + "'");
            int x = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') throw ParseError("bad character in permutation '" + std::string(text) + "'");
                x = x * 10 + (c - '0');
                if (x > 1'000'000) throw ParseError("permutation entry too large");
            }
            v.push_back(x);
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw ParseError("bad character in permutation '" + std::string(text) + "'");
            v.push_back(c - '0');
        }
    }
    try {
        return Permutation(std::move(v));
    } catch (const InvalidInput&) {
        throw ParseError("'" + std::string(text) + "' is not a permutation");
    }
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& pi) {
    return os << (pi.empty() ? std::string("()") : to_string(pi));
}

}  // namespace patmaj

template <>
struct std::hash<patmaj::Permutation> {
    std::size_t operator()(const patmaj::Permutation& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
        return h;
    }
};
