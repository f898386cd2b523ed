#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patmaj/error.hpp"
#include "patmaj/permutation.hpp"

namespace patmaj {

/// Gap sizes (a_1, ..., a_{k+1}) between consecutive values of a core; 1-based access.
class PaddingProfile {
public:
    PaddingProfile() : coords_{0} {}

    explicit PaddingProfile(std::vector<int> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw InvalidInput("padding profile needs at least one coordinate");
        for (int c : coords_) {
            if (c < 0) throw InvalidInput("padding profile coordinates must be non-negative");
        }
    }

    PaddingProfile(std::initializer_list<int> coords) : PaddingProfile(std::vector<int>(coords)) {}

    // Unit profile e_i of the given length.
    static PaddingProfile unit(int length, int i) {
        std::vector<int> c(static_cast<std::size_t>(length), 0);
        c.at(static_cast<std::size_t>(i - 1)) = 1;
        return PaddingProfile(std::move(c));
    }

    int length() const noexcept { return static_cast<int>(coords_.size()); }
    int total() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }
    int at(int i) const { return coords_.at(static_cast<std::size_t>(i - 1)); }
    std::span<const int> coords() const noexcept { return coords_; }

    // Coordinate-wise <=.
    bool dominated_by(const PaddingProfile& other) const {
        if (other.length() != length()) return false;
        for (int i = 0; i < length(); ++i) {
            if (coords_[i] > other.coords_[i]) return false;
        }
        return true;
    }

    bool operator==(const PaddingProfile&) const = default;

private:
    std::vector<int> coords_;
};

struct CoreDecomposition {
    Permutation core;
    PaddingProfile profile;

    bool operator==(const CoreDecomposition&) const = default;
};

/**
 * Writes the permutation gamma . a into `out`: letter i of the core gets
 * value gamma_i + a_1 + ... + a_{gamma_i}; the |a| unused values follow in
 * increasing order. Scratch buffers are thread-local.
 */
inline void compose_into(std::span<const int> gamma, std::span<const int> profile, std::vector<int>& out) {
    const std::size_t k = gamma.size();
    thread_local std::vector<int> prefix;  // prefix[v] = a_1 + ... + a_v
    thread_local std::vector<char> used;
    prefix.assign(k + 1, 0);
    for (std::size_t v = 1; v <= k; ++v) prefix[v] = prefix[v - 1] + profile[v - 1];
    const int n = static_cast<int>(k) + prefix[k] + profile[k];
    out.resize(static_cast<std::size_t>(n));
    used.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        out[i] = gamma[i] + prefix[gamma[i]];
        used[out[i]] = 1;
    }
    std::size_t pos = k;
    for (int v = 1; v <= n; ++v) {
        if (!used[v]) out[pos++] = v;
    }
}

inline Permutation compose(const Permutation& gamma, const PaddingProfile& a) {
    if (a.length() != gamma.size() + 1) {
        throw InvalidInput("compose: profile length " + std::to_string(a.length()) + " does not match core length " +
                           std::to_string(gamma.size()) + " + 1");
    }
    std::vector<int> out;
    compose_into(gamma.values(), a.coords(), out);
    return Permutation::from_trusted(std::move(out));
}

/// Splits pi into the core up to its last descent and the padding profile.
inline CoreDecomposition decompose(const Permutation& pi) {
    const int n = pi.size();
    const int k = last_descent(pi.values());
    auto prefix = pi.values().subspan(0, static_cast<std::size_t>(k));
    std::vector<int> sorted(prefix.begin(), prefix.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> a(static_cast<std::size_t>(k) + 1);
    int prev = 0;
    for (int j = 0; j < k; ++j) {
        a[j] = sorted[j] - prev - 1;
        prev = sorted[j];
    }
    a[k] = n - prev;
    return {order_pattern(prefix), PaddingProfile(std::move(a))};
}

inline Permutation core_of(const Permutation& pi) { return decompose(pi).core; }

// True when (gamma, a) is a core/profile pair: gamma empty, or some a_i > 0 with i <= last value of gamma.
inline bool satisfies_last_descent(const Permutation& gamma, std::span<const int> a) {
    if (gamma.empty()) return true;
    for (int i = 0; i < gamma.back(); ++i) {
        if (a[i] > 0) return true;
    }
    return false;
}

inline PaddingProfile cap_profile(const PaddingProfile& a, int cap) {
    std::vector<int> c(a.coords().begin(), a.coords().end());
    for (int& x : c) x = std::min(x, cap);
    return PaddingProfile(std::move(c));
}

/**
 * The unique permutation of length n avoiding 132 and 213 with the given
 * descent set: increasing runs between descents, the first run holding the
 * largest values.
 */
inline Permutation co_layered(const DescentSet& desc, int n) {
    if (!desc.empty() && desc.last() > n - 1) {
        throw InvalidInput("co_layered: descent position " + std::to_string(desc.last()) + " outside [1, n-1]");
    }
    std::vector<int> cuts(desc.positions().begin(), desc.positions().end());
    cuts.push_back(n);
    std::vector<int> out(static_cast<std::size_t>(n));
    int top = n;
    int start = 0;
    for (int cut : cuts) {
        const int len = cut - start;
        for (int i = 0; i < len; ++i) out[start + i] = top - len + 1 + i;
        top -= len;
        start = cut;
    }
    return Permutation::from_trusted(std::move(out));
}

inline std::string to_string(const PaddingProfile& a) {
    std::string s = "(";
    for (int i = 1; i <= a.length(); ++i) {
        if (i > 1) s.push_back(',');
        s += std::to_string(a.at(i));
    }
    return s + ")";
}

inline PaddingProfile parse_profile(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw ParseError("profile must look like (a1,...,ak)");
    }
    text = text.substr(1, text.size() - 2);
    std::vector<int> c;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto tok = text.substr(start, end - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty()) throw ParseError("empty profile coordinate");
        int x = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9') throw ParseError("bad profile coordinate '" + std::string(tok) + "'");
            x = x * 10 + (ch - '0');
        }
        c.push_back(x);
        start = end + 1;
    }
    return PaddingProfile(std::move(c));
}

}  // namespace patmaj
