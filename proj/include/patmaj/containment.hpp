#pragma once

#include <array>
#include <span>
#include <vector>

#include "patmaj/error.hpp"
#include "patmaj/permutation.hpp"

namespace patmaj {

/**
 * Exact occurrence search for one pattern.
 *
 * Index sets are built left to right. For pattern position j the matcher
 * precomputes which earlier pattern positions hold the closest smaller and
 * closest larger values; a candidate letter must fall strictly between the
 * letters already matched there. Those two bounds are enough to make the
 * chosen subsequence order-isomorphic to the pattern, so a prefix that
 * breaks them is dropped with its whole subtree.
 */
class PatternMatcher {
public:
    static constexpr int kMaxLength = 32;

    explicit PatternMatcher(Permutation pattern) : pattern_(std::move(pattern)) {
        const int k = pattern_.size();
        if (k > kMaxLength) {
            throw InvalidInput("patterns longer than " + std::to_string(kMaxLength) + " are not supported");
        }
        lower_.assign(static_cast<std::size_t>(k), -1);
        upper_.assign(static_cast<std::size_t>(k), -1);
        auto v = pattern_.values();
        for (int j = 0; j < k; ++j) {
            for (int p = 0; p < j; ++p) {
                if (v[p] < v[j] && (lower_[j] < 0 || v[p] > v[lower_[j]])) lower_[j] = p;
                if (v[p] > v[j] && (upper_[j] < 0 || v[p] < v[upper_[j]])) upper_[j] = p;
            }
        }
    }

    const Permutation& pattern() const noexcept { return pattern_; }
    int length() const noexcept { return pattern_.size(); }

    bool occurs_in(std::span<const int> text) const { return search(text, -1); }

    // Only occurrences whose index set includes the 0-based index `required`.
    bool occurs_through(std::span<const int> text, int required) const { return search(text, required); }

private:
    bool search(std::span<const int> text, int required) const {
        const int k = pattern_.size();
        const int n = static_cast<int>(text.size());
        if (k == 0) return true;
        if (k > n) return false;
        std::array<int, kMaxLength> chosen{};
        std::array<int, kMaxLength> next{};  // next candidate index per depth
        int j = 0;
        next[0] = 0;
        while (j >= 0) {
            bool advanced = false;
            // The required index must be taken before any later index is.
            const bool must_hit = required >= 0 && (j == 0 || chosen[j - 1] < required);
            int last = n - (k - j);
            if (must_hit && last > required) last = required;
            for (int i = next[j]; i <= last; ++i) {
                const int x = text[i];
                if (lower_[j] >= 0 && x < text[chosen[lower_[j]]]) continue;
                if (upper_[j] >= 0 && x > text[chosen[upper_[j]]]) continue;
                chosen[j] = i;
                next[j] = i + 1;
                advanced = true;
                break;
            }
            if (!advanced) {
                --j;
                continue;
            }
            if (j + 1 == k) {
                if (required < 0 || chosen[j] >= required) {
                    // chosen[] is increasing and never skips past `required`,
                    // so reaching it means it was taken.
                    return true;
                }
                continue;
            }
            ++j;
            next[j] = chosen[j - 1] + 1;
        }
        return false;
    }

    Permutation pattern_;
    std::vector<int> lower_;
    std::vector<int> upper_;
};

// True iff some subsequence of `pi` is order-isomorphic to `sigma`.
inline bool contains(const Permutation& pi, const Permutation& sigma) {
    return PatternMatcher(sigma).occurs_in(pi.values());
}

inline bool avoids(const Permutation& pi, const Permutation& sigma) { return !contains(pi, sigma); }

}  // namespace patmaj
