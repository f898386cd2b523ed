#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patmaj/containment.hpp"
#include "patmaj/error.hpp"
#include "patmaj/permutation.hpp"

namespace patmaj {

/**
 * A finite set of nonempty patterns, deduplicated and sorted, with the
 * statistics the counting code keys on cached up front.
 */
class PatternSet {
public:
    PatternSet() = default;

    explicit PatternSet(std::vector<Permutation> patterns) {
        std::sort(patterns.begin(), patterns.end());
        patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
        for (const auto& p : patterns) {
            if (p.empty()) throw InvalidInput("the empty permutation cannot be used as a pattern");
        }
        patterns_ = std::move(patterns);
        for (const auto& p : patterns_) {
            matchers_.emplace_back(p);
            max_length_ = std::max(max_length_, p.size());
            const Magnitude mg = patmaj::magnitude(p);
            if (mg < magnitude_) magnitude_ = mg;
            if (mg == Magnitude::finite(0)) {
                contains_increasing_ = true;
                shortest_increasing_ = shortest_increasing_ ? std::min(*shortest_increasing_, p.size()) : p.size();
            }
        }
    }

    PatternSet(std::initializer_list<Permutation> patterns) : PatternSet(std::vector<Permutation>(patterns)) {}

    std::span<const Permutation> patterns() const noexcept { return patterns_; }
    std::size_t size() const noexcept { return patterns_.size(); }
    bool empty() const noexcept { return patterns_.empty(); }

    // Length of the longest pattern (0 for the empty set).
    int max_length() const noexcept { return max_length_; }

    // Cap used for capped padding profiles; at least 1 so the last-descent
    // condition (some coordinate positive) survives capping.
    int cap() const noexcept { return std::max(1, max_length_); }

    // Minimum magnitude over the members; infinite for the empty set.
    Magnitude magnitude() const noexcept { return magnitude_; }

    bool contains_increasing() const noexcept { return contains_increasing_; }
    std::optional<int> shortest_increasing() const noexcept { return shortest_increasing_; }

    bool all_finite_magnitude() const {
        return std::all_of(patterns_.begin(), patterns_.end(),
                           [](const Permutation& p) { return patmaj::magnitude(p).is_finite(); });
    }

    bool avoided_by(std::span<const int> values) const {
        for (const auto& m : matchers_) {
            if (m.occurs_in(values)) return false;
        }
        return true;
    }

    bool avoided_by(const Permutation& pi) const { return avoided_by(pi.values()); }

    // Avoidance check restricted to occurrences through 0-based index `required`;
    // exact whenever the text with that letter removed is already known to avoid.
    bool avoided_through(std::span<const int> values, int required) const {
        for (const auto& m : matchers_) {
            if (m.occurs_through(values, required)) return false;
        }
        return true;
    }

    bool operator==(const PatternSet& other) const { return patterns_ == other.patterns_; }

private:
    std::vector<Permutation> patterns_;
    std::vector<PatternMatcher> matchers_;
    int max_length_ = 0;
    Magnitude magnitude_ = Magnitude::infinite();
    bool contains_increasing_ = false;
    std::optional<int> shortest_increasing_;
};

inline Magnitude set_magnitude(const PatternSet& patterns) { return patterns.magnitude(); }

/**
 * Parses a pattern list.
 *
 * Without ';' the text is a comma-separated list of digit-string patterns
 * ("3412,1324"). With ';' each ';'-separated item is one permutation in
 * either text form, which is how patterns of length >= 10 are written
 * ("10,1,2,3,4,5,6,7,8,9;1324"). Empty items are ignored; an empty or
 * all-blank string is the empty set.
 */
inline PatternSet parse_pattern_set(std::string_view text) {
    const char sep = text.find(';') != std::string_view::npos ? ';' : ',';
    std::vector<Permutation> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) end = text.size();
        auto item = text.substr(start, end - start);
        bool blank = std::all_of(item.begin(), item.end(), [](char c) { return c == ' ' || c == '\t'; });
        if (!blank) out.push_back(parse_permutation(item));
        start = end + 1;
    }
    return PatternSet(std::move(out));
}

inline std::string to_string(const PatternSet& patterns) {
    bool long_member = std::any_of(patterns.patterns().begin(), patterns.patterns().end(),
                                   [](const Permutation& p) { return p.size() > 9; });
    std::string s;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (i) s.push_back(long_member ? ';' : ',');
        s += to_string(patterns.patterns()[i]);
    }
    // A lone long pattern still needs a ';' to parse as one item.
    if (long_member && patterns.size() == 1) s.push_back(';');
    return s;
}

}  // namespace patmaj
