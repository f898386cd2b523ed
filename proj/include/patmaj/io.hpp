#pragma once

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "patmaj/asymptotics.hpp"
#include "patmaj/enumeration.hpp"
#include "patmaj/error.hpp"
#include "patmaj/monotonicity.hpp"
#include "patmaj/pattern_set.hpp"

namespace patmaj {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t end = s.find(sep, start);
        if (end == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
}

inline std::optional<Count> parse_count(std::string_view tok) {
    tok = trim(tok);
    if (tok.empty()) return std::nullopt;
    Count v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return std::nullopt;
        if (v > (std::numeric_limits<Count>::max() - static_cast<Count>(c - '0')) / 10) return std::nullopt;
        v = v * 10 + static_cast<Count>(c - '0');
    }
    return v;
}

inline Json rational_json(const Rational& r) {
    auto part = [](const BigInt& x) -> Json {
        if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
            return static_cast<std::int64_t>(x);
        }
        return x.str();
    };
    return Json::array({part(boost::multiprecision::numerator(r)), part(boost::multiprecision::denominator(r))});
}

inline Json polynomial_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(rational_json(c));
    return coeffs;
}

inline Json patterns_json(const PatternSet& patterns) {
    Json arr = Json::array();
    for (const auto& p : patterns.patterns()) arr.push_back(to_string(p));
    return arr;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Tables
//
// CSV:
//   # patterns: 3412,1324        (optional; absent means no patterns)
//   n,0,1,...,M
//   1,1,,,...                     one row per n; blank past n(n-1)/2
// JSON:
//   {"schema":1,"kind":"maj_table","patterns":[...],"max_n":N,"max_maj":M,
//    "rows":[{"n":1,"counts":[...]}, ...]}   counts has min(M, n(n-1)/2)+1 entries

inline std::string table_to_csv(const MajTable& t) {
    std::ostringstream os;
    os << "# patterns: " << to_string(t.patterns()) << "\n";
    os << "n";
    for (int m = 0; m <= t.max_maj(); ++m) os << ',' << m;
    os << "\n";
    for (int n = 1; n <= t.max_n(); ++n) {
        os << n;
        for (int m = 0; m <= t.max_maj(); ++m) {
            os << ',';
            if (m < t.width(n)) os << t.at(n, m);
        }
        os << "\n";
    }
    return os.str();
}

inline MajTable table_from_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    for (auto l : detail::split(text, '\n')) {
        if (!detail::trim(l).empty()) lines.push_back(detail::trim(l));
    }
    std::size_t li = 0;
    PatternSet patterns;
    constexpr std::string_view kPrefix = "# patterns:";
    if (li < lines.size() && lines[li].starts_with("#")) {
        if (!lines[li].starts_with(kPrefix)) throw ParseError("unrecognized comment line", 1);
        patterns = parse_pattern_set(lines[li].substr(kPrefix.size()));
        ++li;
    }
    if (li >= lines.size()) throw ParseError("missing header");
    const int header_line = static_cast<int>(li) + 1;
    auto header = detail::split(lines[li], ',');
    if (detail::trim(header[0]) != "n" || header.size() < 2) throw ParseError("header must start with n,0", header_line);
    const int max_maj = static_cast<int>(header.size()) - 2;
    for (int m = 0; m <= max_maj; ++m) {
        auto v = detail::parse_count(header[m + 1]);
        if (!v || *v != static_cast<Count>(m)) throw ParseError("header columns must be 0,1,2,...", header_line);
    }
    ++li;
    const int max_n = static_cast<int>(lines.size() - li);
    if (max_n < 1) throw ParseError("no rows");
    MajTable t(patterns, max_n, max_maj);
    for (int n = 1; n <= max_n; ++n, ++li) {
        const int line = static_cast<int>(li) + 1;
        auto cells = detail::split(lines[li], ',');
        if (static_cast<int>(cells.size()) != max_maj + 2) throw ParseError("wrong number of cells", line);
        auto nv = detail::parse_count(cells[0]);
        if (!nv || *nv != static_cast<Count>(n)) throw ParseError("rows must be numbered 1,2,...", line);
        for (int m = 0; m <= max_maj; ++m) {
            auto cell = detail::trim(cells[m + 1]);
            if (m < t.width(n)) {
                auto v = detail::parse_count(cell);
                if (!v) throw ParseError("bad count '" + std::string(cell) + "'", line);
                t.set(n, m, *v);
            } else if (!cell.empty()) {
                throw ParseError("cell past the largest major index of the row must be blank", line);
            }
        }
    }
    return t;
}

inline Json table_to_json(const MajTable& t) {
    Json rows = Json::array();
    for (int n = 1; n <= t.max_n(); ++n) {
        Json counts = Json::array();
        for (Count c : t.row(n)) counts.push_back(c);
        rows.push_back({{"n", n}, {"counts", counts}});
    }
    return {{"schema", kSchemaVersion},
            {"kind", "maj_table"},
            {"patterns", detail::patterns_json(t.patterns())},
            {"max_n", t.max_n()},
            {"max_maj", t.max_maj()},
            {"rows", rows}};
}

inline MajTable table_from_json(const Json& j) {
    try {
        if (j.at("schema").get<int>() != kSchemaVersion) throw ParseError("unsupported schema version");
        std::vector<Permutation> pats;
        for (const auto& p : j.at("patterns")) pats.push_back(parse_permutation(p.get<std::string>()));
        MajTable t(PatternSet(std::move(pats)), j.at("max_n").get<int>(), j.at("max_maj").get<int>());
        const auto& rows = j.at("rows");
        if (static_cast<int>(rows.size()) != t.max_n()) throw ParseError("row count does not match max_n");
        for (int n = 1; n <= t.max_n(); ++n) {
            const auto& row = rows.at(static_cast<std::size_t>(n - 1));
            if (row.at("n").get<int>() != n) throw ParseError("rows must be numbered 1,2,...");
            const auto& counts = row.at("counts");
            if (static_cast<int>(counts.size()) != t.width(n)) throw ParseError("row " + std::to_string(n) + " has the wrong width");
            for (int m = 0; m < t.width(n); ++m) t.set(n, m, counts.at(static_cast<std::size_t>(m)).get<Count>());
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed table JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Reports

inline Json degree_report_json(const DegreeReport& r) {
    Json pred = {{"kind", to_string(r.prediction.kind)},
                 {"value", r.prediction.value},
                 {"rule", r.prediction.rule},
                 {"mixed_magnitude", r.prediction.mixed_magnitude}};
    Json detected = nullptr;
    if (r.detected) {
        detected = {{"conclusive", r.detected->conclusive}};
        if (r.detected->conclusive) {
            detected["degree"] = r.detected->degree;
            detected["polynomial"] = detail::polynomial_json(r.detected->polynomial);
            detected["polynomial_text"] = r.detected->polynomial.to_string();
            detected["leading_coefficient"] = detail::rational_json(r.detected->polynomial.leading());
            detected["onset"] = r.detected->onset;
        }
    }
    Json eventual = nullptr;
    if (r.eventual) {
        eventual = {{"degree", r.eventual->polynomial.degree()},
                    {"polynomial", detail::polynomial_json(r.eventual->polynomial)},
                    {"polynomial_text", r.eventual->polynomial.to_string()},
                    {"onset", r.eventual->onset},
                    {"onset_bound", r.eventual->onset_bound}};
    }
    return {{"schema", kSchemaVersion},
            {"kind", "degree_report"},
            {"m", r.m},
            {"patterns", detail::patterns_json(r.patterns)},
            {"magnitude", r.patterns.magnitude().to_string()},
            {"prediction", pred},
            {"detected", detected},
            {"eventual", eventual},
            {"witness", r.witness ? Json(to_string(*r.witness)) : Json(nullptr)},
            {"witness_admissible", r.witness_admissible},
            {"verdict", to_string(r.verdict)}};
}

inline Json monotonicity_report_json(const MonotonicityReport& r) {
    Json columns = Json::array();
    for (const auto& c : r.columns) columns.push_back({{"m", c.m}, {"count_n", c.count_n}, {"count_next", c.count_next}});
    Json counterexample = nullptr;
    if (r.counterexample) counterexample = {{"pi", to_string(r.counterexample->pi)}, {"reason", r.counterexample->reason}};
    return {{"schema", kSchemaVersion},
            {"kind", "monotonicity_report"},
            {"sigma", to_string(r.sigma)},
            {"n", r.n},
            {"m_max", r.m_max},
            {"verified", r.verified},
            {"counterexample", counterexample},
            {"cases",
             {{"AppendMax", r.tally.append_max},
              {"ExpandAtTail", r.tally.expand_at_tail},
              {"InsertMinIntoSlope", r.tally.insert_min_into_slope}}},
            {"columns", columns}};
}

// ---------------------------------------------------------------------------
// OEIS data: either one value per line or b-file "index value" lines.
// Blank lines and lines starting with '#' are skipped.

inline std::vector<Count> parse_oeis_values(std::string_view text) {
    std::vector<Count> out;
    std::optional<Count> last_index;
    int line_no = 0;
    for (auto raw : detail::split(text, '\n')) {
        ++line_no;
        auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string_view> toks;
        for (auto t : detail::split(line, ' ')) {
            for (auto u : detail::split(t, '\t')) {
                if (!u.empty()) toks.push_back(u);
            }
        }
        if (toks.size() == 1) {
            auto v = detail::parse_count(toks[0]);
            if (!v) throw ParseError("expected a non-negative integer", line_no);
            out.push_back(*v);
        } else if (toks.size() == 2) {
            auto idx = detail::parse_count(toks[0]);
            auto v = detail::parse_count(toks[1]);
            if (!idx || !v) throw ParseError("expected 'index value'", line_no);
            if (last_index && *idx != *last_index + 1) throw ParseError("indices must be consecutive", line_no);
            last_index = idx;
            out.push_back(*v);
        } else {
            throw ParseError("expected one or two integers per line", line_no);
        }
    }
    return out;
}

struct OeisComparison {
    bool match = false;
    std::size_t compared = 0;
    // First mismatch, or the first cell with no reference value.
    std::optional<CellDifference> mismatch;
    bool reference_too_short = false;
};

/// Compares the rows of a table (read row by row) against a triangle of reference values.
inline OeisComparison compare_triangle(const MajTable& t, std::span<const Count> reference) {
    OeisComparison out;
    std::size_t idx = 0;
    for (int n = 1; n <= t.max_n(); ++n) {
        if (!t.row_is_full(n)) throw InvalidInput("triangle comparison needs full rows");
        for (int m = 0; m < t.width(n); ++m, ++idx) {
            if (idx >= reference.size()) {
                out.reference_too_short = true;
                out.mismatch = CellDifference{n, m, t.at(n, m), 0};
                return out;
            }
            if (reference[idx] != t.at(n, m)) {
                out.mismatch = CellDifference{n, m, t.at(n, m), reference[idx]};
                return out;
            }
            ++out.compared;
        }
    }
    out.match = true;
    return out;
}

}  // namespace patmaj
