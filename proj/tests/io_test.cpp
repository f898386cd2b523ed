#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracle.hpp"
#include "patmaj/io.hpp"

using namespace patmaj;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int parse_error_line(std::string_view text) {
    try {
        parse_oeis_values(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST(Csv, Layout) {
    const MajTable t = brute_force_table(4, 3, parse_pattern_set("1324"));
    EXPECT_EQ(table_to_csv(t),
              "# patterns: 1324\n"
              "n,0,1,2,3\n"
              "1,1,,,\n"
              "2,1,1,,\n"
              "3,1,2,2,1\n"
              "4,1,3,4,6\n");
}

TEST(Csv, RoundTrip) {
    for (const char* s : {"", "1324", "3412,1324", "132,231", "10,1,2,3,4,5,6,7,8,9;"}) {
        const PatternSet ps = parse_pattern_set(s);
        for (int max_maj : {0, 4, 28}) {
            const MajTable t = core_table(8, max_maj, ps);
            EXPECT_EQ(table_from_csv(table_to_csv(t)), t) << s << " " << max_maj;
        }
    }
}

TEST(Csv, Errors) {
    EXPECT_THROW(table_from_csv(""), ParseError);
    EXPECT_THROW(table_from_csv("# patterns: 12\nm,0\n1,1\n"), ParseError);
    EXPECT_THROW(table_from_csv("n,0,2\n1,1,\n"), ParseError);
    EXPECT_THROW(table_from_csv("n,0,1\n1,1,5\n"), ParseError);
    EXPECT_THROW(table_from_csv("n,0,1\n2,1,\n"), ParseError);
    EXPECT_THROW(table_from_csv("n,0,1\n1,1,\n2,x,1\n"), ParseError);
    try {
        table_from_csv("n,0,1\n1,1,\n2,1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(Json, RoundTripAndAgreesWithCsv) {
    for (const char* s : {"", "1324", "3412,1324", "2314,321"}) {
        const MajTable t = core_table(8, 10, parse_pattern_set(s));
        const Json j = table_to_json(t);
        EXPECT_EQ(j["kind"], "maj_table");
        EXPECT_EQ(j["schema"], kSchemaVersion);
        const MajTable back = table_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back, t);
        EXPECT_EQ(table_from_csv(table_to_csv(back)), table_from_json(j));
    }
}

TEST(Json, Errors) {
    Json j = table_to_json(brute_force_table(3, 2, PatternSet{}));
    Json bad = j;
    bad["schema"] = 7;
    EXPECT_THROW(table_from_json(bad), ParseError);
    bad = j;
    bad["rows"][1]["counts"].push_back(1);
    EXPECT_THROW(table_from_json(bad), ParseError);
    bad = j;
    bad.erase("max_n");
    EXPECT_THROW(table_from_json(bad), ParseError);
}

TEST(Oeis, ParsesBothLayouts) {
    EXPECT_EQ(parse_oeis_values("# c\n1\n\n2\n 3 \n"), (std::vector<Count>{1, 2, 3}));
    EXPECT_EQ(parse_oeis_values("1 5\n2 6\n3\t7\n"), (std::vector<Count>{5, 6, 7}));
}

TEST(Oeis, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("1\n2\nx\n"), 3);
    EXPECT_EQ(parse_error_line("# h\n1 1\n2 1\n4 1\n"), 4);
    EXPECT_EQ(parse_error_line("1 2 3\n"), 1);
    EXPECT_EQ(parse_error_line("1\n-4\n"), 2);
    EXPECT_EQ(parse_error_line("1\n2\n"), -1);
}

TEST(Oeis, DataFileIsTheMahonianTriangle) {
    const auto values = parse_oeis_values(slurp(std::string(PATMAJ_DATA_DIR) + "/a008302.txt"));
    ASSERT_EQ(values.size(), 175u);
    std::size_t idx = 0;
    for (int n = 1; n <= 10; ++n) {
        for (Count c : oracle::mahonian_row(n)) ASSERT_EQ(values[idx++], c) << "n=" << n;
    }
}

TEST(Oeis, CompareTriangle) {
    const auto values = parse_oeis_values(slurp(std::string(PATMAJ_DATA_DIR) + "/a008302.txt"));
    const MajTable t = brute_force_table(8, 28, PatternSet{});
    const auto ok = compare_triangle(t, values);
    EXPECT_TRUE(ok.match);
    EXPECT_EQ(ok.compared, 1u + 2 + 4 + 7 + 11 + 16 + 22 + 29);

    auto altered = values;
    altered[9] += 1;  // n = 4, m = 2
    const auto bad = compare_triangle(t, altered);
    EXPECT_FALSE(bad.match);
    ASSERT_TRUE(bad.mismatch.has_value());
    EXPECT_EQ(bad.mismatch->n, 4);
    EXPECT_EQ(bad.mismatch->m, 2);
    EXPECT_EQ(bad.mismatch->left, 5u);
    EXPECT_EQ(bad.mismatch->right, 6u);
    EXPECT_EQ(bad.compared, 9u);

    const std::vector<Count> prefix(values.begin(), values.begin() + 20);
    const auto short_ref = compare_triangle(t, prefix);
    EXPECT_FALSE(short_ref.match);
    EXPECT_TRUE(short_ref.reference_too_short);

    EXPECT_THROW(compare_triangle(brute_force_table(5, 3, PatternSet{}), values), InvalidInput);
}
