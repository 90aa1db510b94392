#include <gtest/gtest.h>

#include "gaq/report.hpp"
#include "gaq/selftest.hpp"

using namespace gaq;

TEST(Report, JsonIsSortedWithSeventeenDigits) {
    Json j = {{"zeta", 0.1}, {"alpha", 1}, {"mid", {{"b", true}, {"a", "x"}}}};
    const std::string s = format_json(j);
    EXPECT_LT(s.find("alpha"), s.find("mid"));
    EXPECT_LT(s.find("mid"), s.find("zeta"));
    EXPECT_NE(s.find("0.10000000000000001"), std::string::npos);
    EXPECT_EQ(format_json(j), s);
}

TEST(Report, CsvIsShortestRoundTrip) {
    EXPECT_EQ(format_csv_number(0.1), "0.1");
    EXPECT_EQ(format_csv_number(1e-20), "1e-20");
    EXPECT_EQ(csv_text({"a", "b"}, {{1.5, -2.0}}), "a,b\n1.5,-2\n");
}

TEST(Selftest, FilterSelectsOneCriterion) {
    const SelftestSummary s = run_selftest("jacobi", nullptr);
    ASSERT_EQ(s.results.size(), 1u);
    EXPECT_EQ(s.results[0].id, 6);
    EXPECT_TRUE(s.all_passed());
    EXPECT_TRUE(run_selftest("nomatch", nullptr).results.empty());
}
