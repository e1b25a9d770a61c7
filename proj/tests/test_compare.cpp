#include "ksb/bounds.hpp"
#include "ksb/compare.hpp"
#include "ksb/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

namespace ksb {
namespace {

std::string csv(const std::vector<CompareRow>& rows) {
    std::ostringstream out;
    write_compare_csv(out, rows);
    return out.str();
}

TEST(ExpandGrid, Kinds) {
    EXPECT_EQ(expand_grid("diameter:4").size(), 3U);
    EXPECT_EQ(expand_grid("diameter:4-6").size(), 3U + 4U + 5U);
    const auto fixed = expand_grid("diameter:2-5:2");
    ASSERT_EQ(fixed.size(), 3U);
    EXPECT_EQ(fixed.front(), DistanceSet::upto(3, 2));

    // consecutive:7:3 has 2t < 7, so t <= 3 and s < t: 1 + 2 + 3 sets.
    const auto consecutive = expand_grid("consecutive:7:3");
    EXPECT_EQ(consecutive.size(), 6U);
    EXPECT_EQ(consecutive.back(), DistanceSet::range(7, 5, 6));

    const auto pairs = expand_grid("pair:6:5");
    ASSERT_EQ(pairs.size(), 3U);
    EXPECT_EQ(pairs[2], DistanceSet(6, {5, 6}));

    const auto listed = expand_grid("explicit:5-6:1,3");
    ASSERT_EQ(listed.size(), 2U);
    EXPECT_EQ(listed[1], DistanceSet(6, {1, 3}));
}

TEST(ExpandGrid, RejectsBadTerms) {
    EXPECT_THROW(expand_grid("diameter"), DomainError);
    EXPECT_THROW(expand_grid("ball:4-6"), DomainError);
    EXPECT_THROW(expand_grid("diameter:6-4"), DomainError);
    EXPECT_THROW(expand_grid("diameter:x"), DomainError);
    EXPECT_THROW(expand_grid("consecutive:6"), DomainError);
    EXPECT_THROW(expand_grid("explicit:5"), DomainError);
}

TEST(RunCompare, EmptyGridGivesHeaderOnly) {
    const std::string text = csv(run_compare({}));
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
    EXPECT_EQ(text.rfind("n,L,spectral,", 0), 0U);
    EXPECT_NE(text.find(",oracle,construction,best_upper,SOUNDNESS\n"), std::string::npos);
}

TEST(RunCompare, DiameterTwoIsTight) {
    const auto rows = run_compare(expand_grid("diameter:4-8:2"));
    ASSERT_EQ(rows.size(), 5U);
    for (const auto& row : rows) {
        ASSERT_TRUE(row.oracle);
        EXPECT_TRUE(row.sound);
        EXPECT_EQ(*row.oracle, row.n + 1);
        EXPECT_EQ(row.bounds.at(Method::Spectral), *row.oracle);
        EXPECT_EQ(row.bounds.at(Method::KleitmanClosedForm), *row.oracle);
        EXPECT_EQ(row.construction, *row.oracle);
        EXPECT_EQ(*row.best_upper, *row.oracle);
    }
}

TEST(RunCompare, PairRowsAreSandwiched) {
    for (const auto& row : run_compare(expand_grid("pair:4-8:1"))) {
        ASSERT_TRUE(row.oracle);
        EXPECT_TRUE(row.sound) << row.n << " " << row.allowed.to_string();
        EXPECT_LE(row.construction, *row.oracle);
        for (const auto& [method, value] : row.bounds) EXPECT_GE(value, *row.oracle) << method_name(method);
    }
}

TEST(RunCompare, OracleCapLeavesTheColumnEmpty) {
    CompareOptions options;
    options.oracle_max_n = 5;
    options.clp_max_n = 5;
    const auto rows = run_compare(expand_grid("diameter:5-6:3"), options);
    ASSERT_EQ(rows.size(), 2U);
    EXPECT_TRUE(rows[0].oracle);
    EXPECT_FALSE(rows[1].oracle);
    EXPECT_FALSE(rows[1].bounds.count(Method::ClpRank));
    EXPECT_EQ(rows[1].construction, kleitman_closed_form(6, 3).value);
}

TEST(RunCompare, NodeBudgetLeavesTheColumnEmpty) {
    CompareOptions options;
    options.oracle_max_nodes = 1;
    const auto rows = run_compare({DistanceSet(10, {3, 4})}, options);
    ASSERT_EQ(rows.size(), 1U);
    EXPECT_FALSE(rows[0].oracle);
    EXPECT_TRUE(rows[0].sound);
    options.oracle_max_nodes = 0;
    EXPECT_EQ(run_compare({DistanceSet(10, {3, 4})}, options)[0].oracle, run_compare({DistanceSet(10, {3, 4})})[0].oracle);
}

TEST(RunCompare, SortedDeduplicatedAndThreadIndependent) {
    std::vector<DistanceSet> grid = expand_grid("consecutive:5-8:2");
    const auto more = expand_grid("diameter:4-7");
    grid.insert(grid.end(), more.begin(), more.end());
    grid.insert(grid.end(), more.begin(), more.end());
    std::reverse(grid.begin(), grid.end());

    const auto serial = run_compare(grid);
    for (std::size_t i = 1; i < serial.size(); ++i) {
        const auto& a = serial[i - 1];
        const auto& b = serial[i];
        ASSERT_TRUE(a.n < b.n || (a.n == b.n && a.allowed.members() < b.allowed.members()));
    }
    CompareOptions options;
    options.threads = 4;
    EXPECT_EQ(csv(run_compare(grid, options)), csv(serial));
}

TEST(WriteCsv, RowFormat) {
    const auto rows = run_compare({DistanceSet(5, {1, 3})});
    std::istringstream in(csv(rows));
    std::string header;
    std::string line;
    std::getline(in, header);
    std::getline(in, line);
    EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(line.begin(), line.end(), ','));
    EXPECT_EQ(line.rfind("5,1;3,", 0), 0U) << line;
    EXPECT_EQ(line.substr(line.size() - 3), ",ok");
}

}  // namespace
}  // namespace ksb
