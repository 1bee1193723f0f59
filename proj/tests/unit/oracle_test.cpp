#include "ppm/error.hpp"
#include "ppm/oracle.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace ppm;

namespace {
const Permutation tau({1, 5, 4, 6, 3, 7, 8, 2});
}

TEST(Brute, Decision) {
    EXPECT_TRUE(brute_contains(tau, Permutation({2, 3, 1})));
    EXPECT_FALSE(brute_contains(tau, Permutation({3, 1, 2})));
    EXPECT_TRUE(brute_contains(tau, Permutation({1})));
    EXPECT_FALSE(brute_contains(Permutation({1, 2}), Permutation({1, 2, 3})));
}

TEST(Brute, Count) {
    EXPECT_EQ(brute_count(tau, Permutation({1})), 8);
    EXPECT_EQ(brute_count(tau, Permutation({1, 2})), 18);
    EXPECT_EQ(brute_count(Permutation::identity(6), Permutation::identity(3)), 20);
    EXPECT_EQ(brute_count(Permutation::identity(30), Permutation::identity(15)), binomial(30, 15));
}

TEST(Brute, OccurrencesInOrder) {
    std::vector<std::vector<int>> seen;
    for_each_occurrence(tau, Permutation({2, 3, 1}), [&](std::span<const int> idx) {
        seen.emplace_back(idx.begin(), idx.end());
        return true;
    });
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(brute_count(tau, Permutation({2, 3, 1}))));
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    EXPECT_NE(std::find(seen.begin(), seen.end(), std::vector<int>{2, 4, 5}), seen.end());
}

TEST(Pppm, Examples) {
    PppmInstance a{Permutation({1, 2}), Permutation({1}), {1, 1}};
    EXPECT_EQ(brute_pppm_count(a), 2);
    PppmInstance b{Permutation({1, 2}), Permutation({1, 2}), {2, 1}};
    EXPECT_FALSE(brute_pppm_contains(b));
    PppmInstance c{Permutation({1, 3, 2}), Permutation({1, 2}), {1, 2, 2}};
    EXPECT_EQ(brute_pppm_count(c), 2);
    EXPECT_EQ(brute_count_all_colors(c), 2);
    // The all-colors count ignores which color hosts which pattern entry.
    EXPECT_EQ(brute_count_all_colors(b), 1);
}

TEST(Pppm, CheckAndFormat) {
    PppmInstance bad{Permutation({1, 2}), Permutation({1}), {1, 2}};
    EXPECT_THROW(bad.check(), InvalidArgument);
    PppmInstance c{Permutation({1, 3, 2}), Permutation({1, 2}), {1, 2, 2}};
    std::ostringstream os;
    write_pppm_instance(os, c);
    const auto back = parse_pppm_instance(os.str());
    EXPECT_EQ(back.text, c.text);
    EXPECT_EQ(back.pattern, c.pattern);
    EXPECT_EQ(back.colors, c.colors);
    EXPECT_THROW(parse_pppm_instance("1 2\n1\n"), ParseError);
}
