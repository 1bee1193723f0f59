#include "ppm/error.hpp"
#include "ppm/permutation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

using namespace ppm;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

std::pair<int, int> slow_lis_lds(const Permutation &s) {
    const int n = s.size();
    int lis = 0, lds = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> seq;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1)
                seq.push_back(s.at(i + 1));
        const int len = static_cast<int>(seq.size());
        if (std::is_sorted(seq.begin(), seq.end()))
            lis = std::max(lis, len);
        if (std::is_sorted(seq.rbegin(), seq.rend()))
            lds = std::max(lds, len);
    }
    return {lis, lds};
}

} // namespace

TEST(Parse, Examples) {
    EXPECT_EQ(parse_permutation("6 5 3 1 4 7 2"), P({6, 5, 3, 1, 4, 7, 2}));
    EXPECT_EQ(parse_permutation("1"), P({1}));
    EXPECT_EQ(parse_permutation("2,1,3"), P({2, 1, 3}));
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse_permutation("1 1 2"), ParseError);
    EXPECT_THROW(parse_permutation("1 x"), ParseError);
    EXPECT_THROW(parse_permutation(""), ParseError);
    EXPECT_THROW(parse_permutation("0 1"), ParseError);
    EXPECT_THROW(parse_permutation("1 3"), ParseError);
    try {
        parse_permutation("1 2 x");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), 3u);
    }
}

TEST(Parse, RoundTrip) {
    const auto p = P({3, 1, 4, 2});
    EXPECT_EQ(p.to_string(), "3 1 4 2");
    EXPECT_EQ(parse_permutation(p.to_string()), p);
}

TEST(Construct, RejectsNonBijection) {
    EXPECT_THROW(P({}), InvalidArgument);
    EXPECT_THROW(P({2, 3}), InvalidArgument);
    EXPECT_THROW(P({1, 1}), InvalidArgument);
}

TEST(Neighbor, Examples) {
    const auto s = P({6, 5, 3, 1, 4, 7, 2});
    EXPECT_EQ(neighbor(s, {4, 1}, Direction::up), (Point{7, 2}));
    EXPECT_EQ(neighbor(s, {4, 1}, Direction::down), Point::origin());
    EXPECT_EQ(neighbor(s, {4, 1}, Direction::left), (Point{3, 3}));
    EXPECT_EQ(neighbor(s, {4, 1}, Direction::right), (Point{5, 4}));
    EXPECT_EQ(neighbor(s, {1, 6}, Direction::left), Point::origin());
    EXPECT_EQ(neighbor(s, {6, 7}, Direction::up), Point::at_infinity());
    EXPECT_THROW(neighbor(s, {4, 2}, Direction::up), InvalidArgument);

    const auto id = Permutation::identity(6);
    for (int i = 1; i < 6; ++i)
        EXPECT_EQ(neighbor(id, {i, i}, Direction::right), (Point{i + 1, i + 1}));
    EXPECT_EQ(neighbor(id, {6, 6}, Direction::right), Point::at_infinity());
}

TEST(Symmetry, Examples) {
    EXPECT_EQ(symmetry(P({1, 2, 3}), Symmetry::reverse), P({3, 2, 1}));
    EXPECT_EQ(symmetry(P({2, 3, 1}), Symmetry::inverse), P({3, 1, 2}));
    EXPECT_EQ(symmetry(P({6, 5, 3, 1, 4, 7, 2}), Symmetry::complement), P({2, 3, 5, 7, 4, 1, 6}));
}

TEST(Symmetry, Involutions) {
    std::vector<int> v(6);
    std::iota(v.begin(), v.end(), 1);
    do {
        const Permutation p(v);
        for (auto op : {Symmetry::reverse, Symmetry::complement, Symmetry::inverse})
            EXPECT_EQ(symmetry(symmetry(p, op), op), p);
        EXPECT_TRUE(p.compose(p.inverse()).is_identity());
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST(LisLds, Examples) {
    EXPECT_EQ(lis_lds(Permutation::identity(9)), std::make_pair(9, 1));
    EXPECT_EQ(lis_lds(P({6, 5, 3, 1, 4, 7, 2})), std::make_pair(3, 4));
    EXPECT_EQ(lis_lds(P({4, 1, 2, 3, 8, 5, 6, 7})), std::make_pair(6, 2));
}

TEST(LisLds, MatchesSubsetSearch) {
    std::vector<int> v(7);
    std::iota(v.begin(), v.end(), 1);
    do {
        const Permutation p(v);
        EXPECT_EQ(lis_lds(p), slow_lis_lds(p)) << p;
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST(FromRanks, Relabels) {
    const std::vector<int> seq{40, 10, 30};
    EXPECT_EQ(from_ranks(seq), P({3, 1, 2}));
}
