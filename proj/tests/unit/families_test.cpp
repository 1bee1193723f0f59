#include "ppm/error.hpp"
#include "ppm/families.hpp"
#include "ppm/graph.hpp"
#include "ppm/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace ppm;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

bool brute_two_monotone(const Permutation &s) {
    const int n = s.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> inc, dec;
        for (int i = 0; i < n; ++i)
            (mask >> i & 1 ? inc : dec).push_back(s.at(i + 1));
        if (std::is_sorted(inc.begin(), inc.end()) && std::is_sorted(dec.rbegin(), dec.rend()))
            return true;
    }
    return false;
}

} // namespace

TEST(Grid, LengthsAndCertificate) {
    for (int k : {2, 4, 6}) {
        const auto w = gen_grid_two_track(k);
        EXPECT_EQ(w.permutation.size(), 2 * k * k);
        EXPECT_EQ(lis_lds(w.permutation).second, 2);
        EXPECT_TRUE(detect_t_monotone(w.permutation, 2, Monotone::increasing));
        const auto host = incidence_graph(w.permutation);
        EXPECT_TRUE(verify_minor_certificate(host.graph(), w.certificate));
        EXPECT_EQ(w.certificate.branch_sets.size(), static_cast<std::size_t>(2 * k * k));
        // k rows of 2k-1 horizontal edges plus k-1 rows of 2k vertical edges.
        EXPECT_EQ(w.certificate.required.size(), static_cast<std::size_t>(k * (2 * k - 1) + (k - 1) * 2 * k));
    }
    EXPECT_THROW(gen_grid_two_track(3), InvalidArgument);
    EXPECT_THROW(gen_grid_two_track(0), InvalidArgument);
}

TEST(Certificate, RejectsBrokenModels) {
    const auto host = Graph::path(4);
    EXPECT_TRUE(verify_minor_certificate(host, {{{0, 1}, {2, 3}}, {{0, 1}}}));
    EXPECT_FALSE(verify_minor_certificate(host, {{{0, 2}, {1, 3}}, {}}));
    EXPECT_FALSE(verify_minor_certificate(host, {{{0}, {2, 3}}, {{0, 1}}}));
    EXPECT_FALSE(verify_minor_certificate(host, {{{0, 1}, {1, 2}}, {}}));
    EXPECT_FALSE(verify_minor_certificate(host, {{{}, {1}}, {}}));
}

TEST(PermutationFromPaths, Realizes) {
    const std::vector<int> x{2, 0, 1}, y{1, 2, 0};
    const auto p = permutation_from_paths(x, y);
    // Index order 2,0,1 and value order 1,2,0 give values 2,3,1.
    EXPECT_EQ(p, P({2, 3, 1}));
}

TEST(Splits, Examples) {
    EXPECT_EQ(split_decomposition(Permutation::identity(6)).m(), 1);
    EXPECT_EQ(split_point(P({1, 3, 5, 2, 4})), 3);
    EXPECT_FALSE(split_point(Permutation::identity(4)));
    EXPECT_FALSE(split_point(P({3, 2, 1})));

    const auto seq = split_decomposition(P({4, 3, 5, 2, 1}));
    const std::vector<Permutation> splits{P({1, 4, 5, 2, 3}), P({1, 2, 5, 3, 4}), P({2, 3, 4, 5, 1})};
    const std::vector<Permutation> chain{Permutation::identity(5), P({1, 4, 5, 2, 3}), P({1, 4, 3, 5, 2}),
                                         P({4, 3, 5, 2, 1})};
    EXPECT_EQ(seq.splits, splits);
    EXPECT_EQ(seq.chain, chain);
    EXPECT_EQ(seq.m(), 4);
}

TEST(Splits, RandomBound) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 40);
        const auto pi = random_permutation(rng, n);
        const auto seq = split_decomposition(pi);
        EXPECT_EQ(seq.chain.back(), pi);
        EXPECT_LE(seq.m() - 1, static_cast<int>(std::ceil(std::log2(std::max(n, 1)))));
        for (std::size_t i = 0; i < seq.splits.size(); ++i) {
            EXPECT_EQ(split_point(seq.splits[i]), seq.split_points[i]);
            EXPECT_EQ(seq.chain[i + 1], seq.chain[i].compose(seq.splits[i]));
        }
    }
}

TEST(ThreeTrack, PaperExample) {
    const auto w = gen_three_track(P({4, 3, 5, 2, 1}));
    EXPECT_EQ(w.host.size(), 35);
    EXPECT_LE(lis_lds(w.host).second, 3);
    EXPECT_TRUE(verify_minor_certificate(incidence_graph(w.host).graph(), w.certificate));
    EXPECT_EQ(w.certificate.required.size(), static_cast<std::size_t>(hamiltonian_union(w.splits).edge_count()));
    EXPECT_THROW(gen_three_track(P({1})), InvalidArgument);
}

TEST(ThreeTrack, Random) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 15);
        const auto w = gen_three_track(random_permutation(rng, n));
        const int m = w.splits.m();
        EXPECT_LE(w.host.size(), 2 * m * n);
        EXPECT_LE(lis_lds(w.host).second, 3);
        EXPECT_TRUE(verify_minor_certificate(incidence_graph(w.host).graph(), w.certificate));
    }
}

TEST(Monotone, Detection) {
    EXPECT_TRUE(detect_t_monotone(Permutation::identity(5), 1, Monotone::increasing));
    EXPECT_FALSE(detect_t_monotone(P({3, 2, 1}), 2, Monotone::increasing));
    EXPECT_TRUE(detect_t_monotone(P({3, 2, 1}), 1, Monotone::decreasing));
    EXPECT_TRUE(detect_2_monotone(P({2, 1})));
    // Three disjoint inversions cannot all be broken by one decreasing run of length <= 2.
    EXPECT_FALSE(detect_2_monotone(P({2, 1, 4, 3, 6, 5})));
    EXPECT_TRUE(detect_2_monotone(P({3, 1, 4, 2})));
}

TEST(Monotone, TwoMonotoneMatchesSearch) {
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        do {
            const Permutation s(v);
            const auto part = detect_2_monotone(s);
            ASSERT_EQ(part.has_value(), brute_two_monotone(s)) << s;
            if (!part)
                continue;
            std::vector<int> inc, dec;
            for (int i : part->increasing)
                inc.push_back(s.at(i));
            for (int i : part->decreasing)
                dec.push_back(s.at(i));
            EXPECT_EQ(inc.size() + dec.size(), static_cast<std::size_t>(n));
            EXPECT_TRUE(std::is_sorted(inc.begin(), inc.end()));
            EXPECT_TRUE(std::is_sorted(dec.rbegin(), dec.rend()));
        } while (std::next_permutation(v.begin(), v.end()));
    }
}
