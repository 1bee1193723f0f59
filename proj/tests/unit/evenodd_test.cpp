#include "ppm/embedding.hpp"
#include "ppm/evenodd.hpp"
#include "ppm/oracle.hpp"
#include "ppm/verify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ppm;

namespace {

const Permutation tau({1, 5, 4, 6, 3, 7, 8, 2});

// Backtracking over every admissible image of each odd point, in value order.
bool extends_somehow(const Permutation &text, const Permutation &pattern, const Embedding &g0) {
    const auto odds = even_odd_partition(pattern).odds;
    Embedding f = g0;
    auto rec = [&](auto &&self, std::size_t i) -> bool {
        if (i == odds.size())
            return validate_embedding(pattern, text, f);
        for (int a = 1; a <= text.size(); ++a) {
            f.assign(odds[i], point_at(text, a));
            if (validate_embedding(pattern, text, f) && self(self, i + 1))
                return true;
            f.erase(odds[i]);
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace

TEST(Partition, Examples) {
    const auto fig = even_odd_partition(Permutation({6, 3, 8, 5, 4, 2, 1, 7}));
    const std::vector<Point> evens{{2, 3}, {4, 5}, {6, 2}, {8, 7}};
    EXPECT_EQ(fig.evens, evens);
    const std::vector<Point> odds{{7, 1}, {5, 4}, {1, 6}, {3, 8}};
    EXPECT_EQ(fig.odds, odds);

    const auto one = even_odd_partition(Permutation({1}));
    EXPECT_TRUE(one.evens.empty());
    EXPECT_EQ(one.odds, (std::vector<Point>{Point{1, 1}}));

    const auto two = even_odd_partition(Permutation({2, 1}));
    EXPECT_EQ(two.evens, (std::vector<Point>{Point{2, 1}}));
    EXPECT_EQ(two.odds, (std::vector<Point>{Point{1, 2}}));
}

TEST(Enumerate, CandidateBound) {
    const Permutation text({3, 9, 1, 6, 10, 2, 8, 4, 7, 5});
    const Permutation pattern({2, 5, 1, 6, 3, 4});
    EvenOddStats raw, pruned;
    enumerate_g0(text, pattern, [](const Embedding &) { return true; }, {false}, &raw);
    enumerate_g0(text, pattern, [](const Embedding &) { return true; }, {true}, &pruned);
    EXPECT_EQ(raw.subsequences, 120u);
    EXPECT_LE(pruned.subsequences, 35u);
}

TEST(Enumerate, YieldsPartialEmbeddings) {
    for (const auto &inst : random_instances(13, 300, 10, 7)) {
        std::vector<std::vector<int>> seen;
        enumerate_g0(inst.text, inst.pattern, [&](const Embedding &g0) {
            EXPECT_TRUE(validate_embedding(inst.pattern, inst.text, g0));
            EXPECT_EQ(static_cast<int>(g0.size()), inst.pattern.size() / 2);
            std::vector<int> xs;
            for (const auto &[src, dst] : g0.assignments())
                xs.push_back(dst.x);
            seen.push_back(xs);
            return true;
        });
        EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    }
}

TEST(Extend, SingletonPattern) {
    Embedding g0;
    const auto f = extend_greedy(tau, Permutation({1}), g0);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->image({1, 1}), (Point{1, 1}));
    const Permutation other({4, 2, 3, 1});
    EXPECT_EQ(extend_greedy(other, Permutation({1}), g0)->image({1, 1}), (Point{4, 1}));
}

// Each odd point lands on the lowest text point of its box, given the points before it.
TEST(Extend, LowestPointInBox) {
    const Permutation pattern({6, 3, 8, 5, 4, 2, 1, 7});
    const auto odds = even_odd_partition(pattern).odds;
    std::mt19937_64 rng(17);
    int extended = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Permutation text = random_permutation(rng, 14);
        enumerate_g0(text, pattern, [&](const Embedding &g0) {
            const auto f = extend_greedy(text, pattern, g0);
            if (!f)
                return true;
            ++extended;
            EXPECT_TRUE(validate_embedding(pattern, text, *f));
            Embedding partial = g0;
            for (const Point &p : odds) {
                const auto box = constraint_box(text, pattern, partial, p);
                const Point image = *f->image(p);
                EXPECT_TRUE(box.contains(image));
                for (int y = 1; y < image.y; ++y) {
                    const Point q{text.index_of(y), y};
                    bool used = false;
                    for (const auto &[src, dst] : partial.assignments())
                        used |= dst == q;
                    EXPECT_FALSE(box.contains(q) && !used);
                }
                partial.assign(p, image);
            }
            return true;
        });
    }
    EXPECT_GT(extended, 0);
}

TEST(Extend, GreedyLosesNothing) {
    for (const auto &inst : exhaustive_instances(6, 5)) {
        bool any_greedy = false;
        enumerate_g0(inst.text, inst.pattern, [&](const Embedding &g0) {
            const bool greedy = extend_greedy(inst.text, inst.pattern, g0).has_value();
            EXPECT_EQ(greedy, extends_somehow(inst.text, inst.pattern, g0)) << inst.text << " / " << inst.pattern;
            any_greedy |= greedy;
            return true;
        });
        EXPECT_EQ(any_greedy, brute_contains(inst.text, inst.pattern));
    }
}

TEST(Extend, RejectsNonEmbedding) {
    Embedding g0;
    g0.assign({2, 1}, {1, 1});
    EXPECT_FALSE(extend_greedy(tau, Permutation({2, 1}), g0));
}

TEST(EvenOdd, Examples) {
    EXPECT_TRUE(evenodd_contains(tau, Permutation({2, 3, 1})));
    EXPECT_FALSE(evenodd_contains(tau, Permutation({3, 1, 2})));
    EXPECT_TRUE(evenodd_contains(Permutation::identity(9), Permutation::identity(5)));
    EXPECT_EQ(evenodd_count(tau, Permutation({1})), 8);
    EXPECT_EQ(evenodd_count(tau, Permutation({1, 2})), 18);
    EXPECT_EQ(evenodd_count(Permutation::identity(6), Permutation::identity(3)), 20);
}

TEST(EvenOdd, AgreesWithBrute) {
    for (const auto &inst : exhaustive_instances(7, 5)) {
        const auto expected = brute_count(inst.text, inst.pattern);
        EXPECT_EQ(evenodd_count(inst.text, inst.pattern), expected);
        EXPECT_EQ(evenodd_contains(inst.text, inst.pattern), expected > 0);
    }
    for (const auto &inst : random_instances(31, 500, 8, 5)) {
        const auto expected = brute_count(inst.text, inst.pattern);
        EXPECT_EQ(evenodd_count(inst.text, inst.pattern), expected);
        EXPECT_EQ(evenodd_count(inst.text, inst.pattern, {false}), expected);
    }
}
