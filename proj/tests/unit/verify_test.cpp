#include "ppm/oracle.hpp"
#include "ppm/verify.hpp"

#include <gtest/gtest.h>

#include <atomic>

using namespace ppm;

TEST(Instances, ExhaustiveSize) {
    // sum over n <= 4 of n! * (1! + ... + min(n,3)!)
    EXPECT_EQ(exhaustive_instances(4, 3).size(), 1u * 1 + 2 * 3 + 6 * 9 + 24 * 9);
}

TEST(Instances, SeededRandomIsDeterministic) {
    const auto a = random_instances(42, 200, 12, 6);
    const auto b = random_instances(42, 200, 12, 6);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].text, b[i].text);
        EXPECT_EQ(a[i].pattern, b[i].pattern);
        EXPECT_LE(a[i].pattern.size(), a[i].text.size());
        EXPECT_LE(a[i].text.size(), 12);
    }
    const auto c = random_instances(43, 200, 12, 6);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        differs |= a[i].text != c[i].text;
    EXPECT_TRUE(differs);
}

TEST(Sweep, SolversAgree) {
    const auto report = run_sweep(random_instances(5, 300, 9, 5), default_solvers({1, 2}));
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.instances, 300u);
    EXPECT_FALSE(report.minimal);
}

TEST(Sweep, FaultIsReportedAndShrunk) {
    auto solvers = default_solvers();
    solvers.push_back({"off-by-one", [](const Permutation &t, const Permutation &p) { return brute_contains(t, p); },
                       [](const Permutation &t, const Permutation &p) {
                           auto c = brute_count(t, p);
                           return p.size() >= 3 ? c + 1 : c;
                       }});
    const auto report = run_sweep(exhaustive_instances(5, 3), solvers);
    ASSERT_FALSE(report.ok());
    for (const auto &d : report.disagreements)
        EXPECT_EQ(d.solver, "off-by-one");
    ASSERT_TRUE(report.minimal);
    EXPECT_EQ(report.minimal->instance.pattern.size(), 3);
    EXPECT_EQ(report.minimal->instance.text.size(), 1);
    EXPECT_NE(describe(*report.minimal).find("off-by-one: text=1 pattern="), std::string::npos);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
    for (const auto &h : hits)
        EXPECT_EQ(h.load(), 1);
}
