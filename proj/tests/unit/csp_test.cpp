#include "ppm/csp.hpp"
#include "ppm/error.hpp"
#include "ppm/graph.hpp"
#include "ppm/oracle.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace ppm;

namespace {

const Permutation tau({1, 5, 4, 6, 3, 7, 8, 2});

// Full assignments (over the remaining domains) satisfying every constraint.
long count_solutions(const CspInstance &inst) {
    if (inst.inconsistent())
        return 0;
    const int k = inst.variable_count();
    std::vector<int> vars;
    for (int v = 1; v <= k; ++v)
        if (!inst.eliminated(v))
            vars.push_back(v);
    std::vector<int> value(static_cast<std::size_t>(k) + 1, 0);
    long total = 0;
    auto rec = [&](auto &&self, std::size_t i) -> void {
        if (i == vars.size()) {
            ++total;
            return;
        }
        const int v = vars[i];
        for (int a : inst.domain(v)) {
            bool ok = true;
            for (int ci : inst.incident(v)) {
                const auto &c = inst.constraints()[static_cast<std::size_t>(ci)];
                const int other = c.first == v ? c.second : c.first;
                const int b = value[static_cast<std::size_t>(other)];
                if (b == 0)
                    continue;
                if (!(c.first == v ? inst.allows(c, a, b) : inst.allows(c, b, a)))
                    ok = false;
            }
            for (std::size_t j = 0; j < i; ++j)
                if (value[static_cast<std::size_t>(vars[j])] == a)
                    ok = false;
            if (!ok)
                continue;
            value[static_cast<std::size_t>(v)] = a;
            self(self, i + 1);
            value[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(rec, 0);
    return total;
}

} // namespace

TEST(BuildCsp, Examples) {
    const auto two = build_csp(tau, Permutation({2, 1}));
    EXPECT_EQ(two.variable_count(), 2);
    ASSERT_EQ(two.constraints().size(), 1u);
    EXPECT_TRUE(two.constraints()[0].by_index);
    EXPECT_TRUE(two.constraints()[0].by_value);

    const Permutation fig({6, 5, 3, 1, 4, 7, 2});
    const auto seven = build_csp(Permutation::identity(9), fig);
    EXPECT_EQ(seven.variable_count(), 7);
    EXPECT_EQ(seven.constraint_graph(), incidence_graph(fig).graph());

    const auto one = build_csp(Permutation({1}), Permutation({1}));
    EXPECT_TRUE(one.constraints().empty());
    EXPECT_EQ(count_solutions(one), 1);
    EXPECT_EQ(one.domain(1).size(), 1u);
}

TEST(ConstraintSatisfied, Examples) {
    const auto inst = build_csp(tau, Permutation({1, 2}));
    EXPECT_TRUE(constraint_satisfied(inst, 1, 2, 1, 2));
    EXPECT_FALSE(constraint_satisfied(inst, 1, 2, 2, 5));
    for (int a = 1; a <= 8; ++a)
        EXPECT_FALSE(constraint_satisfied(inst, 1, 2, a, a));
    const auto three = build_csp(tau, Permutation({1, 2, 3}));
    EXPECT_THROW(constraint_satisfied(three, 1, 3, 1, 2), InvalidArgument);
}

TEST(ConstraintGraph, IsomorphicToIncidenceGraph) {
    for (int k = 1; k <= 8; ++k) {
        std::vector<int> v(static_cast<std::size_t>(k));
        std::iota(v.begin(), v.end(), 1);
        int budget = 400;
        do {
            const Permutation pi(v);
            EXPECT_EQ(build_csp(Permutation::identity(k), pi).constraint_graph(), incidence_graph(pi).graph());
        } while (--budget > 0 && std::next_permutation(v.begin(), v.end()));
    }
}

TEST(Csp, SolutionsMatchBruteCount) {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> t(static_cast<std::size_t>(n));
        std::iota(t.begin(), t.end(), 1);
        do {
            const Permutation text(t);
            for (int k = 1; k <= std::min(n, 4); ++k) {
                std::vector<int> p(static_cast<std::size_t>(k));
                std::iota(p.begin(), p.end(), 1);
                do {
                    const Permutation pattern(p);
                    EXPECT_EQ(count_solutions(build_csp(text, pattern)), brute_count(text, pattern));
                } while (std::next_permutation(p.begin(), p.end()));
            }
        } while (std::next_permutation(t.begin(), t.end()));
    }
}

TEST(AssignAndSimplify, Examples) {
    const Permutation inc({1, 2, 3});
    const auto inst = build_csp(tau, inc);
    for (int j = 1; j <= 8; ++j) {
        const auto s = assign_and_simplify(inst, {{2, j}});
        ASSERT_FALSE(s.inconsistent());
        EXPECT_TRUE(s.eliminated(2));
        std::vector<int> left, right;
        for (int a = 1; a <= 8; ++a) {
            if (a < j && tau.at(a) < tau.at(j))
                left.push_back(a);
            if (a > j && tau.at(a) > tau.at(j))
                right.push_back(a);
        }
        EXPECT_EQ(std::vector<int>(s.domain(1).begin(), s.domain(1).end()), left);
        EXPECT_EQ(std::vector<int>(s.domain(3).begin(), s.domain(3).end()), right);
    }

    const auto full = assign_and_simplify(inst, {{1, 1}, {2, 2}, {3, 4}});
    EXPECT_FALSE(full.inconsistent());
    EXPECT_EQ(full.active_variable_count(), 0);
    EXPECT_EQ(count_solutions(full), 1);

    const auto bad = assign_and_simplify(inst, {{1, 2}, {2, 5}});
    EXPECT_TRUE(bad.inconsistent());
    EXPECT_EQ(count_solutions(bad), 0);
}

TEST(AssignAndSimplify, PreservesCounts) {
    std::vector<int> t{3, 1, 6, 4, 2, 7, 5};
    const Permutation text(t);
    std::vector<int> p{2, 4, 1, 3};
    do {
        const Permutation pattern(p);
        const auto inst = build_csp(text, pattern);
        for (int var = 1; var <= 4; ++var) {
            long total = 0;
            for (int a = 1; a <= text.size(); ++a)
                total += count_solutions(assign_and_simplify(inst, {{var, a}}));
            EXPECT_EQ(total, brute_count(text, pattern));
        }
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST(WithoutLeftConstraint, KeepsValueEdges) {
    // (2,1): the index edge between 1 and 2 is also a value edge.
    const auto inst = build_csp(tau, Permutation({2, 1}));
    EXPECT_EQ(inst.without_left_constraint(2).constraints().size(), 1u);
    // (1,3,2): x_1-x_2 is only an index edge.
    const auto other = build_csp(tau, Permutation({1, 3, 2}));
    EXPECT_EQ(other.without_left_constraint(2).find_constraint(1, 2), nullptr);
}
