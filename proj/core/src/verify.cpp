#include "ppm/verify.hpp"

#include "ppm/evenodd.hpp"
#include "ppm/oracle.hpp"
#include "ppm/td_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>

namespace ppm {

std::vector<NamedSolver> default_solvers(const std::vector<int> &strip_counts) {
    std::vector<NamedSolver> out;
    out.push_back({"treedp", [](const auto &t, const auto &p) { return treedp_contains(t, p); },
                   [](const auto &t, const auto &p) { return treedp_count(t, p); }});
    out.push_back({"evenodd", [](const auto &t, const auto &p) { return evenodd_contains(t, p); },
                   [](const auto &t, const auto &p) { return evenodd_count(t, p); }});
    if (strip_counts.empty()) {
        out.push_back({"strips", [](const auto &t, const auto &p) { return solve_strips(t, p); },
                       [](const auto &t, const auto &p) { return count_strips(t, p); }});
    }
    for (int s : strip_counts)
        out.push_back({"strips(s=" + std::to_string(s) + ")",
                       [s](const auto &t, const auto &p) { return solve_strips(t, p, s); },
                       [s](const auto &t, const auto &p) { return count_strips(t, p, s); }});
    return out;
}

unsigned worker_count() {
    if (const char *env = std::getenv("PPM_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                body(i);
        });
    for (auto &t : pool)
        t.join();
}

std::vector<Instance> exhaustive_instances(int max_n, int max_k) {
    std::vector<std::vector<Permutation>> by_length(static_cast<std::size_t>(std::max(max_n, 0)) + 1);
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        do
            by_length[static_cast<std::size_t>(n)].emplace_back(v);
        while (std::next_permutation(v.begin(), v.end()));
    }
    std::vector<Instance> out;
    for (int n = 1; n <= max_n; ++n)
        for (const auto &text : by_length[static_cast<std::size_t>(n)])
            for (int k = 1; k <= std::min(max_k, n); ++k)
                for (const auto &pattern : by_length[static_cast<std::size_t>(k)])
                    out.push_back({text, pattern});
    return out;
}

namespace {

int uniform(std::mt19937_64 &rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace

Permutation random_permutation(std::mt19937_64 &rng, int len) {
    std::vector<int> v(static_cast<std::size_t>(len));
    std::iota(v.begin(), v.end(), 1);
    for (int i = len - 1; i > 0; --i)
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(uniform(rng, 0, i))]);
    return Permutation(std::move(v));
}

std::vector<Instance> random_instances(std::uint64_t seed, std::size_t count, int max_n, int max_k) {
    std::mt19937_64 rng(seed);
    std::vector<Instance> out;
    for (std::size_t i = 0; i < count; ++i) {
        const int n = uniform(rng, 1, max_n);
        const int k = uniform(rng, 1, std::min(max_k, n));
        Permutation text = random_permutation(rng, n);
        out.push_back({std::move(text), random_permutation(rng, k)});
    }
    return out;
}

namespace {

std::optional<std::string> check(const Instance &inst, const NamedSolver &solver, bool expected,
                                 const MatchCount &expected_count) {
    const bool got = solver.contains(inst.text, inst.pattern);
    if (got != expected)
        return std::string("contains=") + (got ? "true" : "false") + ", oracle " + (expected ? "true" : "false");
    const MatchCount count = solver.count(inst.text, inst.pattern);
    if (count != expected_count)
        return "count=" + to_decimal(count) + ", oracle " + to_decimal(expected_count);
    return std::nullopt;
}

std::optional<std::string> check(const Instance &inst, const NamedSolver &solver) {
    const MatchCount expected = brute_count(inst.text, inst.pattern);
    return check(inst, solver, expected > 0, expected);
}

Permutation drop(const Permutation &p, int index) {
    std::vector<int> rest;
    for (int i = 1; i <= p.size(); ++i)
        if (i != index)
            rest.push_back(p.at(i));
    return from_ranks(rest);
}

} // namespace

SweepReport run_sweep(const std::vector<Instance> &instances, const std::vector<NamedSolver> &solvers) {
    SweepReport report;
    report.instances = instances.size();
    std::vector<std::vector<Disagreement>> found(instances.size());
    parallel_for(instances.size(), [&](std::size_t i) {
        const auto &inst = instances[i];
        const MatchCount expected = brute_count(inst.text, inst.pattern);
        for (const auto &solver : solvers)
            if (auto detail = check(inst, solver, expected > 0, expected))
                found[i].push_back({inst, solver.name, *detail});
    });
    for (auto &f : found)
        for (auto &d : f)
            report.disagreements.push_back(std::move(d));
    if (!report.disagreements.empty()) {
        const auto &first = report.disagreements.front();
        auto it = std::find_if(solvers.begin(), solvers.end(), [&](const auto &s) { return s.name == first.solver; });
        report.minimal = minimize(first, *it);
    }
    return report;
}

Disagreement minimize(const Disagreement &d, const NamedSolver &solver) {
    Disagreement best = d;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (int i = 1; i <= best.instance.text.size() && !shrunk; ++i) {
            if (best.instance.text.size() == 1)
                break;
            Instance cand{drop(best.instance.text, i), best.instance.pattern};
            if (auto detail = check(cand, solver)) {
                best = {cand, solver.name, *detail};
                shrunk = true;
            }
        }
        for (int i = 1; i <= best.instance.pattern.size() && !shrunk; ++i) {
            if (best.instance.pattern.size() == 1)
                break;
            Instance cand{best.instance.text, drop(best.instance.pattern, i)};
            if (auto detail = check(cand, solver)) {
                best = {cand, solver.name, *detail};
                shrunk = true;
            }
        }
    }
    return best;
}

std::string describe(const Disagreement &d) {
    return d.solver + ": text=" + d.instance.text.to_string() + " pattern=" + d.instance.pattern.to_string() + " (" +
           d.detail + ")";
}

} // namespace ppm
