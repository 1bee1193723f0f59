#pragma once

#include "ppm/match_count.hpp"
#include "ppm/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ppm {

struct NamedSolver {
    std::string name;
    std::function<bool(const Permutation &, const Permutation &)> contains;
    std::function<MatchCount(const Permutation &, const Permutation &)> count;
};

/// treedp, evenodd, and strips for each listed strip count (auto when empty).
std::vector<NamedSolver> default_solvers(const std::vector<int> &strip_counts = {});

struct Instance {
    Permutation text;
    Permutation pattern;
};

struct Disagreement {
    Instance instance;
    std::string solver;
    std::string detail;
};

struct SweepReport {
    std::size_t instances = 0;
    std::vector<Disagreement> disagreements; // in instance order
    std::optional<Disagreement> minimal;     // shrunk reproducer of the first disagreement

    bool ok() const { return disagreements.empty(); }
};

/// Worker count: PPM_THREADS when set and positive, otherwise hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on worker_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

/// Uniform permutation of length len drawn from rng (Fisher-Yates on rng() % range).
Permutation random_permutation(std::mt19937_64 &rng, int len);

/// Every text of length <= max_n with every pattern of length <= min(max_k, n).
std::vector<Instance> exhaustive_instances(int max_n, int max_k);
/// Deterministic in seed: n uniform in [1, max_n], k uniform in [1, min(max_k, n)].
std::vector<Instance> random_instances(std::uint64_t seed, std::size_t count, int max_n, int max_k);

/// Compares each solver's decision and count with the brute-force oracle.
SweepReport run_sweep(const std::vector<Instance> &instances, const std::vector<NamedSolver> &solvers);

/// Greedily deletes text and pattern entries while the solver still disagrees with the oracle.
Disagreement minimize(const Disagreement &d, const NamedSolver &solver);

/// One-line reproducer: "solver: text=... pattern=... (detail)".
std::string describe(const Disagreement &d);

} // namespace ppm
