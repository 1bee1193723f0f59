#pragma once

#include "ppm/csp.hpp"
#include "ppm/match_count.hpp"
#include "ppm/treewidth.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ppm {

struct TdStats {
    int width = -1;                 // widest decomposition used
    std::size_t bags = 0;           // nice-decomposition nodes processed
    std::size_t table_entries = 0;  // largest table seen
    std::size_t guesses = 0;        // strip guesses tried (strip solver only)
};

/// Tree-decomposition dynamic programming over the constraint graph. `td` must be a
/// valid decomposition of `inst.constraint_graph()`; otherwise InvalidArgument.
bool solve_decision(const CspInstance &inst, const TreeDecomposition &td, TdStats *stats = nullptr);
MatchCount solve_count(const CspInstance &inst, const TreeDecomposition &td, TdStats *stats = nullptr);

/// Convenience wrappers: build the CSP and use a min-fill decomposition.
bool treedp_contains(const Permutation &text, const Permutation &pattern, TdStats *stats = nullptr);
MatchCount treedp_count(const Permutation &text, const Permutation &pattern, TdStats *stats = nullptr);

/// One guess of the strip solver: `leaders` are the pattern indices that are
/// leftmost in their strip (always starting with 1), `strips` the strictly
/// increasing strip each leader is mapped to (1-based).
struct StripGuess {
    int strip_count = 1;
    std::vector<int> leaders;
    std::vector<int> strips;

    /// Strip of every pattern index 1..k: that of the closest leader at or before it.
    std::vector<int> strip_of_indices(int k) const;
};

/// round(n^(1/4)), at least 1.
int auto_strip_count(int n);

/// Inclusive 1-based text index range of each strip. When s does not divide n the
/// first (n mod s) strips receive one extra index.
std::vector<std::pair<int, int>> strip_bounds(int n, int strip_count);

/// Enumerates every guess for a length-k pattern and s strips. Stops when `visit` returns false.
void for_each_strip_guess(int k, int strip_count, const std::function<bool(const StripGuess &)> &visit);

/// The CSP restricted to one guess: domains cut to strips, L-constraints of leaders dropped.
CspInstance restrict_to_guess(const CspInstance &inst, const StripGuess &guess);

/// Strip guessing wrapper around the DP. `strip_count` defaults to auto_strip_count(n).
bool solve_strips(const Permutation &text, const Permutation &pattern, std::optional<int> strip_count = std::nullopt,
                  TdStats *stats = nullptr);
/// Every occurrence determines exactly one guess, so summing per-guess counts is exact.
MatchCount count_strips(const Permutation &text, const Permutation &pattern,
                        std::optional<int> strip_count = std::nullopt, TdStats *stats = nullptr);

} // namespace ppm
