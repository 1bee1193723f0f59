#pragma once

#include "ppm/match_count.hpp"
#include "ppm/permutation.hpp"
#include "ppm/pppm_instance.hpp"

#include <functional>
#include <span>

namespace ppm {

// Reference solvers. They enumerate increasing index tuples with interval
// pruning and are meant to be obviously correct rather than fast.

bool brute_contains(const Permutation &text, const Permutation &pattern);
MatchCount brute_count(const Permutation &text, const Permutation &pattern);

/// Calls `visit` with the text indices of every occurrence, in lexicographic
/// order. Enumeration stops early when `visit` returns false.
void for_each_occurrence(const Permutation &text, const Permutation &pattern,
                         const std::function<bool(std::span<const int>)> &visit);

/// Color-respecting occurrences: pattern entry j goes to a text entry colored j.
bool brute_pppm_contains(const PppmInstance &inst);
MatchCount brute_pppm_count(const PppmInstance &inst);

/// Occurrences whose k text entries carry k distinct colors, in any order.
/// This is the quantity the inclusion-exclusion driver computes.
MatchCount brute_count_all_colors(const PppmInstance &inst);

} // namespace ppm
