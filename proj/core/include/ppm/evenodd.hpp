#pragma once

#include "ppm/embedding.hpp"
#include "ppm/match_count.hpp"
#include "ppm/permutation.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace ppm {

struct EvenOddPartition {
    std::vector<Point> evens; // by index
    std::vector<Point> odds;  // by value, p_1 .. p_ceil(k/2)
};

EvenOddPartition even_odd_partition(const Permutation &pattern);

/// Open box; hi_y == Point::infinity means unbounded above.
struct ConstraintBox {
    int lo_x = 0;
    int hi_x = Point::infinity;
    int lo_y = 0;
    int hi_y = Point::infinity;

    bool contains(Point p) const { return lo_x < p.x && p.x < hi_x && lo_y < p.y && p.y < hi_y; }
    bool unbounded_above() const { return hi_y == Point::infinity; }
};

struct EnumerationOptions {
    bool gap_pruning = true;
};

struct EvenOddStats {
    std::size_t subsequences = 0; // index subsequences reaching the value-order check
    std::size_t yielded = 0;      // g0 handed to the caller
    std::size_t extended = 0;     // g0 that extended to a full embedding
};

/// Streams the partial embeddings g0 of the even-index points, in lexicographic
/// order of their text-index sequences. Stops early when `visit` returns false.
void enumerate_g0(const Permutation &text, const Permutation &pattern,
                  const std::function<bool(const Embedding &)> &visit, EnumerationOptions options = {},
                  EvenOddStats *stats = nullptr);

/// Box for odd pattern point `p` given `partial`, which must already map every
/// neighbour of p except an odd upper one.
ConstraintBox constraint_box(const Permutation &text, const Permutation &pattern, const Embedding &partial, Point p);

/// Greedy lowest-point extension of g0 over the odd points in value order.
/// Returns nothing when g0 is not a partial embedding of the even points or some box is empty.
std::optional<Embedding> extend_greedy(const Permutation &text, const Permutation &pattern, const Embedding &g0);

bool evenodd_contains(const Permutation &text, const Permutation &pattern, EnumerationOptions options = {},
                      EvenOddStats *stats = nullptr);
MatchCount evenodd_count(const Permutation &text, const Permutation &pattern, EnumerationOptions options = {},
                         EvenOddStats *stats = nullptr);

} // namespace ppm
