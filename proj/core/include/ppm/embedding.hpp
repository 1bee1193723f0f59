#pragma once

#include "ppm/permutation.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ppm {

/// A (partial) map from pattern points to text points.
///
/// The map itself is unchecked; `validate_embedding` decides whether it is a
/// partial embedding of pi into tau.
class Embedding {
  public:
    Embedding() = default;

    /// Builds the map j -> (images[j-1], tau(images[j-1])); entries equal to 0 stay unassigned.
    static Embedding from_indices(const Permutation &pattern, const Permutation &text, std::span<const int> images);

    void assign(Point pattern_point, Point text_point) { map_[pattern_point] = text_point; }
    void erase(Point pattern_point) { map_.erase(pattern_point); }

    std::optional<Point> image(Point pattern_point) const;

    std::size_t size() const noexcept { return map_.size(); }
    bool empty() const noexcept { return map_.empty(); }

    const std::map<Point, Point> &assignments() const noexcept { return map_; }

    /// Text indices ordered by pattern index (only meaningful when total).
    std::vector<int> text_indices() const;

  private:
    std::map<Point, Point> map_;
};

/// True iff f is injective and satisfies the neighbour order conditions on every
/// edge of G_pi restricted to its domain. Throws InvalidArgument if a source point
/// is not in S_pi or a target point is not in S_tau.
bool validate_embedding(const Permutation &pattern, const Permutation &text, const Embedding &f);

/// True iff text restricted to the given increasing positions is order-isomorphic to pattern.
bool is_occurrence(const Permutation &pattern, const Permutation &text, std::span<const int> text_indices);

} // namespace ppm
