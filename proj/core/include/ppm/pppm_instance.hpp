#pragma once

#include "ppm/permutation.hpp"

#include <iosfwd>
#include <string_view>
#include <vector>

namespace ppm {

/// Colored pattern matching instance: text entry at index a may only host the
/// pattern entry whose index equals colors[a-1].
struct PppmInstance {
    Permutation text;
    Permutation pattern;
    std::vector<int> colors;

    /// Throws InvalidArgument if the coloring length or any color is out of range.
    void check() const;

    int color_of(int text_index) const { return colors[static_cast<std::size_t>(text_index - 1)]; }
};

/// Three lines: text permutation, colors, pattern permutation.
PppmInstance parse_pppm_instance(std::string_view text);
void write_pppm_instance(std::ostream &os, const PppmInstance &inst);

} // namespace ppm
