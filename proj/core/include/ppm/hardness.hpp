#pragma once

#include "ppm/graph.hpp"
#include "ppm/match_count.hpp"
#include "ppm/pppm_instance.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace ppm {

/// Partitioned subgraph isomorphism. Vertices of g are in canonical order and
/// class i (0-based) is a contiguous block of class_sizes[i] vertices; h has one
/// vertex per class.
struct PsiInstance {
    Graph g;
    Graph h;
    std::vector<int> class_sizes;

    /// Throws InvalidArgument on size mismatch, empty classes or intra-class edges.
    void check() const;
    int class_of(int vertex) const;
};

/// "u v" per line, 1-based; blank lines and '#' comments ignored.
Graph parse_edge_list(std::string_view text, int vertex_count);
/// Comma or whitespace separated positive sizes.
std::vector<int> parse_class_sizes(std::string_view text);

/// Copy of psi with edges inside a class dropped.
PsiInstance remove_intra_class_edges(const PsiInstance &psi);

/// Pattern of length 5|V(H)| + 2|E(H)| + 1, text of length 5n + 2m + 1, colored by pattern index.
PppmInstance psi_to_pppm(const PsiInstance &psi);

/// One vertex per class such that every edge of h is matched by an edge of g.
bool solve_psi_brute(const PsiInstance &psi);

using CountBackend = std::function<MatchCount(const Permutation &text, const Permutation &pattern)>;

/// Embeddings using every color exactly once, by inclusion-exclusion over color
/// subsets with `backend` as the uncolored counter. Throws LimitExceeded above 24 colors.
MatchCount count_colorful(const PppmInstance &inst, const CountBackend &backend);

} // namespace ppm
