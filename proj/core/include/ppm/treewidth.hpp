#pragma once

#include "ppm/graph.hpp"

#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace ppm {

/// Bags over the vertices of a Graph plus tree edges between bag indices.
/// Path decompositions are the special case where the tree is a path.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;

    /// Max bag size minus one; -1 when every bag is empty.
    int width() const;
};

/// True iff the bags form a tree covering every vertex and edge of g, and the bags
/// holding any fixed vertex are connected.
bool validate_decomposition(const Graph &g, const TreeDecomposition &td);

/// Builds the decomposition induced by an elimination ordering: each vertex's bag
/// is itself plus its neighbours in the filled graph at elimination time.
TreeDecomposition decomposition_from_ordering(const Graph &g, std::span<const int> order);

/// Greedy min-fill elimination; ties go to the lowest vertex number.
std::vector<int> min_fill_ordering(const Graph &g);
TreeDecomposition min_fill_decomposition(const Graph &g);

inline constexpr int default_exact_vertex_limit = 16;

/// Minimum-width decomposition. Runs the subset dynamic program over elimination
/// prefixes with an increasing width bound, so graphs larger than the default limit
/// are feasible when their treewidth is small. Throws LimitExceeded when
/// |V(g)| > vertex_limit (the hard ceiling is 64).
TreeDecomposition exact_treewidth(const Graph &g, int vertex_limit = default_exact_vertex_limit);

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
    NiceKind kind = NiceKind::leaf;
    std::vector<int> bag; // sorted
    int vertex = -1;      // introduced/forgotten vertex
    std::vector<int> children;
};

/// Rooted nice decomposition. Nodes are stored children-first, so iterating
/// `nodes` in order is a valid bottom-up traversal; `root` is the last node.
struct NiceDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
    TreeDecomposition as_tree_decomposition() const;
};

/// Throws InvalidArgument when `td` does not pass validation against g.
NiceDecomposition make_nice(const Graph &g, const TreeDecomposition &td);

/// Dump format: first line is the tree-edge count, then one "i j" line per tree
/// edge (0-based bag ids), then one line per bag listing its vertices, 1-based.
void write_decomposition(std::ostream &os, const TreeDecomposition &td);
TreeDecomposition parse_decomposition(std::string_view text);

} // namespace ppm
