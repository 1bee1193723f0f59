#pragma once

#include "ppm/permutation.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ppm {

/// Simple undirected graph on vertices 0..n-1. Parallel edges and loops are dropped.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    /// Returns false if the edge was already present or is a loop.
    bool add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

    /// Edges as (u, v) with u < v, in insertion order.
    const std::vector<std::pair<int, int>> &edges() const noexcept { return edges_; }

    bool is_connected_subset(std::span<const int> vertices) const;

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);

    friend bool operator==(const Graph &a, const Graph &b);

  private:
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
};

/// G_sigma: each point joined to its index- and value-neighbours.
///
/// Vertex v of `graph()` is the point with index v+1. The index path and value
/// path are kept separately so callers can tell which path an edge came from.
class IncidenceGraph {
  public:
    explicit IncidenceGraph(const Permutation &sigma);

    const Permutation &permutation() const noexcept { return sigma_; }
    const Graph &graph() const noexcept { return graph_; }

    int vertex_count() const noexcept { return graph_.vertex_count(); }
    int edge_count() const noexcept { return graph_.edge_count(); }

    Point vertex_point(int v) const { return point_at(sigma_, v + 1); }
    int vertex_of_index(int x) const { return x - 1; }
    int vertex_of_value(int y) const { return sigma_.index_of(y) - 1; }

    int degree(Point p) const { return graph_.degree(vertex_of_index(p.x)); }

    bool on_index_path(int u, int v) const;
    bool on_value_path(int u, int v) const;

  private:
    Permutation sigma_;
    Graph graph_;
};

inline IncidenceGraph incidence_graph(const Permutation &sigma) { return IncidenceGraph(sigma); }

} // namespace ppm
