#include "ppm/graph.hpp"

#include "ppm/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace ppm {

Graph::Graph(int vertex_count) : adjacency_(static_cast<std::size_t>(vertex_count)) {}

bool Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw InvalidArgument("edge endpoint out of range");
    if (u == v || has_edge(u, v))
        return false;
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    return true;
}

bool Graph::has_edge(int u, int v) const {
    const auto &a = adjacency_[static_cast<std::size_t>(u)];
    return std::find(a.begin(), a.end(), v) != a.end();
}

bool Graph::is_connected_subset(std::span<const int> vertices) const {
    if (vertices.empty())
        return false;
    std::vector<char> member(adjacency_.size(), 0), seen(adjacency_.size(), 0);
    for (int v : vertices)
        member[static_cast<std::size_t>(v)] = 1;
    std::vector<int> stack{vertices.front()};
    seen[static_cast<std::size_t>(vertices.front())] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : neighbors(v))
            if (member[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    std::size_t distinct = 0;
    for (char m : member)
        distinct += m ? 1 : 0;
    return reached == distinct;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

bool operator==(const Graph &a, const Graph &b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    for (auto [u, v] : a.edges())
        if (!b.has_edge(u, v))
            return false;
    return true;
}

IncidenceGraph::IncidenceGraph(const Permutation &sigma) : sigma_(sigma), graph_(sigma.size()) {
    const int n = sigma.size();
    for (int x = 1; x < n; ++x)
        graph_.add_edge(x - 1, x);
    for (int y = 1; y < n; ++y)
        graph_.add_edge(vertex_of_value(y), vertex_of_value(y + 1));
}

bool IncidenceGraph::on_index_path(int u, int v) const { return std::abs(u - v) == 1; }

bool IncidenceGraph::on_value_path(int u, int v) const {
    return std::abs(sigma_.at(u + 1) - sigma_.at(v + 1)) == 1;
}

} // namespace ppm
