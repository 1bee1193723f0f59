#include "ppm/treewidth.hpp"

#include "ppm/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

namespace ppm {

int TreeDecomposition::width() const {
    std::size_t widest = 0;
    for (const auto &b : bags)
        widest = std::max(widest, b.size());
    return static_cast<int>(widest) - 1;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

bool validate_decomposition(const Graph &g, const TreeDecomposition &td) {
    const auto bag_count = td.bags.size();
    if (bag_count == 0)
        return false;
    if (td.tree_edges.size() != bag_count - 1)
        return false;
    DisjointSets dsu(bag_count);
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= bag_count || static_cast<std::size_t>(b) >= bag_count)
            return false;
        if (!dsu.unite(a, b))
            return false;
    }

    const int n = g.vertex_count();
    std::vector<std::vector<char>> holds(bag_count);
    std::vector<int> bags_with(static_cast<std::size_t>(n), 0);
    for (std::size_t t = 0; t < bag_count; ++t) {
        holds[t].assign(static_cast<std::size_t>(n), 0);
        for (int v : td.bags[t]) {
            if (v < 0 || v >= n)
                return false;
            if (!holds[t][static_cast<std::size_t>(v)]) {
                holds[t][static_cast<std::size_t>(v)] = 1;
                ++bags_with[static_cast<std::size_t>(v)];
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (bags_with[static_cast<std::size_t>(v)] == 0)
            return false;
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (std::size_t t = 0; t < bag_count && !covered; ++t)
            covered = holds[t][static_cast<std::size_t>(u)] && holds[t][static_cast<std::size_t>(v)];
        if (!covered)
            return false;
    }
    // In a tree, the bags holding v induce a subtree iff they span exactly
    // (count - 1) tree edges.
    std::vector<int> internal_edges(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : td.tree_edges)
        for (int v = 0; v < n; ++v)
            if (holds[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)] &&
                holds[static_cast<std::size_t>(b)][static_cast<std::size_t>(v)])
                ++internal_edges[static_cast<std::size_t>(v)];
    for (int v = 0; v < n; ++v)
        if (internal_edges[static_cast<std::size_t>(v)] != bags_with[static_cast<std::size_t>(v)] - 1)
            return false;
    return true;
}

TreeDecomposition decomposition_from_ordering(const Graph &g, std::span<const int> order) {
    const int n = g.vertex_count();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.emplace_back();
        return td;
    }
    if (static_cast<int>(order.size()) != n)
        throw InvalidArgument("elimination ordering must list every vertex once");

    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int v = order[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || position[static_cast<std::size_t>(v)] != -1)
            throw InvalidArgument("elimination ordering must list every vertex once");
        position[static_cast<std::size_t>(v)] = i;
    }

    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (auto [u, v] : g.edges())
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;

    td.bags.resize(static_cast<std::size_t>(n));
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        const int v = order[static_cast<std::size_t>(i)];
        std::vector<int> later;
        for (int w = 0; w < n; ++w)
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] && position[static_cast<std::size_t>(w)] > i)
                later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                adj[static_cast<std::size_t>(later[a])][static_cast<std::size_t>(later[b])] =
                    adj[static_cast<std::size_t>(later[b])][static_cast<std::size_t>(later[a])] = 1;

        auto &bag = td.bags[static_cast<std::size_t>(i)];
        bag = later;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());

        if (later.empty()) {
            roots.push_back(i);
        } else {
            int parent = n;
            for (int w : later)
                parent = std::min(parent, position[static_cast<std::size_t>(w)]);
            td.tree_edges.emplace_back(i, parent);
        }
    }
    for (std::size_t r = 1; r < roots.size(); ++r)
        td.tree_edges.emplace_back(roots[r - 1], roots[r]);
    return td;
}

std::vector<int> min_fill_ordering(const Graph &g) {
    const int n = g.vertex_count();
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
        nbrs[static_cast<std::size_t>(u)].push_back(v);
        nbrs[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));

    auto fill_in = [&](int v) {
        const auto &nb = nbrs[static_cast<std::size_t>(v)];
        long missing = 0;
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (!adj[static_cast<std::size_t>(nb[a])][static_cast<std::size_t>(nb[b])])
                    ++missing;
        return missing;
    };

    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = 0;
        for (int v = 0; v < n; ++v) {
            if (gone[static_cast<std::size_t>(v)])
                continue;
            const long f = fill_in(v);
            if (best == -1 || f < best_fill) {
                best = v;
                best_fill = f;
            }
        }
        order.push_back(best);
        gone[static_cast<std::size_t>(best)] = 1;
        const auto nb = nbrs[static_cast<std::size_t>(best)];
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                const int x = nb[a], y = nb[b];
                if (!adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) {
                    adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = adj[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
                    nbrs[static_cast<std::size_t>(x)].push_back(y);
                    nbrs[static_cast<std::size_t>(y)].push_back(x);
                }
            }
        for (int w : nb)
            std::erase(nbrs[static_cast<std::size_t>(w)], best);
    }
    return order;
}

TreeDecomposition min_fill_decomposition(const Graph &g) {
    const auto order = min_fill_ordering(g);
    return decomposition_from_ordering(g, order);
}

namespace {

using Mask = std::uint64_t;

// Treewidth dynamic program over elimination prefixes: a set S is feasible for
// bound b if its vertices can be eliminated first, in some order, with every
// eliminated vertex having at most b neighbours in the filled graph.
class ExactSolver {
  public:
    explicit ExactSolver(const Graph &g) : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_), 0) {
        for (auto [u, v] : g.edges()) {
            adj_[static_cast<std::size_t>(u)] |= Mask{1} << v;
            adj_[static_cast<std::size_t>(v)] |= Mask{1} << u;
        }
        all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    }

    // Neighbourhood of v in the graph where the set S has been eliminated.
    int filled_degree(Mask s, int v) const {
        Mask comp = Mask{1} << v;
        Mask frontier = comp;
        Mask reach = 0;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1)
                next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
            reach |= next;
            frontier = next & s & ~comp;
            comp |= frontier;
        }
        return std::popcount(reach & ~s & ~(Mask{1} << v));
    }

    // Returns an elimination ordering of width <= bound, or empty.
    std::vector<int> ordering_within(int bound) const {
        std::unordered_map<Mask, int> last; // set -> vertex eliminated last
        std::vector<Mask> level{0};
        last.emplace(0, -1);
        for (int size = 0; size <= n_; ++size) {
            for (Mask s : level)
                if (n_ - size <= bound + 1)
                    return reconstruct(s, last);
            std::vector<Mask> next;
            for (Mask s : level)
                for (Mask rest = all_ & ~s; rest; rest &= rest - 1) {
                    const int v = std::countr_zero(rest);
                    const Mask t = s | (Mask{1} << v);
                    if (last.count(t))
                        continue;
                    if (filled_degree(s, v) <= bound) {
                        last.emplace(t, v);
                        next.push_back(t);
                    }
                }
            if (next.empty())
                return {};
            level = std::move(next);
        }
        return {};
    }

  private:
    std::vector<int> reconstruct(Mask s, const std::unordered_map<Mask, int> &last) const {
        std::vector<int> prefix;
        const Mask full = s;
        while (s) {
            const int v = last.at(s);
            prefix.push_back(v);
            s &= ~(Mask{1} << v);
        }
        std::reverse(prefix.begin(), prefix.end());
        for (int v = 0; v < n_; ++v)
            if (!(full >> v & 1))
                prefix.push_back(v);
        return prefix;
    }

    int n_;
    std::vector<Mask> adj_;
    Mask all_ = 0;
};

// Degeneracy (max over subgraphs of the minimum degree) bounds treewidth from below.
int degeneracy(const Graph &g) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] = g.degree(v);
    int best = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int w = 0; w < n; ++w)
            if (!gone[static_cast<std::size_t>(w)] && (v == -1 || deg[static_cast<std::size_t>(w)] < deg[static_cast<std::size_t>(v)]))
                v = w;
        best = std::max(best, deg[static_cast<std::size_t>(v)]);
        gone[static_cast<std::size_t>(v)] = 1;
        for (int w : g.neighbors(v))
            if (!gone[static_cast<std::size_t>(w)])
                --deg[static_cast<std::size_t>(w)];
    }
    return best;
}

} // namespace

TreeDecomposition exact_treewidth(const Graph &g, int vertex_limit) {
    const int n = g.vertex_count();
    if (n > vertex_limit || n > 64)
        throw LimitExceeded("exact treewidth limited to " + std::to_string(std::min(vertex_limit, 64)) +
                            " vertices, graph has " + std::to_string(n));
    if (n == 0)
        return decomposition_from_ordering(g, {});

    auto heuristic = min_fill_decomposition(g);
    const int upper = heuristic.width();
    ExactSolver solver(g);
    for (int bound = degeneracy(g); bound < upper; ++bound) {
        const auto order = solver.ordering_within(bound);
        if (!order.empty())
            return decomposition_from_ordering(g, order);
    }
    return heuristic;
}

int NiceDecomposition::width() const {
    std::size_t widest = 0;
    for (const auto &node : nodes)
        widest = std::max(widest, node.bag.size());
    return static_cast<int>(widest) - 1;
}

TreeDecomposition NiceDecomposition::as_tree_decomposition() const {
    TreeDecomposition td;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        td.bags.push_back(nodes[i].bag);
        for (int c : nodes[i].children)
            td.tree_edges.emplace_back(c, static_cast<int>(i));
    }
    return td;
}

namespace {

class NiceBuilder {
  public:
    explicit NiceBuilder(const TreeDecomposition &td) : bags_(td.bags.size()), tree_(td.bags.size()) {
        for (std::size_t t = 0; t < td.bags.size(); ++t)
            bags_[t] = sorted_unique(td.bags[t]);
        for (auto [a, b] : td.tree_edges) {
            tree_[static_cast<std::size_t>(a)].push_back(b);
            tree_[static_cast<std::size_t>(b)].push_back(a);
        }
    }

    NiceDecomposition build() {
        int top = subtree(0, -1);
        for (int v : bags_[0])
            top = forget(top, v);
        out_.root = top;
        return std::move(out_);
    }

  private:
    int add(NiceKind kind, std::vector<int> bag, int vertex, std::vector<int> children) {
        out_.nodes.push_back({kind, std::move(bag), vertex, std::move(children)});
        return static_cast<int>(out_.nodes.size()) - 1;
    }

    int forget(int child, int v) {
        auto bag = out_.nodes[static_cast<std::size_t>(child)].bag;
        std::erase(bag, v);
        return add(NiceKind::forget, std::move(bag), v, {child});
    }

    int introduce(int child, int v) {
        auto bag = out_.nodes[static_cast<std::size_t>(child)].bag;
        bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
        return add(NiceKind::introduce, std::move(bag), v, {child});
    }

    // Walks from a node carrying bag `from` to one carrying bag `to`.
    int transition(int node, const std::vector<int> &from, const std::vector<int> &to) {
        for (int v : from)
            if (!std::binary_search(to.begin(), to.end(), v))
                node = forget(node, v);
        for (int v : to)
            if (!std::binary_search(from.begin(), from.end(), v))
                node = introduce(node, v);
        return node;
    }

    int subtree(int t, int parent) {
        const auto &bag = bags_[static_cast<std::size_t>(t)];
        std::vector<int> tops;
        for (int c : tree_[static_cast<std::size_t>(t)]) {
            if (c == parent)
                continue;
            const int child_top = subtree(c, t);
            tops.push_back(transition(child_top, bags_[static_cast<std::size_t>(c)], bag));
        }
        if (tops.empty()) {
            const int leaf = add(NiceKind::leaf, {}, -1, {});
            return transition(leaf, {}, bag);
        }
        int node = tops.front();
        for (std::size_t i = 1; i < tops.size(); ++i)
            node = add(NiceKind::join, bag, -1, {node, tops[i]});
        return node;
    }

    std::vector<std::vector<int>> bags_;
    std::vector<std::vector<int>> tree_;
    NiceDecomposition out_;
};

} // namespace

NiceDecomposition make_nice(const Graph &g, const TreeDecomposition &td) {
    if (!validate_decomposition(g, td))
        throw InvalidArgument("tree decomposition is not valid for the graph");
    return NiceBuilder(td).build();
}

void write_decomposition(std::ostream &os, const TreeDecomposition &td) {
    os << td.tree_edges.size() << '\n';
    for (auto [a, b] : td.tree_edges)
        os << a << ' ' << b << '\n';
    for (const auto &bag : td.bags) {
        for (std::size_t i = 0; i < bag.size(); ++i)
            os << (i ? " " : "") << bag[i] + 1;
        os << '\n';
    }
}

TreeDecomposition parse_decomposition(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        if (!std::getline(in, line))
            return false;
        ++line_no;
        return true;
    };
    if (!next_line())
        throw ParseError("empty decomposition", 1);
    std::size_t edge_count = 0;
    try {
        edge_count = std::stoul(line);
    } catch (const std::exception &) {
        throw ParseError("expected tree-edge count", line_no);
    }
    TreeDecomposition td;
    for (std::size_t e = 0; e < edge_count; ++e) {
        if (!next_line())
            throw ParseError("missing tree edge", line_no + 1);
        std::istringstream ls(line);
        int a = 0, b = 0;
        if (!(ls >> a >> b))
            throw ParseError("malformed tree edge", line_no);
        td.tree_edges.emplace_back(a, b);
    }
    for (std::size_t t = 0; t <= edge_count; ++t) {
        if (!next_line())
            throw ParseError("missing bag line", line_no + 1);
        std::istringstream ls(line);
        std::vector<int> bag;
        int v = 0;
        while (ls >> v)
            bag.push_back(v - 1);
        if (!ls.eof())
            throw ParseError("malformed bag", line_no);
        td.bags.push_back(std::move(bag));
    }
    return td;
}

} // namespace ppm
