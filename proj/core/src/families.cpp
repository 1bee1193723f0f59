#include "ppm/families.hpp"

#include "ppm/error.hpp"

#include <algorithm>
#include <numeric>

namespace ppm {

bool verify_minor_certificate(const Graph &host, const MinorCertificate &cert) {
    const int n = host.vertex_count();
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < cert.branch_sets.size(); ++b) {
        const auto &set = cert.branch_sets[b];
        if (set.empty())
            return false;
        for (int v : set) {
            if (v < 0 || v >= n || owner[static_cast<std::size_t>(v)] != -1)
                return false;
            owner[static_cast<std::size_t>(v)] = static_cast<int>(b);
        }
        if (!host.is_connected_subset(set))
            return false;
    }
    const auto sets = static_cast<int>(cert.branch_sets.size());
    for (auto [a, b] : cert.required) {
        if (a < 0 || b < 0 || a >= sets || b >= sets || a == b)
            return false;
        bool seen = false;
        for (int u : cert.branch_sets[static_cast<std::size_t>(a)]) {
            for (int w : host.neighbors(u))
                if (owner[static_cast<std::size_t>(w)] == b) {
                    seen = true;
                    break;
                }
            if (seen)
                break;
        }
        if (!seen)
            return false;
    }
    return true;
}

Permutation permutation_from_paths(const std::vector<int> &index_order, const std::vector<int> &value_order) {
    const auto n = index_order.size();
    if (value_order.size() != n)
        throw InvalidArgument("paths have different lengths");
    std::vector<int> value_pos(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
        const int v = value_order[p];
        if (v < 0 || static_cast<std::size_t>(v) >= n || value_pos[static_cast<std::size_t>(v)] != 0)
            throw InvalidArgument("value path is not a permutation of the vertices");
        value_pos[static_cast<std::size_t>(v)] = static_cast<int>(p) + 1;
    }
    std::vector<int> values;
    values.reserve(n);
    for (int v : index_order) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw InvalidArgument("index path names an unknown vertex");
        values.push_back(value_pos[static_cast<std::size_t>(v)]);
    }
    return Permutation(std::move(values));
}

GridWitness gen_grid_two_track(int k) {
    if (k <= 0 || k % 2 != 0)
        throw InvalidArgument("grid construction needs a positive even k");
    const int kk = k * k;
    auto x = [](int t) { return t - 1; };
    auto y = [kk](int t) { return kk + t - 1; };

    std::vector<int> h1, h2;
    for (int t = 1; t < kk; t += 2)
        h1.insert(h1.end(), {x(t), y(t), y(t + 1), x(t + 1)});
    for (int t = 1; t <= k; ++t)
        h2.push_back(x(t));
    for (int t = 1; 2 * t <= kk - k; ++t)
        h2.insert(h2.end(), {y(2 * t - 1), x(k + 2 * t - 1), x(k + 2 * t), y(2 * t)});
    for (int t = kk - k + 1; t <= kk; ++t)
        h2.push_back(y(t));

    GridWitness out{permutation_from_paths(h1, h2), {}, k};
    // Abstract vertex -> host vertex (index - 1).
    std::vector<int> host_of(static_cast<std::size_t>(2 * kk));
    for (std::size_t p = 0; p < h1.size(); ++p)
        host_of[static_cast<std::size_t>(h1[p])] = static_cast<int>(p);

    auto z = [&](int i, int j) { return j % 2 == 1 ? x((j / 2) * k + i) : y((j / 2 - 1) * k + i); };
    auto id = [k](int i, int j) { return (i - 1) * 2 * k + (j - 1); };
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= 2 * k; ++j)
            out.certificate.branch_sets.push_back({host_of[static_cast<std::size_t>(z(i, j))]});
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= 2 * k; ++j) {
            if (i < k)
                out.certificate.required.emplace_back(id(i, j), id(i + 1, j));
            if (j < 2 * k)
                out.certificate.required.emplace_back(id(i, j), id(i, j + 1));
        }
    return out;
}

std::optional<int> split_point(const Permutation &sigma) {
    std::optional<int> p;
    for (int i = 1; i < sigma.size(); ++i)
        if (sigma.at(i) > sigma.at(i + 1)) {
            if (p)
                return std::nullopt;
            p = i;
        }
    return p;
}

SplitSequence split_decomposition(const Permutation &pi) {
    const int n = pi.size();
    SplitSequence seq;
    seq.n = n;
    seq.chain.push_back(Permutation::identity(n));
    if (pi.is_identity())
        return seq;
    std::vector<int> current(static_cast<std::size_t>(n));
    std::iota(current.begin(), current.end(), 1);
    // Stable partition by successive bits of each value's final position.
    for (int bit = 0; (1 << bit) < n; ++bit) {
        std::vector<int> front, back;
        for (int pos = 1; pos <= n; ++pos) {
            const int target = pi.index_of(current[static_cast<std::size_t>(pos - 1)]) - 1;
            (target >> bit & 1 ? back : front).push_back(pos);
        }
        std::vector<int> sigma(front);
        sigma.insert(sigma.end(), back.begin(), back.end());
        Permutation s(sigma);
        if (s.is_identity())
            continue;
        seq.split_points.push_back(static_cast<int>(front.size()));
        seq.chain.push_back(seq.chain.back().compose(s));
        seq.splits.push_back(std::move(s));
        const auto next = seq.chain.back().values();
        current.assign(next.begin(), next.end());
    }
    return seq;
}

Graph hamiltonian_union(const SplitSequence &seq) {
    Graph g(seq.n);
    for (const auto &p : seq.chain)
        for (int j = 1; j < seq.n; ++j)
            g.add_edge(p.at(j) - 1, p.at(j + 1) - 1);
    return g;
}

ThreeTrackWitness gen_three_track(const Permutation &pi) {
    const int n = pi.size();
    if (n < 2)
        throw InvalidArgument("three-track construction needs a permutation of length at least 2");
    ThreeTrackWitness out{pi, split_decomposition(pi), {}, {}};
    const auto &seq = out.splits;
    const int m = seq.m();

    // Abstract ids: x_{i,j} -> (i-1)n + j-1; y/z_{i,j} -> mn + (i-1)n + j-1 (j <= p means y).
    auto x = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    auto yz = [n, m](int i, int j) { return m * n + (i - 1) * n + (j - 1); };
    const int total = m * n + (m - 1) * n;

    std::vector<int> sc(static_cast<std::size_t>(total), -1), sc_inv(static_cast<std::size_t>(total), -1);
    auto link = [&](int a, int b) {
        sc[static_cast<std::size_t>(a)] = b;
        sc_inv[static_cast<std::size_t>(b)] = a;
    };
    for (int i = 1; i < m; ++i) {
        const Permutation inv = seq.splits[static_cast<std::size_t>(i - 1)].inverse();
        for (int j = 1; j <= n; ++j) {
            link(x(i, j), yz(i, inv.at(j)));
            link(yz(i, j), x(i + 1, j));
        }
    }

    std::vector<int> p1, p2;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            p1.push_back(x(i, j));
            if (i < m)
                p1.push_back(sc[static_cast<std::size_t>(x(i, j))]);
        }
    for (int j = 1; j <= n; ++j)
        p2.push_back(x(1, j));
    for (int i = 2; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            p2.push_back(x(i, j));
            p2.push_back(sc_inv[static_cast<std::size_t>(x(i, j))]);
        }

    out.host = permutation_from_paths(p1, p2);
    std::vector<int> host_of(static_cast<std::size_t>(total));
    for (std::size_t p = 0; p < p1.size(); ++p)
        host_of[static_cast<std::size_t>(p1[p])] = static_cast<int>(p);

    // The host's incidence graph must be exactly P1 union P2.
    Graph abstract(total);
    for (const auto *path : {&p1, &p2})
        for (std::size_t p = 0; p + 1 < path->size(); ++p)
            abstract.add_edge(host_of[static_cast<std::size_t>((*path)[p])],
                              host_of[static_cast<std::size_t>((*path)[p + 1])]);
    const IncidenceGraph host_graph(out.host);
    const Graph &incidence = host_graph.graph();
    bool same = incidence.edge_count() == abstract.edge_count();
    for (auto [u, v] : abstract.edges())
        same = same && incidence.has_edge(u, v);
    if (!same)
        throw Error("three-track host does not realize the constructed paths");

    out.color_of_x.assign(static_cast<std::size_t>(m * n), 0);
    for (int c = 1; c <= n; ++c) {
        std::vector<int> branch;
        int v = x(1, c);
        for (int step = 0; step <= 2 * m - 2; ++step) {
            branch.push_back(host_of[static_cast<std::size_t>(v)]);
            if (v < m * n)
                out.color_of_x[static_cast<std::size_t>(v)] = c;
            if (step < 2 * m - 2)
                v = sc[static_cast<std::size_t>(v)];
        }
        out.certificate.branch_sets.push_back(std::move(branch));
    }
    const Graph target = hamiltonian_union(seq);
    for (auto [a, b] : target.edges())
        out.certificate.required.emplace_back(a, b);
    return out;
}

bool detect_t_monotone(const Permutation &sigma, int t, Monotone direction) {
    if (t < 1)
        throw InvalidArgument("t must be at least 1");
    const auto [lis, lds] = lis_lds(sigma);
    return (direction == Monotone::increasing ? lds : lis) <= t;
}

std::optional<TwoMonotonePartition> detect_2_monotone(const Permutation &sigma) {
    const int n = sigma.size();
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (sigma.at(i) > sigma.at(j)) {
                ++degree[static_cast<std::size_t>(i - 1)];
                ++degree[static_cast<std::size_t>(j - 1)];
            }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    });
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (degree[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >= i)
            m = i + 1;
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i)
        (i < m ? head : tail) += degree[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    if (head != static_cast<long long>(m) * (m - 1) + tail)
        return std::nullopt;

    TwoMonotonePartition out;
    for (int i = 0; i < n; ++i)
        (i < m ? out.decreasing : out.increasing).push_back(order[static_cast<std::size_t>(i)] + 1);
    std::sort(out.increasing.begin(), out.increasing.end());
    std::sort(out.decreasing.begin(), out.decreasing.end());
    return out;
}

} // namespace ppm
