#include "ppm/hardness.hpp"

#include "ppm/error.hpp"
#include "ppm/families.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

namespace ppm {

void PsiInstance::check() const {
    if (static_cast<int>(class_sizes.size()) != h.vertex_count())
        throw InvalidArgument("need one class per vertex of H");
    int total = 0;
    for (int s : class_sizes) {
        if (s < 1)
            throw InvalidArgument("classes must be non-empty");
        total += s;
    }
    if (total != g.vertex_count())
        throw InvalidArgument("class sizes do not add up to |V(G)|");
    for (auto [u, v] : g.edges())
        if (class_of(u) == class_of(v))
            throw InvalidArgument("G has an edge inside class " + std::to_string(class_of(u) + 1));
}

int PsiInstance::class_of(int vertex) const {
    int start = 0;
    for (std::size_t c = 0; c < class_sizes.size(); ++c) {
        start += class_sizes[c];
        if (vertex < start)
            return static_cast<int>(c);
    }
    throw InvalidArgument("vertex outside every class");
}

Graph parse_edge_list(std::string_view text, int vertex_count) {
    Graph g(vertex_count);
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a))
            continue;
        if (!(fields >> b) || (fields >> extra))
            throw ParseError("expected two vertices", line_no);
        auto vertex = [&](const std::string &s) {
            int v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1 || v > vertex_count)
                throw ParseError("bad vertex '" + s + "'", line_no);
            return v - 1;
        };
        const int u = vertex(a), v = vertex(b);
        if (u == v)
            throw ParseError("self-loop", line_no);
        g.add_edge(u, v);
    }
    return g;
}

std::vector<int> parse_class_sizes(std::string_view text) {
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 1)
            throw ParseError("bad class size '" + tok + "'", out.size() + 1);
        out.push_back(v);
    }
    if (out.empty())
        throw ParseError("no class sizes given", 0);
    return out;
}

PsiInstance remove_intra_class_edges(const PsiInstance &psi) {
    PsiInstance out{Graph(psi.g.vertex_count()), psi.h, psi.class_sizes};
    for (auto [u, v] : psi.g.edges())
        if (psi.class_of(u) != psi.class_of(v))
            out.g.add_edge(u, v);
    return out;
}

namespace {

enum class Kind { anchor, a, b, c, d, cell };

// Point of a tilted grid: row pair (a, b) and column pair (c, d) per vertex,
// cell points (col, row) for the diagonal and both orientations of every edge.
struct Label {
    Kind kind;
    int col = 0;
    int row = 0;
    friend auto operator<=>(const Label &, const Label &) = default;
};

struct TiltedGrid {
    Permutation perm;
    std::vector<Label> label_of_index; // 0-based index
};

TiltedGrid tilted_grid(const Graph &g) {
    const int n = g.vertex_count();
    auto has_cell = [&](int t, int u) { return t == u || g.has_edge(t, u); };
    std::vector<Label> labels;
    std::map<Label, int> id;
    auto vertex = [&](Label l) {
        auto [it, inserted] = id.try_emplace(l, static_cast<int>(labels.size()));
        if (inserted)
            labels.push_back(l);
        return it->second;
    };

    std::vector<int> x_order, y_order;
    x_order.push_back(vertex({Kind::anchor}));
    for (int t = 0; t < n; ++t) {
        x_order.push_back(vertex({Kind::c, t}));
        x_order.push_back(vertex({Kind::d, t}));
    }
    for (int t = 0; t < n; ++t) {
        x_order.push_back(vertex({Kind::a, t}));
        for (int u = 0; u < n; ++u)
            if (has_cell(t, u))
                x_order.push_back(vertex({Kind::cell, t, u}));
        x_order.push_back(vertex({Kind::b, t}));
    }
    // Bottom to top: rows n-1 .. 0, then the first row.
    for (int u = n - 1; u >= 0; --u) {
        y_order.push_back(id.at({Kind::c, u}));
        for (int t = 0; t < n; ++t)
            if (has_cell(t, u))
                y_order.push_back(id.at({Kind::cell, t, u}));
        y_order.push_back(id.at({Kind::d, u}));
    }
    y_order.push_back(id.at({Kind::anchor}));
    for (int t = 0; t < n; ++t) {
        y_order.push_back(id.at({Kind::b, t}));
        y_order.push_back(id.at({Kind::a, t}));
    }

    std::vector<Label> by_index;
    for (int v : x_order)
        by_index.push_back(labels[static_cast<std::size_t>(v)]);
    return {permutation_from_paths(x_order, y_order), std::move(by_index)};
}

} // namespace

PppmInstance psi_to_pppm(const PsiInstance &psi) {
    psi.check();
    const TiltedGrid pattern = tilted_grid(psi.h);
    const TiltedGrid text = tilted_grid(psi.g);

    std::map<Label, int> pattern_index;
    for (std::size_t i = 0; i < pattern.label_of_index.size(); ++i)
        pattern_index.emplace(pattern.label_of_index[i], static_cast<int>(i) + 1);
    const int anchor = pattern_index.at({Kind::anchor});

    PppmInstance out{text.perm, pattern.perm, {}};
    for (const Label &l : text.label_of_index) {
        Label mapped = l;
        if (l.kind != Kind::anchor) {
            mapped.col = psi.class_of(l.col);
            mapped.row = l.kind == Kind::cell ? psi.class_of(l.row) : 0;
        }
        auto it = pattern_index.find(mapped);
        out.colors.push_back(it == pattern_index.end() ? anchor : it->second);
    }
    return out;
}

bool solve_psi_brute(const PsiInstance &psi) {
    psi.check();
    const int k = psi.h.vertex_count();
    std::vector<int> start(static_cast<std::size_t>(k) + 1, 0);
    for (int c = 0; c < k; ++c)
        start[static_cast<std::size_t>(c) + 1] = start[static_cast<std::size_t>(c)] + psi.class_sizes[static_cast<std::size_t>(c)];
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::function<bool(int)> choose = [&](int c) {
        if (c == k)
            return true;
        for (int v = start[static_cast<std::size_t>(c)]; v < start[static_cast<std::size_t>(c) + 1]; ++v) {
            bool ok = true;
            for (int d : psi.h.neighbors(c))
                if (d < c && !psi.g.has_edge(v, pick[static_cast<std::size_t>(d)])) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            pick[static_cast<std::size_t>(c)] = v;
            if (choose(c + 1))
                return true;
        }
        return false;
    };
    return choose(0);
}

MatchCount count_colorful(const PppmInstance &inst, const CountBackend &backend) {
    inst.check();
    const int k = inst.pattern.size();
    if (k > 24)
        throw LimitExceeded("inclusion-exclusion over " + std::to_string(k) + " colors");
    std::vector<char> present(static_cast<std::size_t>(k) + 1, 0);
    for (int c : inst.colors)
        present[static_cast<std::size_t>(c)] = 1;
    // A color missing from the text makes every term cancel.
    if (std::count(present.begin() + 1, present.end(), 1) != k)
        return 0;

    MatchCount total = 0;
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        std::vector<int> kept;
        for (int a = 1; a <= inst.text.size(); ++a)
            if (mask >> (inst.color_of(a) - 1) & 1)
                kept.push_back(inst.text.at(a));
        MatchCount term = 0;
        if (static_cast<int>(kept.size()) >= k)
            term = backend(from_ranks(kept), inst.pattern);
        const int missing = k - std::popcount(mask);
        if (missing % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

} // namespace ppm
