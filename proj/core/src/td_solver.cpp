#include "ppm/td_solver.hpp"

#include "ppm/error.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace ppm {

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<int> &key) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : key) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

template <typename Value>
using Table = std::unordered_map<std::vector<int>, Value, KeyHash>;

// Boolean and counting variants share the DP; only the semiring differs.
template <typename Value>
struct Semiring;

template <>
struct Semiring<bool> {
    static bool one() { return true; }
    static void add(bool &acc, bool v) { acc = acc || v; }
    static bool mul(bool a, bool b) { return a && b; }
};

template <>
struct Semiring<MatchCount> {
    static MatchCount one() { return 1; }
    static void add(MatchCount &acc, const MatchCount &v) { acc += v; }
    static MatchCount mul(const MatchCount &a, const MatchCount &b) { return a * b; }
};

// Check against a bag member at key position `slot`.
struct Check {
    std::size_t slot;
    const Constraint *constraint;
    bool introduced_is_first;
};

template <typename Value>
Value run_dp(const CspInstance &inst, const TreeDecomposition &td, TdStats *stats) {
    const Graph g = inst.constraint_graph();
    const NiceDecomposition nice = make_nice(g, td);
    if (stats) {
        stats->width = std::max(stats->width, td.width());
        stats->bags += nice.nodes.size();
    }
    if (inst.inconsistent())
        return Value{};

    using S = Semiring<Value>;
    // Eliminated variables carry no value; keys hold only active bag members.
    auto active_bag = [&](const NiceNode &node) {
        std::vector<int> out;
        for (int v : node.bag)
            if (!inst.eliminated(v + 1))
                out.push_back(v);
        return out;
    };

    std::vector<Table<Value>> tables(nice.nodes.size());
    for (std::size_t id = 0; id < nice.nodes.size(); ++id) {
        const NiceNode &node = nice.nodes[id];
        Table<Value> table;
        switch (node.kind) {
        case NiceKind::leaf:
            table.emplace(std::vector<int>{}, S::one());
            break;
        case NiceKind::introduce: {
            Table<Value> &child = tables[static_cast<std::size_t>(node.children[0])];
            const int var = node.vertex + 1;
            if (inst.eliminated(var)) {
                table = std::move(child);
                break;
            }
            const auto bag = active_bag(node);
            const auto pos = static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), node.vertex) - bag.begin());
            std::vector<Check> checks;
            for (int c : inst.incident(var)) {
                const Constraint &con = inst.constraints()[static_cast<std::size_t>(c)];
                const int other = (con.first == var ? con.second : con.first) - 1;
                auto it = std::lower_bound(bag.begin(), bag.end(), other);
                if (it == bag.end() || *it != other)
                    continue;
                auto slot = static_cast<std::size_t>(it - bag.begin());
                if (slot > pos)
                    --slot; // position within the child key
                checks.push_back({slot, &con, con.first == var});
            }
            const auto domain = inst.domain(var);
            for (auto &[key, value] : child) {
                for (int a : domain) {
                    bool ok = true;
                    for (const auto &chk : checks) {
                        const int b = key[chk.slot];
                        ok = chk.introduced_is_first ? inst.allows(*chk.constraint, a, b)
                                                     : inst.allows(*chk.constraint, b, a);
                        if (!ok)
                            break;
                    }
                    if (!ok)
                        continue;
                    std::vector<int> extended;
                    extended.reserve(key.size() + 1);
                    extended.insert(extended.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(pos));
                    extended.push_back(a);
                    extended.insert(extended.end(), key.begin() + static_cast<std::ptrdiff_t>(pos), key.end());
                    table.emplace(std::move(extended), value);
                }
            }
            child.clear();
            break;
        }
        case NiceKind::forget: {
            Table<Value> &child = tables[static_cast<std::size_t>(node.children[0])];
            if (inst.eliminated(node.vertex + 1)) {
                table = std::move(child);
                break;
            }
            const auto child_bag = active_bag(nice.nodes[static_cast<std::size_t>(node.children[0])]);
            const auto pos = static_cast<std::size_t>(
                std::lower_bound(child_bag.begin(), child_bag.end(), node.vertex) - child_bag.begin());
            for (auto &[key, value] : child) {
                std::vector<int> reduced(key);
                reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(pos));
                auto [it, inserted] = table.try_emplace(std::move(reduced), value);
                if (!inserted)
                    S::add(it->second, value);
            }
            child.clear();
            break;
        }
        case NiceKind::join: {
            Table<Value> &left = tables[static_cast<std::size_t>(node.children[0])];
            Table<Value> &right = tables[static_cast<std::size_t>(node.children[1])];
            const bool left_small = left.size() <= right.size();
            Table<Value> &small = left_small ? left : right;
            Table<Value> &large = left_small ? right : left;
            for (auto &[key, value] : small) {
                auto it = large.find(key);
                if (it != large.end())
                    table.emplace(key, S::mul(value, it->second));
            }
            left.clear();
            right.clear();
            break;
        }
        }
        if (stats)
            stats->table_entries = std::max(stats->table_entries, table.size());
        tables[id] = std::move(table);
        if constexpr (std::is_same_v<Value, bool>) {
            if (tables[id].empty())
                return false;
        }
    }
    const auto &root = tables[static_cast<std::size_t>(nice.root)];
    auto it = root.find(std::vector<int>{});
    return it == root.end() ? Value{} : it->second;
}

} // namespace

bool solve_decision(const CspInstance &inst, const TreeDecomposition &td, TdStats *stats) {
    return run_dp<bool>(inst, td, stats);
}

MatchCount solve_count(const CspInstance &inst, const TreeDecomposition &td, TdStats *stats) {
    return run_dp<MatchCount>(inst, td, stats);
}

bool treedp_contains(const Permutation &text, const Permutation &pattern, TdStats *stats) {
    if (pattern.size() > text.size())
        return false;
    const auto inst = build_csp(text, pattern);
    return solve_decision(inst, min_fill_decomposition(inst.constraint_graph()), stats);
}

MatchCount treedp_count(const Permutation &text, const Permutation &pattern, TdStats *stats) {
    if (pattern.size() > text.size())
        return 0;
    const auto inst = build_csp(text, pattern);
    return solve_count(inst, min_fill_decomposition(inst.constraint_graph()), stats);
}

std::vector<int> StripGuess::strip_of_indices(int k) const {
    std::vector<int> out(static_cast<std::size_t>(k));
    std::size_t leader = 0;
    for (int i = 1; i <= k; ++i) {
        while (leader + 1 < leaders.size() && leaders[leader + 1] <= i)
            ++leader;
        out[static_cast<std::size_t>(i - 1)] = strips[leader];
    }
    return out;
}

int auto_strip_count(int n) { return std::max(1, static_cast<int>(std::lround(std::pow(static_cast<double>(n), 0.25)))); }

std::vector<std::pair<int, int>> strip_bounds(int n, int strip_count) {
    if (strip_count < 1)
        throw InvalidArgument("strip count must be at least 1");
    std::vector<std::pair<int, int>> out;
    const int base = n / strip_count;
    const int extra = n % strip_count;
    int next = 1;
    for (int s = 1; s <= strip_count; ++s) {
        const int width = base + (s <= extra ? 1 : 0);
        out.emplace_back(next, next + width - 1);
        next += width;
    }
    return out;
}

void for_each_strip_guess(int k, int strip_count, const std::function<bool(const StripGuess &)> &visit) {
    if (k < 1)
        return;
    StripGuess guess;
    guess.strip_count = strip_count;
    // Leaders: 1 plus any subset of {2..k}; strips: increasing choice of |X| strips.
    for (unsigned long mask = 0; mask < (1ul << (k - 1)); ++mask) {
        guess.leaders = {1};
        for (int i = 2; i <= k; ++i)
            if (mask >> (i - 2) & 1)
                guess.leaders.push_back(i);
        const int size = static_cast<int>(guess.leaders.size());
        if (size > strip_count)
            continue;
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int j = 0; j < size; ++j)
            pick[static_cast<std::size_t>(j)] = j + 1;
        while (true) {
            guess.strips = pick;
            if (!visit(guess))
                return;
            int j = size - 1;
            while (j >= 0 && pick[static_cast<std::size_t>(j)] == strip_count - (size - 1 - j))
                --j;
            if (j < 0)
                break;
            ++pick[static_cast<std::size_t>(j)];
            for (int l = j + 1; l < size; ++l)
                pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
        }
    }
}

CspInstance restrict_to_guess(const CspInstance &inst, const StripGuess &guess) {
    const int k = inst.variable_count();
    const auto bounds = strip_bounds(inst.text().size(), guess.strip_count);
    const auto strip_of = guess.strip_of_indices(k);
    CspInstance out = inst;
    for (int var = 1; var <= k; ++var) {
        const auto [lo, hi] = bounds[static_cast<std::size_t>(strip_of[static_cast<std::size_t>(var - 1)] - 1)];
        std::vector<int> dom;
        for (int a : inst.domain(var))
            if (a >= lo && a <= hi)
                dom.push_back(a);
        out = out.with_domain(var, std::move(dom));
    }
    for (std::size_t j = 1; j < guess.leaders.size(); ++j)
        out = out.without_left_constraint(guess.leaders[j]);
    return out;
}

namespace {

template <typename Value, typename Accumulate>
void run_strips(const Permutation &text, const Permutation &pattern, std::optional<int> strip_count, TdStats *stats,
                Accumulate &&accumulate) {
    const int s = strip_count.value_or(auto_strip_count(text.size()));
    if (s < 1)
        throw InvalidArgument("strip count must be at least 1");
    if (pattern.size() > text.size())
        return;
    const auto base = build_csp(text, pattern);
    for_each_strip_guess(pattern.size(), s, [&](const StripGuess &guess) {
        if (stats)
            ++stats->guesses;
        const auto restricted = restrict_to_guess(base, guess);
        for (int var = 1; var <= restricted.variable_count(); ++var)
            if (restricted.domain(var).empty())
                return true;
        const auto td = min_fill_decomposition(restricted.constraint_graph());
        if constexpr (std::is_same_v<Value, bool>)
            return accumulate(solve_decision(restricted, td, stats));
        else
            return accumulate(solve_count(restricted, td, stats));
    });
}

} // namespace

bool solve_strips(const Permutation &text, const Permutation &pattern, std::optional<int> strip_count,
                  TdStats *stats) {
    bool found = false;
    run_strips<bool>(text, pattern, strip_count, stats, [&](bool ok) {
        found = ok;
        return !ok;
    });
    return found;
}

MatchCount count_strips(const Permutation &text, const Permutation &pattern, std::optional<int> strip_count,
                        TdStats *stats) {
    MatchCount total = 0;
    run_strips<MatchCount>(text, pattern, strip_count, stats, [&](const MatchCount &c) {
        total += c;
        return true;
    });
    return total;
}

} // namespace ppm
