#include "ppm/csp.hpp"

#include "ppm/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ppm {

CspInstance::CspInstance(Permutation text, Permutation pattern)
    : text_(std::move(text)), pattern_(std::move(pattern)) {
    const int k = pattern_.size();
    const int n = text_.size();
    std::vector<int> full(static_cast<std::size_t>(n));
    std::iota(full.begin(), full.end(), 1);
    domains_.assign(static_cast<std::size_t>(k), full);
    eliminated_.assign(static_cast<std::size_t>(k), 0);

    std::map<std::pair<int, int>, std::size_t> where;
    auto add = [&](int i, int j, bool by_index) {
        const auto key = std::make_pair(std::min(i, j), std::max(i, j));
        auto [it, inserted] = where.try_emplace(key, constraints_.size());
        if (inserted)
            constraints_.push_back({key.first, key.second, false, false});
        auto &c = constraints_[it->second];
        (by_index ? c.by_index : c.by_value) = true;
    };
    for (int i = 1; i < k; ++i)
        add(i, i + 1, true);
    for (int v = 1; v < k; ++v)
        add(pattern_.index_of(v), pattern_.index_of(v + 1), false);
    rebuild_incidence();
}

void CspInstance::rebuild_incidence() {
    incident_.assign(static_cast<std::size_t>(variable_count()), {});
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
        incident_[index(constraints_[c].first)].push_back(static_cast<int>(c));
        incident_[index(constraints_[c].second)].push_back(static_cast<int>(c));
    }
}

int CspInstance::active_variable_count() const {
    return static_cast<int>(std::count(eliminated_.begin(), eliminated_.end(), 0));
}

const Constraint *CspInstance::find_constraint(int i, int j) const {
    if (i < 1 || j < 1 || i > variable_count() || j > variable_count())
        return nullptr;
    const int lo = std::min(i, j), hi = std::max(i, j);
    for (int c : incident(lo)) {
        const auto &con = constraints_[static_cast<std::size_t>(c)];
        if (con.first == lo && con.second == hi)
            return &con;
    }
    return nullptr;
}

Graph CspInstance::constraint_graph() const {
    Graph g(variable_count());
    for (const auto &c : constraints_)
        g.add_edge(c.first - 1, c.second - 1);
    return g;
}

CspInstance CspInstance::with_domain(int var, std::vector<int> sorted_domain) const {
    CspInstance copy(*this);
    copy.domains_[index(var)] = std::move(sorted_domain);
    return copy;
}

CspInstance CspInstance::without_left_constraint(int var) const {
    CspInstance copy(*this);
    auto &cs = copy.constraints_;
    for (auto it = cs.begin(); it != cs.end(); ++it) {
        if (it->first == var - 1 && it->second == var && it->by_index) {
            it->by_index = false;
            if (!it->by_value)
                cs.erase(it);
            break;
        }
    }
    copy.rebuild_incidence();
    return copy;
}

CspInstance build_csp(const Permutation &text, const Permutation &pattern) { return CspInstance(text, pattern); }

bool constraint_satisfied(const CspInstance &inst, int i, int j, int a, int b) {
    const Constraint *c = inst.find_constraint(i, j);
    if (c == nullptr)
        throw InvalidArgument("variables x_" + std::to_string(i) + " and x_" + std::to_string(j) +
                              " share no constraint");
    if (a < 1 || b < 1 || a > inst.text().size() || b > inst.text().size())
        throw InvalidArgument("value outside the text index range");
    return i < j ? inst.allows(*c, a, b) : inst.allows(*c, b, a);
}

CspInstance assign_and_simplify(const CspInstance &inst, const Assignment &asg) {
    CspInstance out(inst);
    auto fail = [&] {
        out.inconsistent_ = true;
        for (auto &d : out.domains_)
            d.clear();
        return out;
    };

    std::set<int> used;
    for (const auto &[var, value] : asg) {
        if (var < 1 || var > inst.variable_count())
            throw InvalidArgument("assignment names unknown variable x_" + std::to_string(var));
        if (inst.eliminated(var))
            throw InvalidArgument("variable x_" + std::to_string(var) + " was already eliminated");
        const auto dom = inst.domain(var);
        if (!std::binary_search(dom.begin(), dom.end(), value) || !used.insert(value).second)
            return fail();
    }

    for (const auto &c : inst.constraints()) {
        auto a = asg.find(c.first);
        auto b = asg.find(c.second);
        if (a != asg.end() && b != asg.end()) {
            if (!inst.allows(c, a->second, b->second))
                return fail();
        } else if (a != asg.end()) {
            auto &d = out.domains_[out.index(c.second)];
            std::erase_if(d, [&](int v) { return !inst.allows(c, a->second, v); });
        } else if (b != asg.end()) {
            auto &d = out.domains_[out.index(c.first)];
            std::erase_if(d, [&](int v) { return !inst.allows(c, v, b->second); });
        }
    }

    for (const auto &[var, value] : asg) {
        out.eliminated_[out.index(var)] = 1;
        out.domains_[out.index(var)].clear();
    }
    std::erase_if(out.constraints_, [&](const Constraint &c) { return asg.count(c.first) || asg.count(c.second); });
    out.rebuild_incidence();
    return out;
}

} // namespace ppm
