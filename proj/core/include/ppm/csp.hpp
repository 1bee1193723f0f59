#pragma once

#include "ppm/graph.hpp"
#include "ppm/permutation.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace ppm {

/// Binary order constraint between variables `first < second` (pattern indices).
///
/// One constraint exists per edge of G_pi. `by_index` marks an index-path edge
/// (the L-constraint of `second`, R-constraint of `first`), `by_value` a
/// value-path edge; both may hold at once. The relation is never materialized:
/// (a, b) is allowed iff a and b are ordered like first/second by index and
/// tau(a), tau(b) are ordered like pi(first), pi(second) by value.
struct Constraint {
    int first = 0;
    int second = 0;
    bool by_index = false;
    bool by_value = false;

    friend bool operator==(const Constraint &, const Constraint &) = default;
};

/// Variable -> text index.
using Assignment = std::map<int, int>;

/// PPM as a binary CSP: variables x_1..x_k (pattern indices), domains are
/// sorted subsets of text indices, constraints follow G_pi.
///
/// Instances are values; the `with_*` helpers return modified copies.
class CspInstance {
  public:
    CspInstance(Permutation text, Permutation pattern);

    int variable_count() const noexcept { return pattern_.size(); }
    const Permutation &text() const noexcept { return text_; }
    const Permutation &pattern() const noexcept { return pattern_; }

    std::span<const int> domain(int var) const { return domains_[index(var)]; }
    bool eliminated(int var) const { return eliminated_[index(var)] != 0; }
    int active_variable_count() const;

    /// Set when simplification detected a violated constraint.
    bool inconsistent() const noexcept { return inconsistent_; }

    const std::vector<Constraint> &constraints() const noexcept { return constraints_; }
    /// Constraint indices incident to `var`.
    std::span<const int> incident(int var) const { return incident_[index(var)]; }
    const Constraint *find_constraint(int i, int j) const;

    /// Evaluates the relation of `c` with x_{c.first} = a, x_{c.second} = b.
    bool allows(const Constraint &c, int a, int b) const {
        return a < b && ((text_.at(a) < text_.at(b)) == (pattern_.at(c.first) < pattern_.at(c.second)));
    }

    /// Constraint graph over all k variables (vertex v = variable v+1).
    Graph constraint_graph() const;

    CspInstance with_domain(int var, std::vector<int> sorted_domain) const;
    /// Drops the index-path part of the edge (var-1, var). If that edge is also a
    /// value-path edge the constraint stays, since its value order is still needed.
    CspInstance without_left_constraint(int var) const;

  private:
    friend CspInstance assign_and_simplify(const CspInstance &inst, const Assignment &asg);

    std::size_t index(int var) const { return static_cast<std::size_t>(var - 1); }
    void rebuild_incidence();

    Permutation text_;
    Permutation pattern_;
    std::vector<std::vector<int>> domains_;
    std::vector<char> eliminated_;
    std::vector<Constraint> constraints_;
    std::vector<std::vector<int>> incident_;
    bool inconsistent_ = false;
};

CspInstance build_csp(const Permutation &text, const Permutation &pattern);

/// Throws InvalidArgument if (i, j) is not a constrained pair. Order of i, j is free.
bool constraint_satisfied(const CspInstance &inst, int i, int j, int a, int b);

/// Removes the assigned variables, filters neighbouring domains, and keeps only
/// constraints among unassigned variables. A violated constraint (or a value
/// outside its domain, or a repeated value) gives an instance with
/// `inconsistent()` set and every domain empty.
CspInstance assign_and_simplify(const CspInstance &inst, const Assignment &asg);

} // namespace ppm
