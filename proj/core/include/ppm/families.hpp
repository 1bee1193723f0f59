#pragma once

#include "ppm/graph.hpp"
#include "ppm/permutation.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ppm {

/// Branch sets are lists of host vertices (0-based, vertex v = text index v+1);
/// `required` lists pairs of branch-set ids that must touch.
struct MinorCertificate {
    std::vector<std::vector<int>> branch_sets;
    std::vector<std::pair<int, int>> required;
};

/// Branch sets non-empty, disjoint, connected in host, and every required pair
/// witnessed by a host edge.
bool verify_minor_certificate(const Graph &host, const MinorCertificate &cert);

/// Permutation whose index path visits `index_order` and value path visits
/// `value_order`, both listing the same abstract vertices 0..N-1.
Permutation permutation_from_paths(const std::vector<int> &index_order, const std::vector<int> &value_order);

struct GridWitness {
    Permutation permutation;
    MinorCertificate certificate; // branch set (i-1)*2k + (j-1) is z_{i,j}
    int k = 0;
};

/// 2-track permutation of length 2k^2 containing a k x 2k grid. k must be even and positive.
GridWitness gen_grid_two_track(int k);

struct SplitSequence {
    int n = 0;
    std::vector<Permutation> splits; // sigma_1 .. sigma_{m-1}
    std::vector<int> split_points;   // p(sigma_i)
    std::vector<Permutation> chain;  // pi_1 = id .. pi_m

    int m() const { return static_cast<int>(chain.size()); }
};

/// Unique p with sigma(1..p) and sigma(p+1..n) increasing; nothing for the identity
/// or a non-split permutation.
std::optional<int> split_point(const Permutation &sigma);

/// At most ceil(log2 n) split steps from the identity to pi (radix-style halving on target positions).
SplitSequence split_decomposition(const Permutation &pi);

/// The Hamiltonian paths of all chain members, as a graph on 0..n-1.
Graph hamiltonian_union(const SplitSequence &seq);

struct ThreeTrackWitness {
    Permutation host;
    SplitSequence splits;
    MinorCertificate certificate; // branch set c-1 is C_c
    std::vector<int> color_of_x;  // color of x_{i,j} at (i-1)*n + (j-1)
};

/// 3-track host permutation with a minor model of the union of the chain's paths.
/// Requires |pi| >= 2.
ThreeTrackWitness gen_three_track(const Permutation &pi);

enum class Monotone { increasing, decreasing };

/// t-increasing: LDS <= t. t-decreasing: LIS <= t.
bool detect_t_monotone(const Permutation &sigma, int t, Monotone direction);

struct TwoMonotonePartition {
    std::vector<int> increasing; // 1-based indices
    std::vector<int> decreasing;
};

/// Split-graph recognition on the inversion graph.
std::optional<TwoMonotonePartition> detect_2_monotone(const Permutation &sigma);

} // namespace ppm
