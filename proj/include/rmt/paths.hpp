#pragma once

#include <functional>
#include <vector>

#include "rmt/combinatorics.hpp"
#include "rmt/ensembles.hpp"

namespace rmt {

/// Nearest-neighbor random walk on Z with per-site up-probability p(i)
/// (down-probability 1 - p(i)), run for `horizon` steps; n walkers start at
/// strictly decreasing positions `start` and are tested against targets
/// `target` under the identity assignment walker i -> target[i].
struct WalkSpec {
    std::function<BigRat(long)> prob_up; ///< defaults to the symmetric walk
    int horizon = 1;
    std::vector<long> start;
    std::vector<long> target;

    BigRat up(long site) const { return prob_up ? prob_up(site) : BigRat(1, 2); }
};

/// Single-walk transition probabilities P_t(start[i], target[j]), exact.
std::vector<std::vector<BigRat>> transition_matrix(const WalkSpec& spec);

/// det P_t(start[i], target[j]) — the non-crossing probability by determinant.
BigRat km_determinant(const WalkSpec& spec);

/// The same probability by exhaustive enumeration of all joint step choices,
/// requiring strict ordering at every intermediate time. Budget n * horizon <= 26.
BigRat km_enumerate(const WalkSpec& spec);

/// Finite weighted DAG for the path-counting determinant.
struct WeightedDag {
    int vertices = 0;
    struct Edge {
        int from, to;
        BigRat weight;
    };
    std::vector<Edge> edges;
};

/// Topological order; throws parameter_error on a directed cycle.
std::vector<int> topological_order(const WeightedDag& dag);

/// Path weights m(a_i, b_j) = sum over directed paths of edge-weight products.
std::vector<std::vector<BigRat>> gv_path_weights(const WeightedDag& dag, const std::vector<int>& a,
                                                 const std::vector<int>& b);

BigRat gv_determinant(const WeightedDag& dag, const std::vector<int>& a, const std::vector<int>& b);

/// Signed sum over vertex-disjoint path systems (exhaustive; n <= 4 and a path
/// budget guard).
BigRat gv_vertex_disjoint_sum(const WeightedDag& dag, const std::vector<int>& a, const std::vector<int>& b);

/// det of the (n+1)x(n+1) Hankel matrix (C_{i+j})_{i,j=0..n}; n <= 12.
BigInt catalan_hankel_det(int n);

/// Per-step sorted-eigenvalue scan of a matrix random walk: exact collisions
/// (zero spacings) and the minimal spacing over the whole trajectory.
struct CrossingReport {
    int collisions = 0;
    double min_spacing = 0;
};
CrossingReport dyson_crossing_check(const std::vector<MatrixSample>& walk);

} // namespace rmt
