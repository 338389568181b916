#pragma once

#include <functional>
#include <gmpxx.h>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rmt {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// C_k = binom(2k, k)/(k+1), exact.
BigInt catalan(int k);

/// (m-1)!! for even m >= 0 (number of pairings of [m]); 1 for m = 0.
BigInt double_factorial_odd(int m);

/// Perfect matching of {0, .., n-1} stored as an involution (partner array).
struct Pairing {
    std::vector<int> partner;

    int n() const { return static_cast<int>(partner.size()); }
    /// Pairs (i, j) with i < j, in increasing i (1-based in printed form elsewhere).
    std::vector<std::pair<int, int>> pairs() const;
    static Pairing from_pairs(int n, std::span<const std::pair<int, int>> pairs);
};

/// All pairings of [n] in "smallest unpaired element chooses a partner" order.
/// Odd n yields nothing. Budget n <= 24 (throws resource_error above).
void for_each_pairing(int n, const std::function<void(const Pairing&)>& visit);

/// Non-crossing pairings only, generated directly by the recursive structure
/// (first element pairs at an even distance, inner/outer blocks independent).
void for_each_nc_pairing(int n, const std::function<void(const Pairing&)>& visit);

long long count_pairings(int n);
long long count_nc_pairings(int n);

/// Crossing-quadruple definition: no i < j < k < l with (i,k), (j,l) paired.
bool is_noncrossing(const Pairing& p);
/// Iterated removal of cyclically adjacent pairs (with (first, last) counting
/// as neighbors); must agree with is_noncrossing.
bool is_noncrossing_by_reduction(const Pairing& p);

struct GenusInfo {
    int cycles; ///< #(gamma pi), gamma = (0 1 ... m-1) as one cycle
    int genus;  ///< (m/2 + 1 - cycles)/2
};
GenusInfo genus(const Pairing& p);

/// Exact E[tr A^m] for GUE(N) as sum_g coeff[g] N^{-2g}.
struct MomentPolynomial {
    std::vector<BigInt> genus_coeffs;

    BigRat evaluate(const BigRat& n) const; ///< plug in a numeric dimension
    bool operator==(const MomentPolynomial&) const = default;
    std::string to_json() const; ///< {"genus_coeffs":[...]}
};

/// Genus expansion by full pairing enumeration; m even, m <= 24.
MomentPolynomial gue_moment_exact(int m);

/// Wick formula: sum over pairings of products of covariances; 0 for odd length.
/// Symbols are arbitrary integers, cov must be symmetric.
double wick_moment(std::span<const int> word, const std::function<double(int, int)>& cov);

/// Partition of {0, .., n-1} into disjoint blocks.
struct Partition {
    std::vector<std::vector<int>> blocks;

    int n() const;
    int block_of(int element) const;
};

/// ker i: elements grouped by equal values, blocks ordered by first occurrence.
Partition kernel_of_index(std::span<const int> tuple);

/// All set partitions of [n]; budget n <= 12.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

/// Graph on the blocks of sigma with edges from cyclically consecutive
/// positions; multi-edges collapsed, loops kept. Tree test = connected and
/// #V == #E + 1 (a loop counts as an edge, so loops always fail).
bool graph_is_tree(const Partition& sigma);

/// Number of sigma in P(m) whose graph is a tree and whose closed walk
/// 1 -> 2 -> ... -> m -> 1 uses every edge exactly twice.
long long count_tree_walk_partitions(int m);

/// # non-crossing pairings of [m] that pair equal colors only
/// (the N -> infinity limit of E tr(A_{i_1} ... A_{i_m}) for independent GUEs).
long long mixed_gue_moment_limit(std::span<const int> colors);

/// Residual of the centering identity: phi[(s_{i_1}^{p_1} - phi) ... ] expanded
/// by inclusion-exclusion over the centered factors. Colors must alternate.
/// Zero exactly when phi factorizes the free way.
double freeness_residual(const std::function<double(std::span<const int>)>& phi,
                         std::span<const int> colors, std::span<const int> powers);

} // namespace rmt
