#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rmt/ensembles.hpp"
#include "rmt/rng.hpp"

namespace rmt {

/// Standard Young tableau: rows increase left to right, columns top to bottom,
/// entries a permutation of 1..n.
struct YoungTableau {
    std::vector<std::vector<int>> rows;

    std::vector<int> shape() const;
    int size() const;
    bool is_standard() const;
    std::string to_json() const; ///< JSON array of rows
    bool operator==(const YoungTableau&) const = default;
};

/// Row-insertion correspondence sigma -> (P, Q): P is the insertion tableau,
/// Q records the cell created at each step. shape(P) = shape(Q) and the first
/// row of P has length lis(sigma).
std::pair<YoungTableau, YoungTableau> rsk(std::span<const int> perm);

/// Inverse bijection; requires shape(P) = shape(Q) and both standard.
std::vector<int> rsk_inverse(const YoungTableau& p, const YoungTableau& q);

/// Longest increasing subsequence length, patience-sorting style O(n log n).
int lis(std::span<const int> perm);
/// Longest decreasing subsequence (lis under the reversed comparison).
int lds(std::span<const int> perm);

/// Exhaustively scan S_{n^2+1} for permutations without a monotone subsequence
/// of length n+1; returns the number of violations (always 0). Budget n <= 3.
long long erdos_szekeres_scan(int n);

/// shape -> number of standard tableaux, by exhaustive growth; n <= 8.
std::map<std::vector<int>, long long> tableau_census(int n);

/// Fisher-Yates permutation from the given stream (values 1..n).
std::vector<int> random_permutation(int n, RandomStream& rng);

/// Monte Carlo sample of (L_n - 2 sqrt(n)) / n^{1/6} over uniform permutations.
std::vector<double> bdj_statistic_mc(int n, int trials, std::uint64_t seed = kDefaultSeed);

} // namespace rmt
