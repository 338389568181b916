#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>

#include "rmt/combinatorics.hpp"
#include "rmt/errors.hpp"
#include "rmt/rsk.hpp"

using namespace rmt;

namespace {

// subset-scan LIS, independent of patience sorting
int lis_brute(const std::vector<int>& p) {
    int n = static_cast<int>(p.size()), best = 0;
    for (unsigned m = 1; m < (1u << n); ++m) {
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (m & (1u << i)) sub.push_back(p[i]);
        if (std::is_sorted(sub.begin(), sub.end()) && static_cast<int>(sub.size()) > best) best = static_cast<int>(sub.size());
    }
    return best;
}

// hook length count of standard tableaux of a shape
BigInt hook_count(const std::vector<int>& shape) {
    int n = 0;
    for (int r : shape) n += r;
    BigInt numer;
    mpz_fac_ui(numer.get_mpz_t(), static_cast<unsigned long>(n));
    BigInt denom = 1;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) {
            int arm = shape[r] - c - 1;
            int leg = 0;
            for (std::size_t rr = r + 1; rr < shape.size(); ++rr)
                if (shape[rr] > c) ++leg;
            denom *= (arm + leg + 1);
        }
    return numer / denom;
}

} // namespace

TEST_CASE("the worked seven-element correspondence, byte-exact") {
    std::vector<int> sigma{4, 2, 3, 6, 5, 1, 7};
    auto [p, q] = rsk(sigma);
    CHECK(p.rows == std::vector<std::vector<int>>{{1, 3, 5, 7}, {2, 6}, {4}});
    CHECK(q.rows == std::vector<std::vector<int>>{{1, 3, 4, 7}, {2, 5}, {6}});
    CHECK(p.to_json() == "[[1,3,5,7],[2,6],[4]]");
    CHECK(q.to_json() == "[[1,3,4,7],[2,5],[6]]");
    CHECK(p.shape() == q.shape());
    CHECK(static_cast<int>(p.rows[0].size()) == lis(sigma));
    CHECK(rsk_inverse(p, q) == sigma);
}

TEST_CASE("identity and reversal give a single row / single column") {
    std::vector<int> id{1, 2, 3, 4, 5};
    auto [p, q] = rsk(id);
    CHECK(p.rows == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
    CHECK(q.rows == p.rows);

    std::vector<int> rev{5, 4, 3, 2, 1};
    auto [pr, qr] = rsk(rev);
    CHECK(pr.shape() == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(qr.rows == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {5}});
    CHECK(lis(rev) == 1);
    CHECK(lds(rev) == 5);
}

TEST_CASE("round trip on all of S_n for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            auto [p, q] = rsk(perm);
            CHECK(p.is_standard());
            CHECK(q.is_standard());
            CHECK(p.shape() == q.shape());
            CHECK(static_cast<int>(p.rows[0].size()) == lis(perm));
            CHECK(rsk_inverse(p, q) == perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("round trip on random permutations of 50") {
    RandomStream rng(314);
    for (int t = 0; t < 10000; ++t) {
        std::vector<int> perm = random_permutation(50, rng);
        auto [p, q] = rsk(perm);
        CHECK(rsk_inverse(p, q) == perm);
        CHECK(static_cast<int>(p.rows[0].size()) == lis(perm));
    }
}

TEST_CASE("lis examples and the brute-force oracle") {
    std::vector<int> s{4, 2, 3, 1, 6, 5, 7};
    CHECK(lis(s) == 4);
    std::vector<int> sortex{4, 1, 9, 3, 2, 7, 6, 8, 5};
    CHECK(lis(sortex) == 4); // so 9 - 4 = 5 moves sort it
    std::vector<int> id{1, 2, 3, 4, 5, 6};
    CHECK(lis(id) == 6);

    RandomStream rng(55);
    for (int n = 1; n <= 10; ++n)
        for (int t = 0; t < 60; ++t) {
            std::vector<int> perm = random_permutation(n, rng);
            CHECK(lis(perm) == lis_brute(perm));
        }
}

TEST_CASE("minimum move-one-element sorts equal n - L_n (BFS oracle, n <= 7)") {
    for (int n : {5, 6, 7}) {
        // breadth-first over all permutations with remove+reinsert moves
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 1);
        std::map<std::vector<int>, int> dist;
        dist[id] = 0;
        std::deque<std::vector<int>> queue{id};
        while (!queue.empty()) {
            std::vector<int> cur = queue.front();
            queue.pop_front();
            int d = dist[cur];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    std::vector<int> next = cur;
                    int v = next[i];
                    next.erase(next.begin() + i);
                    next.insert(next.begin() + j, v);
                    if (!dist.count(next)) {
                        dist[next] = d + 1;
                        queue.push_back(next);
                    }
                }
        }
        std::vector<int> perm = id;
        do {
            CHECK(dist[perm] == n - lis(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("erdos-szekeres has no violations") {
    CHECK(erdos_szekeres_scan(1) == 0);
    CHECK(erdos_szekeres_scan(2) == 0);
    CHECK_THROWS_AS(erdos_szekeres_scan(4), resource_error);

    // corollary: max(L_inc, L_dec) >= ceil(sqrt(n)) on random permutations
    RandomStream rng(21);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> perm = random_permutation(30, rng);
        CHECK(std::max(lis(perm), lds(perm)) >= static_cast<int>(std::ceil(std::sqrt(30.0))));
    }
}

TEST_CASE("tableau census: shapes, counts, and the n! identity") {
    auto census3 = tableau_census(3);
    CHECK(census3[std::vector<int>{3}] == 1);
    CHECK(census3[std::vector<int>{2, 1}] == 2);
    CHECK(census3[std::vector<int>{1, 1, 1}] == 1);

    for (int n : {1, 3, 5, 8}) {
        auto census = tableau_census(n);
        long long sum = 0;
        for (const auto& [shape, count] : census) {
            sum += count * count;
            CHECK(BigInt(static_cast<long>(count)) == hook_count(shape)); // hook length oracle
        }
        long long fact = 1;
        for (int j = 2; j <= n; ++j) fact *= j;
        CHECK(sum == fact);
    }
}

TEST_CASE("exhaustive E[L_4] over S_4 is 29/12") {
    std::vector<int> perm{1, 2, 3, 4};
    long num = 0, count = 0;
    do {
        num += lis(perm);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 24);
    CHECK(num == 58); // E = 58/24 = 29/12
}

TEST_CASE("bdj statistic: reproducible, sane center") {
    std::vector<double> a = bdj_statistic_mc(500, 400, 3);
    std::vector<double> b = bdj_statistic_mc(500, 400, 3);
    CHECK(a == b);
    CHECK_THROWS_AS(bdj_statistic_mc(500, 50), parameter_error);

    double mean = 0;
    for (double v : a) mean += v;
    mean /= static_cast<double>(a.size());
    CHECK(mean > -4.0);
    CHECK(mean < 1.0);
}

TEST_CASE("tableau validation catches malformed input") {
    YoungTableau bad;
    bad.rows = {{1, 2}, {3, 4, 5}}; // rows must weakly decrease
    CHECK_FALSE(bad.is_standard());
    YoungTableau p, q;
    p.rows = {{1, 2}, {3}};
    q.rows = {{1, 2, 3}};
    CHECK_THROWS_AS(rsk_inverse(p, q), parameter_error);
    std::vector<int> notperm{1, 1, 3};
    CHECK_THROWS_AS(rsk(notperm), parameter_error);
}
