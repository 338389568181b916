#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "rmt/combinatorics.hpp"
#include "rmt/errors.hpp"
#include "rmt/rng.hpp"

using namespace rmt;

TEST_CASE("catalan numbers: closed form, recursion, growth") {
    const long expected[] = {1, 1, 2, 5, 14, 42, 132};
    for (int k = 0; k <= 6; ++k) CHECK(catalan(k) == expected[k]);

    // recursion C_k = sum C_l C_{k-1-l} reproduces the closed form
    std::vector<BigInt> c{1};
    for (int k = 1; k <= 20; ++k) {
        BigInt s = 0;
        for (int l = 0; l < k; ++l) s += c[l] * c[k - 1 - l];
        c.push_back(s);
        CHECK(catalan(k) == s);
    }

    // C_k <= 4^k / (sqrt(pi) k^{3/2}), ratio decreasing to sqrt(pi), within 2% at k = 60
    double prev_ratio = 1e300;
    for (int k = 1; k <= 60; ++k) {
        double ck = catalan(k).get_d();
        double bound = std::pow(4.0, k) / (std::sqrt(M_PI) * std::pow(k, 1.5));
        CHECK(ck <= bound);
        double ratio = std::pow(4.0, k) / (std::pow(k, 1.5) * ck);
        CHECK(ratio < prev_ratio);
        CHECK(ratio >= std::sqrt(M_PI));
        prev_ratio = ratio;
        if (k == 60) CHECK(ratio / std::sqrt(M_PI) - 1.0 < 0.02);
    }
}

TEST_CASE("pairing counts and explicit small cases") {
    CHECK(count_pairings(2) == 1);
    CHECK(count_pairings(6) == 15);
    CHECK(count_nc_pairings(6) == 5);
    CHECK(count_pairings(3) == 0);

    for (int k = 1; k <= 6; ++k) {
        CHECK(count_pairings(2 * k) == double_factorial_odd(2 * k).get_si());
        CHECK(count_nc_pairings(2 * k) == catalan(k).get_si());
    }

    // NC2(4) = {(12)(34), (14)(23)}, crossing: (13)(24)  (1-based)
    std::set<std::vector<int>> nc4;
    for_each_nc_pairing(4, [&](const Pairing& p) { nc4.insert(p.partner); });
    std::set<std::vector<int>> expected{{1, 0, 3, 2}, {3, 2, 1, 0}};
    CHECK(nc4 == expected);
    std::pair<int, int> crossing_pairs[] = {{0, 2}, {1, 3}};
    Pairing crossing = Pairing::from_pairs(4, crossing_pairs);
    CHECK_FALSE(is_noncrossing(crossing));
}

TEST_CASE("the two non-crossing tests agree on every pairing up to m = 12") {
    for (int m = 2; m <= 12; m += 2) {
        for_each_pairing(m, [&](const Pairing& p) {
            CHECK(is_noncrossing(p) == is_noncrossing_by_reduction(p));
        });
    }
}

TEST_CASE("genus of the three pairings of [4]") {
    auto mk = [](std::initializer_list<std::pair<int, int>> ps) {
        std::vector<std::pair<int, int>> v(ps);
        return Pairing::from_pairs(4, v);
    };
    GenusInfo g = genus(mk({{0, 1}, {2, 3}}));
    CHECK(g.cycles == 3);
    CHECK(g.genus == 0);
    g = genus(mk({{0, 2}, {1, 3}}));
    CHECK(g.cycles == 1);
    CHECK(g.genus == 1);
    g = genus(mk({{0, 3}, {1, 2}}));
    CHECK(g.cycles == 3);
    CHECK(g.genus == 0);
}

TEST_CASE("genus zero iff non-crossing, all pairings m <= 12") {
    for (int m = 2; m <= 12; m += 2)
        for_each_pairing(m, [&](const Pairing& p) { CHECK((genus(p).genus == 0) == is_noncrossing(p)); });
}

TEST_CASE("exact GUE moments by genus enumeration") {
    CHECK(gue_moment_exact(2).genus_coeffs == std::vector<BigInt>{1});
    CHECK(gue_moment_exact(4).genus_coeffs == std::vector<BigInt>{2, 1});
    CHECK(gue_moment_exact(6).genus_coeffs == std::vector<BigInt>{5, 10});
    CHECK(gue_moment_exact(8).genus_coeffs == std::vector<BigInt>{14, 70, 21});

    // leading coefficient is Catalan; coefficients sum to (m-1)!!
    for (int m = 2; m <= 16; m += 2) {
        MomentPolynomial poly = gue_moment_exact(m);
        CHECK(poly.genus_coeffs[0] == catalan(m / 2));
        BigInt total = 0;
        for (const BigInt& cg : poly.genus_coeffs) total += cg;
        CHECK(total == double_factorial_odd(m));
    }

    CHECK_THROWS_AS(gue_moment_exact(3), parameter_error);
    CHECK_THROWS_AS(gue_moment_exact(26), resource_error);
    CHECK(gue_moment_exact(4).to_json() == "{\"genus_coeffs\":[2,1]}");
}

TEST_CASE("wick moments") {
    // independent standard real Gaussians X=0, Y=1
    auto cov_indep = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    std::vector<int> xxyy{0, 0, 1, 1};
    CHECK(wick_moment(xxyy, cov_indep) == doctest::Approx(1.0));
    std::vector<int> xxxyxy{0, 0, 0, 1, 0, 1};
    CHECK(wick_moment(xxxyxy, cov_indep) == doctest::Approx(3.0));

    for (int k = 1; k <= 6; ++k) {
        std::vector<int> word(2 * k, 0);
        CHECK(wick_moment(word, cov_indep) == doctest::Approx(double_factorial_odd(2 * k).get_d()));
    }
    std::vector<int> odd{0, 0, 0};
    CHECK(wick_moment(odd, cov_indep) == 0.0);

    // complex Gaussian: symbol 0 = Z, 1 = conj(Z); cov(Z, conj Z) = 1, else 0
    auto cov_complex = [](int a, int b) { return a != b ? 1.0 : 0.0; };
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            std::vector<int> word;
            word.insert(word.end(), n, 0);
            word.insert(word.end(), m, 1);
            double expect = 0.0;
            if (n == m) {
                expect = 1.0;
                for (int j = 2; j <= n; ++j) expect *= j;
            }
            CHECK(wick_moment(word, cov_complex) == doctest::Approx(expect));
        }
}

TEST_CASE("kernel of a multi-index and the walk-graph tree criterion") {
    std::vector<int> idx{1, 2, 1, 3, 2, 4, 2};
    Partition ker = kernel_of_index(idx);
    std::vector<std::vector<int>> expected{{0, 2}, {1, 4, 6}, {3}, {5}};
    CHECK(ker.blocks == expected);

    // constant tuple: one block, a single vertex with a loop -- not a tree
    std::vector<int> constant{7, 7, 7, 7};
    Partition sigma = kernel_of_index(constant);
    CHECK(sigma.blocks.size() == 1);
    CHECK_FALSE(graph_is_tree(sigma));

    // tree-with-doubled-edges count reproduces the Catalan numbers
    for (int k = 1; k <= 5; ++k) CHECK(count_tree_walk_partitions(2 * k) == catalan(k).get_si());
    // odd walks can never use every edge exactly twice
    CHECK(count_tree_walk_partitions(5) == 0);
}

TEST_CASE("mixed-moment limits count color-respecting NC pairings") {
    std::vector<int> w1{1, 2, 1, 2};
    CHECK(mixed_gue_moment_limit(w1) == 0);
    std::vector<int> w2{1, 1, 2, 2};
    CHECK(mixed_gue_moment_limit(w2) == 1);
    std::vector<int> w3{1, 1, 1, 1};
    CHECK(mixed_gue_moment_limit(w3) == 2);
    std::vector<int> odd{1, 1, 1};
    CHECK(mixed_gue_moment_limit(odd) == 0);

    // invariance under color relabeling
    RandomStream rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int m = 2 + 2 * static_cast<int>(rng.below(5));
        std::vector<int> word(m);
        for (int& v : word) v = static_cast<int>(rng.below(3));
        std::vector<int> relabel{2, 0, 1};
        std::vector<int> mapped(m);
        for (int i = 0; i < m; ++i) mapped[i] = relabel[word[i]];
        CHECK(mixed_gue_moment_limit(word) == mixed_gue_moment_limit(mapped));
    }
}

namespace {
double phi_nc(std::span<const int> word) { return static_cast<double>(mixed_gue_moment_limit(word)); }
} // namespace

TEST_CASE("freeness: alternating centered products vanish for the NC state") {
    std::vector<int> colors{1, 2, 1, 2};
    std::vector<int> squares{2, 2, 2, 2};
    CHECK(freeness_residual(phi_nc, colors, squares) == 0.0);

    // four-letter factorization for all powers <= 3
    auto phi_word = [](std::vector<int> w) { return phi_nc(w); };
    auto pow_word = [](int color, int p) { return std::vector<int>(p, color); };
    for (int p1 = 1; p1 <= 3; ++p1)
        for (int q1 = 1; q1 <= 3; ++q1)
            for (int p2 = 1; p2 <= 3; ++p2)
                for (int q2 = 1; q2 <= 3; ++q2) {
                    std::vector<int> word;
                    auto append = [&](int color, int p) { word.insert(word.end(), p, color); };
                    append(1, p1);
                    append(2, q1);
                    append(1, p2);
                    append(2, q2);
                    double lhs = phi_nc(word);
                    double rhs = phi_word(pow_word(1, p1 + p2)) * phi_word(pow_word(2, q1)) * phi_word(pow_word(2, q2)) +
                                 phi_word(pow_word(1, p1)) * phi_word(pow_word(1, p2)) * phi_word(pow_word(2, q1 + q2)) -
                                 phi_word(pow_word(1, p1)) * phi_word(pow_word(2, q1)) * phi_word(pow_word(1, p2)) *
                                     phi_word(pow_word(2, q2));
                    CHECK(lhs == doctest::Approx(rhs));
                }

    std::vector<int> bad_colors{1, 1, 2};
    std::vector<int> powers{1, 1, 1};
    CHECK_THROWS_AS(freeness_residual(phi_nc, bad_colors, powers), parameter_error);
}

TEST_CASE("moment polynomial evaluation at numeric N") {
    MomentPolynomial m8 = gue_moment_exact(8);
    // 14 + 70/900 + 21/810000 at N = 30
    BigRat v = m8.evaluate(BigRat(30));
    CHECK(v == BigRat(14) + BigRat(70, 900) + BigRat(21, 810000));
}
