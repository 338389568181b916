#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmt/errors.hpp"
#include "rmt/harer_zagier.hpp"

using namespace rmt;

TEST_CASE("b_k seeds and small cases, exact") {
    CHECK(hz_bk_symbolic(1).coeffs == std::vector<BigRat>{BigRat(1)});
    CHECK(hz_bk_symbolic(2).coeffs == std::vector<BigRat>{BigRat(1), BigRat(1, 2)});
    CHECK(hz_bk_symbolic(3).coeffs == std::vector<BigRat>{BigRat(1), BigRat(2)});
    CHECK(hz_bk_symbolic(4).coeffs == std::vector<BigRat>{BigRat(1), BigRat(5), BigRat(3, 2)});
}

TEST_CASE("recursion consistency: b_3 + 3*4/(4N^2) b_2 = b_4") {
    NInvSquaredPoly b2 = hz_bk_symbolic(2);
    NInvSquaredPoly b3 = hz_bk_symbolic(3);
    NInvSquaredPoly shifted;
    shifted.coeffs.assign(b2.coeffs.size() + 1, BigRat(0));
    for (std::size_t i = 0; i < b2.coeffs.size(); ++i) shifted.coeffs[i + 1] = BigRat(3) * b2.coeffs[i];
    NInvSquaredPoly lhs = b3 + shifted;
    lhs.trim();
    CHECK(lhs == hz_bk_symbolic(4));
}

TEST_CASE("C_k b_k equals the genus enumeration, k <= 8") {
    for (int k = 1; k <= 8; ++k) CHECK(hz_moment(k) == gue_moment_exact(2 * k));
}

TEST_CASE("numeric b_k agrees with symbolic evaluation, exact rationals") {
    for (int k = 1; k <= 10; ++k)
        for (long n = 1; n <= 10; ++n) CHECK(hz_bk(k, n) == hz_bk_symbolic(k).evaluate(n));
}

TEST_CASE("monotonicity in k at fixed N") {
    for (long n : {1L, 2L, 5L, 30L}) {
        BigRat prev = hz_bk(1, n);
        for (int k = 2; k <= 14; ++k) {
            BigRat cur = hz_bk(k, n);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("moment bound: C_k b_k <= C_k exp(k^3/(2N^2))") {
    for (long n : {5L, 10L, 50L}) {
        for (int k = 1; k <= 10; ++k) {
            double moment = BigRat(BigRat(catalan(k)) * hz_bk(k, n)).get_d();
            CHECK(moment <= moment_upper_bound(k, n) * (1 + 1e-12));
        }
    }
}

TEST_CASE("generating function identity at truncation K = 40") {
    {
        std::vector<double> grid{0.05};
        GeneratingCheck g = hz_generating_check(1, grid, 40);
        CHECK(g.max_residual <= 1e-10); // compared against (1.05/0.95)^1
    }
    {
        std::vector<double> grid{0.02};
        GeneratingCheck g = hz_generating_check(3, grid, 40);
        CHECK(g.max_residual <= 1e-10);
    }
    {
        std::vector<double> grid{0.0};
        GeneratingCheck g = hz_generating_check(4, grid, 40);
        CHECK(g.max_residual == 0.0);
    }
    // divergent truncation is refused with a parameter error
    std::vector<double> toobig{0.45};
    CHECK_THROWS_AS(hz_generating_check(20, toobig, 12), parameter_error);
}

TEST_CASE("tail bounds evaluate to the stated closed forms") {
    CHECK(lambda_max_tail_limit(1.0) == doctest::Approx(std::exp(-0.5)));
    CHECK(lambda_max_tail_limit(4.0) == doctest::Approx(std::pow(4.0, -0.75) * std::exp(-4.0)));

    // finite-N optimized bound approaches the closed form for large N
    for (double t : {1.0, 2.0, 4.0}) {
        double fin = lambda_max_tail_optimized(t, 4000);
        double lim = lambda_max_tail_limit(t);
        CHECK(fin == doctest::Approx(lim).epsilon(0.15));
    }

    CHECK(lambda_max_tail(0.5, 3, 10) ==
          doctest::Approx(10.0 / std::pow(2.5, 6) * std::pow(4.0, 3) / std::pow(3.0, 1.5) * std::exp(27.0 / 200.0)));
    CHECK_THROWS_AS(lambda_max_tail(0.0, 1, 1), parameter_error);
}
