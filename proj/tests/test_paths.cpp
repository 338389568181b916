#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmt/errors.hpp"
#include "rmt/paths.hpp"
#include "rmt/rng.hpp"

using namespace rmt;

namespace {

WalkSpec symmetric_walk(int horizon, std::vector<long> start, std::vector<long> target) {
    WalkSpec spec;
    spec.horizon = horizon;
    spec.start = std::move(start);
    spec.target = std::move(target);
    return spec;
}

// The staircase lattice of unit-weight up/right paths whose corner-to-corner
// weights are Catalan numbers: vertices (r, c) with 1 <= c <= r <= 5.
struct Staircase {
    WeightedDag dag;
    int id[6][6] = {};
    Staircase() {
        int next = 0;
        for (int r = 1; r <= 5; ++r)
            for (int c = 1; c <= r; ++c) id[r][c] = next++;
        dag.vertices = next;
        for (int r = 1; r <= 5; ++r)
            for (int c = 1; c <= r; ++c) {
                if (r + 1 <= 5) dag.edges.push_back({id[r][c], id[r + 1][c], BigRat(1)});
                if (c + 1 <= r) dag.edges.push_back({id[r][c], id[r][c + 1], BigRat(1)});
            }
    }
};

} // namespace

TEST_CASE("karlin-mcgregor: the 3/16 example, determinant = enumeration") {
    WalkSpec spec = symmetric_walk(2, {2, 0}, {2, 0});
    auto m = transition_matrix(spec);
    CHECK(m[0][0] == BigRat(1, 2));
    CHECK(m[0][1] == BigRat(1, 4));
    CHECK(m[1][0] == BigRat(1, 4));
    CHECK(m[1][1] == BigRat(1, 2));
    CHECK(km_determinant(spec) == BigRat(3, 16));
    CHECK(km_enumerate(spec) == BigRat(3, 16));
}

TEST_CASE("karlin-mcgregor: single walk, crossing targets, parity") {
    // n = 1: determinant is the plain transition probability
    WalkSpec one = symmetric_walk(4, {0}, {2});
    CHECK(km_determinant(one) == BigRat(1, 4)); // binom(4,3)/16
    CHECK(km_enumerate(one) == BigRat(1, 4));

    // swapped targets force a crossing: event impossible, determinant flips sign
    WalkSpec crossed = symmetric_walk(2, {2, 0}, {0, 2});
    CHECK(km_enumerate(crossed) == BigRat(0));
    CHECK(km_determinant(crossed) == BigRat(-3, 16));

    // parity-unreachable target
    WalkSpec odd = symmetric_walk(2, {2, 0}, {1, 0});
    CHECK(km_determinant(odd) == BigRat(0));
    CHECK(km_enumerate(odd) == BigRat(0));
}

TEST_CASE("karlin-mcgregor: equality on asymmetric site-dependent walks") {
    WalkSpec spec = symmetric_walk(4, {3, 1}, {3, 1});
    spec.prob_up = [](long site) { return site >= 2 ? BigRat(1, 3) : BigRat(2, 5); };
    CHECK(km_determinant(spec) == km_enumerate(spec));

    WalkSpec three = symmetric_walk(3, {4, 2, 0}, {5, 3, 1});
    CHECK(km_determinant(three) == km_enumerate(three));

    CHECK_THROWS_AS(km_enumerate(symmetric_walk(30, {2, 0}, {2, 0})), resource_error);
    CHECK_THROWS_AS(km_determinant(symmetric_walk(2, {0, 2}, {0, 2})), parameter_error);
}

TEST_CASE("gessel-viennot on the catalan staircase") {
    Staircase st;
    std::vector<int> a{st.id[3][3], st.id[2][2], st.id[1][1]}; // a0, a1, a2
    std::vector<int> b{st.id[3][3], st.id[4][4], st.id[5][5]}; // b0, b1, b2
    auto m = gv_path_weights(st.dag, a, b);
    CHECK(m[0][0] == BigRat(1));  // C_0
    CHECK(m[0][1] == BigRat(1));  // C_1
    CHECK(m[0][2] == BigRat(2));  // C_2
    CHECK(m[1][2] == BigRat(5));  // C_3
    CHECK(m[2][2] == BigRat(14)); // C_4
    CHECK(gv_determinant(st.dag, a, b) == BigRat(1));
    CHECK(gv_vertex_disjoint_sum(st.dag, a, b) == BigRat(1));
}

TEST_CASE("gessel-viennot: shared vertices are excluded from the disjoint sum") {
    // two sources, two sinks, all paths forced through a single middle vertex
    WeightedDag dag;
    dag.vertices = 5;
    dag.edges = {{0, 2, BigRat(1)}, {1, 2, BigRat(1)}, {2, 3, BigRat(1)}, {2, 4, BigRat(1)}};
    std::vector<int> a{0, 1}, b{3, 4};
    // every pair of paths shares vertex 2: the disjoint sum is empty
    CHECK(gv_vertex_disjoint_sum(dag, a, b) == BigRat(0));
    CHECK(gv_determinant(dag, a, b) == BigRat(0));
}

TEST_CASE("gessel-viennot: determinant equals disjoint sum on random small dags") {
    RandomStream rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        const int v = 7;
        WeightedDag dag;
        dag.vertices = v;
        for (int i = 0; i < v; ++i)
            for (int j = i + 1; j < v; ++j)
                if (rng.below(100) < 45) {
                    long w = static_cast<long>(rng.below(5)) - 1; // weights in -1..3
                    if (w != 0) dag.edges.push_back({i, j, BigRat(w)});
                }
        std::vector<int> a{0, 1}, b{v - 2, v - 1};
        CHECK(gv_determinant(dag, a, b) == gv_vertex_disjoint_sum(dag, a, b));
    }
}

TEST_CASE("cycle detection") {
    WeightedDag dag;
    dag.vertices = 3;
    dag.edges = {{0, 1, BigRat(1)}, {1, 2, BigRat(1)}, {2, 0, BigRat(1)}};
    CHECK_THROWS_AS(topological_order(dag), parameter_error);
}

TEST_CASE("catalan hankel determinants are all one") {
    for (int n = 0; n <= 12; ++n) CHECK(catalan_hankel_det(n) == 1);
    CHECK_THROWS_AS(catalan_hankel_det(13), resource_error);

    // independent oracle: rational gaussian elimination up to n = 8
    for (int n = 0; n <= 8; ++n) {
        int dim = n + 1;
        std::vector<std::vector<BigRat>> m(dim, std::vector<BigRat>(dim));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m[i][j] = BigRat(catalan(i + j));
        BigRat det = 1;
        for (int col = 0; col < dim; ++col) {
            int piv = col;
            while (m[piv][col] == 0) ++piv;
            if (piv != col) {
                std::swap(m[piv], m[col]);
                det = -det;
            }
            det *= m[col][col];
            for (int r = col + 1; r < dim; ++r) {
                BigRat f = m[r][col] / m[col][col];
                for (int c = col; c < dim; ++c) m[r][c] -= f * m[col][c];
            }
        }
        CHECK(det == BigRat(1));
    }
}

TEST_CASE("dyson walks: eigenvalue paths never collide") {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::GUE;
    spec.dimension = 2;
    spec.seed = 31;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        auto walk = sample_dyson_walk(spec, 50, 0.1, trial);
        CrossingReport r = dyson_crossing_check(walk);
        CHECK(r.collisions == 0);
        CHECK(r.min_spacing > 0.0);
    }

    EnsembleSpec single = spec;
    single.dimension = 1;
    CrossingReport r1 = dyson_crossing_check(sample_dyson_walk(single, 20, 0.1, 0));
    CHECK(r1.collisions == 0);
}

TEST_CASE("GUE repels harder than GOE (mean minimal spacing at N = 13)") {
    EnsembleSpec gue;
    gue.kind = EnsembleKind::GUE;
    gue.dimension = 13;
    gue.seed = 8;
    EnsembleSpec goe = gue;
    goe.kind = EnsembleKind::GOE;
    double mean_gue = 0, mean_goe = 0;
    const int seeds = 50, steps = 30;
    for (std::uint64_t t = 0; t < seeds; ++t) {
        mean_gue += dyson_crossing_check(sample_dyson_walk(gue, steps, 0.05, t)).min_spacing;
        mean_goe += dyson_crossing_check(sample_dyson_walk(goe, steps, 0.05, t)).min_spacing;
    }
    CHECK(mean_gue / seeds >= mean_goe / seeds);
}
