#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "rmt/eigen.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/errors.hpp"

using namespace rmt;

namespace {

// Gram-Schmidt unitary from a Ginibre draw, test-only.
CMatrix random_unitary(int n, std::uint64_t seed) {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::GinibreComplex;
    spec.dimension = n;
    spec.seed = seed;
    CMatrix g = sample(spec, 0).entries;
    for (int c = 0; c < n; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            cdouble dot{};
            for (int r = 0; r < n; ++r) dot += std::conj(g(r, prev)) * g(r, c);
            for (int r = 0; r < n; ++r) g(r, c) -= dot * g(r, prev);
        }
        double nrm = 0;
        for (int r = 0; r < n; ++r) nrm += std::norm(g(r, c));
        nrm = std::sqrt(nrm);
        for (int r = 0; r < n; ++r) g(r, c) /= nrm;
    }
    return g;
}

CMatrix conjugate(const CMatrix& u, const CMatrix& a) {
    // u a u^*
    CMatrix ua = matmul(u, a);
    CMatrix uh(u.cols(), u.rows());
    for (int i = 0; i < u.rows(); ++i)
        for (int j = 0; j < u.cols(); ++j) uh(j, i) = std::conj(u(i, j));
    return matmul(ua, uh);
}

} // namespace

TEST_CASE("known 2x2 and rank-one spectra") {
    CMatrix ones2(2, 2, cdouble{1.0});
    auto eig = hermitian_eigenvalues(ones2);
    CHECK(eig[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(2.0));

    CMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = -1;
    eig = hermitian_eigenvalues(m);
    CHECK(eig[0] == doctest::Approx(-std::sqrt(2.0)));
    CHECK(eig[1] == doctest::Approx(std::sqrt(2.0)));

    const int n = 12;
    CMatrix ones(n, n, cdouble{1.0});
    eig = hermitian_eigenvalues(ones);
    CHECK(eig.back() == doctest::Approx(static_cast<double>(n)));
    for (int i = 0; i + 1 < n; ++i) CHECK(std::abs(eig[i]) < 1e-10 * n);
}

TEST_CASE("tridiagonal QL against the discrete Laplacian closed form") {
    const int n = 40;
    std::vector<double> d(n, 2.0), e(n - 1, -1.0);
    auto eig = tridiagonal_eigenvalues(d, e);
    for (int k = 0; k < n; ++k) {
        double expect = 2.0 - 2.0 * std::cos((k + 1) * M_PI / (n + 1));
        CHECK(eig[k] == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("eigenvalue sum equals trace") {
    for (EnsembleKind kind : {EnsembleKind::GUE, EnsembleKind::GOE}) {
        EnsembleSpec spec;
        spec.kind = kind;
        spec.dimension = 60;
        spec.seed = 11;
        MatrixSample s = sample(spec, 2);
        auto eig = hermitian_eigenvalues(s.entries);
        double sum = 0;
        for (double l : eig) sum += l;
        CHECK(std::abs(sum - s.entries.trace().real()) <= 1e-8 * 60 * std::max(1.0, s.entries.max_abs()));
    }
}

TEST_CASE("spectrum invariant under unitary conjugation") {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::GUE;
    spec.dimension = 24;
    spec.seed = 3;
    CMatrix a = sample(spec, 0).entries;
    CMatrix u = random_unitary(24, 99);
    CMatrix b = conjugate(u, a);
    // re-hermitize the float noise before the strict input check
    for (int i = 0; i < 24; ++i) {
        b(i, i) = cdouble{b(i, i).real(), 0};
        for (int j = i + 1; j < 24; ++j) b(j, i) = std::conj(b(i, j));
    }
    auto ea = hermitian_eigenvalues(a);
    auto eb = hermitian_eigenvalues(b);
    for (int i = 0; i < 24; ++i) CHECK(ea[i] == doctest::Approx(eb[i]).epsilon(1e-8));
}

TEST_CASE("real path: spectrum invariant under orthogonal conjugation") {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::GOE;
    spec.dimension = 20;
    spec.seed = 13;
    CMatrix a = sample(spec, 0).entries;
    // Gram-Schmidt on a real Gaussian matrix gives an orthogonal Q
    EnsembleSpec gspec = spec;
    gspec.kind = EnsembleKind::WignerGeneric; // symmetric, but any full-rank real start works
    CMatrix g = sample(gspec, 1).entries;
    CMatrix q = g;
    for (int c = 0; c < 20; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            double dot = 0;
            for (int r = 0; r < 20; ++r) dot += q(r, prev).real() * q(r, c).real();
            for (int r = 0; r < 20; ++r) q(r, c) -= dot * q(r, prev);
        }
        double nrm = 0;
        for (int r = 0; r < 20; ++r) nrm += std::norm(q(r, c));
        nrm = std::sqrt(nrm);
        for (int r = 0; r < 20; ++r) q(r, c) /= nrm;
    }
    CMatrix b = conjugate(q, a);
    for (int i = 0; i < 20; ++i) {
        b(i, i) = cdouble{b(i, i).real(), 0};
        for (int j = i + 1; j < 20; ++j) {
            b(i, j) = cdouble{0.5 * (b(i, j).real() + b(j, i).real()), 0};
            b(j, i) = b(i, j);
        }
    }
    auto ea = hermitian_eigenvalues(a);
    auto eb = hermitian_eigenvalues(b);
    for (int i = 0; i < 20; ++i) CHECK(ea[i] == doctest::Approx(eb[i]).epsilon(1e-8));
}

TEST_CASE("non-Hermitian input violates the contract") {
    CMatrix m(3, 3);
    m(0, 1) = cdouble{0, 1};
    m(1, 0) = cdouble{0, 1}; // should be -i
    CHECK_THROWS_AS(hermitian_eigenvalues(m), contract_error);
}

TEST_CASE("general solver: nilpotent shift, cyclic shift, diagonal") {
    const int n = 12;
    CMatrix jordan(n, n);
    for (int i = 0; i + 1 < n; ++i) jordan(i, i + 1) = 1.0;
    for (cdouble l : general_eigenvalues(jordan)) CHECK(std::abs(l) < 1e-8);

    CMatrix cyclic = jordan;
    cyclic(n - 1, 0) = 1.0;
    auto eig = general_eigenvalues(cyclic);
    REQUIRE(eig.size() == n);
    for (cdouble l : eig) CHECK(std::abs(std::pow(l, n) - 1.0) < 1e-6); // n-th roots of unity
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) CHECK(std::abs(eig[i] - eig[j]) > 0.3); // all distinct

    CMatrix diag(2, 2);
    diag(0, 0) = 1.0;
    diag(1, 1) = cdouble{0, 2};
    auto ed = general_eigenvalues(diag);
    std::sort(ed.begin(), ed.end(), [](cdouble a, cdouble b) { return a.real() > b.real(); });
    CHECK(std::abs(ed[0] - cdouble{1, 0}) < 1e-12);
    CHECK(std::abs(ed[1] - cdouble{0, 2}) < 1e-12);
}

TEST_CASE("general solver: trace identity and conjugation invariance on Ginibre") {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::GinibreComplex;
    spec.dimension = 50;
    spec.seed = 17;
    CMatrix a = sample(spec, 1).entries;
    auto eig = general_eigenvalues(a);
    cdouble sum{};
    for (cdouble l : eig) sum += l;
    CHECK(std::abs(sum - a.trace()) < 1e-8 * 50);

    CMatrix u = random_unitary(50, 5);
    auto eig2 = general_eigenvalues(conjugate(u, a));
    auto key = [](cdouble x, cdouble y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    };
    std::sort(eig.begin(), eig.end(), key);
    std::sort(eig2.begin(), eig2.end(), key);
    for (int i = 0; i < 50; ++i) CHECK(std::abs(eig[i] - eig2[i]) < 1e-7);
}
