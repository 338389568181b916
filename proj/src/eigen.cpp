#include "rmt/eigen.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "rmt/errors.hpp"

namespace rmt {
namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

// Householder reduction of a Hermitian matrix to tridiagonal form; works for
// double and complex<double>. Only |subdiagonal| is kept: a diagonal unitary
// similarity makes the subdiagonal real without changing the spectrum.
template <typename T>
void tridiagonalize(Matrix<T>& a, std::vector<double>& d, std::vector<double>& e) {
    const int n = a.rows();
    d.assign(n, 0.0);
    e.assign(n > 1 ? n - 1 : 0, 0.0);
    std::vector<T> v(n), w(n);

    for (int k = 0; k + 2 < n; ++k) {
        double alpha2 = 0;
        for (int i = k + 1; i < n; ++i) alpha2 += std::norm(a(i, k));
        double alpha = std::sqrt(alpha2);
        e[k] = alpha;
        if (alpha == 0.0) continue;

        // v = x + phase(x0) * |x| * e1, normalized; ||v||^2 = 2 |x| (|x| + |x0|)
        T x0 = a(k + 1, k);
        T phase = (std::abs(x0) == 0.0) ? T(1) : x0 / std::abs(x0);
        double vinv = 1.0 / std::sqrt(2.0 * alpha * (alpha + std::abs(x0)));
        for (int i = k + 1; i < n; ++i) v[i] = a(i, k) * vinv;
        v[k + 1] += phase * (alpha * vinv);

        // trailing block B = a[k+1.., k+1..]: w = B v, kappa = Re(v* w),
        // q = w - kappa v, B <- B - 2 v q* - 2 q v*
        double kappa = 0;
        for (int i = k + 1; i < n; ++i) {
            T s{};
            for (int j = k + 1; j < n; ++j) s += a(i, j) * v[j];
            w[i] = s;
        }
        for (int i = k + 1; i < n; ++i) {
            if constexpr (std::is_same_v<T, double>)
                kappa += v[i] * w[i];
            else
                kappa += (std::conj(v[i]) * w[i]).real();
        }
        for (int i = k + 1; i < n; ++i) w[i] -= kappa * v[i];
        for (int i = k + 1; i < n; ++i) {
            const T vi = v[i], qi = w[i];
            for (int j = k + 1; j < n; ++j) {
                if constexpr (std::is_same_v<T, double>)
                    a(i, j) -= 2.0 * (vi * w[j] + qi * v[j]);
                else
                    a(i, j) -= 2.0 * (vi * std::conj(w[j]) + qi * std::conj(v[j]));
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if constexpr (std::is_same_v<T, double>)
            d[i] = a(i, i);
        else
            d[i] = a(i, i).real();
    }
    if (n > 1) e[n - 2] = std::abs(a(n - 1, n - 2));
}

} // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e, double tol) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return {};
    if (static_cast<int>(e.size()) != std::max(n - 1, 0))
        throw parameter_error("tridiagonal_eigenvalues: e must have size n-1");
    e.push_back(0.0);
    const double thresh = std::max(tol, DBL_EPSILON);
    const long sweep_cap = 50L * n;
    long sweeps = 0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= thresh * dd) break;
            }
            if (m != l) {
                if (iter++ == 50 || ++sweeps > sweep_cap)
                    throw solver_error("tridiagonal QL: sweep cap exceeded");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> symmetric_eigenvalues(const RMatrix& m, double tol) {
    RMatrix a = m;
    std::vector<double> d, e;
    tridiagonalize(a, d, e);
    return tridiagonal_eigenvalues(std::move(d), std::move(e), tol);
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw parameter_error("hermitian_eigenvalues: matrix must be square");
    const double scale = std::max(1.0, m.max_abs());
    if (hermiticity_defect(m) > 1e-12 * scale)
        throw contract_error("hermitian_eigenvalues: input is not Hermitian");

    if (is_real(m)) {
        RMatrix a(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).real();
        return symmetric_eigenvalues(a, tol);
    }
    CMatrix a = m;
    std::vector<double> d, e;
    tridiagonalize(a, d, e);
    return tridiagonal_eigenvalues(std::move(d), std::move(e), tol);
}

namespace {

struct Givens {
    double c;  // real
    cdouble s; // complex
};

// Unitary [[c, s], [-conj(s), c]] mapping (f, g) to (r, 0).
Givens make_givens(cdouble f, cdouble g) {
    double af = std::abs(f), ag = std::abs(g);
    if (ag == 0.0) return {1.0, cdouble{}};
    if (af == 0.0) return {0.0, std::conj(g) / ag};
    double denom = std::hypot(af, ag);
    cdouble phase = f / af;
    return {af / denom, phase * std::conj(g) / denom};
}

// Rows i,i+1 of h, columns [jlo, jhi].
void apply_left(CMatrix& h, const Givens& g, int i, int jlo, int jhi) {
    for (int j = jlo; j <= jhi; ++j) {
        cdouble a = h(i, j), b = h(i + 1, j);
        h(i, j) = g.c * a + g.s * b;
        h(i + 1, j) = -std::conj(g.s) * a + g.c * b;
    }
}

// Columns i,i+1 of h, rows [ilo, ihi] (right-multiplication by the adjoint).
void apply_right(CMatrix& h, const Givens& g, int i, int ilo, int ihi) {
    for (int r = ilo; r <= ihi; ++r) {
        cdouble a = h(r, i), b = h(r, i + 1);
        h(r, i) = g.c * a + std::conj(g.s) * b;
        h(r, i + 1) = -g.s * a + g.c * b;
    }
}

void hessenberg_reduce(CMatrix& h) {
    const int n = h.rows();
    std::vector<cdouble> v(n);
    for (int k = 0; k + 2 < n; ++k) {
        double alpha2 = 0;
        for (int i = k + 1; i < n; ++i) alpha2 += std::norm(h(i, k));
        double alpha = std::sqrt(alpha2);
        if (alpha == 0.0) continue;
        cdouble x0 = h(k + 1, k);
        cdouble phase = (std::abs(x0) == 0.0) ? cdouble(1) : x0 / std::abs(x0);
        double vinv = 1.0 / std::sqrt(2.0 * alpha * (alpha + std::abs(x0)));
        for (int i = k + 1; i < n; ++i) v[i] = h(i, k) * vinv;
        v[k + 1] += phase * (alpha * vinv);

        // rows: H <- (I - 2vv*) H on rows k+1..n-1
        for (int j = k; j < n; ++j) {
            cdouble t{};
            for (int i = k + 1; i < n; ++i) t += std::conj(v[i]) * h(i, j);
            t *= 2.0;
            for (int i = k + 1; i < n; ++i) h(i, j) -= v[i] * t;
        }
        // columns: H <- H (I - 2vv*) on cols k+1..n-1
        for (int i = 0; i < n; ++i) {
            cdouble t{};
            for (int j = k + 1; j < n; ++j) t += h(i, j) * v[j];
            t *= 2.0;
            for (int j = k + 1; j < n; ++j) h(i, j) -= t * std::conj(v[j]);
        }
        for (int i = k + 2; i < n; ++i) h(i, k) = cdouble{};
    }
}

// Eigenvalues of [[a, b], [c, d]].
std::pair<cdouble, cdouble> eig2(cdouble a, cdouble b, cdouble c, cdouble d) {
    cdouble tr = a + d;
    cdouble disc = std::sqrt(tr * tr * 0.25 - (a * d - b * c));
    return {tr * 0.5 + disc, tr * 0.5 - disc};
}

} // namespace

std::vector<cdouble> general_eigenvalues(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw parameter_error("general_eigenvalues: matrix must be square");
    const int n = m.rows();
    std::vector<cdouble> eig;
    eig.reserve(n);
    if (n == 0) return eig;
    if (n == 1) return {m(0, 0)};

    CMatrix h = m;
    hessenberg_reduce(h);
    const double thresh = std::max(tol, DBL_EPSILON);

    int hi = n - 1;
    int iter = 0;
    while (hi >= 0) {
        // deflate trailing 1x1 / find active block [lo, hi]
        int lo = hi;
        while (lo > 0) {
            double off = std::abs(h(lo, lo - 1));
            if (off <= thresh * (std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo)))) {
                h(lo, lo - 1) = cdouble{};
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eig.push_back(h(hi, hi));
            --hi;
            iter = 0;
            continue;
        }
        if (lo == hi - 1) {
            auto [l1, l2] = eig2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
            eig.push_back(l1);
            eig.push_back(l2);
            hi -= 2;
            iter = 0;
            continue;
        }
        if (++iter > 60) throw solver_error("general QR: iteration cap exceeded");

        // Wilkinson shift (eigenvalue of the trailing 2x2 nearest to h(hi,hi)),
        // with an occasional exceptional shift to break stagnation.
        cdouble sigma;
        if (iter % 13 == 0) {
            sigma = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
        } else {
            auto [l1, l2] = eig2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            sigma = (std::abs(l1 - h(hi, hi)) < std::abs(l2 - h(hi, hi))) ? l1 : l2;
        }

        // implicit single-shift bulge chase on [lo, hi]
        Givens g = make_givens(h(lo, lo) - sigma, h(lo + 1, lo));
        apply_left(h, g, lo, lo, hi);
        apply_right(h, g, lo, lo, std::min(lo + 2, hi));
        for (int j = lo + 1; j < hi; ++j) {
            g = make_givens(h(j, j - 1), h(j + 1, j - 1));
            apply_left(h, g, j, j - 1, hi);
            apply_right(h, g, j, lo, std::min(j + 2, hi));
            h(j + 1, j - 1) = cdouble{};
        }
    }
    return eig;
}

} // namespace rmt
