#include "rmt/edge.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "rmt/eigen.hpp"
#include "rmt/errors.hpp"
#include "rmt/hermite.hpp"
#include "rmt/parallel.hpp"
#include "rmt/stats.hpp"

namespace rmt {
namespace {

constexpr double kAiryWindow = 15.0;
constexpr double kAi0 = 0.3550280538878172392600632;  // 3^{-2/3} / Gamma(2/3)
constexpr double kAip0 = -0.2588194037928067984051836; // -3^{-1/3} / Gamma(1/3)

struct ValueSlope {
    double v;
    double d;
};

// Maclaurin series of the two ODE solutions f (f(0)=1) and g (g'(0)=1):
// coefficients obey a_{n+3} = a_n / ((n+2)(n+3)).
ValueSlope airy_series(double x) {
    if (x == 0.0) return {kAi0, kAip0};
    double tf = 1.0, tg = x;
    double f = 0, fp = 0, g = 0, gp = 0;
    for (int k = 0; k < 120; ++k) {
        f += tf;
        fp += tf * (3.0 * k) / x;
        g += tg;
        gp += tg * (3.0 * k + 1.0) / x;
        double x3 = x * x * x;
        tf *= x3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0));
        tg *= x3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0));
        if (std::abs(tf) + std::abs(tg) < 1e-22 * (std::abs(f) + std::abs(g) + 1.0)) break;
    }
    return {kAi0 * f + kAip0 * g, kAi0 * fp + kAip0 * gp};
}

// Asymptotic expansion for large positive x:
// Ai  ~  e^{-z}/(2 sqrt(pi) x^{1/4}) sum (-1)^k u_k z^{-k},
// Ai' ~ -x^{1/4} e^{-z}/(2 sqrt(pi))  sum (-1)^k v_k z^{-k},  z = (2/3) x^{3/2}.
ValueSlope airy_asymptotic(double x) {
    const double z = 2.0 / 3.0 * std::pow(x, 1.5);
    double u = 1.0, su = 1.0, sv = 1.0;
    double zk = 1.0;
    for (int k = 1; k <= 6; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        double v = u * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        zk *= -z;
        su += u / zk;
        sv += v / zk;
    }
    const double pre = std::exp(-z) / (2.0 * std::sqrt(M_PI));
    return {pre * su / std::pow(x, 0.25), -pre * sv * std::pow(x, 0.25)};
}

// One adaptive embedded Runge-Kutta (Cash-Karp 4/5) solve of y' = f(x, y).
template <int Dim, typename F>
void rk45_integrate(F&& f, double x_from, double x_to, std::array<double, Dim>& y, double tol = 1e-11) {
    static const double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 0.875;
    static const double b21 = 0.2;
    static const double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
    static const double b41 = 0.3, b42 = -0.9, b43 = 1.2;
    static const double b51 = -11.0 / 54.0, b52 = 2.5, b53 = -70.0 / 27.0, b54 = 35.0 / 27.0;
    static const double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0, b63 = 575.0 / 13824.0,
                        b64 = 44275.0 / 110592.0, b65 = 253.0 / 4096.0;
    static const double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0, c4 = 125.0 / 594.0, c6 = 512.0 / 1771.0;
    static const double d1 = c1 - 2825.0 / 27648.0, d3 = c3 - 18575.0 / 48384.0, d4 = c4 - 13525.0 / 55296.0,
                        d5 = -277.0 / 14336.0, d6 = c6 - 0.25;

    double x = x_from;
    const double dir = (x_to >= x_from) ? 1.0 : -1.0;
    double h = dir * std::min(0.05, std::abs(x_to - x_from));
    int guard = 0;
    while (dir * (x_to - x) > 1e-14) {
        if (++guard > 2000000) throw solver_error("rk45: step guard exceeded");
        if (dir * (x + h - x_to) > 0) h = x_to - x;
        std::array<double, Dim> k1 = f(x, y), yt;
        for (int i = 0; i < Dim; ++i) yt[i] = y[i] + h * b21 * k1[i];
        std::array<double, Dim> k2 = f(x + a2 * h, yt);
        for (int i = 0; i < Dim; ++i) yt[i] = y[i] + h * (b31 * k1[i] + b32 * k2[i]);
        std::array<double, Dim> k3 = f(x + a3 * h, yt);
        for (int i = 0; i < Dim; ++i) yt[i] = y[i] + h * (b41 * k1[i] + b42 * k2[i] + b43 * k3[i]);
        std::array<double, Dim> k4 = f(x + a4 * h, yt);
        for (int i = 0; i < Dim; ++i) yt[i] = y[i] + h * (b51 * k1[i] + b52 * k2[i] + b53 * k3[i] + b54 * k4[i]);
        std::array<double, Dim> k5 = f(x + a5 * h, yt);
        for (int i = 0; i < Dim; ++i)
            yt[i] = y[i] + h * (b61 * k1[i] + b62 * k2[i] + b63 * k3[i] + b64 * k4[i] + b65 * k5[i]);
        std::array<double, Dim> k6 = f(x + a6 * h, yt);

        double err = 0;
        std::array<double, Dim> ynew;
        for (int i = 0; i < Dim; ++i) {
            ynew[i] = y[i] + h * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
            double ei = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i]);
            err = std::max(err, std::abs(ei) / (1.0 + std::abs(ynew[i])));
        }
        if (err <= tol) {
            x += h;
            y = ynew;
            double grow = (err > 0) ? 0.9 * std::pow(tol / err, 0.2) : 2.0;
            h *= std::clamp(grow, 0.2, 2.0);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(tol / err, 0.25));
        }
    }
}

ValueSlope airy_negative(double x) {
    // integrate u'' = t u from the series boundary down to x
    ValueSlope start = airy_series(-5.0);
    std::array<double, 2> y{start.v, start.d};
    auto rhs = [](double t, const std::array<double, 2>& s) { return std::array<double, 2>{s[1], t * s[0]}; };
    rk45_integrate<2>(rhs, -5.0, x, y, 1e-12);
    return {y[0], y[1]};
}

// The series/asymptotic seam sits at 5.2, just outside the |x| <= 5 window the
// series is documented for: both methods carry ~1e-9 relative error there, and
// second differences across [-5, 5] never straddle a method boundary.
ValueSlope airy_both(double x) {
    if (!(std::abs(x) <= kAiryWindow)) throw parameter_error("airy: x outside the documented window [-15, 15]");
    if (x > 5.2) return airy_asymptotic(x);
    if (x < -5.0) return airy_negative(x);
    return airy_series(x);
}

} // namespace

double airy(double x) { return airy_both(x).v; }
double airy_prime(double x) { return airy_both(x).d; }

double airy_kernel(double x, double y) {
    if (std::abs(x - y) < 1e-7) {
        double t = 0.5 * (x + y);
        ValueSlope a = airy_both(t);
        return a.d * a.d - t * a.v * a.v;
    }
    ValueSlope ax = airy_both(x), ay = airy_both(y);
    return (ax.v * ay.d - ax.d * ay.v) / (x - y);
}

namespace {

std::vector<double> p2_grid_solution(double x0, double x_min, double step) {
    const int n = static_cast<int>(std::llround((x0 - x_min) / step));
    ValueSlope boundary = airy_asymptotic(x0);
    std::array<double, 2> y{boundary.v, boundary.d};
    auto rhs = [](double x, const std::array<double, 2>& s) {
        return std::array<double, 2>{s[1], x * s[0] + 2.0 * s[0] * s[0] * s[0]};
    };
    std::vector<double> q(n + 1);
    q[0] = y[0];
    for (int i = 1; i <= n; ++i) {
        rk45_integrate<2>(rhs, x0 - (i - 1) * step, x0 - i * step, y, 1e-12);
        q[i] = y[0];
    }
    return q;
}

} // namespace

Painleve2Solution painleve2_solve(double x0, double x_min, double step, bool verify_halving) {
    if (x0 < 8.0) throw parameter_error("painleve2_solve: right boundary must be >= 8");
    if (x_min > -6.0) throw parameter_error("painleve2_solve: x_min must be <= -6");
    if (!(step > 0) || step > 1e-3 + 1e-15) throw parameter_error("painleve2_solve: step must be in (0, 1e-3]");

    std::vector<double> q = p2_grid_solution(x0, x_min, step);
    if (verify_halving) {
        std::vector<double> q2 = p2_grid_solution(x0, x_min, step / 2);
        double sup = 0;
        for (std::size_t i = 0; i < q.size(); ++i) sup = std::max(sup, std::abs(q[i] - q2[2 * i]));
        if (sup > 1e-6) {
            std::ostringstream os;
            os << "painleve2_solve: step-halving mismatch " << sup << " at step " << step;
            throw solver_error(os.str());
        }
    }
    Painleve2Solution sol;
    sol.step = step;
    sol.x0 = x0;
    sol.q = std::move(q);
    sol.x.resize(sol.q.size());
    for (std::size_t i = 0; i < sol.x.size(); ++i) sol.x[i] = x0 - static_cast<double>(i) * step;
    return sol;
}

F2Table tracy_widom_table(double t_min, double t_max, double t_step, double ode_step, double x0) {
    if (!(t_min < t_max)) throw parameter_error("tracy_widom_table: empty t range");
    Painleve2Solution sol = painleve2_solve(x0, std::min(t_min, -6.0), ode_step);

    // cumulative integrals from the right: J1 = int q^2, J2 = int u q(u)^2
    const std::size_t m = sol.q.size();
    std::vector<double> j1(m, 0.0), j2(m, 0.0);
    for (std::size_t i = 1; i < m; ++i) {
        double qa = sol.q[i - 1], qb = sol.q[i];
        double xa = sol.x[i - 1], xb = sol.x[i];
        j1[i] = j1[i - 1] + 0.5 * ode_step * (qa * qa + qb * qb);
        j2[i] = j2[i - 1] + 0.5 * ode_step * (xa * qa * qa + xb * qb * qb);
    }

    F2Table table;
    table.q = sol;
    int nt = static_cast<int>(std::llround((t_max - t_min) / t_step));
    table.t.resize(nt + 1);
    table.F.resize(nt + 1);
    for (int k = 0; k <= nt; ++k) {
        double t = t_min + k * t_step;
        double pos = (x0 - t) / ode_step;
        auto idx = static_cast<std::size_t>(std::llround(pos));
        double J1, J2;
        if (std::abs(pos - static_cast<double>(idx)) < 1e-9 && idx < m) {
            J1 = j1[idx];
            J2 = j2[idx];
        } else {
            // linear interpolation for off-grid t
            auto lo = static_cast<std::size_t>(std::floor(pos));
            double w = pos - static_cast<double>(lo);
            J1 = (1 - w) * j1[lo] + w * j1[lo + 1];
            J2 = (1 - w) * j2[lo] + w * j2[lo + 1];
        }
        table.t[k] = t;
        table.F[k] = std::exp(-(J2 - t * J1));
    }
    return table;
}

double f2_cdf(const F2Table& table, double t, bool* clamped) {
    if (clamped) *clamped = false;
    if (t <= table.t.front()) {
        if (clamped && t < table.t.front()) *clamped = true;
        return table.F.front();
    }
    if (t >= table.t.back()) {
        if (clamped && t > table.t.back()) *clamped = true;
        return table.F.back();
    }
    auto it = std::upper_bound(table.t.begin(), table.t.end(), t);
    std::size_t hi = static_cast<std::size_t>(it - table.t.begin());
    std::size_t lo = hi - 1;
    double w = (t - table.t[lo]) / (table.t[hi] - table.t[lo]);
    return (1 - w) * table.F[lo] + w * table.F[hi];
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = 0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

} // namespace

double f2_fredholm_truncated(double t, int rmax) {
    if (rmax < 1 || rmax > 3) throw parameter_error("f2_fredholm_truncated: rmax must be in 1..3");
    const double hi = std::min(t + 10.0, kAiryWindow);
    const int nq = 32;
    std::vector<double> gx, gw;
    gauss_legendre(nq, gx, gw);
    std::vector<double> nodes(nq), weights(nq);
    for (int i = 0; i < nq; ++i) {
        nodes[i] = 0.5 * (hi + t) + 0.5 * (hi - t) * gx[i];
        weights[i] = 0.5 * (hi - t) * gw[i];
    }
    std::vector<std::vector<double>> K(nq, std::vector<double>(nq));
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nq; ++j) K[i][j] = airy_kernel(nodes[i], nodes[j]);

    double sum = 1.0;
    // r = 1
    double s1 = 0;
    for (int i = 0; i < nq; ++i) s1 += weights[i] * K[i][i];
    sum -= s1;
    if (rmax >= 2) {
        double s2 = 0;
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nq; ++j)
                s2 += weights[i] * weights[j] * (K[i][i] * K[j][j] - K[i][j] * K[j][i]);
        sum += s2 / 2.0;
    }
    if (rmax >= 3) {
        double s3 = 0;
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nq; ++j)
                for (int k = 0; k < nq; ++k) {
                    double det = K[i][i] * (K[j][j] * K[k][k] - K[j][k] * K[k][j]) -
                                 K[i][j] * (K[j][i] * K[k][k] - K[j][k] * K[k][i]) +
                                 K[i][k] * (K[j][i] * K[k][j] - K[j][j] * K[k][i]);
                    s3 += weights[i] * weights[j] * weights[k] * det;
                }
        sum -= s3 / 6.0;
    }
    return sum;
}

std::vector<double> edge_statistic_mc(int n_dim, int trials, std::uint64_t seed) {
    if (trials < 100) throw parameter_error("edge_statistic_mc: trials >= 100 required");
    EnsembleSpec spec;
    spec.kind = EnsembleKind::GUE;
    spec.dimension = n_dim;
    spec.normalization = Normalization::Normalized;
    spec.seed = seed;
    std::vector<double> stat(trials);
    const double n23 = std::pow(static_cast<double>(n_dim), 2.0 / 3.0);
    parallel_for(trials, [&](int t) {
        MatrixSample s = sample(spec, static_cast<std::uint64_t>(t));
        std::vector<double> eig = hermitian_eigenvalues(s.entries);
        stat[t] = n23 * (eig.back() - 2.0);
    });
    return stat;
}

double ks_distance_to_f2(const std::vector<double>& sample, const F2Table& table) {
    return ks_distance(sample, [&](double t) { return f2_cdf(table, t); });
}

double rescaled_hermite(int n_dim, double x) {
    if (n_dim < 1 || n_dim > 10000) throw parameter_error("rescaled_hermite: N must be in 1..10^4");
    const double n = static_cast<double>(n_dim);
    double arg = 2.0 * std::sqrt(n) + x * std::pow(n, -1.0 / 6.0);
    return std::pow(n, 1.0 / 12.0) * hermite_function(n_dim, arg);
}

} // namespace rmt
