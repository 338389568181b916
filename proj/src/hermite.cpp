#include "rmt/hermite.hpp"

#include <cmath>
#include <limits>

#include "rmt/errors.hpp"

namespace rmt {
namespace {

// Scaled value v = mantissa * 2^exponent; keeps the upward recursion alive
// where e^{-x^2/4} alone would underflow.
struct Scaled {
    double m = 0;
    long e = 0;
    double to_double() const { return m == 0 ? 0.0 : std::ldexp(m, static_cast<int>(std::max<long>(std::min<long>(e, 40000), -40000))); }
};

Scaled scaled_psi0(double x) {
    // ln Psi_0 = -x^2/4 - ln(2 pi)/4
    double ln_v = -0.25 * x * x - 0.25 * std::log(2.0 * M_PI);
    double le = ln_v / M_LN2;
    long e = static_cast<long>(std::floor(le));
    Scaled s;
    s.e = e;
    s.m = std::exp(ln_v - static_cast<double>(e) * M_LN2);
    return s;
}

// (Psi_{k-1}, Psi_k) under a shared exponent.
struct PsiPairScaled {
    double a = 0; // Psi_{k-1}
    double b = 0; // Psi_k
    long e = 0;
};

PsiPairScaled psi_recursion(int k, double x) {
    Scaled p0 = scaled_psi0(x);
    PsiPairScaled s;
    s.a = 0.0;
    s.b = p0.m;
    s.e = p0.e;
    for (int j = 0; j < k; ++j) {
        double next = (x * s.b - std::sqrt(static_cast<double>(j)) * s.a) / std::sqrt(static_cast<double>(j + 1));
        s.a = s.b;
        s.b = next;
        double mag = std::max(std::abs(s.a), std::abs(s.b));
        if (mag > 0x1p+500) {
            s.a = std::ldexp(s.a, -500);
            s.b = std::ldexp(s.b, -500);
            s.e += 500;
        } else if (mag > 0 && mag < 0x1p-500) {
            s.a = std::ldexp(s.a, 500);
            s.b = std::ldexp(s.b, 500);
            s.e -= 500;
        }
    }
    return s;
}

double combine(double ma, long ea, double mb, long eb) {
    // ma 2^ea * mb 2^eb as a double (0 on underflow)
    if (ma == 0 || mb == 0) return 0.0;
    long e = ea + eb;
    if (e < -1100) return 0.0;
    if (e > 1000) return std::numeric_limits<double>::infinity();
    return std::ldexp(ma * mb, static_cast<int>(e));
}

} // namespace

double hermite_poly(int k, double x) {
    if (k < 0) throw parameter_error("hermite_poly: k must be >= 0");
    double hm1 = 0, h = 1; // H_{-1}, H_0
    for (int j = 0; j < k; ++j) {
        double next = x * h - j * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

double hermite_function(int k, double x) {
    if (k < 0) throw parameter_error("hermite_function: k must be >= 0");
    PsiPairScaled s = psi_recursion(k, x);
    return combine(s.b, s.e, 1.0, 0);
}

double hermite_function_prime(int k, double x) {
    if (k < 0) throw parameter_error("hermite_function_prime: k must be >= 0");
    PsiPairScaled s = psi_recursion(k, x);
    double psi_k = combine(s.b, s.e, 1.0, 0);
    double psi_km1 = combine(s.a, s.e, 1.0, 0);
    return -0.5 * x * psi_k + std::sqrt(static_cast<double>(k)) * psi_km1;
}

double hermite_kernel(int n, double x, double y) {
    if (n < 1) throw parameter_error("hermite_kernel: N must be >= 1");
    if (n == 1) return hermite_function(0, x) * hermite_function(0, y);
    const double rn = std::sqrt(static_cast<double>(n));
    if (std::abs(x - y) < 1e-6) {
        // confluent limit via Psi_N' = -(x/2) Psi_N + sqrt(N) Psi_{N-1}:
        // K_N(t,t) = N Psi_{N-1}^2 - sqrt(N(N-1)) Psi_{N-2} Psi_N
        double t = 0.5 * (x + y);
        PsiPairScaled s = psi_recursion(n, t); // (Psi_{N-1}, Psi_N)
        double psi_n = combine(s.b, s.e, 1.0, 0);
        double psi_nm1 = combine(s.a, s.e, 1.0, 0);
        PsiPairScaled s2 = psi_recursion(n - 1, t);
        double psi_nm2 = combine(s2.a, s2.e, 1.0, 0);
        return n * psi_nm1 * psi_nm1 - rn * std::sqrt(static_cast<double>(n - 1)) * psi_nm2 * psi_n;
    }
    PsiPairScaled sx = psi_recursion(n, x);
    PsiPairScaled sy = psi_recursion(n, y);
    double t1 = combine(sx.b, sx.e, sy.a, sy.e); // Psi_N(x) Psi_{N-1}(y)
    double t2 = combine(sx.a, sx.e, sy.b, sy.e); // Psi_{N-1}(x) Psi_N(y)
    return rn * (t1 - t2) / (x - y);
}

double hermite_kernel_direct(int n, double x, double y) {
    if (n < 1) throw parameter_error("hermite_kernel_direct: N must be >= 1");
    Scaled px = scaled_psi0(x), py = scaled_psi0(y);
    double ax = 0, bx = px.m;
    double ay = 0, by = py.m;
    long ex = px.e, ey = py.e;
    double sum = combine(bx, ex, by, ey);
    for (int j = 0; j + 1 < n; ++j) {
        double nx = (x * bx - std::sqrt(static_cast<double>(j)) * ax) / std::sqrt(static_cast<double>(j + 1));
        double ny = (y * by - std::sqrt(static_cast<double>(j)) * ay) / std::sqrt(static_cast<double>(j + 1));
        ax = bx;
        bx = nx;
        ay = by;
        by = ny;
        double mx = std::max(std::abs(ax), std::abs(bx));
        if (mx > 0x1p+500) {
            ax = std::ldexp(ax, -500);
            bx = std::ldexp(bx, -500);
            ex += 500;
        } else if (mx > 0 && mx < 0x1p-500) {
            ax = std::ldexp(ax, 500);
            bx = std::ldexp(bx, 500);
            ex -= 500;
        }
        double my = std::max(std::abs(ay), std::abs(by));
        if (my > 0x1p+500) {
            ay = std::ldexp(ay, -500);
            by = std::ldexp(by, -500);
            ey += 500;
        } else if (my > 0 && my < 0x1p-500) {
            ay = std::ldexp(ay, 500);
            by = std::ldexp(by, 500);
            ey -= 500;
        }
        sum += combine(bx, ex, by, ey);
    }
    return sum;
}

double gue_density_exact(int n, double x, bool normalized) {
    if (n < 1) throw parameter_error("gue_density_exact: N must be >= 1");
    if (!normalized) return hermite_kernel(n, x, x) / n;
    const double rn = std::sqrt(static_cast<double>(n));
    return rn * hermite_kernel(n, rn * x, rn * x) / n;
}

namespace {

// e^{-r} sum_{k<n} r^k / k!
double partial_exp_regularized(int n, double r) {
    if (r == 0.0) return 1.0;
    if (r < 700.0) {
        double term = std::exp(-r);
        double sum = term;
        for (int k = 1; k < n; ++k) {
            term *= r / k;
            sum += term;
        }
        return sum;
    }
    // log-space when e^{-r} underflows
    double lmax = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        double lt = -r + k * std::log(r) - std::lgamma(k + 1.0);
        if (lt > lmax) lmax = lt;
    }
    if (lmax == -std::numeric_limits<double>::infinity()) return 0.0;
    double acc = 0;
    for (int k = 0; k < n; ++k) {
        double lt = -r + k * std::log(r) - std::lgamma(k + 1.0);
        acc += std::exp(lt - lmax);
    }
    return std::exp(lmax) * acc;
}

} // namespace

double ginibre_density_exact(int n, std::complex<double> z, bool normalized) {
    if (n < 1) throw parameter_error("ginibre_density_exact: N must be >= 1");
    if (!normalized) return partial_exp_regularized(n, std::norm(z)) / (n * M_PI);
    return partial_exp_regularized(n, n * std::norm(z)) / M_PI;
}

} // namespace rmt
