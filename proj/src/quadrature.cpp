#include "rmt/quadrature.hpp"

#include <cmath>

#include "rmt/errors.hpp"

namespace rmt {
namespace {

// QUADPACK dqk15 abscissae/weights (positive half; node 7 is the midpoint).
const double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
const double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018, 0.14065325971552592,
    0.16900472663926790, 0.19035057806478540, 0.20443294007529889, 0.20948214108472783};
const double kWg[4] = {
    0.12948496616886969, 0.27970539148927666, 0.38183005050511894, 0.41795918367346939};

} // namespace

double gk15_panel(const std::function<double(double)>& f, double a, double b, double* err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double x = h * kXgk[i];
        const double fsum = f(c - x) + f(c + x);
        kron += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    kron *= h;
    gauss *= h;
    if (err) *err = std::abs(kron - gauss);
    return kron;
}

namespace {

double integrate_rec(const std::function<double(double)>& f, double a, double b, double tol, int depth) {
    double err = 0;
    double v = gk15_panel(f, a, b, &err);
    if (err <= tol || err <= 1e-16 * std::abs(v)) return v;
    if (depth > 60) throw solver_error("quadrature: bisection depth cap exceeded");
    double c = 0.5 * (a + b);
    return integrate_rec(f, a, c, 0.5 * tol, depth + 1) + integrate_rec(f, c, b, 0.5 * tol, depth + 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    return integrate_rec(f, a, b, tol, 0);
}

} // namespace rmt
