#include "rmt/harer_zagier.hpp"

#include <cmath>
#include <sstream>

#include "rmt/errors.hpp"

namespace rmt {

BigRat NInvSquaredPoly::evaluate(long n_dim) const {
    BigRat u(1, n_dim * n_dim);
    BigRat acc = 0, pw = 1;
    for (const BigRat& c : coeffs) {
        acc += c * pw;
        pw *= u;
    }
    return acc;
}

NInvSquaredPoly NInvSquaredPoly::operator+(const NInvSquaredPoly& o) const {
    NInvSquaredPoly r;
    r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), BigRat(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += coeffs[i];
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

NInvSquaredPoly NInvSquaredPoly::scaled(const BigRat& f) const {
    NInvSquaredPoly r = *this;
    for (BigRat& c : r.coeffs) c *= f;
    return r;
}

void NInvSquaredPoly::trim() {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

std::string NInvSquaredPoly::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << " + ";
        os << coeffs[i].get_str();
        if (i == 1) os << " u";
        if (i > 1) os << " u^" << i;
    }
    return os.str();
}

NInvSquaredPoly hz_bk_symbolic(int k) {
    if (k < 1) throw parameter_error("hz_bk_symbolic: k must be >= 1");
    NInvSquaredPoly b_prev; // b_1 = 1
    b_prev.coeffs = {BigRat(1)};
    if (k == 1) return b_prev;
    NInvSquaredPoly b_cur; // b_2 = 1 + u/2
    b_cur.coeffs = {BigRat(1), BigRat(1, 2)};
    // b_{j+1} = b_j + j(j+1)/4 u b_{j-1}
    for (int j = 2; j < k; ++j) {
        NInvSquaredPoly shifted;
        shifted.coeffs.assign(b_prev.coeffs.size() + 1, BigRat(0));
        BigRat f = BigRat(static_cast<long>(j) * (j + 1)) / 4; // division keeps the fraction canonical
        for (std::size_t i = 0; i < b_prev.coeffs.size(); ++i) shifted.coeffs[i + 1] = f * b_prev.coeffs[i];
        NInvSquaredPoly b_next = b_cur + shifted;
        b_prev = std::move(b_cur);
        b_cur = std::move(b_next);
    }
    b_cur.trim();
    return b_cur;
}

BigRat hz_bk(int k, long n_dim) {
    if (n_dim < 1) throw parameter_error("hz_bk: N must be >= 1");
    return hz_bk_symbolic(k).evaluate(n_dim);
}

MomentPolynomial hz_moment(int k) {
    NInvSquaredPoly b = hz_bk_symbolic(k);
    BigInt ck = catalan(k);
    MomentPolynomial m;
    m.genus_coeffs.reserve(b.coeffs.size());
    for (const BigRat& c : b.coeffs) {
        BigRat v = c * BigRat(ck);
        if (v.get_den() != 1)
            throw solver_error("hz_moment: C_k b_k has a non-integer genus coefficient");
        m.genus_coeffs.push_back(v.get_num());
    }
    return m;
}

GeneratingCheck hz_generating_check(int n_dim, std::span<const double> s_grid, int k_trunc) {
    if (n_dim < 1) throw parameter_error("hz_generating_check: N must be >= 1");
    if (k_trunc < 2) throw parameter_error("hz_generating_check: K must be >= 2");

    // numeric b_k via the recursion (b_0 = b_1 = 1)
    std::vector<double> b(k_trunc + 1);
    b[0] = 1.0;
    b[1] = 1.0;
    const double n2 = static_cast<double>(n_dim) * n_dim;
    if (k_trunc >= 2) b[2] = 1.0 + 0.5 / n2;
    for (int j = 2; j + 1 <= k_trunc; ++j) b[j + 1] = b[j] + (static_cast<double>(j) * (j + 1)) / (4.0 * n2) * b[j - 1];

    GeneratingCheck out;
    out.residuals.reserve(s_grid.size());
    for (double s : s_grid) {
        if (!(s >= 0.0 && s < 1.0)) throw parameter_error("hz_generating_check: s must lie in [0, 1)");
        double series = 1.0;
        double factor = 2.0 * n_dim * s; // (2Ns)^{k+1} / (k+1)!
        double term_base = factor;       // k = 0 term: (2Ns)/1!
        double prev_term = 0;
        for (int k = 0; k <= k_trunc; ++k) {
            double term = b[k] * term_base;
            series += term;
            if (k == k_trunc) {
                if (prev_term != 0.0 && std::abs(term / prev_term) >= 0.5) {
                    std::ostringstream os;
                    os << "hz_generating_check: truncated series not converged at K=" << k_trunc
                       << "; reduce s below ~" << 0.45 * s / std::abs(term / prev_term);
                    throw parameter_error(os.str());
                }
            }
            prev_term = term;
            term_base *= factor / (k + 2);
        }
        double closed = std::pow((1.0 + s) / (1.0 - s), n_dim);
        double r = std::abs(series - closed);
        out.residuals.push_back(r);
        out.max_residual = std::max(out.max_residual, r);
    }
    return out;
}

double moment_upper_bound(int k, long n_dim) {
    if (k < 0 || n_dim < 1) throw parameter_error("moment_upper_bound: need k >= 0, N >= 1");
    double kk = static_cast<double>(k);
    return catalan(k).get_d() * std::exp(kk * kk * kk / (2.0 * n_dim * n_dim));
}

double lambda_max_tail(double eps, int k, long n_dim) {
    if (!(eps > 0) || k < 1 || n_dim < 1) throw parameter_error("lambda_max_tail: need eps > 0, k >= 1, N >= 1");
    double kk = static_cast<double>(k);
    double log_v = std::log(static_cast<double>(n_dim)) - 2.0 * kk * std::log(2.0 + eps) + kk * std::log(4.0) -
                   1.5 * std::log(kk) + kk * kk * kk / (2.0 * n_dim * n_dim);
    return std::exp(log_v);
}

double lambda_max_tail_optimized(double t, long n_dim) {
    if (!(t > 0)) throw parameter_error("lambda_max_tail_optimized: need t > 0");
    double n23 = std::pow(static_cast<double>(n_dim), 2.0 / 3.0);
    int k = static_cast<int>(std::floor(n23 * std::sqrt(t)));
    if (k < 1) k = 1;
    double eps = t / n23;
    return lambda_max_tail(eps, k, n_dim);
}

double lambda_max_tail_limit(double t) {
    if (!(t > 0)) throw parameter_error("lambda_max_tail_limit: need t > 0");
    return std::pow(t, -0.75) * std::exp(-0.5 * std::pow(t, 1.5));
}

} // namespace rmt
