#include "rmt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rmt/eigen.hpp"
#include "rmt/errors.hpp"
#include "rmt/hermite.hpp"
#include "rmt/parallel.hpp"
#include "rmt/quadrature.hpp"
#include "rmt/stats.hpp"

namespace rmt {

double Histogram::value(int b) const {
    if (mode == Mode::count) return counts[b];
    double in_range = 0;
    for (double c : counts) in_range += c;
    if (in_range == 0) return 0.0;
    return counts[b] / (in_range * bin_width());
}

std::string Histogram::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "bin_left,bin_right,density\n";
    for (int b = 0; b < bins(); ++b) os << edges[b] << "," << edges[b + 1] << "," << value(b) << "\n";
    return os.str();
}

Histogram esd_histogram(std::span<const double> values, int bins, double lo, double hi, Histogram::Mode mode) {
    if (bins < 1) throw parameter_error("esd_histogram: bins must be >= 1");
    if (!(hi > lo)) throw parameter_error("esd_histogram: empty range");
    if (values.empty()) throw parameter_error("esd_histogram: empty input");
    Histogram h;
    h.mode = mode;
    h.edges.resize(bins + 1);
    const double w = (hi - lo) / bins;
    for (int b = 0; b <= bins; ++b) h.edges[b] = lo + b * w;
    h.counts.assign(bins, 0.0);
    for (double v : values) {
        h.total += 1;
        if (v < lo) {
            h.underflow += 1;
        } else if (v >= hi) {
            h.overflow += 1;
        } else {
            int b = std::min(bins - 1, static_cast<int>((v - lo) / w));
            h.counts[b] += 1;
        }
    }
    return h;
}

double histogram_l1_distance(const Histogram& h, const std::function<double(double)>& density) {
    double d = 0;
    double in_range = 0;
    for (double c : h.counts) in_range += c;
    for (int b = 0; b < h.bins(); ++b) {
        double ref_mass = integrate(density, h.edges[b], h.edges[b + 1], 1e-9);
        double emp_mass = in_range > 0 ? h.counts[b] / in_range : 0.0;
        d += std::abs(emp_mass - ref_mass);
    }
    return d;
}

double semicircle_density(double x) {
    if (std::abs(x) >= 2.0) return 0.0;
    return std::sqrt(4.0 - x * x) / (2.0 * M_PI);
}

double marchenko_pastur_density(double x, double c) {
    const double lp = (1.0 + std::sqrt(c)) * (1.0 + std::sqrt(c));
    const double lm = (1.0 - std::sqrt(c)) * (1.0 - std::sqrt(c));
    if (x <= lm || x >= lp) return 0.0;
    return std::sqrt((lp - x) * (x - lm)) / (2.0 * M_PI * c * x);
}

SpectralMeasure SpectralMeasure::empirical(std::vector<double> eigenvalues) {
    SpectralMeasure m;
    m.kind_ = Kind::Empirical;
    std::sort(eigenvalues.begin(), eigenvalues.end());
    m.eigs_ = std::move(eigenvalues);
    if (m.eigs_.empty()) throw parameter_error("empirical measure needs at least one eigenvalue");
    return m;
}

SpectralMeasure SpectralMeasure::empirical_complex(std::vector<cdouble> eigenvalues) {
    SpectralMeasure m;
    m.kind_ = Kind::EmpiricalComplex;
    m.ceigs_ = std::move(eigenvalues);
    return m;
}

SpectralMeasure SpectralMeasure::semicircle() {
    SpectralMeasure m;
    m.kind_ = Kind::Semicircle;
    return m;
}

SpectralMeasure SpectralMeasure::marchenko_pastur(double c) {
    if (!(c > 0.0 && c <= 1.0)) throw parameter_error("Marchenko-Pastur ratio must be in (0, 1]");
    SpectralMeasure m;
    m.kind_ = Kind::MarchenkoPastur;
    m.mp_ratio_ = c;
    return m;
}

SpectralMeasure SpectralMeasure::circular_uniform() {
    SpectralMeasure m;
    m.kind_ = Kind::CircularUniform;
    return m;
}

SpectralMeasure SpectralMeasure::finite_n_kernel(int n) {
    if (n < 1) throw parameter_error("finite_n_kernel needs N >= 1");
    SpectralMeasure m;
    m.kind_ = Kind::FiniteNKernel;
    m.kernel_n_ = n;
    return m;
}

std::pair<double, double> SpectralMeasure::support() const {
    switch (kind_) {
        case Kind::Empirical: return {eigs_.front(), eigs_.back()};
        case Kind::Semicircle: return {-2.0, 2.0};
        case Kind::MarchenkoPastur: {
            double s = std::sqrt(mp_ratio_);
            return {(1 - s) * (1 - s), (1 + s) * (1 + s)};
        }
        case Kind::FiniteNKernel: {
            // Gaussian tails: the weight factor is < 1e-16 beyond this padding
            double pad = 12.0 / std::sqrt(static_cast<double>(kernel_n_));
            return {-2.0 - pad, 2.0 + pad};
        }
        default: throw parameter_error("support: not a real-line measure");
    }
}

double SpectralMeasure::density(double x) const {
    switch (kind_) {
        case Kind::Semicircle: return semicircle_density(x);
        case Kind::MarchenkoPastur: return marchenko_pastur_density(x, mp_ratio_);
        case Kind::FiniteNKernel: return gue_density_exact(kernel_n_, x, true);
        default: throw parameter_error("density: not a closed-form real-line measure");
    }
}

double SpectralMeasure::moment(int k) const {
    if (k < 0) throw parameter_error("moment order must be >= 0");
    if (k == 0) return 1.0;
    switch (kind_) {
        case Kind::Empirical: {
            double s = 0;
            for (double l : eigs_) s += std::pow(l, k);
            return s / static_cast<double>(eigs_.size());
        }
        case Kind::Semicircle: {
            // x = 2 sin(theta) removes the edge singularity:
            // (1/2pi) int x^k sqrt(4 - x^2) dx = (2/pi) int (2 sin t)^k cos^2 t dt
            if (k % 2 == 1) return 0.0;
            auto f = [k](double th) {
                double c = std::cos(th);
                return std::pow(2.0 * std::sin(th), k) * c * c;
            };
            return (2.0 / M_PI) * integrate(f, -M_PI / 2, M_PI / 2, 1e-12);
        }
        case Kind::MarchenkoPastur: {
            auto [lm, lp] = support();
            double mid = 0.5 * (lm + lp), half = 0.5 * (lp - lm);
            auto f = [&](double th) {
                double x = mid + half * std::sin(th);
                double c = std::cos(th);
                return std::pow(x, k) * half * c * half * c / (2.0 * M_PI * mp_ratio_ * x);
            };
            return integrate(f, -M_PI / 2, M_PI / 2, 1e-12);
        }
        case Kind::FiniteNKernel: {
            auto [a, b] = support();
            return integrate([this, k](double x) { return std::pow(x, k) * density(x); }, a, b, 1e-10);
        }
        case Kind::CircularUniform: return 0.0; // rotational symmetry
        default: throw parameter_error("moment: unsupported measure variant");
    }
}

cdouble SpectralMeasure::stieltjes(cdouble z) const {
    if (!(z.imag() > 0)) throw parameter_error("stieltjes transform needs Im z > 0");
    switch (kind_) {
        case Kind::Empirical: {
            cdouble s{};
            for (double l : eigs_) s += 1.0 / (l - z);
            return s / static_cast<double>(eigs_.size());
        }
        case Kind::Semicircle: {
            // the root of S^2 + zS + 1 = 0 lying in the upper half-plane
            cdouble root = std::sqrt(z * z - 4.0);
            cdouble s1 = 0.5 * (-z + root);
            cdouble s2 = 0.5 * (-z - root);
            return s1.imag() > 0 ? s1 : s2;
        }
        case Kind::MarchenkoPastur:
        case Kind::FiniteNKernel: {
            auto [a, b] = support();
            double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            // t = mid + half sin(theta) keeps MP edges smooth; harmless for the kernel law
            auto re = [&](double th) {
                double t = mid + half * std::sin(th);
                cdouble v = density(t) / (t - z);
                return v.real() * half * std::cos(th);
            };
            auto im = [&](double th) {
                double t = mid + half * std::sin(th);
                cdouble v = density(t) / (t - z);
                return v.imag() * half * std::cos(th);
            };
            return {integrate(re, -M_PI / 2, M_PI / 2, 1e-9), integrate(im, -M_PI / 2, M_PI / 2, 1e-9)};
        }
        default: throw parameter_error("stieltjes: not a real-line measure");
    }
}

double SpectralMeasure::sample(RandomStream& rng) const {
    switch (kind_) {
        case Kind::Empirical: return eigs_[rng.below(eigs_.size())];
        case Kind::Semicircle:
        case Kind::MarchenkoPastur:
        case Kind::FiniteNKernel: {
            // inverse CDF by bisection on the quadrature CDF
            auto [a, b] = support();
            double u = rng.uniform();
            double lo = a, hi = b;
            for (int it = 0; it < 48; ++it) {
                double midpt = 0.5 * (lo + hi);
                double cdf = integrate([this](double t) { return density(t); }, a, midpt, 1e-9);
                (cdf < u ? lo : hi) = midpt;
            }
            return 0.5 * (lo + hi);
        }
        default: throw parameter_error("sample: unsupported measure variant");
    }
}

InversionResult stieltjes_invert(const std::function<cdouble(cdouble)>& transform, double a, double b,
                                 int grid_points, std::vector<double> eps_schedule) {
    if (grid_points < 2) throw parameter_error("stieltjes_invert: need at least 2 grid points");
    if (eps_schedule.size() < 2) throw parameter_error("stieltjes_invert: need at least 2 eps levels");
    std::sort(eps_schedule.begin(), eps_schedule.end(), std::greater<>());

    InversionResult res;
    res.grid.resize(grid_points);
    res.density.resize(grid_points);
    res.eps = eps_schedule;
    res.levels.assign(eps_schedule.size(), std::vector<double>(grid_points));
    const std::size_t m = eps_schedule.size();
    for (int i = 0; i < grid_points; ++i) {
        double x = a + (b - a) * i / (grid_points - 1);
        res.grid[i] = x;
        std::vector<double> f(m);
        for (std::size_t j = 0; j < m; ++j) {
            f[j] = transform(cdouble{x, eps_schedule[j]}).imag() / M_PI;
            res.levels[j][i] = f[j];
        }
        // linear-in-eps extrapolation from the two smallest levels
        auto lin = [&](std::size_t j1, std::size_t j2) {
            double e1 = eps_schedule[j1], e2 = eps_schedule[j2];
            return (e1 * f[j2] - e2 * f[j1]) / (e1 - e2);
        };
        double best = lin(m - 2, m - 1);
        res.density[i] = best;
        // oscillation across levels flags a non-convergent limit
        if (m >= 3) {
            double prev = lin(m - 3, m - 2);
            if (std::abs(best - prev) > 1e-2 * std::max(1.0, std::abs(best))) res.converged = false;
        }
    }
    return res;
}

ResolventVariance resolvent_trace_variance(const EnsembleSpec& spec, cdouble z, int trials) {
    if (spec.kind != EnsembleKind::GOE) throw parameter_error("resolvent_trace_variance is specified for GOE");
    if (!(z.imag() > 0)) throw parameter_error("resolvent_trace_variance needs Im z > 0");
    if (trials < 100) throw parameter_error("resolvent_trace_variance needs trials >= 100");

    const int n = spec.dimension;
    std::vector<cdouble> traces(trials);
    parallel_for(trials, [&](int t) {
        MatrixSample s = sample(spec, static_cast<std::uint64_t>(t));
        std::vector<double> eig = hermitian_eigenvalues(s.entries);
        cdouble tr{};
        for (double l : eig) tr += 1.0 / (l - z);
        traces[t] = tr / static_cast<double>(n);
    });

    ResolventVariance out;
    out.mean_trace = complex_mean(traces);
    out.empirical_variance = complex_variance(traces);
    double imz = z.imag();
    out.bound = 32.0 / (n * imz * imz * imz * imz);
    out.self_consistency_residual = std::abs(out.mean_trace * out.mean_trace + z * out.mean_trace + 1.0);
    return out;
}

} // namespace rmt
