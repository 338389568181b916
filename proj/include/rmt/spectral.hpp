#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rmt/ensembles.hpp"
#include "rmt/matrix.hpp"
#include "rmt/rng.hpp"

namespace rmt {

/// Uniform-bin histogram; density mode integrates to 1 over the in-range bins.
struct Histogram {
    enum class Mode { density, count };

    std::vector<double> edges;  ///< bins+1 ascending, uniform
    std::vector<double> counts; ///< raw counts per bin
    double underflow = 0;
    double overflow = 0;
    double total = 0; ///< all tallied values including out-of-range
    Mode mode = Mode::density;

    int bins() const { return static_cast<int>(counts.size()); }
    double bin_width() const { return edges[1] - edges[0]; }
    /// Normalized height of bin b (density mode) or raw count.
    double value(int b) const;
    std::string to_csv() const; ///< header: bin_left,bin_right,density
};

Histogram esd_histogram(std::span<const double> values, int bins, double lo, double hi,
                        Histogram::Mode mode = Histogram::Mode::density);

/// L1 distance between a density histogram and a reference density, computed
/// bin by bin with the reference integrated over each bin.
double histogram_l1_distance(const Histogram& h, const std::function<double(double)>& density);

/// Spectral measure: an empirical eigenvalue list or a closed-form law with a
/// uniform density/moment/stieltjes/sample interface.
class SpectralMeasure {
public:
    enum class Kind { Empirical, EmpiricalComplex, Semicircle, MarchenkoPastur, CircularUniform, FiniteNKernel };

    static SpectralMeasure empirical(std::vector<double> eigenvalues); // sorted internally
    static SpectralMeasure empirical_complex(std::vector<cdouble> eigenvalues);
    static SpectralMeasure semicircle();
    static SpectralMeasure marchenko_pastur(double c); // c in (0, 1]
    static SpectralMeasure circular_uniform();
    static SpectralMeasure finite_n_kernel(int n); // exact normalized GUE(n) density

    Kind kind() const { return kind_; }
    double mass() const { return 1.0; }

    /// Density on the real line (closed-form real variants only).
    double density(double x) const;
    /// k-th moment; exact quadrature for closed forms, power sum for empirical.
    double moment(int k) const;
    /// Stieltjes transform at z with Im z > 0 (real-line variants).
    cdouble stieltjes(cdouble z) const;
    /// One draw from the measure.
    double sample(RandomStream& rng) const;

    /// Support interval used for quadrature/sampling of real closed forms.
    std::pair<double, double> support() const;

    const std::vector<double>& eigenvalues() const { return eigs_; }
    const std::vector<cdouble>& complex_eigenvalues() const { return ceigs_; }

private:
    SpectralMeasure() = default;
    Kind kind_ = Kind::Semicircle;
    std::vector<double> eigs_;
    std::vector<cdouble> ceigs_;
    double mp_ratio_ = 0.5;
    int kernel_n_ = 1;
};

double semicircle_density(double x);
double marchenko_pastur_density(double x, double c);

/// Density samples on a uniform grid from a Stieltjes transform via the
/// inversion limit (1/pi) Im S(x + i eps), eps -> 0.
struct InversionResult {
    std::vector<double> grid;
    std::vector<double> eps;                 ///< the decreasing schedule used
    std::vector<std::vector<double>> levels; ///< (1/pi) Im S(x + i eps_j) per level
    std::vector<double> density;             ///< linear extrapolation to eps = 0
    bool converged = true;                   ///< false when the eps-levels oscillate
};
InversionResult stieltjes_invert(const std::function<cdouble(cdouble)>& transform, double a, double b,
                                 int grid_points,
                                 std::vector<double> eps_schedule = {1e-1, 1e-2, 1e-3, 1e-4});

/// Monte Carlo variance of tr[(A - z)^-1] for GOE(N) against the 32/(N Im(z)^4)
/// bound, plus the self-consistency residual |S^2 + z S + 1| of the mean.
struct ResolventVariance {
    double empirical_variance = 0; ///< E|X - EX|^2
    double bound = 0;
    double self_consistency_residual = 0;
    cdouble mean_trace{};
};
ResolventVariance resolvent_trace_variance(const EnsembleSpec& spec, cdouble z, int trials);

} // namespace rmt
