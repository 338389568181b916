#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace rmt {

inline double mean(std::span<const double> xs) {
    double s = 0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

/// Unbiased sample variance.
inline double variance(std::span<const double> xs) {
    double m = mean(xs);
    double s = 0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

/// Standard error of the sample mean.
inline double stderr_of_mean(std::span<const double> xs) {
    return std::sqrt(variance(xs) / static_cast<double>(xs.size()));
}

/// |sample mean - expected| in units of the estimated standard error.
inline double z_score(std::span<const double> xs, double expected) {
    return std::abs(mean(xs) - expected) / stderr_of_mean(xs);
}

/// E|X - EX|^2 for complex samples (variance of real part + variance of imaginary part).
inline double complex_variance(std::span<const std::complex<double>> xs) {
    std::complex<double> m{};
    for (auto x : xs) m += x;
    m /= static_cast<double>(xs.size());
    double s = 0;
    for (auto x : xs) s += std::norm(x - m);
    return s / static_cast<double>(xs.size() - 1);
}

inline std::complex<double> complex_mean(std::span<const std::complex<double>> xs) {
    std::complex<double> m{};
    for (auto x : xs) m += x;
    return m / static_cast<double>(xs.size());
}

/// Binomial standard error of an empirical frequency.
inline double binomial_se(double p_hat, int n) {
    return std::sqrt(std::max(p_hat * (1.0 - p_hat), 1.0 / n) / n);
}

/// Kolmogorov–Smirnov distance between a sample and a CDF.
inline double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double f = cdf(sample[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

} // namespace rmt
