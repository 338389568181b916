#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace rmt {

/// SplitMix64 finalizer; also the mixing function for stream derivation.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random stream addressed by (seed, a, b).
///
/// Streams with different addresses never share state, so Monte Carlo trials
/// are reproducible bit-for-bit regardless of thread schedule: trial t of an
/// experiment draws from stream (seed, t) and nothing else. The generator is
/// SplitMix64 over a state derived by chaining mix64 over the address words;
/// Gaussians use the Marsaglia polar method. Both choices are fixed: changing
/// either changes every sampled matrix.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0) {
        std::uint64_t s = mix64(seed + 0x9e3779b97f4a7c15ULL);
        s = mix64(s ^ (a + 0xd1b54a32d192ed03ULL));
        s = mix64(s ^ (b + 0x8cb92ba72f3d8dd7ULL));
        state_ = s;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    /// Standard real Gaussian via the polar method.
    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    /// Standard complex Gaussian (X + iY)/sqrt(2) with X, Y independent standard normals.
    std::complex<double> complex_gauss() {
        double x = gauss();
        double y = gauss();
        return {x * M_SQRT1_2, y * M_SQRT1_2};
    }

    /// +1 or -1 with equal probability.
    double rademacher() { return (next_u64() & 1u) ? 1.0 : -1.0; }

    /// Uniform on [-sqrt(3), sqrt(3)] (mean 0, variance 1).
    double uniform_symmetric() {
        static const double a = std::sqrt(3.0);
        return uniform(-a, a);
    }

    /// Standard Cauchy (no moments).
    double cauchy() { return std::tan(M_PI * (uniform() - 0.5)); }

private:
    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace rmt
