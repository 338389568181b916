#include "rmt/ensembles.hpp"

#include <cmath>

#include "rmt/errors.hpp"

namespace rmt {
namespace {

void validate(const EnsembleSpec& spec) {
    if (spec.dimension < 1) throw parameter_error("ensemble dimension must be >= 1");
    if (spec.kind == EnsembleKind::Wishart && spec.second_dimension < 1)
        throw parameter_error("Wishart needs second dimension p >= 1");
}

double draw_entry(RandomStream& rng, EntryLaw law) {
    switch (law) {
        case EntryLaw::Gauss: return rng.gauss();
        case EntryLaw::Rademacher: return rng.rademacher();
        case EntryLaw::UniformSymmetric: return rng.uniform_symmetric();
        case EntryLaw::CauchyStd: return rng.cauchy();
    }
    return 0;
}

// Fill order is fixed (row-major over the upper triangle) so that a sample is
// fully determined by its stream.
CMatrix sample_entries(const EnsembleSpec& spec, RandomStream& rng) {
    const int n = spec.dimension;
    const double scale = spec.normalization == Normalization::Normalized ? 1.0 / std::sqrt(static_cast<double>(n)) : 1.0;

    switch (spec.kind) {
        case EnsembleKind::GUE: {
            CMatrix a(n, n);
            for (int i = 0; i < n; ++i) {
                double d = rng.gauss();
                if (spec.diagonal == DiagonalMode::Zero) d = 0.0;
                a(i, i) = scale * d;
                for (int j = i + 1; j < n; ++j) {
                    cdouble z = rng.complex_gauss();
                    a(i, j) = scale * z;
                    a(j, i) = scale * std::conj(z);
                }
            }
            return a;
        }
        case EnsembleKind::GOE: {
            CMatrix a(n, n);
            for (int i = 0; i < n; ++i) {
                double d = rng.gauss() * std::sqrt(2.0); // variance 2 on the diagonal
                if (spec.diagonal == DiagonalMode::Unit) d *= M_SQRT1_2;
                if (spec.diagonal == DiagonalMode::Zero) d = 0.0;
                a(i, i) = scale * d;
                for (int j = i + 1; j < n; ++j) {
                    double g = rng.gauss();
                    a(i, j) = scale * g;
                    a(j, i) = scale * g;
                }
            }
            return a;
        }
        case EnsembleKind::WignerGeneric: {
            CMatrix a(n, n);
            for (int i = 0; i < n; ++i) {
                double d = draw_entry(rng, spec.entry_law);
                if (spec.diagonal == DiagonalMode::Zero) d = 0.0;
                a(i, i) = scale * d;
                for (int j = i + 1; j < n; ++j) {
                    double g = draw_entry(rng, spec.entry_law);
                    a(i, j) = scale * g;
                    a(j, i) = scale * g;
                }
            }
            return a;
        }
        case EnsembleKind::GinibreComplex: {
            CMatrix a(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) a(i, j) = scale * rng.complex_gauss();
            return a;
        }
        case EnsembleKind::Wishart: {
            const int p = spec.second_dimension;
            const double s = spec.normalization == Normalization::Normalized ? 1.0 / std::sqrt(static_cast<double>(p)) : 1.0;
            CMatrix x(n, p);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < p; ++j) x(i, j) = s * rng.gauss();
            return x;
        }
    }
    throw parameter_error("unknown ensemble kind");
}

} // namespace

bool entry_law_has_variance(EntryLaw law) { return law != EntryLaw::CauchyStd; }

MatrixSample sample(const EnsembleSpec& spec, std::uint64_t trial) {
    validate(spec);
    RandomStream rng(spec.seed, trial);
    return MatrixSample{sample_entries(spec, rng), spec, trial};
}

std::vector<MatrixSample> sample_dyson_walk(const EnsembleSpec& spec, int steps, double increment,
                                            std::uint64_t trial) {
    validate(spec);
    if (spec.kind != EnsembleKind::GUE && spec.kind != EnsembleKind::GOE)
        throw parameter_error("dyson walk is defined for GUE/GOE only");
    if (steps < 1) throw parameter_error("dyson walk needs steps >= 1");
    if (!(increment > 0)) throw parameter_error("dyson walk needs increment > 0");

    const int n = spec.dimension;
    std::vector<MatrixSample> walk;
    walk.reserve(steps);
    CMatrix acc(n, n);
    for (int k = 0; k < steps; ++k) {
        RandomStream rng(spec.seed, trial, static_cast<std::uint64_t>(k) + 1);
        CMatrix step = sample_entries(spec, rng);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc(i, j) += increment * step(i, j);
        walk.push_back(MatrixSample{acc, spec, trial});
    }
    return walk;
}

CMatrix wishart_gram(const MatrixSample& x) {
    const int n = x.entries.rows();
    const int p = x.entries.cols();
    CMatrix w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            cdouble s{};
            for (int k = 0; k < p; ++k) s += x.entries(i, k) * std::conj(x.entries(j, k));
            w(i, j) = s;
            w(j, i) = std::conj(s);
        }
    for (int i = 0; i < n; ++i) w(i, i) = cdouble{w(i, i).real(), 0.0};
    return w;
}

std::string to_string(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::GOE: return "goe";
        case EnsembleKind::GUE: return "gue";
        case EnsembleKind::GinibreComplex: return "ginibre";
        case EnsembleKind::WignerGeneric: return "wigner";
        case EnsembleKind::Wishart: return "wishart";
    }
    return "?";
}

} // namespace rmt
