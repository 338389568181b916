#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmt/matrix.hpp"
#include "rmt/rng.hpp"

namespace rmt {

/// Default CLI/experiment seed; fixed so identical configs give identical output.
inline constexpr std::uint64_t kDefaultSeed = 0x524d544c4142ULL; // "RMTLAB"

enum class EnsembleKind { GOE, GUE, GinibreComplex, WignerGeneric, Wishart };
enum class Normalization { Normalized, Unnormalized };
enum class EntryLaw { Gauss, Rademacher, UniformSymmetric, CauchyStd };
enum class DiagonalMode {
    Ensemble, ///< the ensemble's own convention (GOE diagonal variance 2/N)
    Unit,     ///< diagonal rescaled to the off-diagonal variance
    Zero      ///< diagonal zeroed out
};

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::GUE;
    int dimension = 1;        ///< N
    int second_dimension = 0; ///< p (Wishart only)
    Normalization normalization = Normalization::Normalized;
    EntryLaw entry_law = EntryLaw::Gauss; ///< WignerGeneric only
    DiagonalMode diagonal = DiagonalMode::Ensemble;
    std::uint64_t seed = kDefaultSeed;
};

struct MatrixSample {
    CMatrix entries; ///< N x N, or N x p for Wishart factors
    EnsembleSpec spec;
    std::uint64_t trial = 0;
};

/// True when the entry law has finite variance (moment checks are skipped for
/// CauchyStd).
bool entry_law_has_variance(EntryLaw law);

/// One realization. Pure function of (spec, trial): every trial owns its own
/// counter-derived RNG stream.
MatrixSample sample(const EnsembleSpec& spec, std::uint64_t trial);

/// Discretized matrix random walk: partial sums A(k) = sum_{i<=k} increment * A_i
/// of i.i.d. ensemble samples, k = 1..steps. GUE or GOE only.
std::vector<MatrixSample> sample_dyson_walk(const EnsembleSpec& spec, int steps, double increment,
                                            std::uint64_t trial);

/// W = X X^* for a Wishart factor sample (N x p -> N x N, exactly Hermitian).
CMatrix wishart_gram(const MatrixSample& x);

std::string to_string(EnsembleKind kind);

} // namespace rmt
