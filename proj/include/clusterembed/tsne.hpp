#pragma once

#include <cstdint>

#include "clusterembed/types.hpp"

namespace clusterembed::tsne {

/// Symmetric normalized affinities with the per-point Gaussian bandwidths
/// found by the perplexity calibration.
struct TsneAffinities {
    Matrix p;
    Vector sigma;
    double perplexity = 0.0;
};

enum class Init { given_coords, seeded_gaussian };

struct TsneConfig {
    double perplexity = 30.0;
    double exaggeration = 12.0;
    int exaggeration_iters = 250;
    double learning_rate = 200.0;
    double momentum = 0.5;
    double final_momentum = 0.8;
    int momentum_switch_iter = 250;
    int iters = 1000;
    Init init = Init::seeded_gaussian;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Per-point bisection on the Gaussian bandwidth until the conditional
/// perplexity 2^H matches u within 1e-3*u; affinities symmetrized to
/// p_ij = (p_i|j + p_j|i) / (2n).
TsneAffinities calibrate_affinities(const DissimilarityMatrix& delta, double u);

/// KL divergence sum p_ij log(p_ij / q_ij) with Cauchy-kernel q.
double kl_divergence(const Matrix& p, const Coords& coords);

/// Analytic gradient of kl_divergence, one row per point.
Matrix kl_gradient(const Matrix& p, const Coords& coords);

/// Gradient descent with momentum; affinities are multiplied by the
/// exaggeration factor for the first exaggeration_iters iterations.
Coords tsne_run(const TsneAffinities& affinities, const TsneConfig& config,
                const Coords& initial_coords);

/// Convenience overload for Init::seeded_gaussian.
Coords tsne_run(const TsneAffinities& affinities, const TsneConfig& config);

} // namespace clusterembed::tsne
