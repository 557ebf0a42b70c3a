#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterembed/cluster.hpp"
#include "clusterembed/embed.hpp"
#include "clusterembed/types.hpp"

namespace clusterembed::align {

/// Planar rigid map x -> Reflect(pi_flag) * Rotate(theta) * x + v, where
/// Rotate(theta) = [[cos, sin], [-sin, cos]] and Reflect negates the second
/// coordinate when pi_flag is 1.
struct RigidTransform {
    double theta = 0.0;
    int pi_flag = 0;
    Eigen::Vector2d v = Eigen::Vector2d::Zero();
};

Eigen::Vector2d apply_transform(const RigidTransform& t, const Eigen::Vector2d& x);
Coords apply_transform(const RigidTransform& t, const Coords& coords);

/// Summary geometry driving the separation-scale heuristic. delta_avg is the
/// paper's averaged inter-cluster dissimilarity (absent when kappa = 1) and
/// tau the mean embedded-cluster diameter.
struct ClusterGeometry {
    int kappa = 0;
    double tau = 0.0;
    std::optional<double> delta_avg;
    Matrix delta_pairs; // kappa x kappa, symmetric, zero diagonal
};

struct AlignmentConfig {
    double alpha = 1.0;
    int theta_grid = 64;
    int sweeps = 50;
    double tol = 1e-6;
    std::uint64_t seed = 0;

    void validate() const;
};

struct GlobalEmbedding {
    Coords coords;
    std::vector<RigidTransform> transforms;
    double final_stress = 0.0;
    double alpha_used = 1.0;
    /// Stress at initialization followed by the value after each sweep.
    std::vector<double> sweep_stresses;
};

/// Alpha-scaled cross-cluster stress: sum over cluster pairs i<j and points
/// l in C_i, m in C_j of (alpha*delta_lm - |T_i(y_l) - T_j(y_m)|)^2.
double stress(const DissimilarityMatrix& delta, const cluster::ClusterAssignment& assignment,
              const std::vector<Coords>& coords_by_cluster,
              const std::vector<RigidTransform>& transforms, double alpha);

ClusterGeometry cluster_geometry(const DissimilarityMatrix& delta,
                                 const cluster::ClusterAssignment& assignment,
                                 const embed::ClusterEmbedding& cluster_embedding);

/// alpha = max(1, kappa * tau / (2 pi Delta)); 1 when Delta is absent.
double alpha_heuristic(const ClusterGeometry& geometry);

/// Identity rotations; translations place cluster centroids at a classical
/// scaling layout of the alpha-scaled inter-cluster distances.
std::vector<RigidTransform> initialize_transforms(const DissimilarityMatrix& delta,
                                                  const cluster::ClusterAssignment& assignment,
                                                  const embed::ClusterEmbedding& cluster_embedding,
                                                  double alpha);

/// Alternating minimization of the stress over (theta, pi, v) per cluster.
/// The largest cluster is pinned to the identity transform; the others are
/// updated in decreasing-size order until the relative stress decrease per
/// sweep drops below tol.
GlobalEmbedding align(const DissimilarityMatrix& delta,
                      const cluster::ClusterAssignment& assignment,
                      const embed::ClusterEmbedding& cluster_embedding,
                      const AlignmentConfig& config);

/// Transforms persisted as a JSON array of {theta, pi, v}.
void save_transforms_json(const std::vector<RigidTransform>& transforms,
                          const std::string& path);

} // namespace clusterembed::align
