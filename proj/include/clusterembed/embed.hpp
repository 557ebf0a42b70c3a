#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clusterembed/cluster.hpp"
#include "clusterembed/types.hpp"

namespace clusterembed::embed {

enum class Method { pca, classical_scaling, loe };

/// Ordinal embedding hyperparameters (hinge objective over kNN triples).
struct LoeConfig {
    int k = 10;
    double nu = 1e-6;
    double learning_rate = 1e-2;
    int epochs = 500;
    std::uint64_t seed = 0;

    void validate() const;
};

/// One m_c x 2 coordinate block per cluster, rows in ascending member order.
struct ClusterEmbedding {
    std::vector<Coords> coords;
    Method method = Method::pca;
};

/// Centers rows and projects onto the top-2 principal directions
/// (descending eigenvalue order, largest-magnitude loading made positive).
Coords pca_embed(const Matrix& cluster_points);

/// Classical scaling of a dissimilarity submatrix: double-centered Gram
/// matrix, top-2 eigenpairs, negative eigenvalues clamped to zero.
Coords classical_scaling_embed(const Matrix& cluster_delta);

/// Hinge loss over triples (i, j in N_i, l not in N_i): sum of
/// max(0, |y_i-y_j| + nu - |y_i-y_l|)^2.
double loe_loss(const Coords& coords, const std::vector<std::vector<int>>& neighbor_sets,
                double nu);

/// Analytic gradient of loe_loss, one row per point.
Matrix loe_gradient(const Coords& coords, const std::vector<std::vector<int>>& neighbor_sets,
                    double nu);

/// Full-batch gradient descent on the hinge objective from a PCA
/// initialization (unit-RMS normalized, seeded jitter of 1e-4 of that scale).
/// The step size halves whenever a step would increase the loss.
Coords loe_embed(const Matrix& cluster_points, const LoeConfig& config);

/// Scale factor gamma minimizing sum (gamma*|y_i-y_j| - delta_ij)^2 over
/// within-cluster pairs; the caller multiplies coords by gamma.
double scale_sync(const Matrix& cluster_delta, const Coords& coords);

/// Embeds every cluster with the chosen method; LOE outputs are rescaled by
/// scale_sync. Per-cluster failures are rethrown tagged with the cluster id.
ClusterEmbedding embed_all_clusters(const DataMatrix& data, const DissimilarityMatrix& delta,
                                    const cluster::ClusterAssignment& assignment, Method method,
                                    const LoeConfig& loe_config = {});

/// CSV `index,cluster,y1,y2` where index is taken from original_indices.
void save_embedding_csv(const std::string& path, const Coords& coords,
                        const std::vector<int>& clusters,
                        const std::vector<int>& original_indices);

} // namespace clusterembed::embed
