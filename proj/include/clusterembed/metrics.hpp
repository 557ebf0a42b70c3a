#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterembed/cluster.hpp"
#include "clusterembed/types.hpp"

#include <nlohmann/json_fwd.hpp>

namespace clusterembed::metrics {

enum class Scope { global, clusterwise };

/// Mean over points of the fraction of original-space k nearest neighbors
/// (by delta) retained among the embedded k nearest neighbors. Ties broken
/// by lower index on both sides.
double knn_recall(const DissimilarityMatrix& delta_orig, const Coords& coords, int k);

/// Spearman rank correlation between original dissimilarities and embedded
/// distances; clusterwise scope averages the per-class value over
/// ground-truth classes.
double spearman(const DissimilarityMatrix& delta_orig, const Coords& coords, Scope scope,
                const std::vector<int>* labels = nullptr);

/// sum (delta_ij - d_ij)^2 / sum delta_ij^2 over the pairs in scope.
double normalized_stress(const DissimilarityMatrix& delta_orig, const Coords& coords,
                         Scope scope, const std::vector<int>* labels = nullptr);

/// Spearman correlation between original and embedded average inter-class
/// distances over unordered class pairs. Requires at least 3 classes.
double class_preservation(const DissimilarityMatrix& delta_orig, const Coords& coords,
                          const std::vector<int>& labels);

/// Fraction of unordered point pairs on which the two partitions agree.
/// Evaluated over the assignment's kept (non-noise) indices.
double rand_index(const cluster::ClusterAssignment& a, const std::vector<int>& b);

struct MetricsReport {
    std::map<int, double> knn_recall;
    double spearman_global = 0.0;
    double stress_global = 0.0;
    std::optional<double> spearman_clusterwise_mean;
    std::optional<double> stress_clusterwise_mean;
    std::optional<double> class_preservation;
    std::optional<double> rand_index;
};

/// Evaluates the full Table-style suite. Clusterwise values and class
/// preservation require labels; rand_index additionally needs an assignment.
MetricsReport evaluate(const DissimilarityMatrix& delta_orig, const Coords& coords,
                       const std::vector<int>& knn_ks,
                       const std::vector<int>* labels = nullptr,
                       const cluster::ClusterAssignment* assignment = nullptr);

nlohmann::json to_json(const MetricsReport& report);

} // namespace clusterembed::metrics
