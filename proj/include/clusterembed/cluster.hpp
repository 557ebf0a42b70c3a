#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clusterembed/types.hpp"

namespace clusterembed::cluster {

inline constexpr int kNoise = -1;

/// Partition of point indices into kappa clusters; DBSCAN noise marked kNoise.
struct ClusterAssignment {
    std::vector<int> assignment; // values in {0..kappa-1} or kNoise
    int kappa = 0;
    std::vector<int> kept_indices; // ascending, excludes noise

    /// Relabels arbitrary integer labels (noise: any negative) to 0..kappa-1
    /// in order of first appearance.
    static ClusterAssignment from_labels(const std::vector<int>& labels);
};

/// Lloyd's algorithm with k-means++ seeding. Runs to an assignment fixed
/// point or 300 iterations; an emptied cluster is reseeded to the point
/// farthest from its current centroid.
ClusterAssignment kmeans(const DataMatrix& data, int k, std::uint64_t seed);

ClusterAssignment dbscan(const DataMatrix& data, double eps, int min_pts);

struct RestrictResult {
    DataMatrix data;
    DissimilarityMatrix delta;
    ClusterAssignment assignment;
    std::vector<int> original_indices; // restricted row -> input row
};

/// Drops noise rows/columns and remaps indices to a pure partition.
RestrictResult restrict(const DataMatrix& data, const DissimilarityMatrix& delta,
                        const ClusterAssignment& assignment);

/// Member indices per cluster, ascending within each cluster.
std::vector<std::vector<int>> members_by_cluster(const ClusterAssignment& assignment);

/// Two-column CSV `index,cluster` with noise rendered as -1.
void save_assignment_csv(const ClusterAssignment& assignment, const std::string& path);

} // namespace clusterembed::cluster
