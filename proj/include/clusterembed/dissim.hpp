#pragma once

#include <string>
#include <vector>

#include "clusterembed/types.hpp"

namespace clusterembed::dissim {

struct KnnEdge {
    int index;
    double weight;
};

/// Directed kNN graph with Euclidean edge weights. The source points are kept
/// so disconnected components can be bridged by their closest cross pair.
struct KnnGraph {
    Matrix points;
    std::vector<std::vector<KnnEdge>> neighbors; // each sorted by (weight, index)
    int k = 0;

    Eigen::Index n() const { return points.rows(); }
};

DissimilarityMatrix euclidean_pairwise(const DataMatrix& data);

/// k nearest Euclidean neighbors per point, ties broken by lower index.
KnnGraph build_knn_graph(const DataMatrix& data, int k);

/// Shortest-path distances on the union-symmetrized graph. Disconnected
/// components are joined by one minimum-distance cross edge per component
/// pair (reported on stderr) so every distance is finite.
DissimilarityMatrix geodesic_pairwise(const KnnGraph& graph);

/// Dense CSV persistence: n rows of n comma-separated values, no header.
void save_dissimilarity_csv(const DissimilarityMatrix& delta, const std::string& path);
DissimilarityMatrix load_dissimilarity_csv(const std::string& path, DissimilarityKind kind);

} // namespace clusterembed::dissim
