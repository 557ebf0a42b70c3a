#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "clusterembed/errors.hpp"

namespace clusterembed {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
/// 2D embedding coordinates, one row per point.
using Coords = Eigen::Matrix<double, Eigen::Dynamic, 2>;

/// n points in d dimensions plus optional integer class labels.
struct DataMatrix {
    Matrix points;
    std::optional<std::vector<int>> labels;

    Eigen::Index n() const { return points.rows(); }
    Eigen::Index dim() const { return points.cols(); }

    void validate() const;
};

enum class DissimilarityKind { euclidean, geodesic };

/// Symmetric nonnegative dissimilarity matrix with zero diagonal.
struct DissimilarityMatrix {
    Matrix delta;
    DissimilarityKind kind = DissimilarityKind::euclidean;

    Eigen::Index n() const { return delta.rows(); }

    void validate() const;
};

} // namespace clusterembed
