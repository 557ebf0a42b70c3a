#include "clusterembed/types.hpp"

#include <cmath>

namespace clusterembed {

void DataMatrix::validate() const {
    if (points.rows() < 1 || points.cols() < 1)
        throw InvalidInputError("data matrix must have at least one row and one column");
    if (!points.allFinite()) throw InvalidInputError("data matrix contains non-finite entries");
    if (labels && static_cast<Eigen::Index>(labels->size()) != points.rows())
        throw InvalidInputError("label vector length does not match the number of points");
}

void DissimilarityMatrix::validate() const {
    if (delta.rows() != delta.cols()) throw InvalidInputError("dissimilarity matrix must be square");
    if (delta.rows() < 1) throw InvalidInputError("dissimilarity matrix is empty");
    if (!delta.allFinite()) throw InvalidInputError("dissimilarity matrix contains non-finite entries");
    for (Eigen::Index i = 0; i < delta.rows(); ++i) {
        if (delta(i, i) != 0.0) throw InvalidInputError("dissimilarity matrix has a nonzero diagonal");
        for (Eigen::Index j = i + 1; j < delta.cols(); ++j) {
            if (delta(i, j) != delta(j, i))
                throw InvalidInputError("dissimilarity matrix is not symmetric");
            if (delta(i, j) < 0.0) throw InvalidInputError("dissimilarity matrix has a negative entry");
        }
    }
}

} // namespace clusterembed
