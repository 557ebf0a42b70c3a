#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterembed/types.hpp"

namespace clusterembed::data {

/// Isotropic unit-variance GMM with d components at means (3/2) sqrt(d) e_i;
/// labels are the component ids.
DataMatrix gen_gmm(int d, int points_per_component, std::uint64_t seed);

struct BlobSpec {
    int count = 0;
    Eigen::Vector2d center = Eigen::Vector2d::Zero();
    double spread = 1.0;
};

/// Labeled isotropic Gaussian blobs in the plane.
DataMatrix gen_planar_clusters(const std::vector<BlobSpec>& blobs, std::uint64_t seed);

/// Isometric wrap (x, y) -> (R sin(x/R), y, R cos(x/R)); requires the planar
/// x-extent to fit in [-pi R / 2, pi R / 2]. Labels carry through.
DataMatrix gen_half_cylinder(const DataMatrix& planar, double radius);

/// Radius for which the planar x-extent exactly spans the half-circumference.
double half_cylinder_auto_radius(const DataMatrix& planar);

/// Rectangular numeric CSV with optional single header row. label_column may
/// be a header name or a 0-based column index; the column must hold integers.
DataMatrix load_csv(const std::string& path,
                    const std::optional<std::string>& label_column = std::nullopt);

/// Values written with 17 significant digits so a save/load/save round trip
/// is byte-identical.
void save_csv(const DataMatrix& data, const std::string& path);

} // namespace clusterembed::data
