#pragma once

#include <string>
#include <vector>

#include "clusterembed/types.hpp"

namespace clusterembed::svg {

/// Self-contained SVG 1.1 scatter plot: one circle per point, a fixed
/// palette color per label, equal-aspect axes and a legend. At most 20
/// distinct labels are supported.
std::string scatter_svg(const Coords& coords, const std::vector<int>& labels);

} // namespace clusterembed::svg
