#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metaprox/geometry.hpp"

namespace metaprox::harness {

/// Iterates drawn as a polyline over the plane, with the anchor, the limit
/// and (when given) the target geodesic. Planar points only.
std::string render_svg(const std::vector<geometry::Point>& points, const geometry::Point& anchor,
                       const geometry::Point& limit,
                       const std::optional<geometry::Geodesic>& target);

}  // namespace metaprox::harness
