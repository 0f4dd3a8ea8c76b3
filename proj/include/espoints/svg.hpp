#ifndef ESPOINTS_SVG_HPP
#define ESPOINTS_SVG_HPP

#include <string>
#include <vector>

#include "espoints/geometry.hpp"

namespace espoints {

/// Standalone SVG figure: every point as a circle, the witness outlined as
/// a polygon (in hull order), and an optional chain drawn as a polyline
/// (used for the support skeleton from an extraction trace). Coordinates
/// are scaled with floating point for display only; no predicate relies on
/// this module.
std::string render_svg(const PointSet& s, const std::vector<int>* witness_indices,
                       const std::vector<int>* chain_indices);

}  // namespace espoints

#endif
