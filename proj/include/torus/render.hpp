#ifndef TORUS_RENDER_HPP
#define TORUS_RENDER_HPP

#include <string>

#include "torus/core.hpp"

namespace torus {

/// Deterministic SVG of the unit square (1000x1000 px), drawing every mod-1
/// copy of each region that meets the square; fills from a fixed 25-color
/// palette.
std::string render_partition_svg(const Partition& p);

} // namespace torus

#endif
