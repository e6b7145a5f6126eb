#pragma once

#include <string>

#include "ifsembed/bounds.hpp"
#include "ifsembed/ifs.hpp"

namespace ifsembed {

enum class FigureStyle { kBoxes, kPoints };

/// Renders an SVG 1.1 document of a 1D or 2D IFS.
///
/// Boxes style outlines the depth-n cover with the base box dashed; points
/// style plots attractor_points(depth). World coordinates are written
/// directly (y negated), so corners of cover boxes appear verbatim as
/// decimals. The output is byte-stable for a given input.
std::string export_figure(const Ifs& ifs, std::size_t depth, FigureStyle style,
                          const SearchLimits& limits = {});

}  // namespace ifsembed
