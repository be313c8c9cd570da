#pragma once

#include <string>
#include <vector>

#include "condmds/numeric.hpp"

namespace condmds {

/// Self-contained SVG scatter of a 2-D embedding with one labeled marker per
/// row. The view is the data bounding box plus a 5% margin. Output depends only
/// on the input, so identical inputs give identical bytes.
std::string render_svg(const Matrix& u, const std::vector<std::string>& labels);

/// Writes render_svg(u, labels) to `path`. Throws InputError unless u has 2 columns.
void emit_svg(const Matrix& u, const std::vector<std::string>& labels, const std::string& path);

}  // namespace condmds
