///////////////////////////////////////////////////////////////////////////////
// svg.hpp
//
// minimal SVG emission for domain boundaries and homotopy frames
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <string>
#include <vector>

#include "qd/core.hpp"
#include "qd/geometry.hpp"

namespace qd {

/// closed curves rendered as one even-odd path (holes knocked out), plus
/// optional open polylines drawn as strokes
std::string svg_document(const std::vector<std::vector<complex>>& closed_curves,
                         const std::vector<std::vector<complex>>& open_paths = {});

void write_svg_file(const std::string& path, const std::string& document);

/// boundary plot of a planar (or image-of-planar) domain
std::string domain_svg(const Domain& domain, int points_per_curve = 720);

} // namespace qd
