#pragma once

// Static SVG figures: Omega_n as a staircase polyomino with one fill colour per
// class, and chord diagrams on n points placed evenly on a circle.

#include "dncolor/coloring.hpp"
#include "dncolor/thrackle.hpp"

#include <array>
#include <string>
#include <string_view>

namespace dncolor {

/// 16 fixed fills, cycled by class index.
[[nodiscard]] const std::array<std::string_view, 16>& palette();

/// One unit square per cell at (column, row), row 1 on top.
[[nodiscard]] std::string render_polyomino_svg(const ColoringCertificate& cert);

/// Every class drawn as chords in its palette colour.
[[nodiscard]] std::string render_chords_svg(const ColoringCertificate& cert);

/// A single maximal thrackle; cycle edges are drawn thick and highlighted.
[[nodiscard]] std::string render_thrackle_svg(const MaximalThrackle& t);

} // namespace dncolor
