#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltwall/rational.hpp"
#include "tiltwall/wall.hpp"

namespace tiltwall {

/// Rectangular view of the upper half-plane: beta in [beta_min, beta_max],
/// alpha in [0, alpha_max].  Requires beta_min < beta_max and alpha_max > 0.
struct PlotWindow {
    Rational beta_min;
    Rational beta_max;
    Rational alpha_max;
};

/// Drawing instructions for one slice picture.  Walls outside the window are
/// dropped by exact comparisons; only the final SVG coordinates are floating
/// point, and every drawn element carries an XML comment with its exact data.
struct SlicePlot {
    PlotWindow window;
    std::optional<Wall> vertical;    // the unique vertical wall, if any
    std::vector<Wall> semicircles;   // candidate walls (Semicircle kind only)
    std::optional<Wall> highlight;   // wall drawn emphasized (e.g. the
                                     // kernel-sheaf destabilizing wall)
};

/// Render the plot to a complete standalone SVG document.
std::string render_slice_svg(const SlicePlot& plot);

}  // namespace tiltwall
