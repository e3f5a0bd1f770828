#pragma once

#include <string>
#include <vector>

#include "untangle/drawing.hpp"

namespace untangle {

struct SvgOptions {
    int size = 480;                  ///< width and height in px
    bool highlight_crossings = true; ///< draw crossing edges in red
    std::vector<VertexId> moved;     ///< vertices drawn hollow orange
    bool labels = true;
};

/// Vertex at clockwise position i sits at angle 2*pi*i/n, measured from the top.
/// Output is byte-identical for identical input.
std::string render_svg(const CircularDrawing& d, const SvgOptions& opt = {});

}  // namespace untangle
