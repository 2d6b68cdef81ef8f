#pragma once

#include <string>
#include <string_view>

#include "tilingsg/geometry.hpp"

namespace tilingsg {

// SVG with one square per tile, y pointing up, the origin cell marked with a dot.
// Fill colours are keyed by label index, so a label keeps its colour across images.
std::string render_svg(const Patch& p, const Alphabet& alphabet, int cell_px = 12);

// "# radius R" followed by the patch text.
std::string write_window(const Window& w, const Alphabet& alphabet);
Window read_window(std::string_view text, Alphabet& alphabet);

}  // namespace tilingsg
