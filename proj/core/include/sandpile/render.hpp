#pragma once

#include <string>

#include "sandpile/paths.hpp"

namespace sandpile {

/// ASCII picture of a polyomino: one text row per unit height, top row
/// first (origin bottom-left), enclosed cells drawn as '#', everything else
/// blank, bounding box drawn as a '+-|' border.
std::string render_polyomino_ascii(const Polyomino& p);

/// Same picture as SVG with unit-square cells (20 px) and both boundary
/// paths drawn as polylines.
std::string render_polyomino_svg(const Polyomino& p);

/// ASCII window of a framed pair around its anchor: red path drawn with
/// '|' / '_', green path with ':' / '.', the anchor marked 'o'. One period
/// in each direction from the anchor.
std::string render_framed_pair_ascii(const FramedPair& p);

}  // namespace sandpile
