#pragma once

#include <iosfwd>
#include <string>

#include "orthoradial/compaction.hpp"

namespace orth {

// Line-based instance format:
//   vertices a b c ...
//   adj a: b c.1 d          counterclockwise neighbors, ".slot" marks parallel edges
//   rotations a: 1 0 -1     one value per ccw angle gap (or "angles a: 90 180 270")
//   outer_face a b[.slot]   the face to the right of the dart a -> b
//   central_face c d
//   reference_edge a b      dart a -> b, outer face on its left
// '#' starts a comment.
Rep parse_instance(const std::string& text);
std::string serialize_instance(const Rep& rep);

// Drawing format: "phi N", per-vertex "vertex a: ring R tick T", per-edge
// "edge a b[.slot]: radial|arc EXTENT" (extent for the dart a -> b), optional
// per-vertex provenance "tag a: original|subdivision|augmentation|preprocessing".
std::string serialize_drawing(const OrthoRadialDrawing& d, const PlaneGraph& g,
                              bool with_tags = false);
OrthoRadialDrawing parse_drawing(const std::string& text, const PlaneGraph& g);

// One arc or segment per drawn edge; polar renders concentric rings, the
// cylinder view unrolls ticks to x and rings to y.
std::string render_svg(const OrthoRadialDrawing& d, const PlaneGraph& g, bool polar);

// Full command-line front end (validate / draw / generate); returns the exit
// code: 0 success, 1 parse or usage error, 2 invalid representation.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orth
