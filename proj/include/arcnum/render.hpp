#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcnum/diagram.hpp"

namespace arcnum {

struct RenderOptions {
    bool show_cuts = false;     // tick marks at the gaps of a minimal partition
    bool show_witness = false;  // highlight the chords of an extracted star witness
    bool show_labels = true;
    int size = 480;             // square canvas, pixels
};

/// Deterministic SVG of the diagram: positions equally spaced on the circle,
/// position 0 at angle 90 degrees, counterclockwise orientation.  Chords are
/// straight segments; cut ticks come from minimal_partition and witness
/// highlighting from extract_star (which requires arc number >= 3).
std::string render_svg(const ChordDiagram& d, const RenderOptions& options = {});

}  // namespace arcnum
