#pragma once

#include <string>
#include <vector>

#include "lozenge/duality.hpp"
#include "lozenge/lattice.hpp"

namespace lozenge {

enum class Overlay { None, Tiling, Dual, Quotient };

Overlay parse_overlay(const std::string& s);

struct RenderOptions {
  Overlay overlay = Overlay::None;
  // Cells drawn as holes (dark gray).
  std::vector<TriCell> holes;
  // Symmetry used for the quotient overlay.
  SymKind quotient_sym = SymKind::Rot180;
};

// Deterministic SVG at 24 px per lattice spacing; free edges are dashed.
std::string render_svg(const Region& r, const RenderOptions& opt = {});

// Cells removed from the frame hexagon of a holed or cored region; empty for
// other families.
std::vector<TriCell> family_holes(const Region& r);

}  // namespace lozenge
