#pragma once

#include <string>

#include "legendrian/composite.hpp"
#include "legendrian/mountain_range.hpp"

namespace legendrian {

enum class RenderFormat { Ascii, Svg };

// tb runs down the page, r across it. ASCII uses one character per lattice
// point:
//   P peak, V valley, o other member, 2-9 (or #) nonsimple fiber size,
//   . not a member.
// A window with nothing in it renders a placeholder.
std::string render(const MountainRange& range, int tb_min, RenderFormat format);
std::string render(const QuotientPoset& poset, RenderFormat format);

}  // namespace legendrian
