#pragma once

#include <cstddef>
#include <string>

#include "crossnest/permutation.hpp"

namespace crossnest {

enum class RenderFormat { ascii, svg };

constexpr std::size_t max_ascii_render_n = 60;
constexpr std::size_t max_svg_render_n = 200;

// Vertices on a horizontal line, upper arcs above and lower arcs below.
// ASCII uses a fixed four-character column per vertex.
std::string render(const Permutation& perm, RenderFormat format);

}  // namespace crossnest
