#include "crossnest/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "crossnest/error.hpp"

namespace crossnest {

namespace {

constexpr std::size_t cell_width = 4;

std::size_t column(Vertex v) { return (v - 1) * cell_width; }

// Height of each arc: one more than the tallest arc it strictly contains.
std::vector<std::size_t> levels(const std::vector<Arc>& arcs) {
  std::vector<std::size_t> order(arcs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return arcs[a].right - arcs[a].left < arcs[b].right - arcs[b].left;
  });
  std::vector<std::size_t> level(arcs.size(), 1);
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const Arc& outer = arcs[order[oi]];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      const Arc& inner = arcs[order[oj]];
      if (outer.left <= inner.left && inner.right <= outer.right && inner != outer) {
        level[order[oi]] = std::max(level[order[oi]], level[order[oj]] + 1);
      }
    }
  }
  return level;
}

std::string render_ascii(const ArcDiagram& d) {
  const std::size_t width = column(d.n) + cell_width;
  const std::vector<std::size_t> up = levels(d.upper);
  const std::vector<std::size_t> down = levels(d.lower);
  const std::size_t up_h = up.empty() ? 0 : *std::max_element(up.begin(), up.end());
  const std::size_t down_h = down.empty() ? 0 : *std::max_element(down.begin(), down.end());

  // Row index 0 is the top; the axis sits at row up_h.
  std::vector<std::string> rows(up_h + 1 + down_h, std::string(width, ' '));
  const auto put = [&](std::size_t row, std::size_t col, char ch, bool overwrite) {
    char& slot = rows[row][col];
    if (overwrite || slot == ' ') slot = ch;
  };
  const auto draw = [&](const std::vector<Arc>& arcs, const std::vector<std::size_t>& lv, bool above) {
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const Arc& a = arcs[k];
      const std::size_t top = above ? up_h - lv[k] : up_h + lv[k];
      if (a.is_loop()) {
        put(top, column(a.left), 'o', true);
        continue;
      }
      for (std::size_t c = column(a.left) + 1; c < column(a.right); ++c) put(top, c, '-', false);
      put(top, column(a.left), '+', true);
      put(top, column(a.right), '+', true);
      for (std::size_t h = 1; h < lv[k]; ++h) {
        const std::size_t r = above ? up_h - h : up_h + h;
        put(r, column(a.left), '|', false);
        put(r, column(a.right), '|', false);
      }
    }
  };
  draw(d.upper, up, true);
  draw(d.lower, down, false);
  for (Vertex v = 1; v <= d.n; ++v) {
    const std::string label = std::to_string(v);
    rows[up_h].replace(column(v), label.size(), label);
  }

  std::ostringstream out;
  for (auto& row : rows) {
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << '\n';
  }
  return out.str();
}

std::string render_svg(const ArcDiagram& d) {
  constexpr double spacing = 40.0;
  constexpr double margin = 20.0;
  const auto x = [&](Vertex v) { return margin + spacing * static_cast<double>(v - 1); };
  const double half_span = spacing * static_cast<double>(d.n - 1) / 2.0;
  const double axis = margin + std::max(half_span, 30.0);
  const double width = 2 * margin + spacing * static_cast<double>(d.n - 1);
  const double height = 2 * axis;

  std::ostringstream out;
  out << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << width << R"(" height=")"
      << height << R"(" viewBox="0 0 )" << width << ' ' << height << R"(">)" << '\n';
  out << R"(  <g fill="none" stroke="black" stroke-width="1.5">)" << '\n';
  for (const Arc& a : d.upper) {
    if (a.is_loop()) {
      const double cx = x(a.left);
      out << R"(    <path class="arc upper loop" d="M )" << cx << ' ' << axis << " C "
          << cx - 14 << ' ' << axis - 28 << ' ' << cx + 14 << ' ' << axis - 28 << ' ' << cx
          << ' ' << axis << R"("/>)" << '\n';
      continue;
    }
    const double r = (x(a.right) - x(a.left)) / 2.0;
    out << R"(    <path class="arc upper" d="M )" << x(a.left) << ' ' << axis << " A " << r << ' '
        << r << " 0 0 1 " << x(a.right) << ' ' << axis << R"("/>)" << '\n';
  }
  for (const Arc& a : d.lower) {
    const double r = (x(a.right) - x(a.left)) / 2.0;
    out << R"(    <path class="arc lower" d="M )" << x(a.left) << ' ' << axis << " A " << r << ' '
        << r << " 0 0 0 " << x(a.right) << ' ' << axis << R"("/>)" << '\n';
  }
  out << "  </g>\n";
  for (Vertex v = 1; v <= d.n; ++v) {
    out << R"(  <circle class="vertex" cx=")" << x(v) << R"(" cy=")" << axis
        << R"(" r="3" fill="black"/>)" << '\n';
    out << R"(  <text x=")" << x(v) << R"(" y=")" << axis + 14
        << R"(" font-size="10" text-anchor="middle">)" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const Permutation& perm, RenderFormat format) {
  const std::size_t limit = format == RenderFormat::ascii ? max_ascii_render_n : max_svg_render_n;
  if (perm.size() > limit) {
    throw InvalidInput("cannot render n = " + std::to_string(perm.size()) + " (limit " +
                       std::to_string(limit) + ")");
  }
  const ArcDiagram d = arc_diagram(perm);
  return format == RenderFormat::ascii ? render_ascii(d) : render_svg(d);
}

}  // namespace crossnest
