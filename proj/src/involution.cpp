#include "crossnest/involution.hpp"

#include <algorithm>

#include "crossnest/error.hpp"

namespace crossnest {

SidedDiagram upper_diagram(const Permutation& perm) {
  ArcDiagram d = arc_diagram(perm);
  return {d.n, Side::upper, std::move(d.upper)};
}

SidedDiagram lower_diagram(const Permutation& perm) {
  ArcDiagram d = arc_diagram(perm);
  return {d.n, Side::lower, std::move(d.lower)};
}

Inflation inflate(const SidedDiagram& d) {
  // Left-end (outgoing) and right-end (incoming) arc per vertex, by arc index.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> out_arc(d.n + 1, none);
  std::vector<std::size_t> in_arc(d.n + 1, none);
  for (std::size_t k = 0; k < d.arcs.size(); ++k) {
    const Arc& a = d.arcs[k];
    if (a.side != d.side || a.left < 1 || a.right > d.n || a.left > a.right ||
        (a.is_loop() && d.side == Side::lower)) {
      throw InvalidInput("arc (" + std::to_string(a.left) + "," + std::to_string(a.right) +
                         ") invalid for this diagram");
    }
    if (out_arc[a.left] != none || in_arc[a.right] != none) {
      throw InvalidInput("vertex endpoint used twice in sided diagram");
    }
    out_arc[a.left] = k;
    in_arc[a.right] = k;
  }

  InflationMap map;
  map.original_n = d.n;
  map.side = d.side;
  map.forward.resize(d.n);
  std::vector<Vertex> left_pos(d.arcs.size(), 0);
  std::vector<Vertex> right_pos(d.arcs.size(), 0);
  Vertex next = 1;
  const auto place = [&](Vertex v, EndRole role) {
    map.forward[v - 1].push_back(next);
    map.origin.push_back(v);
    map.roles.push_back(role);
    return next++;
  };
  for (Vertex v = 1; v <= d.n; ++v) {
    const bool has_out = out_arc[v] != none;
    const bool has_in = in_arc[v] != none;
    if (has_out && has_in) {
      if (d.side == Side::upper) {
        left_pos[out_arc[v]] = place(v, EndRole::left);
        right_pos[in_arc[v]] = place(v, EndRole::right);
      } else {
        right_pos[in_arc[v]] = place(v, EndRole::right);
        left_pos[out_arc[v]] = place(v, EndRole::left);
      }
    } else if (has_out) {
      left_pos[out_arc[v]] = place(v, EndRole::left);
    } else if (has_in) {
      right_pos[in_arc[v]] = place(v, EndRole::right);
    } else {
      place(v, EndRole::none);
    }
  }
  map.inflated_n = next - 1;

  std::vector<PartialMatching::Edge> edges;
  edges.reserve(d.arcs.size());
  for (std::size_t k = 0; k < d.arcs.size(); ++k) edges.emplace_back(left_pos[k], right_pos[k]);
  return {PartialMatching(map.inflated_n, std::move(edges)), std::move(map)};
}

SidedDiagram deflate(const PartialMatching& m, const InflationMap& map) {
  if (m.n() != map.inflated_n) throw InvalidInput("matching size does not match inflation map");
  for (Vertex p = 1; p <= m.n(); ++p) {
    const Vertex q = m.partner(p);
    const EndRole role = q == 0 ? EndRole::none : (q > p ? EndRole::left : EndRole::right);
    if (role != map.roles[p - 1]) {
      throw InvalidInput("inflated position " + std::to_string(p) +
                         " plays a different endpoint role than the map expects");
    }
  }
  SidedDiagram d{map.original_n, map.side, {}};
  for (const auto& [p, q] : m.edges()) {
    d.arcs.push_back({map.origin[p - 1], map.origin[q - 1], map.side});
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

SidedDiagram swap_chains(const SidedDiagram& d) {
  const Inflation inflated = inflate(d);
  const OscillatingTableau swapped = conjugate_oscillating(matching_to_oscillating(inflated.matching));
  return deflate(oscillating_to_matching(swapped), inflated.map);
}

Permutation psi(const Permutation& perm) {
  const SidedDiagram upper = swap_chains(upper_diagram(perm));
  const SidedDiagram lower = swap_chains(lower_diagram(perm));
  try {
    return recombine(upper.arcs, lower.arcs, perm.size());
  } catch (const InvalidInput& e) {
    throw InternalError(std::string("psi produced an invalid diagram pair: ") + e.what());
  }
}

PsiCheck check_psi(const Permutation& perm) {
  const Permutation image = psi(perm);
  PsiCheck c;
  c.involutive = psi(image) == perm;
  c.swaps_chains = crossing_number(image) == nesting_number(perm) &&
                   nesting_number(image) == crossing_number(perm);
  c.preserves_degree = degree_sequence(image) == degree_sequence(perm);
  return c;
}

}  // namespace crossnest
