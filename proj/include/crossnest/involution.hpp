#pragma once

#include <cstddef>
#include <vector>

#include "crossnest/permutation.hpp"
#include "crossnest/statistics.hpp"
#include "crossnest/tableau.hpp"

namespace crossnest {

// One side of an arc diagram as a standalone diagram. Upper diagrams use
// enhanced semantics and may contain loops; lower diagrams use proper
// semantics.
struct SidedDiagram {
  std::size_t n = 0;
  Side side = Side::upper;
  std::vector<Arc> arcs;

  Semantics semantics() const noexcept { return semantics_of(side); }

  friend bool operator==(const SidedDiagram&, const SidedDiagram&) = default;
};

SidedDiagram upper_diagram(const Permutation& perm);
SidedDiagram lower_diagram(const Permutation& perm);

// Endpoint role a matching vertex must play.
enum class EndRole { none, left, right };

struct InflationMap {
  std::size_t original_n = 0;
  std::size_t inflated_n = 0;
  Side side = Side::upper;
  // Per original vertex (index v - 1): its inflated positions in order. Split
  // vertices get two adjacent positions.
  std::vector<std::vector<Vertex>> forward;
  // Per inflated position (index p - 1): the original vertex and the role it
  // carries in the matching.
  std::vector<Vertex> origin;
  std::vector<EndRole> roles;
};

struct Inflation {
  PartialMatching matching;
  InflationMap map;
};

// Splits every vertex carrying two arc-ends into two adjacent positions so the
// diagram becomes a partial matching with the same chain numbers under proper
// semantics. Enhanced: the outgoing copy comes first (shared endpoints become
// crossings, loops become short arcs). Proper: the incoming copy comes first
// (shared endpoints become disjoint arcs).
Inflation inflate(const SidedDiagram& d);

// Inverse of inflate for any matching with the map's endpoint-role pattern.
SidedDiagram deflate(const PartialMatching& m, const InflationMap& map);

// inflate, swap crossings and nestings by conjugating the oscillating
// tableau, deflate.
SidedDiagram swap_chains(const SidedDiagram& d);

// Degree-preserving involution exchanging crossing and nesting numbers.
Permutation psi(const Permutation& perm);

struct PsiCheck {
  bool involutive = false;      // psi(psi(sigma)) == sigma
  bool swaps_chains = false;    // Cr and Ne exchanged
  bool preserves_degree = false;

  bool ok() const noexcept { return involutive && swaps_chains && preserves_degree; }
};

PsiCheck check_psi(const Permutation& perm);

}  // namespace crossnest
