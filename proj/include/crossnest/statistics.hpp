#pragma once

#include <cstddef>
#include <vector>

#include "crossnest/permutation.hpp"

namespace crossnest {

enum class ChainKind { crossing, nesting };

// Enhanced: an arc ending at b and one starting at b cross, and a loop sits
// nested inside any arc covering it. Proper: shared endpoints never cross or
// nest. Upper arcs always use enhanced semantics, lower arcs proper.
enum class Semantics { enhanced, proper };

constexpr Semantics semantics_of(Side side) noexcept {
  return side == Side::upper ? Semantics::enhanced : Semantics::proper;
}

struct ChainQuery {
  std::vector<Arc> arcs;  // all from one side
  ChainKind kind = ChainKind::crossing;
  Semantics semantics = Semantics::enhanced;
};

ChainQuery make_query(std::vector<Arc> arcs, Side side, ChainKind kind);

// Largest k such that k arcs pairwise cross (or nest). Straddle sweep with a
// longest-monotone-subsequence pass per straddle point.
std::size_t chain_number(const ChainQuery& query);

// Pairwise relation between two arcs of one side, either order.
bool forms_pair(const Arc& a, const Arc& b, ChainKind kind, Semantics semantics);

constexpr std::size_t brute_force_arc_limit = 25;

// Maximum pairwise-related subset by exhaustive search. At most
// brute_force_arc_limit arcs.
std::size_t brute_force_chain_number(const ChainQuery& query);

std::size_t crossing_number(const Permutation& perm);
std::size_t nesting_number(const Permutation& perm);

struct PairCounts {
  std::size_t crossing_pairs = 0;
  std::size_t nesting_pairs = 0;
};

PairCounts pair_counts(const Permutation& perm);

struct ExceedanceCounts {
  std::size_t weak_exceedances = 0;
  std::size_t lower_arcs = 0;
};

ExceedanceCounts exceedance_descent_counts(const Permutation& perm);

// Length of the longest strictly increasing subsequence.
std::size_t longest_increasing_run(const std::vector<Vertex>& values);

}  // namespace crossnest
