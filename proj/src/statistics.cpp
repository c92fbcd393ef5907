#include "crossnest/statistics.hpp"

#include <algorithm>
#include <functional>

#include "crossnest/error.hpp"

namespace crossnest {

namespace {

std::string show(const Arc& a) {
  return "(" + std::to_string(a.left) + "," + std::to_string(a.right) + ")";
}

void validate(const ChainQuery& q) {
  if (q.arcs.empty()) return;
  const Side side = q.arcs.front().side;
  if (semantics_of(side) != q.semantics) {
    throw InvalidInput("semantics do not match arc side");
  }
  std::vector<Vertex> lefts;
  std::vector<Vertex> rights;
  for (const Arc& a : q.arcs) {
    if (a.side != side) throw InvalidInput("chain query mixes upper and lower arcs");
    if (a.left < 1 || a.left > a.right) throw InvalidInput("malformed arc " + show(a));
    if (a.is_loop() && q.semantics == Semantics::proper) {
      throw InvalidInput("loop " + show(a) + " under proper semantics");
    }
    lefts.push_back(a.left);
    rights.push_back(a.right);
  }
  std::sort(lefts.begin(), lefts.end());
  std::sort(rights.begin(), rights.end());
  if (std::adjacent_find(lefts.begin(), lefts.end()) != lefts.end() ||
      std::adjacent_find(rights.begin(), rights.end()) != rights.end()) {
    throw InvalidInput("two arcs share a left or a right endpoint");
  }
}

}  // namespace

ChainQuery make_query(std::vector<Arc> arcs, Side side, ChainKind kind) {
  return ChainQuery{std::move(arcs), kind, semantics_of(side)};
}

std::size_t longest_increasing_run(const std::vector<Vertex>& values) {
  std::vector<Vertex> tails;
  for (const Vertex v : values) {
    const auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return tails.size();
}

std::size_t chain_number(const ChainQuery& query) {
  validate(query);
  if (query.arcs.empty()) return 0;

  std::vector<Arc> arcs = query.arcs;
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.left < b.left; });
  Vertex n = 0;
  for (const Arc& a : arcs) n = std::max(n, a.right);

  const bool enhanced = query.semantics == Semantics::enhanced;
  std::size_t best = 0;
  std::vector<Vertex> rights;
  // Enhanced straddles the integer t; proper straddles the gap t + 1/2.
  for (Vertex t = 1; t <= n; ++t) {
    rights.clear();
    for (const Arc& a : arcs) {
      const bool straddles = enhanced ? (a.left <= t && t <= a.right) : (a.left <= t && t < a.right);
      if (!straddles) continue;
      // Nesting wants decreasing right endpoints; flip to reuse the LIS pass.
      rights.push_back(query.kind == ChainKind::crossing ? a.right : n + 1 - a.right);
    }
    best = std::max(best, longest_increasing_run(rights));
  }
  return best;
}

bool forms_pair(const Arc& x, const Arc& y, ChainKind kind, Semantics semantics) {
  const Arc& a = x.left < y.left ? x : y;
  const Arc& b = x.left < y.left ? y : x;
  if (a.left == b.left) return false;
  if (semantics == Semantics::enhanced) {
    if (kind == ChainKind::crossing) return a.left < b.left && b.left <= a.right && a.right < b.right;
    return a.left < b.left && b.left <= b.right && b.right < a.right;
  }
  if (kind == ChainKind::crossing) return a.left < b.left && b.left < a.right && a.right < b.right;
  return a.left < b.left && b.left < b.right && b.right < a.right;
}

std::size_t brute_force_chain_number(const ChainQuery& query) {
  validate(query);
  const std::size_t m = query.arcs.size();
  if (m > brute_force_arc_limit) {
    throw InvalidInput("brute force limited to " + std::to_string(brute_force_arc_limit) +
                       " arcs, got " + std::to_string(m));
  }
  std::vector<std::vector<bool>> related(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      related[i][j] = related[j][i] =
          forms_pair(query.arcs[i], query.arcs[j], query.kind, query.semantics);
    }
  }

  // Grow pairwise-related subsets in index order; prune when even taking every
  // remaining candidate cannot beat the best found.
  std::size_t best = 0;
  std::function<void(std::size_t, const std::vector<std::size_t>&)> grow =
      [&](std::size_t size, const std::vector<std::size_t>& candidates) {
        best = std::max(best, size);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
          if (size + (candidates.size() - c) <= best) return;
          const std::size_t pick = candidates[c];
          std::vector<std::size_t> next;
          for (std::size_t d = c + 1; d < candidates.size(); ++d) {
            if (related[pick][candidates[d]]) next.push_back(candidates[d]);
          }
          grow(size + 1, next);
        }
      };
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  grow(0, all);
  return best;
}

std::size_t crossing_number(const Permutation& perm) {
  const ArcDiagram d = arc_diagram(perm);
  return std::max(chain_number(make_query(d.upper, Side::upper, ChainKind::crossing)),
                  chain_number(make_query(d.lower, Side::lower, ChainKind::crossing)));
}

std::size_t nesting_number(const Permutation& perm) {
  const ArcDiagram d = arc_diagram(perm);
  return std::max(chain_number(make_query(d.upper, Side::upper, ChainKind::nesting)),
                  chain_number(make_query(d.lower, Side::lower, ChainKind::nesting)));
}

PairCounts pair_counts(const Permutation& perm) {
  const ArcDiagram d = arc_diagram(perm);
  PairCounts counts;
  const auto tally = [&counts](const std::vector<Arc>& arcs, Semantics s) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        if (forms_pair(arcs[i], arcs[j], ChainKind::crossing, s)) ++counts.crossing_pairs;
        if (forms_pair(arcs[i], arcs[j], ChainKind::nesting, s)) ++counts.nesting_pairs;
      }
    }
  };
  tally(d.upper, Semantics::enhanced);
  tally(d.lower, Semantics::proper);
  return counts;
}

ExceedanceCounts exceedance_descent_counts(const Permutation& perm) {
  ExceedanceCounts c;
  for (Vertex a = 1; a <= perm.size(); ++a) {
    if (perm(a) >= a) ++c.weak_exceedances;
  }
  c.lower_arcs = perm.size() - c.weak_exceedances;
  return c;
}

}  // namespace crossnest
