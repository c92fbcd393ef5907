#pragma once

// Test-only helpers and oracles. Nothing here calls the sweep or the tableau
// code, so it can check them independently.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "crossnest/permutation.hpp"
#include "crossnest/tableau.hpp"

namespace crossnest::testing {

inline Permutation figure_one() { return Permutation({9, 5, 6, 7, 8, 3, 2, 1, 4, 12, 11, 10}); }

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{1});
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{1});
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// Pairwise relations written straight from the definitions on sigma, with
// a < b the two arc sources.
inline bool upper_crossing(const Permutation& s, Vertex a, Vertex b) {
  return a < b && b <= s(a) && s(a) < s(b);
}
inline bool upper_nesting(const Permutation& s, Vertex a, Vertex b) {
  return a < b && b <= s(b) && s(b) < s(a);
}
// Lower arcs (b, s(b)) with s(b) < b; here c = s(a) < d = s(b).
inline bool lower_crossing(const Permutation& s, Vertex a, Vertex b) {
  return s(a) < s(b) && s(b) < a && a < b;
}
inline bool lower_nesting(const Permutation& s, Vertex a, Vertex b) {
  return s(a) < s(b) && s(b) < b && b < a;
}

// Largest subset of arc sources whose every pair satisfies `related` (in
// one orientation or the other); subsets enumerated as bitmasks.
inline std::size_t largest_related_subset(const Permutation& s, const std::vector<Vertex>& sources,
                                          bool (*related)(const Permutation&, Vertex, Vertex)) {
  const std::size_t m = sources.size();
  std::size_t best = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    const auto bits = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (bits <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i + 1; j < m && ok; ++j) {
        if (!(mask >> j & 1)) continue;
        ok = related(s, sources[i], sources[j]) || related(s, sources[j], sources[i]);
      }
    }
    if (ok) best = bits;
  }
  return best;
}

struct ChainOracle {
  std::size_t upper_crossing = 0;
  std::size_t upper_nesting = 0;
  std::size_t lower_crossing = 0;
  std::size_t lower_nesting = 0;

  std::size_t cr() const { return std::max(upper_crossing, lower_crossing); }
  std::size_t ne() const { return std::max(upper_nesting, lower_nesting); }
};

inline ChainOracle chain_oracle(const Permutation& s) {
  std::vector<Vertex> up;
  std::vector<Vertex> down;
  for (Vertex a = 1; a <= s.size(); ++a) (s(a) >= a ? up : down).push_back(a);
  return {largest_related_subset(s, up, upper_crossing), largest_related_subset(s, up, upper_nesting),
          largest_related_subset(s, down, lower_crossing),
          largest_related_subset(s, down, lower_nesting)};
}

// Every partial matching on n vertices.
inline std::vector<PartialMatching> all_matchings(std::size_t n) {
  std::vector<PartialMatching> out;
  std::vector<PartialMatching::Edge> edges;
  std::vector<bool> used(n + 1, false);
  std::function<void(Vertex)> go = [&](Vertex v) {
    while (v <= n && used[v]) ++v;
    if (v > n) {
      out.emplace_back(n, edges);
      return;
    }
    used[v] = true;
    go(v + 1);
    for (Vertex w = v + 1; w <= n; ++w) {
      if (used[w]) continue;
      used[w] = true;
      edges.emplace_back(v, w);
      go(v + 1);
      edges.pop_back();
      used[w] = false;
    }
    used[v] = false;
  };
  go(1);
  return out;
}

inline PartialMatching random_matching(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{1});
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t pairs = std::uniform_int_distribution<std::size_t>(0, n / 2)(rng);
  std::vector<PartialMatching::Edge> edges;
  for (std::size_t k = 0; k < pairs; ++k) {
    const Vertex a = order[2 * k];
    const Vertex b = order[2 * k + 1];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return PartialMatching(n, std::move(edges));
}

// Proper crossing/nesting numbers of a matching, by bitmask enumeration.
inline std::pair<std::size_t, std::size_t> matching_chain_oracle(const PartialMatching& m) {
  const auto& e = m.edges();
  std::size_t cr = 0;
  std::size_t ne = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << e.size()); ++mask) {
    bool cross = true;
    bool nest = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (!(mask >> j & 1)) continue;
        const auto [a, b] = e[i];  // edges sorted, so a < c
        const auto [c, d] = e[j];
        cross = cross && a < c && c < b && b < d;
        nest = nest && a < c && d < b;
      }
    }
    const auto bits = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (cross) cr = std::max(cr, bits);
    if (nest) ne = std::max(ne, bits);
  }
  return {cr, ne};
}

}  // namespace crossnest::testing
