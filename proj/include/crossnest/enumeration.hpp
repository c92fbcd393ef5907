#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossnest/permutation.hpp"
#include "crossnest/statistics.hpp"

namespace crossnest {

constexpr std::size_t max_enumeration_n = 12;

std::uint64_t factorial(std::size_t n);

// The permutation of {1..n} at the given 0-based lexicographic rank.
Permutation unrank_permutation(std::size_t n, std::uint64_t rank);

// Lexicographic stream over a contiguous rank block of S_n.
class PermutationStream {
 public:
  explicit PermutationStream(std::size_t n);
  PermutationStream(std::size_t n, std::uint64_t first_rank, std::uint64_t count);

  // Empty once the block is exhausted.
  std::optional<Permutation> next();

 private:
  std::vector<Vertex> current_;
  std::uint64_t remaining_;
};

PermutationStream iterate_permutations(std::size_t n);

// Keys: i and j are (Cr, Ne) for joint tables; single-statistic tables leave
// j unset. degree_class is empty unless the table is refined.
struct TableKey {
  std::string degree_class;
  std::size_t i = 0;
  std::optional<std::size_t> j;

  friend bool operator==(const TableKey&, const TableKey&) = default;
  friend auto operator<=>(const TableKey&, const TableKey&) = default;
};

struct DistributionTable {
  std::size_t n = 0;
  std::map<TableKey, std::uint64_t> entries;

  std::uint64_t total() const;
  // Count stored under the key, zero when absent.
  std::uint64_t count(const TableKey& key) const;
  void merge(const DistributionTable& other);
};

using KeyFunction = std::function<TableKey(const Permutation&)>;

// Tallies key(sigma) over S_n. Rank blocks are handed to `jobs` workers
// (0 = hardware concurrency); the merged table is independent of the split.
DistributionTable tally_permutations(std::size_t n, const KeyFunction& key, unsigned jobs = 0);

// Counts by crossing number (or nesting number).
DistributionTable crossing_distribution(std::size_t n, ChainKind stat, unsigned jobs = 0);

// Counts by (Cr, Ne), refined by degree-class string when `refine`.
DistributionTable joint_distribution(std::size_t n, bool refine, unsigned jobs = 0);

struct SymmetryReport {
  bool passed = true;
  std::vector<TableKey> violations;  // keys (class, i, j) with count(i,j) != count(j,i)
};

SymmetryReport check_symmetry(const DistributionTable& joint);
SymmetryReport verify_symmetry(std::size_t n, bool refine, unsigned jobs = 0);

// Number of sigma in S_n with nesting number ceil(n/2), by enumeration.
std::uint64_t max_nesting_count(std::size_t n, unsigned jobs = 0);
std::uint64_t max_crossing_count(std::size_t n, unsigned jobs = 0);
// m! for n = 2m+1, 2(m+1)! - (m-1)! - 1 for n = 2m.
std::uint64_t max_nesting_closed_form(std::size_t n);

std::uint64_t catalan(std::size_t n);

class SetPartition {
 public:
  // Throws InvalidInput unless blocks are nonempty, disjoint, and cover 1..n.
  SetPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks);

  std::size_t n() const noexcept { return n_; }
  // Each block sorted; blocks ordered by least element.
  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  std::size_t n_;
  std::vector<std::vector<Vertex>> blocks_;
};

// No a < b < c < d with a, c in one block and b, d in another.
bool is_noncrossing(const SetPartition& p);

// All set partitions of {1..n} via restricted growth strings.
std::vector<SetPartition> set_partitions(std::size_t n);

// Blocks are the orbits of the lower arcs; loops and upper arcs only
// contribute membership. Requires crossing_number(perm) == 1.
SetPartition noncrossing_to_partition(const Permutation& perm);

}  // namespace crossnest
