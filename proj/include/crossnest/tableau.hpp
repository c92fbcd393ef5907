#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "crossnest/permutation.hpp"

namespace crossnest {

class IntegerPartition {
 public:
  IntegerPartition() = default;
  // Throws InvalidInput unless parts are positive and weakly decreasing.
  explicit IntegerPartition(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }  // number of rows
  std::size_t width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }  // number of columns
  std::size_t size() const noexcept;  // number of boxes
  bool empty() const noexcept { return parts_.empty(); }

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;

 private:
  std::vector<std::size_t> parts_;
};

IntegerPartition conjugate(const IntegerPartition& p);

// 1-indexed (row, column).
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Young tableau with distinct entries, strictly increasing along rows and
// down columns.
class PartialTableau {
 public:
  using Rows = std::vector<std::vector<std::size_t>>;

  PartialTableau() = default;
  // Throws InvalidInput when rows violate the tableau conditions.
  explicit PartialTableau(Rows rows);

  const Rows& rows() const noexcept { return rows_; }
  IntegerPartition shape() const;
  bool empty() const noexcept { return rows_.empty(); }
  std::size_t size() const noexcept;
  bool contains(std::size_t value) const;
  std::size_t at(Cell c) const { return rows_[c.row - 1][c.col - 1]; }

  friend bool operator==(const PartialTableau&, const PartialTableau&) = default;

 private:
  Rows rows_;
};

struct Insertion {
  PartialTableau tableau;
  Cell cell;  // the box added to the shape
};

struct Ejection {
  PartialTableau tableau;
  std::size_t value = 0;
};

struct Deletion {
  PartialTableau tableau;
  Cell vacated;  // the box removed from the shape
};

Insertion row_insert(const PartialTableau& t, std::size_t x);
Ejection reverse_row_insert(const PartialTableau& t, Cell corner);
Deletion delete_min(const PartialTableau& t);
PartialTableau reverse_delete_min(const PartialTableau& t, Cell vacated, std::size_t x);

class PartialMatching {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  // Throws InvalidInput unless every edge has 1 <= i < j <= n and edges are
  // vertex-disjoint.
  PartialMatching(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }  // sorted
  // 0 when v is isolated.
  Vertex partner(Vertex v) const { return partner_[v]; }

  friend bool operator==(const PartialMatching& a, const PartialMatching& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<Vertex> partner_;
};

// Lower-side arcs of a matching, ready for proper-semantics chain queries.
std::vector<Arc> matching_arcs(const PartialMatching& m);

enum class Step { opener, closer, isolated };

std::vector<Step> step_pattern(const PartialMatching& m);

class OscillatingTableau {
 public:
  // Throws InvalidInput unless shapes start and end empty and consecutive
  // shapes are equal or differ by one box.
  explicit OscillatingTableau(std::vector<IntegerPartition> shapes);

  const std::vector<IntegerPartition>& shapes() const noexcept { return shapes_; }
  std::size_t steps() const noexcept { return shapes_.size() - 1; }

  friend bool operator==(const OscillatingTableau&, const OscillatingTableau&) = default;

 private:
  std::vector<IntegerPartition> shapes_;
};

std::vector<Step> step_pattern(const OscillatingTableau& o);

OscillatingTableau matching_to_oscillating(const PartialMatching& m);
PartialMatching oscillating_to_matching(const OscillatingTableau& o);
OscillatingTableau conjugate_oscillating(const OscillatingTableau& o);

}  // namespace crossnest
