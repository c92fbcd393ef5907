#include "crossnest/tableau.hpp"

#include <algorithm>
#include <numeric>

#include "crossnest/error.hpp"

namespace crossnest {

namespace {

std::string show(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

// The single box by which `big` exceeds `small`; caller guarantees sizes differ by one.
Cell added_box(const IntegerPartition& small, const IntegerPartition& big) {
  const auto& s = small.parts();
  const auto& b = big.parts();
  for (std::size_t r = 0; r < b.size(); ++r) {
    const std::size_t sr = r < s.size() ? s[r] : 0;
    if (b[r] != sr) return {r + 1, b[r]};
  }
  throw InvalidInput("shapes do not differ by one box");
}

bool contains_shape(const IntegerPartition& big, const IntegerPartition& small) {
  if (small.length() > big.length()) return false;
  for (std::size_t r = 0; r < small.length(); ++r) {
    if (small.parts()[r] > big.parts()[r]) return false;
  }
  return true;
}

}  // namespace

IntegerPartition::IntegerPartition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw InvalidInput("partition has a zero part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts increase");
  }
}

std::size_t IntegerPartition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

IntegerPartition conjugate(const IntegerPartition& p) {
  std::vector<std::size_t> cols(p.width(), 0);
  for (const std::size_t len : p.parts()) {
    for (std::size_t c = 0; c < len; ++c) ++cols[c];
  }
  return IntegerPartition(std::move(cols));
}

PartialTableau::PartialTableau(Rows rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw InvalidInput("tableau has an empty row");
    if (r > 0 && row.size() > rows_[r - 1].size()) throw InvalidInput("tableau rows lengthen");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] == 0) throw InvalidInput("tableau entries must be positive");
      if (c > 0 && row[c] <= row[c - 1]) throw InvalidInput("tableau row not increasing");
      if (r > 0 && row[c] <= rows_[r - 1][c]) throw InvalidInput("tableau column not increasing");
    }
  }
  std::vector<std::size_t> all;
  for (const auto& row : rows_) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidInput("tableau entries repeat");
  }
}

IntegerPartition PartialTableau::shape() const {
  std::vector<std::size_t> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(row.size());
  return IntegerPartition(std::move(parts));
}

std::size_t PartialTableau::size() const noexcept {
  std::size_t s = 0;
  for (const auto& row : rows_) s += row.size();
  return s;
}

bool PartialTableau::contains(std::size_t value) const {
  return std::any_of(rows_.begin(), rows_.end(), [value](const auto& row) {
    return std::binary_search(row.begin(), row.end(), value);
  });
}

Insertion row_insert(const PartialTableau& t, std::size_t x) {
  if (x == 0) throw InvalidInput("tableau entries must be positive");
  if (t.contains(x)) throw InvalidInput("value " + std::to_string(x) + " already in tableau");
  PartialTableau::Rows rows = t.rows();
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return {PartialTableau(std::move(rows)), Cell{r + 1, 1}};
    }
    auto& row = rows[r];
    const auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {PartialTableau(std::move(rows)), Cell{r + 1, row.size()}};
    }
    std::swap(x, *it);
  }
}

Ejection reverse_row_insert(const PartialTableau& t, Cell corner) {
  PartialTableau::Rows rows = t.rows();
  const std::size_t r = corner.row;
  const bool is_corner = r >= 1 && r <= rows.size() && corner.col == rows[r - 1].size() &&
                         (r == rows.size() || rows[r].size() < corner.col);
  if (!is_corner) throw InvalidInput("cell " + show(corner) + " is not a removable corner");

  std::size_t y = rows[r - 1].back();
  rows[r - 1].pop_back();
  if (rows[r - 1].empty()) rows.pop_back();
  for (std::size_t rr = r - 1; rr-- > 0;) {
    auto& row = rows[rr];
    // Largest entry smaller than y is the one y bumped on the way down.
    auto it = std::lower_bound(row.begin(), row.end(), y);
    if (it == row.begin()) throw InternalError("reverse bump found no smaller entry");
    --it;
    std::swap(y, *it);
  }
  return {PartialTableau(std::move(rows)), y};
}

Deletion delete_min(const PartialTableau& t) {
  if (t.empty()) throw InvalidInput("delete_min on an empty tableau");
  PartialTableau::Rows rows = t.rows();
  std::size_t r = 0;
  std::size_t c = 0;
  for (;;) {
    const bool has_right = c + 1 < rows[r].size();
    const bool has_below = r + 1 < rows.size() && c < rows[r + 1].size();
    if (!has_right && !has_below) break;
    if (has_right && (!has_below || rows[r][c + 1] < rows[r + 1][c])) {
      rows[r][c] = rows[r][c + 1];
      ++c;
    } else {
      rows[r][c] = rows[r + 1][c];
      ++r;
    }
  }
  rows[r].pop_back();
  if (rows[r].empty()) rows.pop_back();
  return {PartialTableau(std::move(rows)), Cell{r + 1, c + 1}};
}

PartialTableau reverse_delete_min(const PartialTableau& t, Cell vacated, std::size_t x) {
  PartialTableau::Rows rows = t.rows();
  if (vacated.row < 1 || vacated.col < 1) throw InvalidInput("cell " + show(vacated) + " invalid");
  std::size_t r = vacated.row - 1;
  std::size_t c = vacated.col - 1;
  const bool addable =
      r <= rows.size() && c == (r < rows.size() ? rows[r].size() : 0) && (r == 0 || rows[r - 1].size() > c);
  if (!addable) throw InvalidInput("cell " + show(vacated) + " is not an addable corner");
  if (x == 0 || (!rows.empty() && x >= rows[0][0])) {
    throw InvalidInput("value " + std::to_string(x) + " is not below every tableau entry");
  }

  if (r == rows.size()) rows.emplace_back();
  rows[r].push_back(0);
  while (r > 0 || c > 0) {
    const bool has_left = c > 0;
    const bool has_above = r > 0;
    if (has_left && (!has_above || rows[r][c - 1] > rows[r - 1][c])) {
      rows[r][c] = rows[r][c - 1];
      --c;
    } else {
      rows[r][c] = rows[r - 1][c];
      --r;
    }
  }
  rows[0][0] = x;
  return PartialTableau(std::move(rows));
}

PartialMatching::PartialMatching(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), partner_(n + 1, 0) {
  std::sort(edges_.begin(), edges_.end());
  for (const auto& [i, j] : edges_) {
    if (i < 1 || i >= j || j > n_) {
      throw InvalidInput("edge (" + std::to_string(i) + "," + std::to_string(j) +
                         ") invalid for " + std::to_string(n_) + " vertices");
    }
    if (partner_[i] != 0 || partner_[j] != 0) {
      throw InvalidInput("edges share a vertex at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    }
    partner_[i] = j;
    partner_[j] = i;
  }
}

std::vector<Arc> matching_arcs(const PartialMatching& m) {
  std::vector<Arc> arcs;
  arcs.reserve(m.edges().size());
  for (const auto& [i, j] : m.edges()) arcs.push_back({i, j, Side::lower});
  return arcs;
}

std::vector<Step> step_pattern(const PartialMatching& m) {
  std::vector<Step> steps(m.n());
  for (Vertex v = 1; v <= m.n(); ++v) {
    const Vertex p = m.partner(v);
    steps[v - 1] = p == 0 ? Step::isolated : (p > v ? Step::opener : Step::closer);
  }
  return steps;
}

OscillatingTableau::OscillatingTableau(std::vector<IntegerPartition> shapes)
    : shapes_(std::move(shapes)) {
  if (shapes_.empty()) throw InvalidInput("oscillating tableau needs at least one shape");
  if (!shapes_.front().empty() || !shapes_.back().empty()) {
    throw InvalidInput("oscillating tableau must start and end empty");
  }
  for (std::size_t i = 1; i < shapes_.size(); ++i) {
    const auto& a = shapes_[i - 1];
    const auto& b = shapes_[i];
    const bool same = a == b;
    const bool grow = b.size() == a.size() + 1 && contains_shape(b, a);
    const bool shrink = a.size() == b.size() + 1 && contains_shape(a, b);
    if (!same && !grow && !shrink) {
      throw InvalidInput("shapes " + std::to_string(i - 1) + " and " + std::to_string(i) +
                         " differ by more than one box");
    }
  }
}

std::vector<Step> step_pattern(const OscillatingTableau& o) {
  std::vector<Step> steps;
  const auto& s = o.shapes();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].size() > s[i - 1].size()) {
      steps.push_back(Step::opener);
    } else if (s[i].size() < s[i - 1].size()) {
      steps.push_back(Step::closer);
    } else {
      steps.push_back(Step::isolated);
    }
  }
  return steps;
}

OscillatingTableau matching_to_oscillating(const PartialMatching& m) {
  std::vector<IntegerPartition> shapes;
  shapes.reserve(m.n() + 1);
  shapes.emplace_back();
  PartialTableau t;
  for (Vertex i = 1; i <= m.n(); ++i) {
    const Vertex p = m.partner(i);
    if (p > i) {
      t = row_insert(t, p).tableau;
    } else if (p != 0) {
      // Entries are partners of still-open arcs, all >= i, so i is the minimum.
      if (t.empty() || t.at({1, 1}) != i) {
        throw InternalError("closer " + std::to_string(i) + " not at the tableau corner");
      }
      t = delete_min(t).tableau;
    }
    shapes.push_back(t.shape());
  }
  return OscillatingTableau(std::move(shapes));
}

PartialMatching oscillating_to_matching(const OscillatingTableau& o) {
  const auto& shapes = o.shapes();
  const std::size_t n = o.steps();
  std::vector<PartialMatching::Edge> edges;
  PartialTableau t;
  for (std::size_t i = n; i >= 1; --i) {
    const IntegerPartition& before = shapes[i - 1];
    const IntegerPartition& after = shapes[i];
    if (t.shape() != after) throw InvalidInput("shape sequence inconsistent at step " + std::to_string(i));
    if (after.size() > before.size()) {
      auto [rest, partner] = reverse_row_insert(t, added_box(before, after));
      if (partner <= i) throw InvalidInput("opener " + std::to_string(i) + " has no later partner");
      edges.emplace_back(i, partner);
      t = std::move(rest);
    } else if (after.size() < before.size()) {
      t = reverse_delete_min(t, added_box(after, before), i);
    }
  }
  if (!t.empty()) throw InvalidInput("shape sequence leaves entries unmatched");
  return PartialMatching(n, std::move(edges));
}

OscillatingTableau conjugate_oscillating(const OscillatingTableau& o) {
  std::vector<IntegerPartition> shapes;
  shapes.reserve(o.shapes().size());
  for (const auto& s : o.shapes()) shapes.push_back(conjugate(s));
  return OscillatingTableau(std::move(shapes));
}

}  // namespace crossnest
