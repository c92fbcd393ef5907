#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crossnest {

// Vertices and values are 1-indexed throughout.
using Vertex = std::size_t;

class Permutation {
 public:
  // Throws InvalidInput unless image is a bijection on {1..n}, n >= 1.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  Vertex operator()(Vertex i) const { return image_[i - 1]; }
  std::span<const Vertex> image() const noexcept { return image_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

// One-line notation: whitespace- or comma-separated integers.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& perm);

enum class Side { upper, lower };

// Upper arcs encode perm(left) = right and may be loops. Lower arcs are stored
// orientation-reversed with left < right and encode perm(right) = left.
struct Arc {
  Vertex left = 0;
  Vertex right = 0;
  Side side = Side::upper;

  bool is_loop() const noexcept { return left == right; }

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct ArcDiagram {
  std::size_t n = 0;
  std::vector<Arc> upper;  // sorted by left endpoint
  std::vector<Arc> lower;  // sorted by left endpoint
};

ArcDiagram arc_diagram(const Permutation& perm);

enum class VertexType { opener, closer, loop, upper_transient, lower_transient };

std::string_view to_string(VertexType type);
std::vector<VertexType> vertex_types(const Permutation& perm);

// (has a left arc-end, has a right arc-end) for one side of the diagram. An
// opener reads (1,0) and a closer (0,1); a loop contributes both ends.
struct DegreePair {
  int first = 0;
  int second = 0;

  DegreePair swapped() const noexcept { return {second, first}; }
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

struct DegreeSequence {
  std::vector<DegreePair> upper;
  std::vector<DegreePair> lower;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

DegreeSequence degree_sequence(const Permutation& perm);
DegreePair upper_degree(VertexType type);
DegreePair lower_degree(VertexType type);

// O = opener, C = closer, U = upper degree (1,1) (loop or upper transient),
// L = upper degree (0,0) (lower transient).
enum class DegreeClass { O, C, U, L };

char to_char(DegreeClass c);
std::vector<DegreeClass> degree_classes(const Permutation& perm);
std::string degree_class_string(const Permutation& perm);

// Inverse of arc_diagram. Throws InvalidInput naming the offending vertex when
// some vertex receives no image, two images, or two pre-images.
Permutation recombine(std::span<const Arc> upper, std::span<const Arc> lower, std::size_t n);

}  // namespace crossnest
