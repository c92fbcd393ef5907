#include "crossnest/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "crossnest/error.hpp"

namespace crossnest {

namespace {

void validate_bijection(const std::vector<Vertex>& image) {
  const std::size_t n = image.size();
  if (n == 0) throw InvalidInput("permutation is empty");
  std::vector<std::size_t> seen_at(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = image[i];
    if (v < 1 || v > n) {
      throw InvalidInput("value " + std::to_string(v) + " at index " + std::to_string(i + 1) +
                         " is out of range 1.." + std::to_string(n));
    }
    if (seen_at[v] != 0) {
      throw InvalidInput("value " + std::to_string(v) + " repeated at index " +
                         std::to_string(i + 1) + " (first at index " +
                         std::to_string(seen_at[v]) + ")");
    }
    seen_at[v] = i + 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  validate_bijection(image_);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i + 1;
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(size());
  for (std::size_t i = 0; i < size(); ++i) inv[image_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<Vertex> image;
  std::size_t pos = 0;
  const auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    Vertex value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidInput("token '" + std::string(token) + "' at index " +
                         std::to_string(image.size() + 1) + " is not a positive integer");
    }
    image.push_back(value);
    pos = end;
  }
  return Permutation(std::move(image));
}

std::string to_string(const Permutation& perm) {
  std::ostringstream out;
  for (std::size_t i = 1; i <= perm.size(); ++i) {
    if (i > 1) out << ' ';
    out << perm(i);
  }
  return out.str();
}

ArcDiagram arc_diagram(const Permutation& perm) {
  ArcDiagram d;
  d.n = perm.size();
  for (Vertex a = 1; a <= d.n; ++a) {
    const Vertex b = perm(a);
    if (a <= b) {
      d.upper.push_back({a, b, Side::upper});
    } else {
      d.lower.push_back({b, a, Side::lower});
    }
  }
  std::sort(d.lower.begin(), d.lower.end());
  return d;
}

std::string_view to_string(VertexType type) {
  switch (type) {
    case VertexType::opener: return "opener";
    case VertexType::closer: return "closer";
    case VertexType::loop: return "loop";
    case VertexType::upper_transient: return "upper_transient";
    case VertexType::lower_transient: return "lower_transient";
  }
  return "?";
}

std::vector<VertexType> vertex_types(const Permutation& perm) {
  const std::size_t n = perm.size();
  const Permutation inv = perm.inverse();
  std::vector<VertexType> types(n);
  for (Vertex i = 1; i <= n; ++i) {
    const bool out_upper = perm(i) >= i;
    const bool in_upper = inv(i) <= i;
    if (perm(i) == i) {
      types[i - 1] = VertexType::loop;
    } else if (out_upper && in_upper) {
      types[i - 1] = VertexType::upper_transient;
    } else if (out_upper) {
      types[i - 1] = VertexType::opener;
    } else if (in_upper) {
      types[i - 1] = VertexType::closer;
    } else {
      types[i - 1] = VertexType::lower_transient;
    }
  }
  return types;
}

DegreePair upper_degree(VertexType type) {
  switch (type) {
    case VertexType::opener: return {1, 0};
    case VertexType::closer: return {0, 1};
    case VertexType::loop:
    case VertexType::upper_transient: return {1, 1};
    case VertexType::lower_transient: return {0, 0};
  }
  return {};
}

DegreePair lower_degree(VertexType type) {
  switch (type) {
    case VertexType::opener: return {1, 0};
    case VertexType::closer: return {0, 1};
    case VertexType::loop:
    case VertexType::upper_transient: return {0, 0};
    case VertexType::lower_transient: return {1, 1};
  }
  return {};
}

DegreeSequence degree_sequence(const Permutation& perm) {
  DegreeSequence seq;
  for (const VertexType t : vertex_types(perm)) {
    seq.upper.push_back(upper_degree(t));
    seq.lower.push_back(lower_degree(t));
  }
  return seq;
}

char to_char(DegreeClass c) {
  switch (c) {
    case DegreeClass::O: return 'O';
    case DegreeClass::C: return 'C';
    case DegreeClass::U: return 'U';
    case DegreeClass::L: return 'L';
  }
  return '?';
}

std::vector<DegreeClass> degree_classes(const Permutation& perm) {
  std::vector<DegreeClass> classes;
  classes.reserve(perm.size());
  for (const DegreePair d : degree_sequence(perm).upper) {
    if (d == DegreePair{1, 0}) {
      classes.push_back(DegreeClass::O);
    } else if (d == DegreePair{0, 1}) {
      classes.push_back(DegreeClass::C);
    } else if (d == DegreePair{1, 1}) {
      classes.push_back(DegreeClass::U);
    } else {
      classes.push_back(DegreeClass::L);
    }
  }
  return classes;
}

std::string degree_class_string(const Permutation& perm) {
  std::string s;
  for (const DegreeClass c : degree_classes(perm)) s.push_back(to_char(c));
  return s;
}

Permutation recombine(std::span<const Arc> upper, std::span<const Arc> lower, std::size_t n) {
  std::vector<Vertex> image(n, 0);
  std::vector<bool> hit(n + 1, false);
  const auto assign = [&](Vertex from, Vertex to) {
    if (from < 1 || from > n || to < 1 || to > n) {
      throw InvalidInput("arc endpoint outside 1.." + std::to_string(n));
    }
    if (image[from - 1] != 0) {
      throw InvalidInput("vertex " + std::to_string(from) + " has two images");
    }
    if (hit[to]) throw InvalidInput("vertex " + std::to_string(to) + " has two pre-images");
    image[from - 1] = to;
    hit[to] = true;
  };
  for (const Arc& a : upper) {
    if (a.side != Side::upper || a.left > a.right) {
      throw InvalidInput("malformed upper arc (" + std::to_string(a.left) + "," +
                         std::to_string(a.right) + ")");
    }
    assign(a.left, a.right);
  }
  for (const Arc& a : lower) {
    if (a.side != Side::lower || a.left >= a.right) {
      throw InvalidInput("malformed lower arc (" + std::to_string(a.left) + "," +
                         std::to_string(a.right) + ")");
    }
    assign(a.right, a.left);
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (image[v - 1] == 0) throw InvalidInput("vertex " + std::to_string(v) + " has no image");
  }
  return Permutation(std::move(image));
}

}  // namespace crossnest
