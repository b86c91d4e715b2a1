#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qalg/rational.hpp"

namespace qalg {

using ArrowId = std::uint32_t;
using VertexId = std::size_t;

struct Arrow {
  std::string label;
  VertexId source;
  VertexId target;
};

class QuiverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite directed multigraph with labelled vertices and arrows.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::size_t vertex_count);

  VertexId add_vertex(std::string label);
  ArrowId add_arrow(std::string label, VertexId source, VertexId target);
  ArrowId add_arrow(std::string label, std::string_view source, std::string_view target);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t arrow_count() const noexcept { return arrows_.size(); }
  [[nodiscard]] const std::string& vertex_label(VertexId v) const { return vertices_.at(v); }
  [[nodiscard]] const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  [[nodiscard]] const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view label) const;
  [[nodiscard]] std::optional<ArrowId> find_arrow(std::string_view label) const;

  /// Same vertices, every arrow reversed; arrow ids and labels are kept.
  [[nodiscard]] Quiver opposite() const;
  /// Connected as an undirected graph (the empty quiver is not).
  [[nodiscard]] bool is_connected() const;

  /// Number of arrows i -> j.
  [[nodiscard]] std::vector<std::vector<std::size_t>> adjacency() const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, ArrowId> arrow_index_;
};

/// A path: either the trivial path at a vertex or a composable arrow word.
/// Paths compose left to right: p * q means "traverse p, then q".
class Path {
 public:
  static Path trivial(VertexId v) { return Path(v, v, {}); }
  static Path of_arrow(const Quiver& q, ArrowId a);
  /// Throws QuiverError if the word is not composable.
  static Path from_arrows(const Quiver& q, std::vector<ArrowId> arrows);

  [[nodiscard]] VertexId source() const noexcept { return source_; }
  [[nodiscard]] VertexId target() const noexcept { return target_; }
  [[nodiscard]] std::size_t length() const noexcept { return arrows_.size(); }
  [[nodiscard]] bool is_trivial() const noexcept { return arrows_.empty(); }
  [[nodiscard]] const std::vector<ArrowId>& arrows() const noexcept { return arrows_; }

  /// The same word read backwards, as a path of the opposite quiver.
  [[nodiscard]] Path reversed() const;
  [[nodiscard]] std::string to_string(const Quiver& q) const;

  friend bool operator==(const Path&, const Path&) = default;
  /// Length first, then lexicographic by arrow id; trivial paths by vertex.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend std::optional<Path> compose(const Path& p, const Path& q);

 private:
  Path(VertexId s, VertexId t, std::vector<ArrowId> arrows)
      : source_(s), target_(t), arrows_(std::move(arrows)) {}

  VertexId source_;
  VertexId target_;
  std::vector<ArrowId> arrows_;
};

/// p * q, or nullopt when target(p) != source(q).
std::optional<Path> compose(const Path& p, const Path& q);

/// Finite linear combination of paths with no stored zero coefficients.
class PathAlgElement {
 public:
  using Terms = std::map<Path, Rational>;

  PathAlgElement() = default;
  explicit PathAlgElement(Path p, Rational c = 1);

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const Path& p) const;

  void add_term(const Path& p, const Rational& c);
  PathAlgElement& operator+=(const PathAlgElement& rhs);
  PathAlgElement& operator-=(const PathAlgElement& rhs);
  PathAlgElement& operator*=(const Rational& c);
  friend PathAlgElement operator+(PathAlgElement a, const PathAlgElement& b) { return a += b; }
  friend PathAlgElement operator-(PathAlgElement a, const PathAlgElement& b) { return a -= b; }
  friend PathAlgElement operator*(PathAlgElement a, const Rational& c) { return a *= c; }
  /// Product in the path algebra; incomposable pairs of paths contribute zero.
  friend PathAlgElement operator*(const PathAlgElement& a, const PathAlgElement& b);
  friend bool operator==(const PathAlgElement&, const PathAlgElement&) = default;

  [[nodiscard]] PathAlgElement reversed() const;
  /// Human-readable form such as `a*b + b*b - 1/2*b*b*a`.
  [[nodiscard]] std::string to_string(const Quiver& q) const;

 private:
  Terms terms_;
};

}  // namespace qalg
