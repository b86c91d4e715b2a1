#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qalg/algebra.hpp"
#include "qalg/representation.hpp"

namespace qalg {

/// Syntax or reference error in an algebra or module file.  Line and column
/// are 1-based; column 0 means the whole line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// Quiver and relations as written in an algebra file:
///
///     # comment
///     vertices: 1 2            (optional; arrows also declare vertices)
///     a: 1 -> 2
///     relation: a*b - 2*c      (the "relation:" prefix is optional)
///     (1)*a*b + (-1/2)*c, d^2  (commas separate relations)
struct AlgebraText {
  Quiver quiver;
  std::vector<PathAlgElement> relations;
};

AlgebraText parse_algebra(std::string_view text);
/// Parses one relation expression against an existing quiver.
PathAlgElement parse_relation(const Quiver& quiver, std::string_view expression);
AlgebraPtr load_algebra(std::string_view text, const BuildOptions& options = {});
std::string write_algebra(const Quiver& quiver, const std::vector<PathAlgElement>& relations);

/// Resolves the reference on a module file's "algebra:" line.
using AlgebraResolver = std::function<AlgebraPtr(const std::string& reference)>;

/// Module file:
///
///     algebra: builtin:local6  (reference handed to the resolver)
///     dims: 2 1                (one entry per vertex, in vertex order)
///     arrow a:                 (dim(source) rows of dim(target) rationals)
///       1 0
///       0 1/2
///
/// Arrows without a block act as zero.  When `algebra` is given, the
/// "algebra:" line is optional and the resolver is not consulted.
Representation parse_module(std::string_view text, const AlgebraResolver& resolver,
                            AlgebraPtr algebra = nullptr);
std::string write_module(const Representation& m, const std::string& algebra_reference);

}  // namespace qalg
