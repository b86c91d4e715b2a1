#include <doctest.h>

#include <random>

#include "qalg/algebra.hpp"
#include "qalg/presets.hpp"
#include "qalg/text_format.hpp"

using namespace qalg;

namespace {

AlgebraText text(std::string_view s) { return parse_algebra(s); }

// The stable truncation dimension, found by growing n until two
// consecutive truncations agree.  Independent of the Groebner engine.
std::size_t stable_truncation(const AlgebraText& t, std::size_t limit = 16) {
  std::size_t prev = truncated_dimension(t.quiver, t.relations, 1);
  for (std::size_t n = 2; n <= limit; ++n) {
    const auto d = truncated_dimension(t.quiver, t.relations, n);
    if (d == prev) return d;
    prev = d;
  }
  FAIL("truncation did not stabilize");
  return 0;
}

PathAlgElement path(const Quiver& q, std::string_view word) { return parse_relation(q, word); }

}  // namespace

TEST_CASE("built dimension matches the truncation oracle") {
  const char* cases[] = {
      "vertices: 1\na: 1 -> 1\nb: 1 -> 1\na*a, a*b + b*b + b*b*a\n",
      "vertices: 1\nx: 1 -> 1\nx^2\n",
      "vertices: 1\nx: 1 -> 1\ny: 1 -> 1\nx*x, y*y, x*y - y*x\n",
      "vertices: 1\nx: 1 -> 1\ny: 1 -> 1\nx*x, y*y*y, x*y - y*x\n",
      "vertices: 1\nx: 1 -> 1\ny: 1 -> 1\nx*x, y*y, x*y + y*x\n",
      "vertices: 1 2\na: 1 -> 2\n",
      "vertices: 1 2\na: 1 -> 2\nb: 1 -> 2\n",
      "vertices: 1 2 3\na: 1 -> 2\nb: 2 -> 3\na*b\n",
      "vertices: 1 2\na: 1 -> 2\nb: 2 -> 1\na*b, b*a\n",
      "vertices: 1 2\na: 1 -> 2\nb: 2 -> 1\na*b*a, b*a*b\n",
  };
  // hand counts where they are short enough to do by hand
  const std::size_t by_hand[] = {6, 2, 4, 6, 4, 3, 4, 5, 4, 6};
  for (std::size_t i = 0; i < std::size(cases); ++i) {
    CAPTURE(cases[i]);
    const auto t = text(cases[i]);
    const auto oracle = stable_truncation(t);
    const auto a = build_algebra(t.quiver, t.relations);
    CHECK(a->dimension() == oracle);
    CHECK(a->dimension() == by_hand[i]);
    CHECK(truncated_dimension(t.quiver, t.relations, a->truncation_length()) == a->dimension());
    CHECK(a->is_associative());
  }
}

TEST_CASE("non-admissible and infinite quotients are rejected") {
  // x^2 - x^3: truncating at x^2 would give 2, but x^2 = x^3 = x^4 = ...
  // and x^2 is a nonzero idempotent, so the quotient K[x]/(x^2 - x^3) is
  // three-dimensional and x is not nilpotent.
  const auto t = text("vertices: 1\nx: 1 -> 1\nx*x - x*x*x\n");
  CHECK_THROWS_AS(build_algebra(t.quiver, t.relations), NotAdmissible);
  const auto free_loop = text("vertices: 1\nx: 1 -> 1\n");
  CHECK_THROWS_AS(build_algebra(free_loop.quiver, free_loop.relations), NotFiniteDimensional);
  BuildOptions small;
  small.dimension_ceiling = 3;
  const auto local = text(preset_text("local6"));
  CHECK_THROWS_AS(build_algebra(local.quiver, local.relations, small), DimensionLimitExceeded);
}

TEST_CASE("malformed relations") {
  const auto t = text("vertices: 1 2\na: 1 -> 2\nb: 2 -> 1\n");
  CHECK_THROWS_AS(build_algebra(t.quiver, {path(t.quiver, "a")}), MalformedRelation);
  CHECK_THROWS_AS(build_algebra(t.quiver, {path(t.quiver, "a*b") + path(t.quiver, "b*a")}),
                  MalformedRelation);
}

TEST_CASE("products agree with path composition") {
  const auto a = preset_algebra("local6-end");
  REQUIRE(a->dimension() == 165);
  const auto& q = a->quiver();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, a->dimension() - 1);
  for (int t = 0; t < 300; ++t) {
    const auto i = pick(rng), j = pick(rng);
    const Path& p = a->basis()[i];
    const Path& r = a->basis()[j];
    Vector x(a->dimension()), y(a->dimension());
    x[i] = 1;
    y[j] = 1;
    const auto product = a->multiply(x, y);
    const auto composed = compose(p, r);
    if (!composed) {
      CHECK(is_zero(product));
    } else {
      CHECK(product == a->normal_form(*composed));
    }
  }
  // the relations themselves vanish
  for (const auto& rel : a->relations()) CHECK(is_zero(a->normal_form(rel)));
  CHECK(q.vertex_count() == 5);
}

TEST_CASE("ideal membership") {
  const auto t = text(preset_text("local6"));
  const auto& q = t.quiver;
  // a * (ab + b^2 + b^2 a) - (a a) b = a b^2 + a b^2 a
  CHECK(ideal_contains(t.relations, path(q, "a*b*b + a*b*b*a"), 10));
  CHECK(ideal_contains(t.relations, path(q, "a*a*b"), 10));
  CHECK_FALSE(ideal_contains(t.relations, path(q, "a*b"), 10));
  const auto l2 = text("vertices: 1\nx: 1 -> 1\n");
  CHECK(ideal_contains({path(l2.quiver, "x*x")}, path(l2.quiver, "x*x*x"), 6));
  CHECK_FALSE(ideal_contains({path(l2.quiver, "x*x*x")}, path(l2.quiver, "x*x"), 6));
}

TEST_CASE("opposite algebra") {
  const auto a = preset_algebra("local6");
  const auto op = a->opposite();
  CHECK(op->dimension() == 6);
  CHECK(op->opposite() == a);
  const auto end = preset_algebra("local6-end");
  CHECK(end->opposite()->dimension() == 165);
  CHECK(end->opposite()->quiver().adjacency() == end->quiver().opposite().adjacency());
}

TEST_CASE("algebra text format") {
  const auto t = text(preset_text("local6"));
  CHECK(t.quiver.vertex_count() == 1);
  CHECK(t.quiver.arrow_count() == 2);
  REQUIRE(t.relations.size() == 2);
  const auto again = parse_algebra(write_algebra(t.quiver, t.relations));
  CHECK(again.quiver == t.quiver);
  CHECK(again.relations == t.relations);

  // an acyclic quiver without relations gives the path algebra
  const auto hereditary = load_algebra("a: 1 -> 2\nb: 2 -> 3\n");
  CHECK(hereditary->dimension() == 6);

  auto error_at = [](std::string_view s) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_algebra(s);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("a: 1 -> 2\nc: 2 -> 1\na*a\n").first == 3);     // not composable
  CHECK(error_at("a: 1 -> 1\n\nrelation: a*z\n").first == 3);    // unknown label
  CHECK(error_at("a: 1 -> 1\n1/0*a*a\n").first == 2);            // malformed rational
  CHECK(error_at("a: 1 -> \n").first == 1);
  CHECK(error_at("# only a comment\na: 1 -> 1\na*a\n") == std::pair<std::size_t, std::size_t>{0, 0});
}
