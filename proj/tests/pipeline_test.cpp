#include <doctest.h>

#include "qalg/presets.hpp"
#include "qalg/verification.hpp"

using namespace qalg;

namespace {

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("default run passes and is reproducible") {
  const auto first = verify_local_example();
  CHECK(first.overall() == CheckStatus::Pass);
  CHECK(first.exit_code() == 0);
  const auto text = first.structured();
  CHECK(has_line(text, "verdict.cluster_tilting_2 = true"));
  CHECK(has_line(text, "end.dimension = 165"));
  CHECK(has_line(text, "B.global_dimension = 3"));
  CHECK(has_line(text, "B.dominant_dimension = 3"));
  CHECK(has_line(text, "M.summand_dimensions = 6 8 5 8 6"));
  CHECK(has_line(text, "result = pass"));
  CHECK(verify_local_example().structured() == text);
  PipelineOptions other;
  other.seed = 17;
  CHECK(verify_local_example(other).overall() == CheckStatus::Pass);
}

TEST_CASE("a bound below 3 leaves the run inconclusive") {
  PipelineOptions o;
  o.bound = 2;
  const auto r = verify_local_example(o);
  CHECK(r.overall() == CheckStatus::Inconclusive);
  CHECK(r.exit_code() == 2);
  CHECK(r.first_divergence().starts_with("B.global_dimension"));
}

TEST_CASE("replacing a^2 by a^3 is reported at the first check") {
  auto text = parse_algebra(preset_text("local6"));
  const auto cube = parse_relation(text.quiver, "a*a*a");
  text.relations[0] = cube;
  // oracle: the stable truncation dimension of the tampered relations
  std::size_t prev = 0, oracle = 0;
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto d = truncated_dimension(text.quiver, text.relations, n);
    if (d == prev) {
      oracle = d;
      break;
    }
    prev = d;
  }
  REQUIRE(oracle != 0);
  REQUIRE(oracle != 6);

  PipelineOptions o;
  o.algebra = text;
  const auto r = verify_local_example(o);
  CHECK(r.overall() == CheckStatus::Fail);
  CHECK(r.exit_code() == 1);
  CHECK(r.first_divergence() == "A.dimension: expected 6, got " + std::to_string(oracle));
}
