#include <doctest.h>

#include <random>

#include "qalg/matrix.hpp"

using namespace qalg;

namespace {

// Entries in [-3, 3].
Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Laplace expansion along the first row.
Rational laplace(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = m(r, c);
    const Rational term = m(0, j) * laplace(minor);
    out += j % 2 ? -term : term;
  }
  return out;
}

mpq_class as_mpq(long long n, long long d) {
  mpq_class q(mpz_class(std::to_string(n)), mpz_class(std::to_string(d)));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("rational arithmetic agrees with GMP") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> d(-1'000'000'007LL, 1'000'000'007LL);
  Rational acc = 1;
  mpq_class ref = 1;
  for (int i = 0; i < 400; ++i) {
    long long n = d(rng), m = d(rng);
    if (n == 0) n = 3;
    if (m == 0) m = 1;
    const Rational x(n, m);
    const mpq_class y = as_mpq(n, m);
    switch (i % 4) {
      case 0: acc += x; ref += y; break;
      case 1: acc *= x; ref *= y; break;
      case 2: acc -= x; ref -= y; break;
      default: acc /= x; ref /= y; break;
    }
    REQUIRE(acc.to_mpq() == ref);
  }
  // shrinks back to a small value
  acc -= acc;
  acc += Rational(1, 2);
  CHECK(acc * 2 == 1);
}

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::parse("6/-4"), std::invalid_argument);
  CHECK(Rational::parse("(-1/2)") == Rational(-1, 2));
  CHECK(Rational::parse("0/5").is_zero());
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(-3, 6).to_string() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  const auto big = Rational::parse("123456789012345678901234567890/7");
  CHECK(big * Rational(7) / Rational::parse("123456789012345678901234567890") == 1);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(-Rational(2, 5) == Rational(-2, 5));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (int t = 0; t < 5; ++t) {
      const auto m = random_matrix(rng, n, n);
      const auto oracle = laplace(m);
      CHECK(determinant(m) == oracle);
    }
  }
  CHECK(determinant(Matrix{{1, 2}, {2, 4}}).is_zero());
}

TEST_CASE("kernel, rank and inverse are consistent") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + t % 5, c = 1 + (t * 7) % 6;
    auto m = random_matrix(rng, r, c);
    if (t % 3 == 0 && r > 1) {
      // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    }
    const auto k = kernel_basis(m);
    CHECK(k.rows() + rank(m) == c);
    if (k.rows() > 0) CHECK((m * k.transpose()).is_zero());
    CHECK(rank(k) == k.rows());
    const auto lk = left_kernel_basis(m);
    CHECK(lk.rows() + rank(m) == r);
    if (lk.rows() > 0) CHECK((lk * m).is_zero());
    if (r == c) {
      auto inv = inverse(m);
      CHECK(inv.has_value() == !determinant(m).is_zero());
      if (inv) CHECK(m * *inv == Matrix::identity(r));
    }
  }
}

TEST_CASE("subspace membership, intersection and sum") {
  const auto u = Subspace::span(Matrix{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  const auto w = Subspace::span(Matrix{{0, 1, 0}, {0, 0, 1}});
  CHECK(u.dim() == 2);
  CHECK(u.contains(Vector{2, -3, 0}));
  CHECK_FALSE(u.contains(Vector{0, 0, 1}));
  CHECK(u.intersect(w).dim() == 1);
  CHECK(u.sum(w).dim() == 3);
  // dim(U + W) + dim(U ∩ W) = dim U + dim W on random pairs
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto a = Subspace::span(random_matrix(rng, 1 + t % 3, 5));
    const auto b = Subspace::span(random_matrix(rng, 1 + t % 4, 5));
    CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
  }
  auto coords = u.coordinates(Vector{2, -3, 0});
  REQUIRE(coords);
  CHECK((*coords)[0] == 2);
  CHECK((*coords)[1] == -3);
}

TEST_CASE("incremental span expresses members over inserted vectors") {
  IncrementalSpan s(3);
  CHECK(s.insert(Vector{1, 1, 0}));
  CHECK(s.insert(Vector{0, 1, 1}));
  CHECK_FALSE(s.insert(Vector{1, 2, 1}));
  auto c = s.express(Vector{2, 1, -1});
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == -1);
  CHECK_FALSE(s.express(Vector{0, 0, 1}));
}

TEST_CASE("coefficients in span") {
  const std::vector<Vector> basis{{1, 2, 0}, {0, 1, 1}};
  auto c = coefficients_in_span(basis, Vector{3, 5, -1});
  REQUIRE(c);
  CHECK((*c)[0] == 3);
  CHECK((*c)[1] == -1);
  CHECK_FALSE(coefficients_in_span(basis, Vector{0, 0, 1}));
}
