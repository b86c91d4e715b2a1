#include <doctest.h>

#include <random>

#include "qalg/presets.hpp"
#include "qalg/representation.hpp"
#include "qalg/text_format.hpp"

using namespace qalg;

namespace {

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = d(rng);
    if (!determinant(g).is_zero()) return g;
  }
}

// The same module written in another basis at every vertex.
Representation change_basis(const Representation& m, std::mt19937_64& rng) {
  std::vector<Matrix> g, ginv;
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    g.push_back(random_invertible(rng, m.dim(v)));
    ginv.push_back(*inverse(g.back()));
  }
  std::vector<Matrix> maps;
  const auto& q = m.algebra()->quiver();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    maps.push_back(ginv[arrow.source] * m.map(a) * g[arrow.target]);
  }
  return Representation(m.algebra(), m.dims(), maps);
}

std::vector<Representation> sample_modules(const AlgebraPtr& a) {
  std::vector<Representation> out;
  for (VertexId v = 0; v < a->vertex_count(); ++v) {
    out.push_back(simple_module(a, v));
    out.push_back(indec_projective(a, v));
    out.push_back(indec_injective(a, v));
  }
  return out;
}

}  // namespace

TEST_CASE("projectives and injectives have the Cartan dimensions") {
  for (const char* name : {"local6", "L2", "A2", "local6-end"}) {
    CAPTURE(name);
    const auto a = preset_algebra(name);
    const std::size_t n = a->vertex_count();
    std::size_t total = 0;
    for (VertexId v = 0; v < n; ++v) {
      const auto p = indec_projective(a, v);
      const auto i = indec_injective(a, v);
      CHECK_FALSE(validate(p));
      CHECK_FALSE(validate(i));
      for (VertexId w = 0; w < n; ++w) {
        CHECK(p.dim(w) == a->basis_between(v, w).size());
        CHECK(i.dim(w) == a->basis_between(w, v).size());
      }
      total += p.total_dimension();
    }
    CHECK(total == a->dimension());
    CHECK(regular_module(a).total_dimension() == a->dimension());
  }
}

TEST_CASE("Hom agrees with the stacked solve and with Yoneda") {
  const auto a = preset_algebra("local6");
  auto mods = sample_modules(a);
  const auto reg = regular_module(a);
  mods.push_back(reg);
  mods.push_back(dual(dual(reg)));
  for (const auto& m : mods) {
    for (const auto& n : mods) {
      const auto basis = hom_basis(m, n);
      CHECK(basis.size() == hom_basis_stacked(m, n).size());
      for (const auto& f : basis) CHECK(f.commutes());
    }
    // Hom(P(v), m) = m e_v and Hom(m, I(v)) = D(m e_v)
    CHECK(hom_dimension(indec_projective(a, 0), m) == m.dim(0));
    CHECK(hom_dimension(m, indec_injective(a, 0)) == m.dim(0));
  }
  const auto e = preset_algebra("A2");
  for (const auto& m : sample_modules(e)) {
    for (VertexId v = 0; v < 2; ++v) {
      CHECK(hom_dimension(indec_projective(e, v), m) == m.dim(v));
      CHECK(hom_dimension(m, indec_injective(e, v)) == m.dim(v));
    }
  }
}

TEST_CASE("validate rejects a representation that breaks a relation") {
  const auto l2 = preset_algebra("L2");
  // x acting by a nonzero nilpotent is fine, by the identity it is not
  CHECK_FALSE(validate(Representation(l2, {2}, {Matrix{{0, 1}, {0, 0}}})));
  CHECK(validate(Representation(l2, {2}, {Matrix::identity(2)})));
  CHECK_THROWS_AS(Representation(l2, {2}, {Matrix(2, 3)}), ModuleError);
}

TEST_CASE("kernel, image and cokernel") {
  const auto a = preset_algebra("local6");
  const auto p = regular_module(a);
  const auto s = simple_module(a, 0);
  const auto cover = projective_cover(s);
  CHECK(cover.module.total_dimension() == 6);
  CHECK(cover.epi.is_surjective());
  const auto k = kernel(cover.epi);
  const auto im = image(cover.epi);
  CHECK(k.module.total_dimension() + im.module.total_dimension() == 6);
  CHECK(k.inclusion.is_injective());
  CHECK(compose(k.inclusion, cover.epi).is_zero());
  CHECK(cokernel(cover.epi).module.is_zero());
  const auto env = injective_envelope(s);
  CHECK(env.mono.is_injective());
  CHECK(is_injective(env.module));
  const auto rts = radical_top_socle(p);
  CHECK(rts.radical.module.total_dimension() + rts.top.module.total_dimension() == 6);
  CHECK(rts.top.module.total_dimension() == 1);
  CHECK(top_multiplicities(p) == std::vector<std::size_t>{1});
  CHECK_FALSE(validate(rts.socle.module));
}

TEST_CASE("direct sums split") {
  const auto a = preset_algebra("A2");
  const std::vector<Representation> parts{simple_module(a, 0), indec_projective(a, 0),
                                          simple_module(a, 1)};
  const auto s = direct_sum(parts);
  CHECK(s.module.total_dimension() == 4);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const auto f = compose(s.injections[i], s.projections[j]);
      if (i == j) {
        CHECK(f.total_matrix() == Matrix::identity(parts[i].total_dimension()));
      } else {
        CHECK(f.is_zero());
      }
    }
  }
}

TEST_CASE("isomorphism witnesses survive a change of basis") {
  std::mt19937_64 rng(9);
  const auto a = preset_algebra("local6");
  for (const auto& m : sample_modules(a)) {
    const auto n = change_basis(m, rng);
    CHECK_FALSE(validate(n));
    for (std::uint64_t seed : {0, 1, 42}) {
      IsomorphismOptions o;
      o.seed = seed;
      const auto r = is_isomorphic(m, n, o);
      REQUIRE(r);
      CHECK(r.witness->is_isomorphism());
      CHECK(r.witness->commutes());
    }
  }
  const auto r = is_isomorphic(simple_module(a, 0), regular_module(a));
  CHECK_FALSE(r);
  CHECK(r.certain);
  // same dimension, different modules: P(1) and I(2) over A2 agree, the simples do not
  const auto e = preset_algebra("A2");
  CHECK(is_isomorphic(indec_projective(e, 0), indec_injective(e, 1)));
  CHECK_FALSE(is_isomorphic(simple_module(e, 0), simple_module(e, 1)));
}

TEST_CASE("dual is an involution") {
  const auto a = preset_algebra("local6-end");
  const auto p = indec_projective(a, 2);
  const auto dd = dual(dual(p));
  CHECK(dd.maps() == p.maps());
  CHECK(dual(p).algebra()->dimension() == 165);
}

TEST_CASE("module text round trip") {
  const auto a = preset_algebra("local6");
  const auto m = indec_injective(a, 0);
  const auto text = write_module(m, "builtin:local6");
  const auto back = parse_module(text, [](const std::string& ref) {
    REQUIRE(ref == "builtin:local6");
    return preset_algebra("local6");
  });
  CHECK(back.maps() == m.maps());
  CHECK_THROWS_AS(parse_module("dims: 2\narrow a:\n  1 0\n", nullptr, a), ParseError);
  CHECK_THROWS_AS(parse_module("dims: 1\narrow q:\n  0\n", nullptr, a), ParseError);
}
