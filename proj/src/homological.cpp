#include "qalg/homological.hpp"

namespace qalg {

std::string Bounded::to_string() const {
  switch (kind) {
    case Kind::Exact: return std::to_string(value);
    case Kind::ExceedsBound: return "exceeds-bound";
    case Kind::AtLeastBound: return "at-least-bound";
  }
  return {};
}

Representation syzygy(const Representation& m, std::size_t k) {
  Representation cur = m;
  for (std::size_t i = 0; i < k && !cur.is_zero(); ++i) cur = kernel(projective_cover(cur).epi).module;
  return cur;
}

MinimalPresentation minimal_presentation(const Representation& m) {
  auto p0 = projective_cover(m);
  auto syz = kernel(p0.epi);
  auto p1 = projective_cover(syz.module);
  auto map = compose(p1.epi, syz.inclusion);
  return {std::move(p0), std::move(syz), std::move(p1), std::move(map)};
}

namespace {

// Images of the generators of P1 in P0, one algebra element per (l, k).
std::vector<std::vector<Vector>> generator_components(const MinimalPresentation& pres) {
  const auto& a = pres.map.source().algebra();
  std::vector<std::vector<Vector>> out;
  const auto& gens = pres.p1.tops;
  // generator l of P1 is the idempotent of copy l; trivial paths come first
  // in each P(u) at u, so its row is the total size of the earlier copies
  std::vector<std::size_t> row(gens.size(), 0);
  for (std::size_t l = 0; l < gens.size(); ++l) {
    for (std::size_t j = 0; j < l; ++j) row[l] += a->basis_between(gens[j], gens[l]).size();
  }
  for (std::size_t l = 0; l < gens.size(); ++l) {
    auto x = pres.map.at(gens[l]).row(row[l]);
    out.push_back(split_projective_vector(a, pres.p0.tops, gens[l], x));
  }
  return out;
}

// Inverse of split_projective_vector.
Vector join_projective_vector(const PresentedAlgebra& a, std::span<const VertexId> tops, VertexId w,
                              const std::vector<Vector>& parts) {
  Vector out;
  for (std::size_t k = 0; k < tops.size(); ++k) {
    for (auto i : a.basis_between(tops[k], w)) out.push_back(parts[k][i]);
  }
  return out;
}

}  // namespace

Representation transpose(const Representation& m) {
  const auto& a = m.algebra();
  auto op = a->opposite();
  if (m.is_zero()) return Representation::zero(op);
  auto pres = minimal_presentation(m);
  const auto& t = pres.p0.tops;
  const auto& u = pres.p1.tops;
  if (u.empty()) return Representation::zero(op);
  auto comps = generator_components(pres);

  // reversed basis paths in opposite coordinates
  std::vector<Vector> rev;
  for (const auto& p : a->basis()) rev.push_back(op->normal_form(p.reversed()));

  auto target = projective_sum(op, u);
  std::vector<Vector> images;
  for (std::size_t k = 0; k < t.size(); ++k) {
    std::vector<Vector> parts(u.size(), Vector(op->dimension()));
    for (std::size_t l = 0; l < u.size(); ++l) {
      const auto& x = comps[l][k];
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < rev[i].size(); ++j) {
          if (!rev[i][j].is_zero()) parts[l][j].add_product(x[i], rev[i][j]);
        }
      }
    }
    images.push_back(join_projective_vector(*op, u, t[k], parts));
  }
  auto dual_map = hom_from_projective_sum(op, t, images, target);
  return cokernel(dual_map).module;
}

Representation ar_translate(const Representation& m) { return dual(transpose(m)); }

Representation tau2(const Representation& m) { return ar_translate(syzygy(m, 1)); }

std::vector<Representation> tau2_orbit(const Representation& m, std::size_t steps) {
  std::vector<Representation> out{m};
  for (std::size_t k = 0; k < steps; ++k) out.push_back(tau2(out.back()));
  return out;
}

std::size_t ext_dimension(const Representation& m, const Representation& n, std::size_t i) {
  if (i == 0) throw std::invalid_argument("ext_dimension needs i >= 1");
  Representation prev = syzygy(m, i - 1);
  if (prev.is_zero()) return 0;
  auto cover = projective_cover(prev);
  Representation cur = kernel(cover.epi).module;
  std::size_t hom_cover = 0;
  for (auto t : cover.tops) hom_cover += n.dim(t);
  return hom_dimension(cur, n) + hom_dimension(prev, n) - hom_cover;
}

namespace {

// Matrix of Hom(P_{j-1}, n) -> Hom(P_j, n) induced by P_j -> P_{j-1}, with
// Hom(P, n) identified with the sum of n at the tops of P.
Matrix dual_differential(const MinimalPresentation& pres, const Representation& n) {
  const auto& t = pres.p0.tops;
  const auto& u = pres.p1.tops;
  std::vector<std::size_t> row_off, col_off;
  std::size_t rows = 0, cols = 0;
  for (auto v : t) {
    row_off.push_back(rows);
    rows += n.dim(v);
  }
  for (auto v : u) {
    col_off.push_back(cols);
    cols += n.dim(v);
  }
  Matrix d(rows, cols);
  if (u.empty()) return d;
  auto comps = generator_components(pres);
  for (std::size_t l = 0; l < u.size(); ++l) {
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (is_zero(comps[l][k])) continue;
      Matrix act = n.action(t[k], u[l], comps[l][k]);
      for (std::size_t r = 0; r < act.rows(); ++r) {
        for (std::size_t c = 0; c < act.cols(); ++c) d(row_off[k] + r, col_off[l] + c) = act(r, c);
      }
    }
  }
  return d;
}

}  // namespace

std::size_t ext_dimension_by_complex(const Representation& m, const Representation& n,
                                     std::size_t i) {
  if (i == 0) throw std::invalid_argument("ext_dimension needs i >= 1");
  // presentations of Omega^{i-1} m and Omega^i m give P_i -> P_{i-1} and P_{i+1} -> P_i
  Representation prev = syzygy(m, i - 1);
  if (prev.is_zero()) return 0;
  auto lower = minimal_presentation(prev);
  std::size_t hom_pi = 0;
  for (auto t : lower.p1.tops) hom_pi += n.dim(t);
  if (hom_pi == 0) return 0;
  std::size_t in_rank = rank(dual_differential(lower, n));
  std::size_t out_rank = 0;
  if (!lower.syzygy.module.is_zero()) {
    auto upper = minimal_presentation(lower.syzygy.module);
    out_rank = rank(dual_differential(upper, n));
  }
  return hom_pi - in_rank - out_rank;
}

Bounded projective_dimension(const Representation& m, std::size_t bound) {
  if (m.is_zero()) return {Bounded::Kind::Exact, 0};
  Representation cur = m;
  for (std::size_t k = 0; k <= bound; ++k) {
    Representation next = syzygy(cur, 1);
    if (next.is_zero()) return {Bounded::Kind::Exact, k};
    cur = std::move(next);
  }
  return {Bounded::Kind::ExceedsBound, bound};
}

Bounded injective_dimension(const Representation& m, std::size_t bound) {
  return projective_dimension(dual(m), bound);
}

Bounded global_dimension(const AlgebraPtr& a, std::size_t bound) {
  std::size_t best = 0;
  for (VertexId v = 0; v < a->vertex_count(); ++v) {
    auto pd = projective_dimension(simple_module(a, v), bound);
    if (!pd.exact()) return pd;
    best = std::max(best, pd.value);
  }
  return {Bounded::Kind::Exact, best};
}

Bounded dominant_dimension(const AlgebraPtr& a, std::size_t bound) {
  Representation cur = regular_module(a);
  for (std::size_t k = 0; k < bound; ++k) {
    if (cur.is_zero()) break;
    auto env = injective_envelope(cur);
    if (!is_projective(env.module)) return {Bounded::Kind::Exact, k};
    cur = cokernel(env.mono).module;
  }
  return {Bounded::Kind::AtLeastBound, bound};
}

bool is_selfinjective(const AlgebraPtr& a) {
  for (const auto& p : indec_projectives(a)) {
    if (!is_injective(p)) return false;
  }
  return true;
}

Matrix cartan_matrix(const AlgebraPtr& a) {
  const std::size_t n = a->vertex_count();
  Matrix c(n, n);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = 0; j < n; ++j) c(i, j) = static_cast<long long>(a->basis_between(i, j).size());
  }
  return c;
}

Scalar cartan_determinant(const AlgebraPtr& a) { return determinant(cartan_matrix(a)); }

}  // namespace qalg
