#include "qalg/representation.hpp"

#include <map>
#include <random>
#include <sstream>

namespace qalg {

namespace {

// Memoized path actions on one representation.
class ActionCache {
 public:
  explicit ActionCache(const Representation& r) : r_(r) {}

  const Matrix& path(const Path& p) {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    Matrix m;
    if (p.is_trivial()) {
      m = Matrix::identity(r_.dim(p.source()));
    } else if (p.length() == 1) {
      m = r_.map(p.arrows()[0]);
    } else {
      auto arrows = p.arrows();
      auto prefix = Path::from_arrows(r_.algebra()->quiver(),
                                      std::vector<ArrowId>(arrows.begin(), arrows.end() - 1));
      m = path(prefix) * r_.map(arrows.back());
    }
    return memo_.emplace(p, std::move(m)).first->second;
  }

  Matrix element(VertexId u, VertexId v, std::span<const Scalar> coords) {
    const auto& alg = *r_.algebra();
    Matrix out(r_.dim(u), r_.dim(v));
    for (auto i : alg.basis_between(u, v)) {
      if (coords[i].is_zero()) continue;
      out += path(alg.basis()[i]) * coords[i];
    }
    return out;
  }

 private:
  const Representation& r_;
  std::map<Path, Matrix> memo_;
};

void place(Matrix& dst, std::size_t r0, std::size_t c0, const Matrix& src) {
  for (std::size_t r = 0; r < src.rows(); ++r) {
    for (std::size_t c = 0; c < src.cols(); ++c) dst(r0 + r, c0 + c) = src(r, c);
  }
}

Matrix hstack(const std::vector<const Matrix*>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (auto* p : parts) cols += p->cols();
  Matrix out(rows, cols);
  std::size_t c0 = 0;
  for (auto* p : parts) {
    place(out, 0, c0, *p);
    c0 += p->cols();
  }
  return out;
}

Matrix vstack(const std::vector<const Matrix*>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (auto* p : parts) rows += p->rows();
  Matrix out(rows, cols);
  std::size_t r0 = 0;
  for (auto* p : parts) {
    place(out, r0, 0, *p);
    r0 += p->rows();
  }
  return out;
}

std::size_t arrow_basis_index(const PresentedAlgebra& a, ArrowId arrow) {
  auto idx = a.basis_index(Path::of_arrow(a.quiver(), arrow));
  if (!idx) throw ModuleError("arrow is zero in the algebra");
  return *idx;
}

// Top generators: for each vertex, the columns completing the radical.
std::vector<std::pair<VertexId, std::size_t>> top_generators(const Representation& m) {
  auto rad = radical(m);
  std::vector<std::pair<VertexId, std::size_t>> gens;
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    Subspace s = Subspace::span(rad.inclusion.at(v));
    for (auto c : s.complement_columns()) gens.emplace_back(v, c);
  }
  return gens;
}

ModuleHom hom_from_projective_sum_cached(const AlgebraPtr& a, std::span<const VertexId> tops,
                                         std::span<const Vector> images, const Representation& n,
                                         const Representation& source, ActionCache& cache) {
  const auto& alg = *a;
  std::vector<Matrix> maps;
  maps.reserve(alg.vertex_count());
  for (VertexId w = 0; w < alg.vertex_count(); ++w) {
    Matrix f(source.dim(w), n.dim(w));
    std::size_t row = 0;
    for (std::size_t k = 0; k < tops.size(); ++k) {
      for (auto i : alg.basis_between(tops[k], w)) {
        if (!is_zero(images[k])) {
          auto img = multiply(images[k], cache.path(alg.basis()[i]));
          std::copy(img.begin(), img.end(), f.row(row).begin());
        }
        ++row;
      }
    }
    maps.push_back(std::move(f));
  }
  return ModuleHom(source, n, std::move(maps));
}

}  // namespace

// ---------------------------------------------------------------- Representation

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims,
                               std::vector<Matrix> maps) {
  if (!algebra) throw ModuleError("representation without algebra");
  const auto& q = algebra->quiver();
  if (dims.size() != q.vertex_count()) throw ModuleError("dimension vector has wrong length");
  if (maps.size() != q.arrow_count()) throw ModuleError("wrong number of arrow matrices");
  for (ArrowId a = 0; a < maps.size(); ++a) {
    const auto& arr = q.arrow(a);
    if (maps[a].rows() != dims[arr.source] || maps[a].cols() != dims[arr.target]) {
      std::ostringstream os;
      os << "matrix for arrow " << arr.label << " is " << maps[a].rows() << "x" << maps[a].cols()
         << ", expected " << dims[arr.source] << "x" << dims[arr.target];
      throw ModuleError(os.str());
    }
  }
  auto d = std::make_shared<Data>();
  d->algebra = std::move(algebra);
  d->offsets.resize(dims.size());
  for (std::size_t v = 0; v < dims.size(); ++v) {
    d->offsets[v] = d->total;
    d->total += dims[v];
  }
  d->dims = std::move(dims);
  d->maps = std::move(maps);
  data_ = std::move(d);
}

Representation Representation::zero(AlgebraPtr algebra) {
  const auto& q = algebra->quiver();
  std::vector<Matrix> maps(q.arrow_count());
  return Representation(std::move(algebra), std::vector<std::size_t>(q.vertex_count(), 0),
                        std::move(maps));
}

Matrix Representation::action(const Path& p) const {
  Matrix m = Matrix::identity(dim(p.source()));
  for (auto a : p.arrows()) m = m * map(a);
  return m;
}

Matrix Representation::action(VertexId u, VertexId v, std::span<const Scalar> coords) const {
  ActionCache cache(*this);
  return cache.element(u, v, coords);
}

bool Representation::compatible(const Representation& other) const {
  if (!data_ || !other.data_) return false;
  return algebra() == other.algebra() || algebra()->same_presentation(*other.algebra());
}

// ---------------------------------------------------------------- ModuleHom

ModuleHom::ModuleHom(Representation source, Representation target, std::vector<Matrix> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  if (!source_.compatible(target_)) throw ModuleError("hom between modules over different algebras");
  if (maps_.size() != source_.vertex_count()) throw ModuleError("hom has wrong number of vertex maps");
  for (VertexId v = 0; v < maps_.size(); ++v) {
    if (maps_[v].rows() != source_.dim(v) || maps_[v].cols() != target_.dim(v)) {
      throw ModuleError("hom vertex map has wrong shape");
    }
  }
}

ModuleHom ModuleHom::identity(const Representation& m) {
  std::vector<Matrix> maps;
  for (VertexId v = 0; v < m.vertex_count(); ++v) maps.push_back(Matrix::identity(m.dim(v)));
  return ModuleHom(m, m, std::move(maps));
}

ModuleHom ModuleHom::zero(const Representation& m, const Representation& n) {
  std::vector<Matrix> maps;
  for (VertexId v = 0; v < m.vertex_count(); ++v) maps.emplace_back(m.dim(v), n.dim(v));
  return ModuleHom(m, n, std::move(maps));
}

ModuleHom ModuleHom::from_total(const Representation& m, const Representation& n,
                                const Matrix& total) {
  if (total.rows() != m.total_dimension() || total.cols() != n.total_dimension()) {
    throw ModuleError("total matrix has wrong shape");
  }
  std::vector<Matrix> maps;
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    Matrix f(m.dim(v), n.dim(v));
    for (std::size_t r = 0; r < f.rows(); ++r) {
      for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) = total(m.offset(v) + r, n.offset(v) + c);
    }
    maps.push_back(std::move(f));
  }
  return ModuleHom(m, n, std::move(maps));
}

bool ModuleHom::commutes() const {
  const auto& q = source_.algebra()->quiver();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (!(source_.map(a) * maps_[arr.target] == maps_[arr.source] * target_.map(a))) return false;
  }
  return true;
}

bool ModuleHom::is_zero() const {
  for (const auto& m : maps_) {
    if (!m.is_zero()) return false;
  }
  return true;
}

bool ModuleHom::is_isomorphism() const {
  for (const auto& m : maps_) {
    if (!m.is_square() || rank(m) != m.rows()) return false;
  }
  return true;
}

bool ModuleHom::is_injective() const {
  for (const auto& m : maps_) {
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

bool ModuleHom::is_surjective() const {
  for (const auto& m : maps_) {
    if (rank(m) != m.cols()) return false;
  }
  return true;
}

Matrix ModuleHom::total_matrix() const {
  Matrix t(source_.total_dimension(), target_.total_dimension());
  for (VertexId v = 0; v < maps_.size(); ++v) place(t, source_.offset(v), target_.offset(v), maps_[v]);
  return t;
}

ModuleHom& ModuleHom::operator+=(const ModuleHom& rhs) {
  if (maps_.size() != rhs.maps_.size()) throw ModuleError("sum of unrelated homs");
  for (std::size_t v = 0; v < maps_.size(); ++v) maps_[v] += rhs.maps_[v];
  return *this;
}

ModuleHom& ModuleHom::operator*=(const Scalar& c) {
  for (auto& m : maps_) m *= c;
  return *this;
}

ModuleHom compose(const ModuleHom& first, const ModuleHom& second) {
  if (first.target().dims() != second.source().dims()) {
    throw ModuleError("composition of incomposable homs");
  }
  std::vector<Matrix> maps;
  for (VertexId v = 0; v < first.maps().size(); ++v) maps.push_back(first.at(v) * second.at(v));
  return ModuleHom(first.source(), second.target(), std::move(maps));
}

// ---------------------------------------------------------------- constructions

std::optional<Violation> validate(const Representation& r) {
  const auto& alg = *r.algebra();
  ActionCache cache(r);
  for (std::size_t k = 0; k < alg.relations().size(); ++k) {
    const auto& rel = alg.relations()[k];
    if (rel.terms().empty()) continue;
    const auto& first = rel.terms().begin()->first;
    Matrix sum(r.dim(first.source()), r.dim(first.target()));
    for (const auto& [p, c] : rel.terms()) sum += cache.path(p) * c;
    if (!sum.is_zero()) {
      return Violation{"relation " + std::to_string(k + 1) + " (" + rel.to_string(alg.quiver()) +
                       ") does not act as zero"};
    }
  }
  return std::nullopt;
}

Representation simple_module(const AlgebraPtr& a, VertexId v) {
  if (v >= a->vertex_count()) throw ModuleError("vertex out of range");
  std::vector<std::size_t> dims(a->vertex_count(), 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (const auto& arr : a->quiver().arrows()) maps.emplace_back(dims[arr.source], dims[arr.target]);
  return Representation(a, std::move(dims), std::move(maps));
}

Representation indec_projective(const AlgebraPtr& a, VertexId v) {
  VertexId tops[] = {v};
  return projective_sum(a, tops);
}

std::vector<Representation> indec_projectives(const AlgebraPtr& a) {
  std::vector<Representation> out;
  for (VertexId v = 0; v < a->vertex_count(); ++v) out.push_back(indec_projective(a, v));
  return out;
}

Representation indec_injective(const AlgebraPtr& a, VertexId v) {
  return dual(indec_projective(a->opposite(), v));
}

std::vector<Representation> indec_injectives(const AlgebraPtr& a) {
  std::vector<Representation> out;
  for (VertexId v = 0; v < a->vertex_count(); ++v) out.push_back(indec_injective(a, v));
  return out;
}

Representation regular_module(const AlgebraPtr& a) {
  std::vector<VertexId> tops;
  for (VertexId v = 0; v < a->vertex_count(); ++v) tops.push_back(v);
  return projective_sum(a, tops);
}

Representation projective_sum(const AlgebraPtr& a, std::span<const VertexId> tops) {
  const auto& alg = *a;
  const std::size_t nv = alg.vertex_count();
  std::vector<std::size_t> dims(nv, 0);
  for (auto t : tops) {
    if (t >= nv) throw ModuleError("vertex out of range");
    for (VertexId w = 0; w < nv; ++w) dims[w] += alg.basis_between(t, w).size();
  }
  // position of each basis element inside its vertex block of P(t)
  std::vector<std::size_t> pos(alg.dimension(), 0);
  for (VertexId u = 0; u < nv; ++u) {
    for (VertexId w = 0; w < nv; ++w) {
      const auto& b = alg.basis_between(u, w);
      for (std::size_t i = 0; i < b.size(); ++i) pos[b[i]] = i;
    }
  }
  std::vector<Matrix> maps;
  for (ArrowId ar = 0; ar < alg.quiver().arrow_count(); ++ar) {
    const auto& arrow = alg.quiver().arrow(ar);
    const auto ai = arrow_basis_index(alg, ar);
    Matrix m(dims[arrow.source], dims[arrow.target]);
    std::size_t r0 = 0, c0 = 0;
    for (auto t : tops) {
      const auto& rows = alg.basis_between(t, arrow.source);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [k, c] : alg.product(rows[r], ai)) m(r0 + r, c0 + pos[k]) = c;
      }
      r0 += rows.size();
      c0 += alg.basis_between(t, arrow.target).size();
    }
    maps.push_back(std::move(m));
  }
  return Representation(a, std::move(dims), std::move(maps));
}

ModuleHom hom_from_projective_sum(const AlgebraPtr& a, std::span<const VertexId> tops,
                                  std::span<const Vector> images, const Representation& n) {
  if (images.size() != tops.size()) throw ModuleError("one image per projective summand expected");
  for (std::size_t k = 0; k < tops.size(); ++k) {
    if (images[k].size() != n.dim(tops[k])) throw ModuleError("generator image has wrong length");
  }
  ActionCache cache(n);
  return hom_from_projective_sum_cached(a, tops, images, n, projective_sum(a, tops), cache);
}

std::vector<Vector> split_projective_vector(const AlgebraPtr& a, std::span<const VertexId> tops,
                                            VertexId w, std::span<const Scalar> x) {
  const auto& alg = *a;
  std::vector<Vector> out;
  std::size_t off = 0;
  for (auto t : tops) {
    Vector e(alg.dimension());
    const auto& b = alg.basis_between(t, w);
    for (std::size_t i = 0; i < b.size(); ++i) e[b[i]] = x[off + i];
    off += b.size();
    out.push_back(std::move(e));
  }
  if (off != x.size()) throw ModuleError("vector does not match the projective sum");
  return out;
}

Representation dual(const Representation& r) {
  std::vector<Matrix> maps;
  for (const auto& m : r.maps()) maps.push_back(m.transpose());
  return Representation(r.algebra()->opposite(), r.dims(), std::move(maps));
}

ModuleHom dual(const ModuleHom& f) {
  std::vector<Matrix> maps;
  for (const auto& m : f.maps()) maps.push_back(m.transpose());
  return ModuleHom(dual(f.target()), dual(f.source()), std::move(maps));
}

DirectSum direct_sum(std::span<const Representation> summands) {
  if (summands.empty()) throw ModuleError("direct sum of nothing");
  const auto& a = summands.front().algebra();
  for (const auto& s : summands) {
    if (!s.compatible(summands.front())) throw ModuleError("direct sum over different algebras");
  }
  const auto& q = a->quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> dims(nv, 0);
  std::vector<std::vector<std::size_t>> offs;
  for (const auto& s : summands) {
    offs.push_back(dims);
    for (VertexId v = 0; v < nv; ++v) dims[v] += s.dim(v);
  }
  std::vector<Matrix> maps;
  for (ArrowId ar = 0; ar < q.arrow_count(); ++ar) {
    const auto& arrow = q.arrow(ar);
    Matrix m(dims[arrow.source], dims[arrow.target]);
    for (std::size_t i = 0; i < summands.size(); ++i) {
      place(m, offs[i][arrow.source], offs[i][arrow.target], summands[i].map(ar));
    }
    maps.push_back(std::move(m));
  }
  DirectSum out{Representation(a, dims, std::move(maps)), {}, {}};
  for (std::size_t i = 0; i < summands.size(); ++i) {
    std::vector<Matrix> inj, proj;
    for (VertexId v = 0; v < nv; ++v) {
      Matrix in(summands[i].dim(v), dims[v]), pr(dims[v], summands[i].dim(v));
      for (std::size_t j = 0; j < summands[i].dim(v); ++j) {
        in(j, offs[i][v] + j) = 1;
        pr(offs[i][v] + j, j) = 1;
      }
      inj.push_back(std::move(in));
      proj.push_back(std::move(pr));
    }
    out.injections.emplace_back(summands[i], out.module, std::move(inj));
    out.projections.emplace_back(out.module, summands[i], std::move(proj));
  }
  return out;
}

// ---------------------------------------------------------------- Hom spaces

HomSpace::HomSpace(const Representation& m, const Representation& n) {
  if (!m.compatible(n)) throw ModuleError("Hom between modules over different algebras");
  const auto& a = m.algebra();
  const auto& alg = *a;
  const std::size_t nv = alg.vertex_count();

  auto cover = projective_cover(m);
  const auto& tops = cover.tops;
  generators_ = top_generators(m);

  std::size_t unknowns = 0;
  for (auto t : tops) {
    offsets_.push_back(unknowns);
    unknowns += n.dim(t);
  }

  // f kills the syzygy iff it kills its top generators.
  auto syz = kernel(cover.epi);
  auto syz_gens = top_generators(syz.module);
  ActionCache ncache(n);
  std::vector<Vector> equations;
  for (auto [w, col] : syz_gens) {
    auto x = syz.inclusion.at(w).row(col);
    auto parts = split_projective_vector(a, tops, w, x);
    Matrix block(unknowns, n.dim(w));
    bool any = false;
    for (std::size_t k = 0; k < tops.size(); ++k) {
      if (is_zero(parts[k])) continue;
      place(block, offsets_[k], 0, ncache.element(tops[k], w, parts[k]));
      any = true;
    }
    if (!any) continue;
    for (std::size_t q = 0; q < n.dim(w); ++q) {
      Vector eq(unknowns);
      for (std::size_t j = 0; j < unknowns; ++j) eq[j] = block(j, q);
      if (!is_zero(eq)) equations.push_back(std::move(eq));
    }
  }
  auto solved = kernel_with_free_columns(Matrix::from_rows(equations, unknowns));
  images_ = std::move(solved.basis);
  free_columns_ = std::move(solved.free_columns);

  // sections of the cover at each vertex: the generator columns of m map onto
  // copies of the idempotents, and every vector of m is reached through the epi
  std::vector<Matrix> sections;
  for (VertexId v = 0; v < nv; ++v) {
    const Matrix& e = cover.epi.at(v);  // p_v x m_v, surjective
    auto r = rref(e.transpose());       // pivots pick independent rows of e
    Matrix chosen(r.rank(), e.cols());
    for (std::size_t i = 0; i < r.rank(); ++i) {
      std::copy(e.row(r.pivots[i]).begin(), e.row(r.pivots[i]).end(), chosen.row(i).begin());
    }
    auto inv = inverse(chosen);
    if (!inv) throw ModuleError("projective cover is not surjective");
    Matrix s(e.cols(), e.rows());
    for (std::size_t i = 0; i < r.rank(); ++i) {
      for (std::size_t j = 0; j < e.cols(); ++j) s(j, r.pivots[i]) = (*inv)(j, i);
    }
    sections.push_back(std::move(s));
  }

  for (std::size_t b = 0; b < images_.rows(); ++b) {
    std::vector<Vector> imgs;
    for (std::size_t k = 0; k < tops.size(); ++k) {
      auto row = images_.row(b);
      imgs.emplace_back(row.begin() + offsets_[k], row.begin() + offsets_[k] + n.dim(tops[k]));
    }
    auto phi = hom_from_projective_sum_cached(a, tops, imgs, n, cover.module, ncache);
    std::vector<Matrix> maps;
    for (VertexId v = 0; v < nv; ++v) maps.push_back(sections[v] * phi.at(v));
    basis_.emplace_back(m, n, std::move(maps));
  }
}

Vector HomSpace::generator_vector(const ModuleHom& f) const {
  Vector out;
  out.reserve(images_.cols());
  for (auto [v, c] : generators_) {
    auto row = f.at(v).row(c);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

Vector HomSpace::coordinates(const ModuleHom& f) const { return coordinates(generator_vector(f)); }

Vector HomSpace::coordinates(std::span<const Scalar> g) const {
  if (g.size() != images_.cols()) throw ModuleError("generator vector has wrong length");
  Vector out;
  out.reserve(free_columns_.size());
  for (auto c : free_columns_) out.push_back(g[c]);
  return out;
}

ModuleHom HomSpace::combination(std::span<const Scalar> coords) const {
  if (coords.size() != basis_.size()) throw ModuleError("coordinate vector has wrong length");
  if (basis_.empty()) throw ModuleError("combination in a zero Hom space");
  ModuleHom out = basis_.front() * Scalar(0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) out += basis_[i] * coords[i];
  }
  return out;
}

std::vector<ModuleHom> hom_basis(const Representation& m, const Representation& n) {
  return HomSpace(m, n).basis();
}

std::size_t hom_dimension(const Representation& m, const Representation& n) {
  return HomSpace(m, n).dim();
}

std::vector<ModuleHom> hom_basis_stacked(const Representation& m, const Representation& n) {
  if (!m.compatible(n)) throw ModuleError("Hom between modules over different algebras");
  const auto& q = m.algebra()->quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> off(nv);
  std::size_t unknowns = 0;
  for (VertexId v = 0; v < nv; ++v) {
    off[v] = unknowns;
    unknowns += m.dim(v) * n.dim(v);
  }
  std::vector<Vector> equations;
  for (ArrowId ar = 0; ar < q.arrow_count(); ++ar) {
    const auto& arrow = q.arrow(ar);
    const VertexId u = arrow.source, v = arrow.target;
    const Matrix& ma = m.map(ar);
    const Matrix& na = n.map(ar);
    // (M(a) f_v - f_u N(a))[p][c] = 0
    for (std::size_t p = 0; p < m.dim(u); ++p) {
      for (std::size_t c = 0; c < n.dim(v); ++c) {
        Vector eq(unknowns);
        for (std::size_t k = 0; k < m.dim(v); ++k) eq[off[v] + k * n.dim(v) + c] += ma(p, k);
        for (std::size_t k = 0; k < n.dim(u); ++k) eq[off[u] + p * n.dim(u) + k] -= na(k, c);
        if (!is_zero(eq)) equations.push_back(std::move(eq));
      }
    }
  }
  Matrix sol = kernel_basis(Matrix::from_rows(equations, unknowns));
  std::vector<ModuleHom> out;
  for (std::size_t b = 0; b < sol.rows(); ++b) {
    std::vector<Matrix> maps;
    for (VertexId v = 0; v < nv; ++v) {
      Matrix f(m.dim(v), n.dim(v));
      for (std::size_t r = 0; r < f.rows(); ++r) {
        for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) = sol(b, off[v] + r * n.dim(v) + c);
      }
      maps.push_back(std::move(f));
    }
    out.emplace_back(m, n, std::move(maps));
  }
  return out;
}

// ---------------------------------------------------------------- sub and quotient

Subobject submodule(const Representation& m, const std::vector<Subspace>& spaces) {
  const auto& q = m.algebra()->quiver();
  if (spaces.size() != m.vertex_count()) throw ModuleError("one subspace per vertex expected");
  std::vector<std::size_t> dims;
  std::vector<Matrix> incl;
  for (VertexId v = 0; v < spaces.size(); ++v) {
    if (spaces[v].ambient() != m.dim(v)) throw ModuleError("subspace in the wrong ambient space");
    dims.push_back(spaces[v].dim());
    incl.push_back(spaces[v].basis());
  }
  std::vector<Matrix> maps;
  for (ArrowId ar = 0; ar < q.arrow_count(); ++ar) {
    const auto& arrow = q.arrow(ar);
    const auto& src = spaces[arrow.source];
    const auto& dst = spaces[arrow.target];
    Matrix img = src.basis() * m.map(ar);
    Matrix sub(src.dim(), dst.dim());
    for (std::size_t r = 0; r < img.rows(); ++r) {
      auto c = dst.coordinates(img.row(r));
      if (!c) throw ModuleError("subspaces are not closed under arrow " + arrow.label);
      std::copy(c->begin(), c->end(), sub.row(r).begin());
    }
    maps.push_back(std::move(sub));
  }
  Representation s(m.algebra(), std::move(dims), std::move(maps));
  ModuleHom inclusion(s, m, std::move(incl));
  return {std::move(s), std::move(inclusion)};
}

Quotient quotient(const Representation& m, const std::vector<Subspace>& spaces) {
  const auto& q = m.algebra()->quiver();
  if (spaces.size() != m.vertex_count()) throw ModuleError("one subspace per vertex expected");
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::size_t>> keep;
  std::vector<Matrix> proj;
  for (VertexId v = 0; v < spaces.size(); ++v) {
    const auto& s = spaces[v];
    if (s.ambient() != m.dim(v)) throw ModuleError("subspace in the wrong ambient space");
    auto cols = s.complement_columns();
    std::vector<std::size_t> where(m.dim(v), SIZE_MAX);
    for (std::size_t j = 0; j < cols.size(); ++j) where[cols[j]] = j;
    // e_j for a pivot column j reduces to e_j - (basis row of j)
    Matrix p(m.dim(v), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) p(cols[j], j) = 1;
    for (std::size_t r = 0; r < s.dim(); ++r) {
      const std::size_t pc = s.pivots()[r];
      for (std::size_t j = 0; j < cols.size(); ++j) p(pc, j) = -s.basis()(r, cols[j]);
    }
    dims.push_back(cols.size());
    keep.push_back(std::move(cols));
    proj.push_back(std::move(p));
  }
  std::vector<Matrix> maps;
  for (ArrowId ar = 0; ar < q.arrow_count(); ++ar) {
    const auto& arrow = q.arrow(ar);
    const auto& cols = keep[arrow.source];
    Matrix rows(cols.size(), m.dim(arrow.target));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto r = m.map(ar).row(cols[j]);
      std::copy(r.begin(), r.end(), rows.row(j).begin());
    }
    maps.push_back(rows * proj[arrow.target]);
  }
  Representation qm(m.algebra(), std::move(dims), std::move(maps));
  ModuleHom projection(m, qm, std::move(proj));
  return {std::move(qm), std::move(projection)};
}

Subobject kernel(const ModuleHom& h) {
  std::vector<Subspace> spaces;
  for (VertexId v = 0; v < h.maps().size(); ++v) {
    spaces.push_back(h.source().dim(v) == 0 ? Subspace(0)
                                            : Subspace::span(left_kernel_basis(h.at(v))));
  }
  return submodule(h.source(), spaces);
}

namespace {
std::vector<Subspace> image_spaces(const ModuleHom& h) {
  std::vector<Subspace> spaces;
  for (VertexId v = 0; v < h.maps().size(); ++v) {
    spaces.push_back(h.at(v).rows() == 0 ? Subspace(h.target().dim(v)) : Subspace::span(h.at(v)));
  }
  return spaces;
}
}  // namespace

Subobject image(const ModuleHom& h) { return submodule(h.target(), image_spaces(h)); }

Quotient cokernel(const ModuleHom& h) { return quotient(h.target(), image_spaces(h)); }

namespace {
std::vector<Subspace> radical_spaces(const Representation& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<Subspace> spaces;
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    std::vector<const Matrix*> parts;
    for (ArrowId ar = 0; ar < q.arrow_count(); ++ar) {
      if (q.arrow(ar).target == v) parts.push_back(&m.map(ar));
    }
    spaces.push_back(parts.empty() ? Subspace(m.dim(v)) : Subspace::span(vstack(parts, m.dim(v))));
  }
  return spaces;
}

std::vector<Subspace> socle_spaces(const Representation& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<Subspace> spaces;
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    std::vector<const Matrix*> parts;
    for (ArrowId ar = 0; ar < q.arrow_count(); ++ar) {
      if (q.arrow(ar).source == v) parts.push_back(&m.map(ar));
    }
    if (m.dim(v) == 0) {
      spaces.emplace_back(0);
    } else if (parts.empty()) {
      spaces.push_back(Subspace::span(Matrix::identity(m.dim(v))));
    } else {
      spaces.push_back(Subspace::span(left_kernel_basis(hstack(parts, m.dim(v)))));
    }
  }
  return spaces;
}
}  // namespace

Subobject radical(const Representation& m) { return submodule(m, radical_spaces(m)); }
Quotient top(const Representation& m) { return quotient(m, radical_spaces(m)); }
Subobject socle(const Representation& m) { return submodule(m, socle_spaces(m)); }

RadicalTopSocle radical_top_socle(const Representation& m) {
  auto rs = radical_spaces(m);
  return {submodule(m, rs), quotient(m, rs), socle(m)};
}

std::vector<std::size_t> top_multiplicities(const Representation& m) {
  auto rs = radical_spaces(m);
  std::vector<std::size_t> out;
  for (VertexId v = 0; v < m.vertex_count(); ++v) out.push_back(m.dim(v) - rs[v].dim());
  return out;
}

// ---------------------------------------------------------------- covers

ProjectiveCover projective_cover(const Representation& m) {
  auto gens = top_generators(m);
  std::vector<VertexId> tops;
  std::vector<Vector> images;
  for (auto [v, c] : gens) {
    tops.push_back(v);
    Vector e(m.dim(v));
    e[c] = 1;
    images.push_back(std::move(e));
  }
  auto epi = hom_from_projective_sum(m.algebra(), tops, images, m);
  auto module = epi.source();
  return {std::move(module), std::move(epi), std::move(tops)};
}

InjectiveEnvelope injective_envelope(const Representation& m) {
  auto cover = projective_cover(dual(m));
  std::vector<Matrix> maps;
  for (const auto& f : cover.epi.maps()) maps.push_back(f.transpose());
  Representation env = dual(cover.module);
  ModuleHom mono(m, env, std::move(maps));
  return {std::move(env), std::move(mono), std::move(cover.tops)};
}

bool is_projective(const Representation& m) {
  return projective_cover(m).module.total_dimension() == m.total_dimension();
}

bool is_injective(const Representation& m) { return is_projective(dual(m)); }

// ---------------------------------------------------------------- isomorphism

IsomorphismResult is_isomorphic(const Representation& m, const Representation& n,
                                const IsomorphismOptions& options) {
  if (!m.compatible(n) || m.dims() != n.dims()) return {std::nullopt, true};
  if (m.is_zero()) return {ModuleHom::identity(m), true};
  if (top_multiplicities(m) != top_multiplicities(n)) return {std::nullopt, true};
  HomSpace hs(m, n);
  if (hs.dim() == 0) return {std::nullopt, true};
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (std::size_t t = 0; t < options.attempts; ++t) {
    Vector c(hs.dim());
    for (auto& x : c) x = coef(rng);
    auto f = hs.combination(c);
    if (f.is_isomorphism()) return {std::move(f), true};
  }
  return {std::nullopt, false};
}

}  // namespace qalg
