#include "qalg/end_structure.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace qalg {

EndStructure::EndStructure(const Representation& m) : module_(m), homs_(m, m) {
  for (const auto& f : homs_.basis()) totals_.push_back(f.total_matrix());
  const std::size_t d = totals_.size();

  const auto& gens = homs_.generators();
  const auto& goff = homs_.generator_offsets();
  for (auto col : homs_.coordinate_columns()) {
    auto k = static_cast<std::size_t>(std::upper_bound(goff.begin(), goff.end(), col) - goff.begin()) - 1;
    auto [v, c] = gens[k];
    coord_row_.push_back(m.offset(v) + c);
    coord_col_.push_back(m.offset(v) + (col - goff[k]));
  }
  one_ = coordinates(Matrix::identity(m.total_dimension()));

  // trace of left multiplication by b_k
  Vector tr(d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) tr[k] += product_coefficient(totals_[k], totals_[j], j);
  }
  gram_ = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Scalar s;
      for (std::size_t f = 0; f < d; ++f) {
        if (tr[f].is_zero()) continue;
        s.add_product(product_coefficient(totals_[i], totals_[j], f), tr[f]);
      }
      gram_(i, j) = s;
      gram_(j, i) = s;
    }
  }
  radical_ = d == 0 ? Subspace(0) : Subspace::span(kernel_basis(gram_));

  // rad = sum of A g over a few generators g, so rad * rad = sum of rad g
  Subspace reached(d);
  for (std::size_t r = 0; r < radical_.dim(); ++r) {
    auto g = radical_.basis().row_vector(r);
    if (reached.contains(g)) continue;
    rad_gens_.push_back(g);
    Matrix gt = total(g);
    Matrix prods(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t f = 0; f < d; ++f) prods(j, f) = product_coefficient(totals_[j], gt, f);
    }
    reached = reached.sum(Subspace::span(prods));
  }
  if (reached.dim() != radical_.dim()) throw std::logic_error("radical is not a left ideal");

  radical_squared_ = left_ideal_products(radical_.basis(), rad_gens_);
  Subspace power = radical_;
  nilpotency_ = 1;
  while (power.dim() > 0) {
    power = left_ideal_products(power.basis(), rad_gens_);
    if (++nilpotency_ > d + 1) throw std::logic_error("radical is not nilpotent");
  }
}

Scalar EndStructure::product_coefficient(const Matrix& x, const Matrix& y, std::size_t f) const {
  Scalar s;
  auto row = x.row(coord_row_[f]);
  const std::size_t c = coord_col_[f];
  for (std::size_t t = 0; t < row.size(); ++t) {
    if (!row[t].is_zero()) s.add_product(row[t], y(t, c));
  }
  return s;
}

Subspace EndStructure::left_ideal_products(const Matrix& left_rows,
                                           const std::vector<Vector>& right) const {
  const std::size_t d = dimension();
  std::vector<Matrix> rt;
  for (const auto& g : right) rt.push_back(total(g));
  Matrix prods(left_rows.rows() * right.size(), d);
  std::size_t r = 0;
  for (std::size_t i = 0; i < left_rows.rows(); ++i) {
    Matrix lt = total(left_rows.row(i));
    for (const auto& g : rt) {
      for (std::size_t f = 0; f < d; ++f) prods(r, f) = product_coefficient(lt, g, f);
      ++r;
    }
  }
  return prods.rows() == 0 ? Subspace(d) : Subspace::span(prods);
}

Matrix EndStructure::total(std::span<const Scalar> x) const {
  if (x.size() != dimension()) throw ModuleError("End coordinate vector has wrong length");
  const std::size_t n = module_.total_dimension();
  Matrix t(n, n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) t += totals_[i] * x[i];
  }
  return t;
}

Vector EndStructure::coordinates(const Matrix& total) const {
  Vector out;
  out.reserve(coord_row_.size());
  for (std::size_t f = 0; f < coord_row_.size(); ++f) out.push_back(total(coord_row_[f], coord_col_[f]));
  return out;
}

Vector EndStructure::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Matrix xt = total(x), yt = total(y);
  Vector out;
  for (std::size_t f = 0; f < dimension(); ++f) out.push_back(product_coefficient(xt, yt, f));
  return out;
}

Vector EndStructure::basis_product(std::size_t i, std::size_t j) const {
  Vector out;
  for (std::size_t f = 0; f < dimension(); ++f) out.push_back(product_coefficient(totals_[i], totals_[j], f));
  return out;
}

Subspace radical_by_module_trace(const EndStructure& e) {
  const std::size_t d = e.dimension();
  if (d == 0) return Subspace(0);
  const auto& t = e.totals();
  const std::size_t n = e.module().total_dimension();
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Scalar s;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!t[i](a, b).is_zero()) s.add_product(t[i](a, b), t[j](b, a));
        }
      }
      gram(i, j) = s;
      gram(j, i) = s;
    }
  }
  return Subspace::span(kernel_basis(gram));
}

// ---------------------------------------------------------------- decomposition

namespace {

using Poly = std::vector<Scalar>;  // coefficients, lowest degree first

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j].add_product(a[i], b[j]);
  }
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// quotient and remainder of a by b (b nonzero)
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1);
  const Scalar lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Scalar c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i].add_product(-c, b[i]);
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

// u with u * f = 1 modulo g, for coprime f and g
Poly inverse_mod(const Poly& f, const Poly& g) {
  Poly r0 = g, r1 = poly_divmod(f, g).second;
  Poly s0 = {}, s1 = {Scalar(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::logic_error("polynomials are not coprime");
  Scalar inv = r0[0].inverse();
  for (auto& c : s0) c *= inv;
  return s0;
}

Scalar evaluate(const Poly& p, const Scalar& x) {
  Scalar acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  if (a == 0 || a > mpz_class("10000000000")) return out;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  return out;
}

std::vector<Scalar> rational_roots(const Poly& p) {
  std::vector<Scalar> roots;
  if (p.size() < 2) return roots;
  // integer coefficients
  mpz_class lcm = 1;
  for (const auto& c : p) lcm = ::lcm(lcm, mpz_class(c.to_mpq().get_den()));
  std::vector<mpz_class> z;
  for (const auto& c : p) {
    mpq_class q = c.to_mpq() * lcm;
    z.push_back(q.get_num());
  }
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 >= z.size()) return roots;
  for (const auto& num : divisors(z[low])) {
    for (const auto& den : divisors(z.back())) {
      for (int sign : {1, -1}) {
        Scalar cand = Scalar(mpq_class(num * sign)) / Scalar(mpq_class(den));
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (evaluate(p, cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

class Decomposer {
 public:
  Decomposer(const EndStructure& e, const DecomposeOptions& opt) : e_(e), opt_(opt), rng_(opt.seed) {}

  std::vector<Matrix> run() {
    const std::size_t n = e_.module().total_dimension();
    std::vector<Matrix> done;
    std::deque<Matrix> work;
    if (n > 0) work.push_back(Matrix::identity(n));
    while (!work.empty()) {
      Matrix idem = std::move(work.front());
      work.pop_front();
      auto split = split_corner(idem);
      if (!split) {
        done.push_back(std::move(idem));
        continue;
      }
      Matrix rest = idem - *split;
      work.push_front(std::move(rest));
      work.push_front(std::move(*split));
    }
    return done;
  }

 private:
  // A proper idempotent of the corner idem * End * idem, or nullopt if the
  // corner is local.
  std::optional<Matrix> split_corner(const Matrix& idem) {
    const std::size_t d = e_.dimension();
    std::vector<Matrix> corner;
    Matrix reduced(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      Matrix c = idem * e_.totals()[i] * idem;
      auto v = e_.radical().reduce(e_.coordinates(c));
      std::copy(v.begin(), v.end(), reduced.row(i).begin());
      corner.push_back(std::move(c));
    }
    const std::size_t top_dim = rank(reduced);
    if (top_dim <= 1) return std::nullopt;

    for (std::size_t i = 0; i < d; ++i) {
      if (auto s = try_split(idem, corner[i])) return s;
    }
    std::uniform_int_distribution<int> coef(-5, 5);
    for (std::size_t t = 0; t < opt_.random_attempts; ++t) {
      Matrix x(idem.rows(), idem.cols());
      for (std::size_t i = 0; i < d; ++i) {
        int c = coef(rng_);
        if (c != 0) x += corner[i] * Scalar(c);
      }
      if (auto s = try_split(idem, x)) return s;
    }
    throw DecompositionInconclusive("no element splits a corner of dimension " +
                                    std::to_string(top_dim) + " modulo the radical");
  }

  // Minimal polynomial of x modulo the radical, with idem as the unit.
  Poly min_poly(const Matrix& idem, const Matrix& x) {
    const std::size_t d = e_.dimension();
    IncrementalSpan span(d);
    Matrix power = idem;
    for (std::size_t k = 0;; ++k) {
      auto v = e_.radical().reduce(e_.coordinates(power));
      if (auto c = span.express(v)) {
        Poly p(k + 1);
        for (std::size_t i = 0; i < k; ++i) p[i] = -(*c)[i];
        p[k] = 1;
        return p;
      }
      span.insert(v);
      power = power * x;
    }
  }

  Matrix evaluate_at(const Poly& p, const Matrix& idem, const Matrix& x) {
    Matrix acc(idem.rows(), idem.cols());
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + idem * *it;
    return acc;
  }

  std::optional<Matrix> try_split(const Matrix& idem, const Matrix& x) {
    Poly mu = min_poly(idem, x);
    if (mu.size() <= 2) return std::nullopt;
    for (const auto& root : rational_roots(mu)) {
      // mu = (t - root)^k g with g(root) != 0
      Poly lin = {-root, Scalar(1)};
      Poly f = {Scalar(1)}, g = mu;
      while (true) {
        auto [q, r] = poly_divmod(g, lin);
        if (!r.empty()) break;
        g = std::move(q);
        f = poly_mul(f, lin);
      }
      if (g.size() <= 1) continue;
      // u f = 1 mod g, so u(x) f(x) is an idempotent modulo the radical
      Poly u = inverse_mod(f, g);
      Poly p = poly_divmod(poly_mul(u, f), mu).second;
      return lift(evaluate_at(p, idem, x));
    }
    return std::nullopt;
  }

  static Matrix lift(Matrix eps) {
    for (int iter = 0; iter < 64; ++iter) {
      Matrix sq = eps * eps;
      if (sq == eps) return eps;
      eps = sq * Scalar(3) - sq * eps * Scalar(2);
    }
    throw std::logic_error("idempotent lifting did not converge");
  }

  const EndStructure& e_;
  DecomposeOptions opt_;
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<Summand> decompose(const EndStructure& e, const DecomposeOptions& options) {
  const auto& m = e.module();
  auto idems = Decomposer(e, options).run();
  std::vector<Summand> out;
  for (auto& idem : idems) {
    auto hom = ModuleHom::from_total(m, m, idem);
    auto img = image(hom);
    // projection: coordinates of idem's rows in the image basis
    std::vector<Matrix> proj;
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
      Subspace s = Subspace::span(img.inclusion.at(v));
      Matrix p(m.dim(v), img.module.dim(v));
      for (std::size_t r = 0; r < m.dim(v); ++r) {
        auto c = s.coordinates(hom.at(v).row(r));
        if (!c) throw std::logic_error("idempotent row outside its image");
        std::copy(c->begin(), c->end(), p.row(r).begin());
      }
      proj.push_back(std::move(p));
    }
    Vector coords = e.coordinates(idem);
    out.push_back(Summand{img.module, std::move(idem), std::move(coords), img.inclusion,
                          ModuleHom(m, img.module, std::move(proj))});
  }
  return out;
}

std::vector<Summand> decompose(const Representation& m, const DecomposeOptions& options) {
  if (m.is_zero()) return {};
  return decompose(EndStructure(m), options);
}

}  // namespace qalg
