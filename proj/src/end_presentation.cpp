#include "qalg/end_presentation.hpp"

#include <sstream>

#include "qalg/text_format.hpp"

namespace qalg {

namespace {

Vector row_of(const Matrix& m, std::size_t r) {
  Vector out;
  out.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

}  // namespace

std::vector<std::size_t> isomorphism_classes(const EndStructure& e,
                                             const std::vector<Summand>& summands) {
  std::vector<std::size_t> cls(summands.size());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    cls[i] = reps.size();
    for (std::size_t r = 0; r < reps.size() && cls[i] == reps.size(); ++r) {
      const auto& other = summands[reps[r]];
      if (other.module.dims() != summands[i].module.dims()) continue;
      for (const auto& x : e.totals()) {
        Matrix c = other.idempotent * x * summands[i].idempotent;
        if (!e.radical().contains(e.coordinates(c))) {
          cls[i] = cls[reps[r]];
          break;
        }
      }
    }
    if (cls[i] == reps.size()) reps.push_back(i);
  }
  return cls;
}

EndPresentation end_as_quiver_algebra(const EndStructure& e, const PresentationOptions& options) {
  if (e.module().is_zero()) throw std::invalid_argument("End presentation of the zero module");
  EndPresentation out;
  out.end_dimension = e.dimension();
  out.summands = decompose(e, options.decompose);
  const std::size_t n = out.summands.size();
  const std::size_t d = e.dimension();
  auto classes = isomorphism_classes(e, out.summands);
  for (std::size_t i = 0; i < n; ++i) {
    if (classes[i] != i) {
      throw NotBasic("summands " + std::to_string(classes[i] + 1) + " and " + std::to_string(i + 1) +
                     " are isomorphic");
    }
  }

  // coset representatives of rad / rad^2
  const Matrix& rad2 = e.radical_squared().basis();
  const Matrix& rad = e.radical().basis();
  IncrementalSpan adapted(d);
  for (std::size_t r = 0; r < rad2.rows(); ++r) adapted.insert(row_of(rad2, r));
  std::vector<Matrix> representatives;
  for (std::size_t r = 0; r < rad.rows(); ++r) {
    Vector x = row_of(rad, r);
    if (adapted.insert(x)) representatives.push_back(e.total(x));
  }

  // vertex-homogeneous components, scanned i, then j, then k
  IncrementalSpan chosen(d);
  for (std::size_t r = 0; r < rad2.rows(); ++r) chosen.insert(row_of(rad2, r));
  for (std::size_t i = 0; i < n; ++i) out.quiver.add_vertex("v" + std::to_string(i + 1));
  out.adjacency.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& x : representatives) {
        Matrix c = out.summands[i].idempotent * x * out.summands[j].idempotent;
        if (!chosen.insert(e.coordinates(c))) continue;
        out.quiver.add_arrow("a" + std::to_string(out.arrow_elements.size() + 1), i, j);
        out.arrow_elements.push_back(std::move(c));
        ++out.adjacency[i][j];
      }
    }
  }
  if (out.arrow_elements.size() != representatives.size()) {
    throw DimensionMismatch("vertex components of rad/rad^2 give " +
                            std::to_string(out.arrow_elements.size()) + " arrows, expected " +
                            std::to_string(representatives.size()));
  }

  IncrementalSpan found(d);
  auto keep = [&](Path p, Matrix total) {
    if (!found.insert(e.coordinates(total))) {
      throw DimensionMismatch("vertices and arrows of the End quiver are linearly dependent");
    }
    out.dictionary.push_back({std::move(p), std::move(total)});
  };
  for (VertexId v = 0; v < n; ++v) keep(Path::trivial(v), out.summands[v].idempotent);
  std::vector<std::size_t> frontier;
  for (ArrowId a = 0; a < out.arrow_elements.size(); ++a) {
    frontier.push_back(out.dictionary.size());
    keep(Path::of_arrow(out.quiver, a), out.arrow_elements[a]);
  }

  for (std::size_t length = 2; !frontier.empty(); ++length) {
    if (length > options.max_length) {
      out.incomplete = true;
      break;
    }
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (ArrowId a = 0; a < out.arrow_elements.size(); ++a) {
        const Path& p = out.dictionary[idx].path;
        auto q = compose(p, Path::of_arrow(out.quiver, a));
        if (!q) continue;
        Matrix total = out.dictionary[idx].total * out.arrow_elements[a];
        Vector coords = e.coordinates(total);
        auto combo = found.express(coords);
        if (!combo) {
          next.push_back(out.dictionary.size());
          found.insert(coords);
          out.dictionary.push_back({std::move(*q), std::move(total)});
          continue;
        }
        PathAlgElement rel(*q);
        for (std::size_t k = 0; k < combo->size(); ++k) {
          if (!(*combo)[k].is_zero()) rel.add_term(out.dictionary[k].path, -(*combo)[k]);
        }
        out.relations.push_back(std::move(rel));
      }
    }
    frontier = std::move(next);
  }
  out.raw_relation_count = out.relations.size();
  if (out.incomplete) return out;

  if (out.dictionary.size() != d) {
    throw DimensionMismatch("path search found " + std::to_string(out.dictionary.size()) +
                            " basis elements of End, which has dimension " + std::to_string(d));
  }
  BuildOptions build;
  build.length_cap = std::max<std::size_t>(options.max_length, 2) + 1;
  out.algebra = build_algebra(out.quiver, out.relations, build);
  if (out.algebra->dimension() != d) {
    throw DimensionMismatch("presented algebra has dimension " +
                            std::to_string(out.algebra->dimension()) + " but End has dimension " +
                            std::to_string(d));
  }
  return out;
}

EndPresentation end_as_quiver_algebra(const Representation& m, const PresentationOptions& options) {
  return end_as_quiver_algebra(EndStructure(m), options);
}

Matrix evaluate(const EndPresentation& p, const PathAlgElement& x) {
  const std::size_t size = p.summands.empty() ? 0 : p.summands.front().idempotent.rows();
  Matrix out(size, size);
  for (const auto& [path, c] : x.terms()) {
    Matrix term = p.summands.at(path.source()).idempotent;
    for (ArrowId a : path.arrows()) term = term * p.arrow_elements.at(a);
    out += term * c;
  }
  return out;
}

std::vector<PathAlgElement> minimize_relations(const Quiver& quiver,
                                               std::vector<PathAlgElement> relations,
                                               std::size_t reference_dim, std::size_t length_cap) {
  BuildOptions build;
  build.length_cap = length_cap;
  if (build_algebra(quiver, relations, build)->dimension() != reference_dim) {
    throw std::invalid_argument("relations do not present an algebra of dimension " +
                                std::to_string(reference_dim));
  }
  // A relation lying in the ideal of the others can go without changing the
  // algebra.  The membership test may miss some memberships but never
  // invents one, so each accepted deletion preserves the dimension exactly.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < relations.size();) {
      auto others = relations;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
      if (ideal_contains(others, relations[i], length_cap)) {
        relations = std::move(others);
        changed = true;
      } else {
        ++i;
      }
    }
  }
  if (build_algebra(quiver, relations, build)->dimension() != reference_dim) {
    throw DimensionMismatch("relation minimization changed the dimension");
  }
  return relations;
}

bool presentation_dimension_check(const Quiver& quiver,
                                  const std::vector<PathAlgElement>& relations,
                                  std::size_t expected, std::size_t length_cap) {
  BuildOptions build;
  build.length_cap = length_cap;
  return build_algebra(quiver, relations, build)->dimension() == expected;
}

namespace {

bool extend_match(const Adjacency& a, const Adjacency& b, std::vector<std::size_t>& p,
                  std::vector<char>& used) {
  const std::size_t i = p.size();
  if (i == a.size()) return true;
  for (std::size_t c = 0; c < b.size(); ++c) {
    if (used[c]) continue;
    bool ok = a[i][i] == b[c][c];
    for (std::size_t k = 0; ok && k < i; ++k) ok = a[i][k] == b[c][p[k]] && a[k][i] == b[p[k]][c];
    if (!ok) continue;
    used[c] = 1;
    p.push_back(c);
    if (extend_match(a, b, p, used)) return true;
    p.pop_back();
    used[c] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> match_adjacency(const Adjacency& a, const Adjacency& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<std::size_t> p;
  std::vector<char> used(b.size(), 0);
  if (!extend_match(a, b, p, used)) return std::nullopt;
  return p;
}

std::string write_presentation(const EndPresentation& p) {
  std::ostringstream os;
  os << write_algebra(p.quiver, p.relations);
  os << "# summands:";
  for (const auto& s : p.summands) os << ' ' << s.module.total_dimension();
  os << "\n# adjacency:\n";
  for (const auto& row : p.adjacency) {
    os << "#  ";
    for (auto c : row) os << ' ' << c;
    os << '\n';
  }
  os << "# relations: " << p.relations.size() << '\n';
  os << "# dimension: " << p.end_dimension << '\n';
  if (p.incomplete) os << "# warning: path length limit reached, relations may not be complete\n";
  return os.str();
}

}  // namespace qalg
