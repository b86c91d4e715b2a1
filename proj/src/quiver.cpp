#include "qalg/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace qalg {

Quiver::Quiver(std::size_t vertex_count) {
  for (std::size_t v = 0; v < vertex_count; ++v) add_vertex(std::to_string(v + 1));
}

VertexId Quiver::add_vertex(std::string label) {
  if (vertex_index_.contains(label)) throw QuiverError("duplicate vertex label '" + label + "'");
  VertexId id = vertices_.size();
  vertex_index_.emplace(label, id);
  vertices_.push_back(std::move(label));
  return id;
}

ArrowId Quiver::add_arrow(std::string label, VertexId source, VertexId target) {
  if (source >= vertices_.size() || target >= vertices_.size()) {
    throw QuiverError("arrow '" + label + "' has an endpoint outside the quiver");
  }
  if (arrow_index_.contains(label) || vertex_index_.contains(label)) {
    throw QuiverError("duplicate label '" + label + "'");
  }
  auto id = static_cast<ArrowId>(arrows_.size());
  arrow_index_.emplace(label, id);
  arrows_.push_back({std::move(label), source, target});
  return id;
}

ArrowId Quiver::add_arrow(std::string label, std::string_view source, std::string_view target) {
  auto s = find_vertex(source), t = find_vertex(target);
  if (!s) throw QuiverError("unknown vertex '" + std::string(source) + "'");
  if (!t) throw QuiverError("unknown vertex '" + std::string(target) + "'");
  return add_arrow(std::move(label), *s, *t);
}

std::optional<VertexId> Quiver::find_vertex(std::string_view label) const {
  auto it = vertex_index_.find(std::string(label));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view label) const {
  auto it = arrow_index_.find(std::string(label));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

Quiver Quiver::opposite() const {
  Quiver q;
  for (const auto& v : vertices_) q.add_vertex(v);
  for (const auto& a : arrows_) q.add_arrow(a.label, a.target, a.source);
  return q;
}

bool Quiver::is_connected() const {
  if (vertices_.empty()) return false;
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
  std::size_t root = find(0);
  for (std::size_t v = 1; v < vertices_.size(); ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> Quiver::adjacency() const {
  std::vector<std::vector<std::size_t>> m(vertices_.size(), std::vector<std::size_t>(vertices_.size()));
  for (const auto& a : arrows_) ++m[a.source][a.target];
  return m;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto &x = a.arrows_[i], &y = b.arrows_[i];
    if (x.label != y.label || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

Path Path::of_arrow(const Quiver& q, ArrowId a) {
  const auto& arr = q.arrow(a);
  return Path(arr.source, arr.target, {a});
}

Path Path::from_arrows(const Quiver& q, std::vector<ArrowId> arrows) {
  if (arrows.empty()) throw QuiverError("empty arrow word; use Path::trivial");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source) {
      throw QuiverError("arrows '" + q.arrow(arrows[i]).label + "' and '" +
                        q.arrow(arrows[i + 1]).label + "' are not composable");
    }
  }
  VertexId s = q.arrow(arrows.front()).source, t = q.arrow(arrows.back()).target;
  return Path(s, t, std::move(arrows));
}

Path Path::reversed() const {
  std::vector<ArrowId> r(arrows_.rbegin(), arrows_.rend());
  return Path(target_, source_, std::move(r));
}

std::string Path::to_string(const Quiver& q) const {
  if (arrows_.empty()) return "e_" + q.vertex_label(source_);
  std::string s;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) s += '*';
    s += q.arrow(arrows_[i]).label;
  }
  return s;
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.arrows_.size() <=> b.arrows_.size(); c != 0) return c;
  if (a.arrows_.empty()) return a.source_ <=> b.source_;
  return a.arrows_ <=> b.arrows_;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.target_ != q.source_) return std::nullopt;
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  std::vector<ArrowId> w;
  w.reserve(p.arrows_.size() + q.arrows_.size());
  w.insert(w.end(), p.arrows_.begin(), p.arrows_.end());
  w.insert(w.end(), q.arrows_.begin(), q.arrows_.end());
  return Path(p.source_, q.target_, std::move(w));
}

PathAlgElement::PathAlgElement(Path p, Rational c) {
  if (!c.is_zero()) terms_.emplace(std::move(p), std::move(c));
}

Rational PathAlgElement::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational{} : it->second;
}

void PathAlgElement::add_term(const Path& p, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PathAlgElement& PathAlgElement::operator+=(const PathAlgElement& rhs) {
  for (const auto& [p, c] : rhs.terms_) add_term(p, c);
  return *this;
}

PathAlgElement& PathAlgElement::operator-=(const PathAlgElement& rhs) {
  for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
  return *this;
}

PathAlgElement& PathAlgElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, x] : terms_) x *= c;
  return *this;
}

PathAlgElement operator*(const PathAlgElement& a, const PathAlgElement& b) {
  PathAlgElement out;
  for (const auto& [p, c] : a.terms_) {
    for (const auto& [q, d] : b.terms_) {
      if (auto pq = compose(p, q)) out.add_term(*pq, c * d);
    }
  }
  return out;
}

PathAlgElement PathAlgElement::reversed() const {
  PathAlgElement out;
  for (const auto& [p, c] : terms_) out.add_term(p.reversed(), c);
  return out;
}

std::string PathAlgElement::to_string(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    if (!mag.is_one()) s += mag.to_string() + "*";
    s += p.to_string(q);
    first = false;
  }
  return s;
}

}  // namespace qalg
