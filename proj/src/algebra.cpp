#include "qalg/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>

namespace qalg {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

/// All paths of length < n, numbered in the length-then-lexicographic order,
/// together with the quotient of their span by (I + J^n) / J^n.
class TruncatedQuotient {
 public:
  TruncatedQuotient(const Quiver& q, const std::vector<PathAlgElement>& relations, std::size_t n,
                    std::size_t path_budget)
      : quiver_(q), n_(n) {
    enumerate(path_budget);
    close(relations);
  }

  [[nodiscard]] std::size_t path_count() const { return source_.size(); }
  [[nodiscard]] std::size_t dimension() const { return source_.size() - rows_.size(); }
  [[nodiscard]] bool is_standard(std::uint32_t id) const { return row_of_tip_[id] == kNone; }
  [[nodiscard]] std::size_t length(std::uint32_t id) const { return length_[id]; }

  [[nodiscard]] std::uint32_t id_of(const Path& p) const {
    std::uint32_t id = static_cast<std::uint32_t>(p.source());
    for (ArrowId a : p.arrows()) {
      if (id == kNone) return kNone;
      id = right_[id * arrows() + a];
    }
    return id;
  }

  [[nodiscard]] Path path_of(std::uint32_t id) const {
    std::vector<ArrowId> word;
    while (length_[id] > 0) {
      word.push_back(last_[id]);
      id = parent_[id];
    }
    if (word.empty()) return Path::trivial(source_[id]);
    std::reverse(word.begin(), word.end());
    return Path::from_arrows(quiver_, std::move(word));
  }

  /// Normal form (over path ids) of a single path id.
  [[nodiscard]] SparseVector reduce_id(std::uint32_t id) {
    SparseVector v{{id, Rational(1)}};
    return reduce(v);
  }

  /// Concatenation of two path ids, kNone if it is >= n long.
  [[nodiscard]] std::uint32_t concat(std::uint32_t p, std::uint32_t q) const {
    if (target_[p] != source_[q]) return kNone;
    if (length_[p] + length_[q] >= n_) return kNone;
    // walk q's word on top of p
    std::vector<ArrowId> word;
    for (std::uint32_t id = q; length_[id] > 0; id = parent_[id]) word.push_back(last_[id]);
    std::uint32_t r = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = right_[r * arrows() + *it];
    return r;
  }

 private:
  [[nodiscard]] std::size_t arrows() const { return quiver_.arrow_count(); }

  void enumerate(std::size_t budget) {
    const std::size_t na = arrows();
    for (VertexId v = 0; v < quiver_.vertex_count(); ++v) push_path(v, v, 0, kNone, 0);
    std::size_t level_begin = 0, level_end = source_.size();
    for (std::size_t len = 1; len < n_; ++len) {
      for (std::size_t id = level_begin; id < level_end; ++id) {
        for (std::size_t a = 0; a < na; ++a) {
          if (quiver_.arrow(static_cast<ArrowId>(a)).source != target_[id]) continue;
          if (source_.size() >= budget) {
            throw NotFiniteDimensional("path enumeration exceeded the budget of " +
                                       std::to_string(budget) + " paths at length " +
                                       std::to_string(len));
          }
          push_path(source_[id], quiver_.arrow(static_cast<ArrowId>(a)).target, len,
                    static_cast<std::uint32_t>(id), static_cast<ArrowId>(a));
        }
      }
      level_begin = level_end;
      level_end = source_.size();
    }
    const std::size_t count = source_.size();
    right_.assign(count * na, kNone);
    left_.assign(count * na, kNone);
    for (std::uint32_t id = 0; id < count; ++id) {
      if (length_[id] > 0) right_[parent_[id] * na + last_[id]] = id;
    }
    for (std::uint32_t id = 0; id < count; ++id) {
      for (std::size_t a = 0; a < na; ++a) {
        const auto& arr = quiver_.arrow(static_cast<ArrowId>(a));
        if (arr.target != source_[id]) continue;
        if (length_[id] == 0) {
          left_[id * na + a] = right_[arr.source * na + a];
        } else {
          // a * p = (a * parent) * last
          std::uint32_t ap = left_[parent_[id] * na + a];
          left_[id * na + a] = ap == kNone ? kNone : right_[ap * na + last_[id]];
        }
      }
    }
    row_of_tip_.assign(count, kNone);
    buffer_.assign(count, Rational());
    queued_.assign(count, 0);
  }

  void push_path(VertexId s, VertexId t, std::size_t len, std::uint32_t parent, ArrowId last) {
    source_.push_back(s);
    target_.push_back(t);
    length_.push_back(static_cast<std::uint32_t>(len));
    parent_.push_back(parent);
    last_.push_back(last);
  }

  SparseVector truncate(const PathAlgElement& x) const {
    SparseVector v;
    for (const auto& [p, c] : x.terms()) {
      if (p.length() >= n_) continue;
      v.emplace_back(id_of(p), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return v;
  }

  /// Full reduction against the current rows; output sorted ascending.
  SparseVector reduce(const SparseVector& input) {
    std::priority_queue<std::uint32_t> heap;
    for (const auto& [id, c] : input) {
      buffer_[id] += c;
      if (!queued_[id]) {
        queued_[id] = 1;
        heap.push(id);
      }
    }
    SparseVector out;
    while (!heap.empty()) {
      std::uint32_t t = heap.top();
      heap.pop();
      queued_[t] = 0;
      Rational c = std::move(buffer_[t]);
      buffer_[t] = Rational();
      if (c.is_zero()) continue;
      std::uint32_t r = row_of_tip_[t];
      if (r == kNone) {
        out.emplace_back(t, std::move(c));
        continue;
      }
      const auto& row = rows_[r];
      // row is monic with its tip last
      for (std::size_t k = 0; k + 1 < row.size(); ++k) {
        auto id = row[k].first;
        buffer_[id].add_product(-c, row[k].second);
        if (!queued_[id]) {
          queued_[id] = 1;
          heap.push(id);
        }
      }
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  void add(const SparseVector& v, std::deque<std::uint32_t>& work) {
    if (v.empty()) return;
    SparseVector r = reduce(v);
    if (r.empty()) return;
    Rational inv = r.back().second.inverse();
    if (!inv.is_one()) {
      for (auto& [id, c] : r) c *= inv;
    }
    auto idx = static_cast<std::uint32_t>(rows_.size());
    row_of_tip_[r.back().first] = idx;
    rows_.push_back(std::move(r));
    work.push_back(idx);
  }

  SparseVector shifted(const SparseVector& row, const std::vector<std::uint32_t>& ext,
                       std::size_t a) const {
    SparseVector out;
    const std::size_t na = arrows();
    for (const auto& [id, c] : row) {
      std::uint32_t t = ext[id * na + a];
      if (t != kNone) out.emplace_back(t, c);
    }
    return out;
  }

  void close(const std::vector<PathAlgElement>& relations) {
    std::deque<std::uint32_t> work;
    for (const auto& rel : relations) add(truncate(rel), work);
    const std::size_t na = arrows();
    while (!work.empty()) {
      std::uint32_t idx = work.front();
      work.pop_front();
      for (std::size_t a = 0; a < na; ++a) {
        // rows_ may reallocate inside add(), so copy the products first
        SparseVector l = shifted(rows_[idx], left_, a);
        add(l, work);
        SparseVector r = shifted(rows_[idx], right_, a);
        add(r, work);
      }
    }
  }

  const Quiver& quiver_;
  std::size_t n_;
  std::vector<VertexId> source_, target_;
  std::vector<std::uint32_t> length_, parent_;
  std::vector<ArrowId> last_;
  std::vector<std::uint32_t> right_, left_;
  std::vector<SparseVector> rows_;
  std::vector<std::uint32_t> row_of_tip_;
  std::vector<Rational> buffer_;
  std::vector<char> queued_;
};

void validate_relations(const Quiver& q, std::vector<PathAlgElement>& relations) {
  std::erase_if(relations, [](const PathAlgElement& r) { return r.is_zero(); });
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto& terms = relations[i].terms();
    const Path& first = terms.begin()->first;
    for (const auto& [p, c] : terms) {
      for (ArrowId a : p.arrows()) {
        if (a >= q.arrow_count()) {
          throw MalformedRelation("relation " + std::to_string(i + 1) + " uses an unknown arrow");
        }
      }
      if (p.length() < 2) {
        throw MalformedRelation("relation " + std::to_string(i + 1) + " (" +
                                relations[i].to_string(q) +
                                ") has a term of length < 2; relations must lie in the square of "
                                "the arrow ideal");
      }
      if (p.source() != first.source() || p.target() != first.target()) {
        throw MalformedRelation("relation " + std::to_string(i + 1) + " (" +
                                relations[i].to_string(q) +
                                ") mixes paths with different endpoints");
      }
    }
  }
}

using Word = std::u32string;

struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WordPoly = std::map<Word, Rational, WordOrder>;

/// Reduced Groebner basis of the ideal generated by the relations, in the
/// length-then-lexicographic order, by Buchberger's procedure for path
/// algebras.  Every element is monic; its tip is its largest word.
class WordReducer {
 public:
  WordReducer(const std::vector<PathAlgElement>& relations, std::size_t element_budget,
              std::size_t coefficient_bits = SIZE_MAX)
      : element_budget_(element_budget), coefficient_bits_(coefficient_bits) {
    for (const auto& rel : relations) add(to_poly(rel));
  }

  static WordPoly to_poly(const PathAlgElement& x) {
    WordPoly f;
    for (const auto& [p, c] : x.terms()) f.emplace(Word(p.arrows().begin(), p.arrows().end()), c);
    return f;
  }

  /// Runs Buchberger to the end; overlaps longer than word_limit mean the
  /// computation is not going to finish in reasonable time.
  void complete(std::size_t word_limit) {
    if (complete_through(word_limit)) {
      throw NotFiniteDimensional("Groebner basis computation reached overlaps longer than " +
                                 std::to_string(word_limit));
    }
  }

  /// Processes the overlaps of length <= length.  Returns whether longer
  /// ones remain.
  bool complete_through(std::size_t length) {
    while (!pending_.empty()) {
      Overlap o = pending_.top();
      if (o.length > length) return true;
      pending_.pop();
      const Element& l = elements_[o.left];
      const Element& r = elements_[o.right];
      if (!l.alive || !r.alive) continue;
      // f * tail - head * g, where both products have the same tip
      const Word tail = r.tip.substr(o.shared);
      const Word head = l.tip.substr(0, l.tip.size() - o.shared);
      WordPoly s;
      for (const auto& [w, c] : l.poly) s.emplace(w + tail, c);
      for (const auto& [w, c] : r.poly) {
        auto [slot, fresh] = s.try_emplace(head + w);
        slot->second -= c;
        if (slot->second.is_zero()) s.erase(slot);
      }
      add(std::move(s));
    }
    return false;
  }

  [[nodiscard]] bool has_tip_suffix(const Word& w) const {
    std::u32string_view v(w);
    for (std::size_t len = min_tip_; len <= std::min(max_tip_, w.size()); ++len) {
      if (tips_.count(v.substr(w.size() - len))) return true;
    }
    return false;
  }

  [[nodiscard]] WordPoly reduce_word(const Word& w) const {
    WordPoly f;
    f.emplace(w, Rational(1));
    return reduce(std::move(f));
  }

  [[nodiscard]] bool reduces_to_zero(const WordPoly& f) const { return reduce(f).empty(); }

 private:
  struct Element {
    WordPoly poly;
    Word tip;
    bool alive = true;
  };

  struct Overlap {
    std::size_t length;
    std::size_t serial;
    std::size_t left, right, shared;
    bool operator>(const Overlap& o) const {
      return length != o.length ? length > o.length : serial > o.serial;
    }
  };

  // (element, position) of some tip occurring in w
  [[nodiscard]] std::optional<std::pair<std::size_t, std::size_t>> find_tip(const Word& w) const {
    std::u32string_view v(w);
    for (std::size_t i = 0; i + min_tip_ <= w.size(); ++i) {
      for (std::size_t len = min_tip_; len <= std::min(max_tip_, w.size() - i); ++len) {
        auto it = tips_.find(v.substr(i, len));
        if (it != tips_.end()) return std::make_pair(it->second, i);
      }
    }
    return std::nullopt;
  }

  [[nodiscard]] WordPoly reduce(WordPoly f) const {
    if (tips_.empty()) return f;
    std::optional<Word> below;
    while (true) {
      WordPoly::iterator it;
      if (!below) {
        if (f.empty()) break;
        it = std::prev(f.end());
      } else {
        it = f.lower_bound(*below);
        if (it == f.begin()) break;
        --it;
      }
      auto hit = find_tip(it->first);
      if (!hit) {
        below = it->first;
        continue;
      }
      Word w = it->first;
      Rational c = std::move(it->second);
      f.erase(it);
      const Element& g = elements_[hit->first];
      const Word head = w.substr(0, hit->second);
      const Word tail = w.substr(hit->second + g.tip.size());
      for (const auto& [t, a] : g.poly) {
        if (t == g.tip) continue;
        auto [slot, fresh] = f.try_emplace(head + t + tail);
        slot->second.add_product(-c, a);
        if (slot->second.is_zero()) {
          f.erase(slot);
        } else if (slot->second.bit_size() > coefficient_bits_) {
          throw NotFiniteDimensional("Groebner reduction produced a coefficient of more than " +
                                     std::to_string(coefficient_bits_) + " bits");
        }
      }
      below = std::move(w);
    }
    return f;
  }

  void add(WordPoly f) {
    f = reduce(std::move(f));
    if (f.empty()) return;
    Rational inv = std::prev(f.end())->second.inverse();
    if (!inv.is_one()) {
      for (auto& [w, c] : f) c *= inv;
    }
    Word tip = std::prev(f.end())->first;
    // elements whose tip contains the new tip are no longer reduced
    std::vector<WordPoly> displaced;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      Element& e = elements_[i];
      if (!e.alive || e.tip.find(tip) == Word::npos) continue;
      e.alive = false;
      tips_.erase(std::u32string_view(e.tip));
      displaced.push_back(std::move(e.poly));
    }
    if (elements_.size() >= element_budget_) {
      throw NotFiniteDimensional("Groebner basis exceeded " + std::to_string(element_budget_) +
                                 " elements");
    }
    const std::size_t idx = elements_.size();
    elements_.push_back({std::move(f), std::move(tip), true});
    const Word& t = elements_.back().tip;
    tips_.emplace(std::u32string_view(t), idx);
    recompute_tip_lengths();
    for (std::size_t j = 0; j <= idx; ++j) {
      if (!elements_[j].alive) continue;
      queue_overlaps(idx, j);
      if (j != idx) queue_overlaps(j, idx);
    }
    for (auto& p : displaced) add(std::move(p));
  }

  void recompute_tip_lengths() {
    min_tip_ = SIZE_MAX;
    max_tip_ = 0;
    for (const auto& [t, i] : tips_) {
      min_tip_ = std::min(min_tip_, t.size());
      max_tip_ = std::max(max_tip_, t.size());
    }
  }

  // suffix of tip(l) equal to a prefix of tip(r)
  void queue_overlaps(std::size_t l, std::size_t r) {
    const Word& a = elements_[l].tip;
    const Word& b = elements_[r].tip;
    for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
      if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
      pending_.push({a.size() + b.size() - k, serial_++, l, r, k});
    }
  }

  std::size_t element_budget_;
  std::size_t coefficient_bits_;
  std::deque<Element> elements_;
  std::unordered_map<std::u32string_view, std::size_t> tips_;
  std::size_t min_tip_ = SIZE_MAX;
  std::size_t max_tip_ = 0;
  std::priority_queue<Overlap, std::vector<Overlap>, std::greater<>> pending_;
  std::size_t serial_ = 0;
};

}  // namespace

std::size_t truncated_dimension(const Quiver& quiver, const std::vector<PathAlgElement>& relations,
                                std::size_t n) {
  auto rels = relations;
  validate_relations(quiver, rels);
  return TruncatedQuotient(quiver, rels, n, BuildOptions{}.path_budget).dimension();
}

bool ideal_contains(const std::vector<PathAlgElement>& generators, const PathAlgElement& x,
                    std::size_t word_limit, std::size_t coefficient_bits) {
  if (x.is_zero()) return true;
  const WordPoly f = WordReducer::to_poly(x);
  try {
    WordReducer reducer(generators, 20000, coefficient_bits);
    for (std::size_t length = 2; length <= word_limit; ++length) {
      const bool more = reducer.complete_through(length);
      if (reducer.reduces_to_zero(f)) return true;
      if (!more) return false;
    }
  } catch (const NotFiniteDimensional&) {
    // a guard tripped
  }
  return false;
}

AlgebraPtr build_algebra(Quiver quiver, std::vector<PathAlgElement> relations,
                         const BuildOptions& options) {
  validate_relations(quiver, relations);
  if (options.length_cap < 2) throw std::invalid_argument("length cap must be at least 2");

  WordReducer reducer(relations, std::min<std::size_t>(options.path_budget, 200000));
  reducer.complete(2 * options.length_cap);

  // standard words by breadth-first search: a word is standard when no suffix
  // is a tip, given that its prefix already is standard
  std::vector<Path> standard;
  for (VertexId v = 0; v < quiver.vertex_count(); ++v) standard.push_back(Path::trivial(v));
  std::size_t level_begin = 0;
  for (std::size_t len = 1; level_begin < standard.size(); ++len) {
    const std::size_t level_end = standard.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (ArrowId a = 0; a < quiver.arrow_count(); ++a) {
        if (quiver.arrow(a).source != standard[i].target()) continue;
        Word w(standard[i].arrows().begin(), standard[i].arrows().end());
        w.push_back(a);
        if (reducer.has_tip_suffix(w)) continue;
        if (len >= options.length_cap) {
          throw NotFiniteDimensional("a path of length " + std::to_string(len) +
                                     " is nonzero in the quotient; the length cap is " +
                                     std::to_string(options.length_cap));
        }
        standard.push_back(Path::from_arrows(quiver, std::vector<ArrowId>(w.begin(), w.end())));
        if (options.dimension_ceiling && standard.size() > *options.dimension_ceiling) {
          throw DimensionLimitExceeded("quotient dimension exceeds " +
                                       std::to_string(*options.dimension_ceiling));
        }
        if (standard.size() > options.path_budget) {
          throw NotFiniteDimensional("more than " + std::to_string(options.path_budget) +
                                     " standard paths");
        }
      }
    }
    level_begin = level_end;
  }
  std::sort(standard.begin(), standard.end());

  std::shared_ptr<PresentedAlgebra> alg(new PresentedAlgebra());
  alg->quiver_ = std::move(quiver);
  alg->relations_ = std::move(relations);
  alg->length_cap_ = options.length_cap;
  alg->basis_ = std::move(standard);
  const Quiver& q = alg->quiver_;
  const std::size_t d = alg->basis_.size();
  const std::size_t nv = q.vertex_count();
  const std::size_t na = q.arrow_count();
  alg->between_.assign(nv * nv, {});
  for (std::size_t i = 0; i < d; ++i) {
    const auto& p = alg->basis_[i];
    alg->between_[p.source() * nv + p.target()].push_back(i);
  }

  // right multiplication by each arrow, on basis elements
  std::vector<SparseVector> right(d * na);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& p = alg->basis_[i];
    for (ArrowId a = 0; a < na; ++a) {
      if (q.arrow(a).source != p.target()) continue;
      Word w(p.arrows().begin(), p.arrows().end());
      w.push_back(a);
      SparseVector& out = right[i * na + a];
      for (auto& [word, c] : reducer.reduce_word(w)) {
        auto idx = alg->basis_index(Path::from_arrows(q, std::vector<ArrowId>(word.begin(), word.end())));
        out.emplace_back(static_cast<std::uint32_t>(*idx), std::move(c));
      }
      std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    }
  }
  auto times_arrow = [&](const Vector& x, ArrowId a) {
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& [k, c] : right[i * na + a]) out[k].add_product(x[i], c);
    }
    return out;
  };

  // nilpotency index of the image of the arrow ideal; the relations define
  // an admissible ideal exactly when it is finite
  std::vector<Vector> level;
  for (ArrowId a = 0; a < na; ++a) {
    Vector v(d);
    v[*alg->basis_index(Path::of_arrow(q, a))] = 1;
    level.push_back(std::move(v));
  }
  std::size_t nilpotency = 1;
  while (!level.empty()) {
    if (nilpotency > d) {
      throw NotAdmissible("the arrow ideal is not nilpotent modulo the relations, which "
                          "therefore do not generate an admissible ideal");
    }
    IncrementalSpan next(d);
    std::vector<Vector> next_level;
    for (const auto& x : level) {
      for (ArrowId a = 0; a < na; ++a) {
        Vector y = times_arrow(x, a);
        if (next.insert(y)) next_level.push_back(std::move(y));
      }
    }
    level = std::move(next_level);
    ++nilpotency;
  }
  if (nilpotency + 1 > options.length_cap) {
    throw NotFiniteDimensional("the arrow ideal vanishes only at length " +
                               std::to_string(nilpotency) + "; the length cap is " +
                               std::to_string(options.length_cap));
  }
  alg->truncation_ = nilpotency;

  // b_i * b_j = (b_i * prefix) * last arrow, the prefix being standard too
  std::vector<std::size_t> prefix(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    const auto& r = alg->basis_[j];
    if (r.length() == 0) continue;
    if (r.length() == 1) {
      prefix[j] = r.source();
    } else {
      std::vector<ArrowId> w(r.arrows().begin(), r.arrows().end() - 1);
      prefix[j] = *alg->basis_index(Path::from_arrows(q, std::move(w)));
    }
  }
  alg->table_.assign(d * d, {});
  std::vector<Rational> acc(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& p = alg->basis_[i];
    for (std::size_t j = 0; j < d; ++j) {
      const auto& r = alg->basis_[j];
      if (p.target() != r.source()) continue;
      SparseVector& out = alg->table_[i * d + j];
      if (r.length() == 0) {
        out.emplace_back(static_cast<std::uint32_t>(i), Rational(1));
        continue;
      }
      const ArrowId a = r.arrows().back();
      std::vector<std::uint32_t> touched;
      for (const auto& [k, c] : alg->table_[i * d + prefix[j]]) {
        for (const auto& [t, v] : right[k * na + a]) {
          if (acc[t].is_zero()) touched.push_back(t);
          acc[t].add_product(c, v);
        }
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (auto t : touched) {
        if (!acc[t].is_zero()) out.emplace_back(t, std::move(acc[t]));
        acc[t] = Rational();
      }
    }
  }
  return alg;
}

std::optional<std::size_t> PresentedAlgebra::basis_index(const Path& p) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), p);
  if (it == basis_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

const std::vector<std::size_t>& PresentedAlgebra::basis_between(VertexId u, VertexId v) const {
  return between_.at(u * quiver_.vertex_count() + v);
}

Vector PresentedAlgebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t d = dimension();
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const auto& prod = product(i, j);
      if (prod.empty()) continue;
      Rational c = x[i] * y[j];
      for (const auto& [k, v] : prod) out[k].add_product(c, v);
    }
  }
  return out;
}

Vector PresentedAlgebra::normal_form(const Path& p) const {
  const std::size_t d = dimension();
  Vector cur(d);
  cur[vertex_idempotent(p.source())] = 1;
  for (ArrowId a : p.arrows()) {
    // arrows are always standard: relations live in the square of the arrow ideal
    auto ai = basis_index(Path::of_arrow(quiver_, a));
    Vector next(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (cur[i].is_zero()) continue;
      for (const auto& [k, v] : product(i, *ai)) next[k].add_product(cur[i], v);
    }
    cur = std::move(next);
  }
  return cur;
}

Vector PresentedAlgebra::normal_form(const PathAlgElement& x) const {
  Vector out(dimension());
  for (const auto& [p, c] : x.terms()) axpy(out, c, normal_form(p));
  return out;
}

PathAlgElement PresentedAlgebra::element(std::span<const Scalar> coords) const {
  PathAlgElement x;
  for (std::size_t i = 0; i < coords.size(); ++i) x.add_term(basis_[i], coords[i]);
  return x;
}

bool PresentedAlgebra::is_associative() const {
  const std::size_t d = dimension();
  Vector left(d), right(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto& ij = product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        const auto& jk = product(j, k);
        std::fill(left.begin(), left.end(), Rational());
        std::fill(right.begin(), right.end(), Rational());
        for (const auto& [m, c] : ij) {
          for (const auto& [t, v] : product(m, k)) left[t].add_product(c, v);
        }
        for (const auto& [m, c] : jk) {
          for (const auto& [t, v] : product(i, m)) right[t].add_product(c, v);
        }
        if (left != right) return false;
      }
    }
  }
  return true;
}

AlgebraPtr PresentedAlgebra::opposite() const {
  // never cache the back link strongly, that would make a reference cycle
  if (auto back = opposite_of_.lock()) return back;
  std::call_once(opposite_once_, [this] {
    std::vector<PathAlgElement> rev;
    rev.reserve(relations_.size());
    for (const auto& r : relations_) rev.push_back(r.reversed());
    BuildOptions opts;
    opts.length_cap = length_cap_;
    auto op = build_algebra(quiver_.opposite(), std::move(rev), opts);
    // build_algebra hands out a fresh object nobody else has seen yet
    auto mut = std::const_pointer_cast<PresentedAlgebra>(op);
    mut->opposite_of_ = weak_from_this();
    opposite_ = std::move(op);
  });
  return opposite_;
}

bool PresentedAlgebra::same_presentation(const PresentedAlgebra& other) const {
  return this == &other || (quiver_ == other.quiver_ && relations_ == other.relations_);
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) { return a->opposite(); }

}  // namespace qalg
