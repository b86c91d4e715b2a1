#include "qalg/text_format.hpp"

#include <cctype>
#include <sstream>

namespace qalg {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) +
                         (column ? ", column " + std::to_string(column) : std::string()) + ": " +
                         message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view strip(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Removes a trailing comment.
std::string_view uncomment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

// Recursive-descent reader for one relation expression.  Columns reported
// are offset by `base` so that they refer to the original line.
class ExpressionReader {
 public:
  ExpressionReader(const Quiver& q, std::string_view s, std::size_t line, std::size_t base)
      : q_(q), s_(s), line_(line), base_(base) {}

  PathAlgElement read() {
    PathAlgElement out;
    skip();
    bool first = true;
    std::optional<VertexId> src, tgt;
    while (pos_ < s_.size()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      const std::size_t term_start = pos_;
      auto [coef, path] = term();
      if (path.source() != src.value_or(path.source()) || path.target() != tgt.value_or(path.target())) {
        fail_at(term_start, "term does not share the source and target of the first term");
      }
      src = path.source();
      tgt = path.target();
      out.add_term(path, sign * coef);
      first = false;
      skip();
    }
    if (first) fail("empty relation");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(line_, base_ + at + 1, msg);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }

  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) fail("malformed rational");
    }
    try {
      return Rational::parse(s_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      fail_at(start, "malformed rational");
    }
  }

  Rational coefficient() {
    if (peek() == '(') {
      ++pos_;
      skip();
      Rational sign = 1;
      if (peek() == '-' || peek() == '+') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a rational coefficient");
      Rational c = number();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return sign * c;
    }
    return number();
  }

  std::pair<Rational, Path> term() {
    Rational coef = 1;
    bool has_coef = false;
    if (peek() == '(' || std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = coefficient();
      has_coef = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      } else if (!is_ident_start(peek())) {
        fail("a relation term needs a path");
      }
    }
    if (!is_ident_start(peek())) fail(has_coef ? "expected an arrow label" : "expected a term");
    std::vector<ArrowId> word;
    std::optional<Path> path;
    while (true) {
      const std::size_t start = pos_;
      while (is_ident_char(peek())) ++pos_;
      std::string_view label = s_.substr(start, pos_ - start);
      std::size_t power = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        const std::size_t ps = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (ps == pos_) fail("expected an exponent");
        power = std::stoul(std::string(s_.substr(ps, pos_ - ps)));
        if (power == 0) fail_at(ps, "exponent must be positive");
        skip();
      }
      Path factor = Path::trivial(0);
      if (auto a = q_.find_arrow(label)) {
        factor = Path::of_arrow(q_, *a);
      } else if (label.starts_with("e_") && q_.find_vertex(label.substr(2))) {
        factor = Path::trivial(*q_.find_vertex(label.substr(2)));
      } else {
        fail_at(start, "unknown arrow '" + std::string(label) + "'");
      }
      for (std::size_t k = 0; k < power; ++k) {
        if (!path) {
          path = factor;
          continue;
        }
        auto c = compose(*path, factor);
        if (!c) fail_at(start, "'" + std::string(label) + "' is not composable with the preceding path");
        path = std::move(c);
      }
      if (peek() != '*') break;
      ++pos_;
      skip();
      if (!is_ident_start(peek())) fail("expected an arrow label after '*'");
    }
    return {coef, *path};
  }

  const Quiver& q_;
  std::string_view s_;
  std::size_t line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// Splits at top-level commas, returning (offset, piece) pairs.
std::vector<std::pair<std::size_t, std::string_view>> split_commas(std::string_view s) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.emplace_back(start, s.substr(start, i - start));
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

std::size_t leading_spaces(std::string_view s) {
  std::size_t n = 0;
  while (n < s.size() && is_space(s[n])) ++n;
  return n;
}

// "key: rest" where key is an identifier; returns key and rest offset.
std::optional<std::pair<std::string_view, std::size_t>> keyword(std::string_view line) {
  std::size_t i = leading_spaces(line);
  const std::size_t start = i;
  while (i < line.size() && is_ident_char(line[i])) ++i;
  if (i == start) return std::nullopt;
  std::string_view key = line.substr(start, i - start);
  while (i < line.size() && is_space(line[i])) ++i;
  if (i >= line.size() || line[i] != ':') return std::nullopt;
  return std::make_pair(key, i + 1);
}

VertexId vertex_for(Quiver& q, std::string_view label) {
  if (auto v = q.find_vertex(label)) return *v;
  return q.add_vertex(std::string(label));
}

bool valid_vertex_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!is_ident_char(c)) return false;
  }
  return true;
}

}  // namespace

PathAlgElement parse_relation(const Quiver& quiver, std::string_view expression) {
  return ExpressionReader(quiver, expression, 1, 0).read();
}

AlgebraText parse_algebra(std::string_view text) {
  AlgebraText out;
  auto lines = split_lines(text);
  struct Pending {
    std::size_t line;
    std::size_t base;
    std::string_view text;
  };
  std::vector<Pending> relation_lines;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t lineno = ln + 1;
    std::string_view line = uncomment(lines[ln]);
    if (strip(line).empty()) continue;
    auto kw = keyword(line);
    if (kw && kw->first == "vertices") {
      std::string_view rest = line.substr(kw->second);
      std::size_t i = 0;
      while (i < rest.size()) {
        while (i < rest.size() && (is_space(rest[i]) || rest[i] == ',')) ++i;
        const std::size_t start = i;
        while (i < rest.size() && !is_space(rest[i]) && rest[i] != ',') ++i;
        if (start == i) break;
        auto label = rest.substr(start, i - start);
        if (!valid_vertex_label(label)) {
          throw ParseError(lineno, kw->second + start + 1, "invalid vertex label '" + std::string(label) + "'");
        }
        if (out.quiver.find_vertex(label)) {
          throw ParseError(lineno, kw->second + start + 1, "duplicate vertex '" + std::string(label) + "'");
        }
        out.quiver.add_vertex(std::string(label));
      }
      continue;
    }
    if (kw && (kw->first == "relation" || kw->first == "relations")) {
      relation_lines.push_back({lineno, kw->second, line.substr(kw->second)});
      continue;
    }
    if (kw) {
      // arrow line "label: source -> target"
      std::string_view rest = line.substr(kw->second);
      auto arrow_pos = rest.find("->");
      if (arrow_pos == std::string_view::npos) {
        throw ParseError(lineno, kw->second + 1, "expected 'source -> target' after arrow label");
      }
      auto src = strip(rest.substr(0, arrow_pos));
      auto tgt = strip(rest.substr(arrow_pos + 2));
      if (!valid_vertex_label(src)) throw ParseError(lineno, kw->second + 1, "invalid source vertex");
      if (!valid_vertex_label(tgt)) throw ParseError(lineno, kw->second + arrow_pos + 3, "invalid target vertex");
      std::string label(kw->first);
      if (!is_ident_start(label.front())) {
        throw ParseError(lineno, leading_spaces(line) + 1, "arrow labels must start with a letter");
      }
      if (out.quiver.find_arrow(label)) {
        throw ParseError(lineno, leading_spaces(line) + 1, "duplicate arrow '" + label + "'");
      }
      VertexId s = vertex_for(out.quiver, src);
      VertexId t = vertex_for(out.quiver, tgt);
      out.quiver.add_arrow(label, s, t);
      continue;
    }
    relation_lines.push_back({lineno, 0, line});
  }
  for (const auto& p : relation_lines) {
    for (auto [off, piece] : split_commas(p.text)) {
      if (strip(piece).empty()) continue;
      out.relations.push_back(ExpressionReader(out.quiver, piece, p.line, p.base + off).read());
    }
  }
  return out;
}

AlgebraPtr load_algebra(std::string_view text, const BuildOptions& options) {
  auto parsed = parse_algebra(text);
  return build_algebra(std::move(parsed.quiver), std::move(parsed.relations), options);
}

std::string write_algebra(const Quiver& quiver, const std::vector<PathAlgElement>& relations) {
  std::ostringstream os;
  os << "vertices:";
  for (VertexId v = 0; v < quiver.vertex_count(); ++v) os << ' ' << quiver.vertex_label(v);
  os << '\n';
  for (const auto& a : quiver.arrows()) {
    os << a.label << ": " << quiver.vertex_label(a.source) << " -> " << quiver.vertex_label(a.target)
       << '\n';
  }
  for (const auto& r : relations) os << "relation: " << r.to_string(quiver) << '\n';
  return os.str();
}

// ---------------------------------------------------------------- modules

namespace {

std::vector<std::pair<std::size_t, std::string_view>> tokens(std::string_view s) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (start < i) out.emplace_back(start, s.substr(start, i - start));
  }
  return out;
}

Rational rational_token(std::string_view tok, std::size_t line, std::size_t col) {
  try {
    return Rational::parse(tok);
  } catch (const std::exception&) {
    throw ParseError(line, col, "malformed rational '" + std::string(tok) + "'");
  }
}

}  // namespace

Representation parse_module(std::string_view text, const AlgebraResolver& resolver,
                            AlgebraPtr algebra) {
  auto lines = split_lines(text);
  std::optional<std::vector<std::size_t>> dims;
  std::size_t dims_line = 0;
  std::vector<Matrix> maps;
  std::vector<bool> seen;

  auto need_algebra = [&](std::size_t lineno) {
    if (!algebra) throw ParseError(lineno, 0, "the algebra must be given before this line");
  };
  auto need_dims = [&](std::size_t lineno) {
    if (!dims) throw ParseError(lineno, 0, "'dims:' must come before the arrow blocks");
  };

  std::size_t ln = 0;
  while (ln < lines.size()) {
    const std::size_t lineno = ln + 1;
    std::string_view line = uncomment(lines[ln]);
    ++ln;
    if (strip(line).empty()) continue;
    auto kw = keyword(line);
    if (kw && kw->first == "algebra") {
      std::string ref(strip(line.substr(kw->second)));
      if (ref.empty()) throw ParseError(lineno, kw->second + 1, "missing algebra reference");
      if (!algebra) {
        try {
          algebra = resolver(ref);
        } catch (const ParseError&) {
          throw;
        } catch (const std::exception& e) {
          throw ParseError(lineno, 0, "cannot load algebra '" + ref + "': " + e.what());
        }
        if (!algebra) throw ParseError(lineno, 0, "unknown algebra '" + ref + "'");
      }
      continue;
    }
    if (kw && kw->first == "dims") {
      need_algebra(lineno);
      if (dims) throw ParseError(lineno, 0, "duplicate 'dims:' line");
      std::vector<std::size_t> d;
      for (auto [off, tok] : tokens(line.substr(kw->second))) {
        std::size_t value = 0;
        for (char c : tok) {
          if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(lineno, kw->second + off + 1, "dimension must be a nonnegative integer");
          }
          value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        d.push_back(value);
      }
      if (d.size() != algebra->vertex_count()) {
        throw ParseError(lineno, 0, "expected " + std::to_string(algebra->vertex_count()) +
                                        " dimensions, got " + std::to_string(d.size()));
      }
      dims = std::move(d);
      dims_line = lineno;
      const auto& q = algebra->quiver();
      for (const auto& a : q.arrows()) maps.emplace_back((*dims)[a.source], (*dims)[a.target]);
      seen.assign(q.arrow_count(), false);
      continue;
    }
    // "arrow a:"
    auto toks = tokens(line);
    if (toks.size() == 2 && toks[0].second == "arrow" && toks[1].second.ends_with(':')) {
      need_algebra(lineno);
      need_dims(lineno);
      auto label = toks[1].second.substr(0, toks[1].second.size() - 1);
      auto id = algebra->quiver().find_arrow(label);
      if (!id) throw ParseError(lineno, toks[1].first + 1, "unknown arrow '" + std::string(label) + "'");
      if (seen[*id]) throw ParseError(lineno, toks[1].first + 1, "duplicate block for arrow '" + std::string(label) + "'");
      seen[*id] = true;
      Matrix& m = maps[*id];
      for (std::size_t r = 0; r < m.rows(); ++r) {
        // next non-empty line
        while (ln < lines.size() && strip(uncomment(lines[ln])).empty()) ++ln;
        if (ln >= lines.size()) {
          throw ParseError(lines.size(), 0, "arrow '" + std::string(label) + "' needs " +
                                                std::to_string(m.rows()) + " rows");
        }
        const std::size_t rowline = ln + 1;
        auto row = tokens(uncomment(lines[ln]));
        ++ln;
        if (row.size() != m.cols()) {
          throw ParseError(rowline, 0, "row of arrow '" + std::string(label) + "' needs " +
                                           std::to_string(m.cols()) + " entries, got " +
                                           std::to_string(row.size()));
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
          m(r, c) = rational_token(row[c].second, rowline, row[c].first + 1);
        }
      }
      continue;
    }
    throw ParseError(lineno, leading_spaces(line) + 1, "unrecognized line");
  }
  if (!algebra) throw ParseError(lines.size(), 0, "no algebra given");
  if (!dims) throw ParseError(lines.size(), 0, "missing 'dims:' line");
  try {
    return Representation(algebra, *dims, std::move(maps));
  } catch (const ModuleError& e) {
    throw ParseError(dims_line, 0, e.what());
  }
}

std::string write_module(const Representation& m, const std::string& algebra_reference) {
  std::ostringstream os;
  os << "algebra: " << algebra_reference << '\n' << "dims:";
  for (auto d : m.dims()) os << ' ' << d;
  os << '\n';
  const auto& q = m.algebra()->quiver();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Matrix& mat = m.map(a);
    if (mat.rows() == 0 || mat.cols() == 0) continue;
    os << "arrow " << q.arrow(a).label << ":\n";
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      os << ' ';
      for (std::size_t c = 0; c < mat.cols(); ++c) os << ' ' << mat(r, c);
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace qalg
