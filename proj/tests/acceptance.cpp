// Runs the acceptance criteria at their time limits and prints one line per
// criterion.  Exit status 0 iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qalg/cluster_tilting.hpp"
#include "qalg/presets.hpp"
#include "qalg/verification.hpp"

using namespace qalg;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > limit_seconds) {
    out.ok = false;
    out.detail += " (over the time limit)";
  }
  if (!out.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3fs / %.0fs", secs, limit_seconds);
  std::cout << "criterion " << id << ": " << (out.ok ? "PASS" : "FAIL") << "  " << title << "  ["
            << timing << "]";
  if (!out.detail.empty()) std::cout << "  " << out.detail;
  std::cout << std::endl;
}

Outcome expect(bool ok, std::string detail) { return {ok, std::move(detail)}; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Reference quiver with one-based vertices: 1->2, 1->4, 2->3, 2->5, 3->4,
// 4->1 twice, 4->5, 5->2 twice.
Adjacency reference_adjacency() {
  Adjacency a(5, std::vector<std::size_t>(5, 0));
  const std::tuple<int, int, int> edges[] = {{1, 2, 1}, {1, 4, 1}, {2, 3, 1}, {2, 5, 1},
                                              {3, 4, 1}, {4, 1, 2}, {4, 5, 1}, {5, 2, 2}};
  for (auto [i, j, c] : edges) a[i - 1][j - 1] = c;
  return a;
}

struct Shared {
  AlgebraPtr a;
  std::vector<Representation> orbit;
  Representation m;
  std::optional<EndStructure> end;
  std::optional<EndPresentation> presentation;
};

// Idempotents orthogonal and summing to 1, on total matrices.
bool complete_orthogonal(const std::vector<Summand>& parts, std::size_t n) {
  Matrix sum(n, n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const auto p = parts[i].idempotent * parts[j].idempotent;
      if (i == j ? p != parts[i].idempotent : !p.is_zero()) return false;
    }
    sum += parts[i].idempotent;
  }
  return sum == Matrix::identity(n);
}

}  // namespace

int main() {
  Shared s;
  const fs::path data_dir = QALG_DATA_DIR;

  run(1, "dim A = 6 and A is not selfinjective", 1.0, [&] {
    s.a = load_algebra(preset_text("local6"));
    const bool selfinjective = is_selfinjective(s.a);
    return expect(s.a->dimension() == 6 && !selfinjective,
                  "dim A = " + std::to_string(s.a->dimension()) +
                      ", selfinjective = " + (selfinjective ? "true" : "false"));
  });

  run(2, "tau_2^4(DA) is projective and isomorphic to A", 30.0, [&] {
    s.orbit = tau2_orbit(indec_injective(s.a, 0), 4);
    const auto witness = is_isomorphic(s.orbit[4], regular_module(s.a));
    const bool verified = witness && witness.witness->is_isomorphism() && witness.witness->commutes();
    return expect(is_projective(s.orbit[4]) && verified,
                  std::string("witness ") + (verified ? "verified" : "missing"));
  });

  run(3, "5 summands; End quiver with 5 vertices, 10 arrows, reference adjacency", 300.0, [&] {
    s.m = direct_sum(s.orbit).module;
    s.end.emplace(s.m);
    const auto parts = decompose(*s.end);
    s.presentation = end_as_quiver_algebra(*s.end);
    const auto& p = *s.presentation;
    const auto matching = match_adjacency(p.adjacency, reference_adjacency());
    std::string detail = std::to_string(parts.size()) + " summands, " +
                         std::to_string(p.quiver.vertex_count()) + " vertices, " +
                         std::to_string(p.quiver.arrow_count()) + " arrows";
    if (matching) {
      detail += ", vertex i -> reference";
      for (auto v : *matching) detail += " " + std::to_string(v + 1);
    }
    return expect(parts.size() == 5 && p.quiver.vertex_count() == 5 &&
                      p.quiver.arrow_count() == 10 && matching.has_value() && !p.incomplete,
                  detail);
  });

  run(4, "dim End(M) = 165 by Hom solve and by the presented algebra", 300.0, [&] {
    const auto by_hom = s.end->dimension();
    const auto presented = s.presentation->algebra->dimension();
    return expect(by_hom == 165 && presented == 165,
                  "Hom solve " + std::to_string(by_hom) + ", presented " + std::to_string(presented));
  });

  run(5, "gldim B = 3 and domdim B = 3 with bound 6", 600.0, [&] {
    const auto gl = global_dimension(s.presentation->algebra, 6);
    const auto dom = dominant_dimension(s.presentation->algebra, 6);
    return expect(gl.is(3) && dom.is(3), "gldim " + gl.to_string() + ", domdim " + dom.to_string());
  });

  run(6, "Cartan determinant of B = 1", 60.0, [&] {
    const auto det = cartan_determinant(s.presentation->algebra);
    return expect(det == 1, "det = " + det.to_string());
  });

  run(7, "the eleven-relation presentation has dimension 165", 60.0, [&] {
    const auto text = parse_algebra(preset_text("local6-end"));
    const auto b = build_algebra(text.quiver, text.relations);
    const bool same_quiver = match_adjacency(b->quiver().adjacency(), reference_adjacency()) &&
                             b->quiver().adjacency() == reference_adjacency();
    return expect(text.relations.size() == 11 && b->dimension() == 165 && same_quiver,
                  std::to_string(text.relations.size()) + " relations, dimension " +
                      std::to_string(b->dimension()));
  });

  run(8, "relation minimization keeps dimension 165 and drops relations", 300.0, [&] {
    const auto& p = *s.presentation;
    const auto kept = minimize_relations(p.quiver, p.relations, 165);
    const auto rebuilt = build_algebra(p.quiver, kept);
    return expect(rebuilt->dimension() == 165 && kept.size() < p.raw_relation_count,
                  std::to_string(p.raw_relation_count) + " -> " + std::to_string(kept.size()) +
                      " relations, dimension " + std::to_string(rebuilt->dimension()));
  });

  run(9, "Ext^1(DA, A) = 0 and Ext^1(M, M) = 0", 60.0, [&] {
    const auto da = ext_dimension(s.orbit[0], regular_module(s.a), 1);
    const auto mm = ext_dimension(s.m, s.m, 1);
    return expect(da == 0 && mm == 0,
                  "Ext^1(DA, A) = " + std::to_string(da) + ", Ext^1(M, M) = " + std::to_string(mm));
  });

  {
    const auto l2 = load_algebra(preset_text("L2"));
    const auto simple = simple_module(l2, 0);
    const auto a2 = load_algebra(preset_text("A2"));
    run(10, "L2: syzygy of S is S", 1.0, [&] {
      return expect(bool(is_isomorphic(syzygy(simple), simple)), "");
    });
    run(10, "L2: tau S is S", 1.0, [&] {
      return expect(bool(is_isomorphic(ar_translate(simple), simple)), "");
    });
    run(10, "L2: dim Ext^1(S, S) = 1", 1.0, [&] {
      const auto d = ext_dimension(simple, simple, 1);
      return expect(d == 1, std::to_string(d));
    });
    run(10, "L2: Cartan determinant 2", 1.0, [&] {
      const auto d = cartan_determinant(l2);
      return expect(d == 2, d.to_string());
    });
    run(10, "L2: selfinjective", 1.0, [&] { return expect(is_selfinjective(l2), ""); });
    run(10, "L2: gldim exceeds bound 5", 1.0, [&] {
      const auto g = global_dimension(l2, 5);
      return expect(g.kind == Bounded::Kind::ExceedsBound, g.to_string());
    });
    run(10, "A2: gldim 1", 1.0, [&] {
      const auto g = global_dimension(a2, 6);
      return expect(g.is(1), g.to_string());
    });
    run(10, "A2: domdim 1", 1.0, [&] {
      const auto g = dominant_dimension(a2, 6);
      return expect(g.is(1), g.to_string());
    });
    run(10, "A2: Cartan determinant 1", 1.0, [&] {
      const auto d = cartan_determinant(a2);
      return expect(d == 1, d.to_string());
    });
  }

  run(11, "invariants on the bundled corpus", 600.0, [&] {
    std::vector<std::pair<std::string, AlgebraPtr>> algebras;
    for (const auto& name : preset_names()) algebras.emplace_back("builtin:" + name, preset_algebra(name));
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(data_dir)) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files)
      if (f.extension() == ".alg") algebras.emplace_back(f.filename().string(), load_algebra(read_file(f)));

    std::vector<std::pair<std::string, Representation>> modules;
    for (const auto& f : files) {
      if (f.extension() != ".module") continue;
      modules.emplace_back(f.filename().string(), parse_module(read_file(f), [&](const std::string& ref) {
                             return load_algebra(read_file(data_dir / ref));
                           }));
    }
    for (const auto& [name, alg] : algebras) {
      for (VertexId v = 0; v < alg->vertex_count(); ++v) {
        modules.emplace_back(name + " P" + std::to_string(v + 1), indec_projective(alg, v));
        modules.emplace_back(name + " I" + std::to_string(v + 1), indec_injective(alg, v));
        modules.emplace_back(name + " S" + std::to_string(v + 1), simple_module(alg, v));
      }
    }

    std::size_t checks = 0;
    for (const auto& [name, alg] : algebras) {
      ++checks;
      if (!alg->is_associative()) return expect(false, name + ": multiplication not associative");
    }
    for (const auto& [name, mod] : modules) {
      ++checks;
      if (auto bad = validate(mod)) return expect(false, name + ": " + bad->message);
      // small modules only: End and its presentation are quick there
      if (mod.total_dimension() > 40) continue;
      const EndStructure end(mod);
      for (const auto& f : end.basis()) {
        ++checks;
        if (!f.commutes()) return expect(false, name + ": endomorphism does not commute");
      }
      const auto parts = decompose(end);
      ++checks;
      if (!complete_orthogonal(parts, mod.total_dimension()))
        return expect(false, name + ": idempotents not complete and orthogonal");
      auto classes = isomorphism_classes(end, parts);
      std::sort(classes.begin(), classes.end());
      // repeated summands have no basic presentation
      if (std::adjacent_find(classes.begin(), classes.end()) != classes.end()) continue;
      const auto p = end_as_quiver_algebra(end);
      if (p.incomplete) return expect(false, name + ": End presentation incomplete");
      const Matrix zero(mod.total_dimension(), mod.total_dimension());
      for (const auto& r : p.relations) {
        ++checks;
        if (evaluate(p, r) != zero) return expect(false, name + ": relation does not vanish");
      }
      ++checks;
      if (!p.algebra->is_associative()) return expect(false, name + ": End table not associative");
    }
    return expect(true, std::to_string(algebras.size()) + " algebras, " +
                            std::to_string(modules.size()) + " modules, " + std::to_string(checks) +
                            " checks");
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " failing")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
