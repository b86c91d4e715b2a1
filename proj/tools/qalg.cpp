// Command-line front end.  Exit codes: 0 pass, 1 check failure,
// 2 inconclusive within the bounds, 3 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qalg/cluster_tilting.hpp"
#include "qalg/presets.hpp"
#include "qalg/verification.hpp"

namespace fs = std::filesystem;
using namespace qalg;

namespace {

constexpr int kInputError = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  std::size_t bound = 6;
  std::size_t max_length = 20;
  std::string format = "human";
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

constexpr std::string_view kBuiltin = "builtin:";

// "builtin:NAME" or a file path, relative to base_dir when not absolute
AlgebraPtr resolve_algebra(const std::string& ref, const fs::path& base_dir, std::size_t cap) {
  if (ref.starts_with(kBuiltin)) {
    auto name = ref.substr(kBuiltin.size());
    auto a = preset_algebra(name);
    if (!a) throw InputError("unknown builtin algebra '" + name + "'");
    return a;
  }
  fs::path path = ref;
  if (path.is_relative()) path = base_dir / path;
  BuildOptions opts;
  opts.length_cap = cap;
  try {
    return load_algebra(read_file(path), opts);
  } catch (const ParseError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Representation load_module(const std::string& file, std::size_t cap) {
  const fs::path path = file;
  const auto text = read_file(path);
  try {
    return parse_module(text, [&](const std::string& ref) {
      return resolve_algebra(ref, path.parent_path(), cap);
    });
  } catch (const ParseError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

// Prints key/value pairs in either output format.
class Output {
 public:
  explicit Output(const Globals& g) : structured_(g.format == "structured") {}
  void add(const std::string& key, const std::string& label, const std::string& value) {
    if (structured_) {
      std::cout << key << " = " << value << '\n';
    } else {
      std::cout << label << ": " << value << '\n';
    }
  }
  void text(const std::string& block) {
    if (!structured_) std::cout << block;
  }

 private:
  bool structured_;
};

int bounded_exit(const Bounded& b) { return b.exact() ? 0 : 2; }

std::string join_adjacency_rows(const Adjacency& adj) {
  std::string out;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < adj[i].size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(adj[i][j]);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with quiver algebras and their modules"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized searches")->capture_default_str();
  app.add_option("--bound", g.bound, "Bound for global and dominant dimension searches")
      ->capture_default_str();
  app.add_option("--max-length", g.max_length, "Path length limit")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand(
      "verify-paper", "Run every check on the built-in local algebra and its tau_2-orbit module");
  std::string verify_algebra;
  verify->add_option("--algebra", verify_algebra, "Replace the built-in local algebra");

  auto* end_quiver = app.add_subcommand("end-quiver", "Present End(M) by quiver and relations");
  std::string end_module;
  bool minimize = false;
  std::string emit;
  end_quiver->add_option("module", end_module, "Module file")->required();
  end_quiver->add_flag("--minimize", minimize, "Drop redundant relations");
  end_quiver->add_option("--emit", emit, "Write the presentation as an algebra file");

  std::string algebra_ref;
  auto* gldim = app.add_subcommand("gldim", "Global dimension of an algebra");
  gldim->add_option("algebra", algebra_ref, "Algebra file or builtin:NAME")->required();
  auto* domdim = app.add_subcommand("domdim", "Dominant dimension of an algebra");
  domdim->add_option("algebra", algebra_ref, "Algebra file or builtin:NAME")->required();
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix and determinant of an algebra");
  cartan->add_option("algebra", algebra_ref, "Algebra file or builtin:NAME")->required();

  auto* tau2_cmd = app.add_subcommand("tau2", "Apply tau_2 = tau Omega to a module");
  std::string tau_module;
  std::size_t steps = 1;
  tau2_cmd->add_option("module", tau_module, "Module file")->required();
  tau2_cmd->add_option("--steps", steps, "Number of applications")->capture_default_str();
  tau2_cmd->add_option("--emit", emit, "Write the result as a module file");

  auto* probe = app.add_subcommand(
      "probe-ext", "dim Ext^i(DA, A) and dim Ext^i(M, M) for a range of i");
  std::size_t from = 1, to = 2;
  std::string probe_algebra = "builtin:local6";
  std::string probe_module;
  probe->add_option("--from", from, "First degree")->capture_default_str();
  probe->add_option("--to", to, "Last degree")->capture_default_str();
  probe->add_option("--algebra", probe_algebra, "Algebra file or builtin:NAME")
      ->capture_default_str();
  probe->add_option("--module", probe_module,
                    "Module file for M (default: DA and its first four tau_2 images)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  Output out(g);
  try {
    if (*verify) {
      PipelineOptions opts;
      opts.seed = g.seed;
      opts.bound = g.bound;
      opts.max_length = g.max_length;
      if (!verify_algebra.empty()) {
        try {
          opts.algebra = parse_algebra(read_file(verify_algebra));
        } catch (const ParseError& e) {
          throw InputError(verify_algebra + ": " + e.what());
        }
      }
      auto report = verify_local_example(opts);
      std::cout << (g.format == "structured" ? report.structured() : report.human());
      return report.exit_code();
    }

    if (*end_quiver) {
      auto m = load_module(end_module, g.max_length);
      PresentationOptions opts;
      opts.max_length = g.max_length;
      opts.decompose.seed = g.seed;
      auto p = end_as_quiver_algebra(m, opts);
      out.add("vertices", "vertices", std::to_string(p.quiver.vertex_count()));
      out.add("arrows", "arrows", std::to_string(p.quiver.arrow_count()));
      out.add("adjacency", "adjacency", join_adjacency_rows(p.adjacency));
      std::string dims;
      for (const auto& s : p.summands) dims += (dims.empty() ? "" : " ") + std::to_string(s.module.total_dimension());
      out.add("summand_dimensions", "summand dimensions", dims);
      out.add("end_dimension", "dim End", std::to_string(p.end_dimension));
      out.add("raw_relations", "relations found", std::to_string(p.raw_relation_count));
      out.add("complete", "complete", p.incomplete ? "false" : "true");
      if (p.incomplete) {
        std::cerr << "warning: path length limit reached, relations may not be complete\n";
        return 2;
      }
      out.add("presented_dimension", "presented dimension", std::to_string(p.algebra->dimension()));
      if (minimize) {
        p.relations = minimize_relations(p.quiver, p.relations, p.end_dimension, g.max_length);
        out.add("minimized_relations", "relations after minimizing", std::to_string(p.relations.size()));
      }
      if (!emit.empty()) {
        std::ofstream f(emit);
        f << write_presentation(p);
        if (!f) throw InputError("cannot write " + emit);
      }
      return 0;
    }

    if (*gldim || *domdim || *cartan) {
      auto a = resolve_algebra(algebra_ref, fs::current_path(), g.max_length);
      out.add("algebra_dimension", "dimension", std::to_string(a->dimension()));
      if (*gldim) {
        auto b = global_dimension(a, g.bound);
        out.add("global_dimension", "global dimension", b.to_string());
        return bounded_exit(b);
      }
      if (*domdim) {
        auto b = dominant_dimension(a, g.bound);
        out.add("dominant_dimension", "dominant dimension", b.to_string());
        return bounded_exit(b);
      }
      auto c = cartan_matrix(a);
      std::string rows;
      for (std::size_t i = 0; i < c.rows(); ++i) {
        if (i) rows += "; ";
        for (std::size_t j = 0; j < c.cols(); ++j) rows += (j ? " " : "") + c(i, j).to_string();
      }
      out.add("cartan_matrix", "Cartan matrix", rows);
      out.add("cartan_determinant", "Cartan determinant", determinant(c).to_string());
      return 0;
    }

    if (*tau2_cmd) {
      auto m = load_module(tau_module, g.max_length);
      auto orbit = tau2_orbit(m, steps);
      for (std::size_t k = 1; k < orbit.size(); ++k) {
        const auto key = "tau2_" + std::to_string(k);
        out.add(key + ".dimension", "dim tau_2^" + std::to_string(k), std::to_string(orbit[k].total_dimension()));
        out.add(key + ".projective", "  projective", is_projective(orbit[k]) ? "true" : "false");
      }
      if (!emit.empty()) {
        // the file refers back to the input's algebra line
        std::string ref;
        std::istringstream in(read_file(tau_module));
        for (std::string line; std::getline(in, line);) {
          if (line.starts_with("algebra:")) {
            ref = line.substr(8);
            ref.erase(0, ref.find_first_not_of(" \t"));
            break;
          }
        }
        std::ofstream f(emit);
        f << write_module(orbit.back(), ref);
        if (!f) throw InputError("cannot write " + emit);
      }
      return 0;
    }

    if (*probe) {
      if (from == 0 || to < from) throw InputError("need 1 <= from <= to");
      auto a = resolve_algebra(probe_algebra, fs::current_path(), g.max_length);
      Representation m = probe_module.empty() ? local_example_module(a) : load_module(probe_module, g.max_length);
      const auto da = direct_sum(indec_injectives(a)).module;
      const auto reg = regular_module(a);
      for (std::size_t i = from; i <= to; ++i) {
        const auto s = std::to_string(i);
        out.add("ext" + s + ".DA_A", "dim Ext^" + s + "(DA, A)", std::to_string(ext_dimension(da, reg, i)));
        out.add("ext" + s + ".M_M", "dim Ext^" + s + "(M, M)", std::to_string(ext_dimension(m, m, i)));
      }
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    // malformed quivers, modules and arguments
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DecompositionInconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
