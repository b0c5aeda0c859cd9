#include "cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sparking/bijections.hpp"
#include "sparking/enumeration.hpp"
#include "sparking/errors.hpp"
#include "sparking/graphs.hpp"
#include "sparking/io.hpp"
#include "sparking/matroid.hpp"

namespace sparking::cli {

namespace {

using nlohmann::json;

json ids_json(const Universe& u, ElementSet s) { return u.to_ids(s); }

json pairing_json(const SetSystem& system, const BijectionReport& report) {
  json rows = json::array();
  for (const auto& row : report.pairing) {
    rows.push_back({{"f", row.function.values}, {"sigma", ids_json(system.universe(), row.set.elements)}});
  }
  return rows;
}

std::string status_line(const BijectionReport& report) {
  return "|P|=" + std::to_string(report.function_count) + " |Q|=" + std::to_string(report.set_count) +
         (report.ok() ? " OK" : " FAIL");
}

// Seed from --seed, else SPARKING_SEED, else 0.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SPARKING_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(0, std::string("SPARKING_SEED is not an integer: '") + env + "'");
    }
  }
  return 0;
}

SetSystem u42_system() {
  auto universe = std::make_shared<const Universe>(Universe::range(4));
  return SetSystem(universe, std::vector<std::vector<ElementId>>{{1, 2, 3}, {1, 2, 4}});
}

// Rows of the worked U_{4,2} example: f(E_1), f(E_2), sigma(f), E - sigma(f).
struct ExpectedRow {
  std::uint32_t e1, e2;
  std::vector<ElementId> sigma, complement;
};

const std::vector<ExpectedRow>& u42_expected() {
  static const std::vector<ExpectedRow> rows{
      {0, 0, {1, 3}, {2, 4}}, {0, 1, {2, 3}, {1, 4}}, {0, 2, {3, 4}, {1, 2}},
      {1, 0, {1, 4}, {2, 3}}, {2, 0, {2, 4}, {1, 3}},
  };
  return rows;
}

// Reads and parses `path`, prefixing parse diagnostics with the file name.
template <typename Parse>
auto load(const std::string& path, Parse&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

SetSystem load_system(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_set_system(t); });
}

std::vector<std::vector<ElementId>> load_set_list(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_set_list(t); });
}

Multigraph load_graph(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_graph(t); });
}

struct Command {
  virtual ~Command() = default;
  virtual int execute(std::ostream& out) = 0;
};

struct EnumerateCommand : Command {
  std::string file;
  bool functions = false, sets = false, both = false, as_json = false;

  int execute(std::ostream& out) override {
    const SetSystem system = load_system(file);
    const bool want_f = functions || both || !sets;
    const bool want_d = sets || both || !functions;
    const Universe& u = system.universe();
    json doc;
    if (want_f) {
      const auto list = enumerate_parking_functions(system);
      if (as_json) {
        doc["functions"] = json::array();
        for (const auto& f : list) doc["functions"].push_back(f.values);
      } else {
        out << "P (" << list.size() << "):\n";
        for (const auto& f : list) out << format_function(f) << '\n';
      }
    }
    if (want_d) {
      const auto list = enumerate_parking_sets(system);
      if (as_json) {
        doc["sets"] = json::array();
        for (const auto& d : list) doc["sets"].push_back(ids_json(u, d.elements));
      } else {
        out << "Q (" << list.size() << "):\n";
        for (const auto& d : list) out << format_set(u, d.elements) << '\n';
      }
    }
    if (as_json) out << doc.dump(2) << '\n';
    return kOk;
  }
};

struct MapCommand : Command {
  std::string file;
  std::vector<ElementId> rho_set;
  std::vector<std::uint32_t> sigma_values;
  bool trace = false, trusted = false, as_json = false;
  bool use_rho = false;

  int execute(std::ostream& out) override {
    const SetSystem system = load_system(file);
    const Validation validation = trusted ? Validation::Trusted : Validation::Eager;
    const Universe& u = system.universe();
    BijectionTrace t;
    json doc;
    std::string rendered;
    if (use_rho) {
      const auto d = SParkingSet::from_ids(u, rho_set);
      auto result = rho(system, d, validation);
      t = std::move(result.trace);
      rendered = format_function(result.function);
      doc["f"] = result.function.values;
    } else {
      auto result = sigma(system, SParkingFunction{sigma_values}, validation);
      t = std::move(result.trace);
      rendered = format_set(u, result.set.elements);
      doc["D"] = ids_json(u, result.set.elements);
    }
    if (as_json) {
      if (trace) {
        doc["trace"] = json::array();
        for (const auto& ev : t.events) {
          doc["trace"].push_back({{"event", ev.kind == TraceEventKind::Delete ? "DEL" : "FIX"},
                                  {"step", ev.step},
                                  {"set", ev.set + 1},
                                  {"element", ev.element}});
        }
      }
      out << doc.dump(2) << '\n';
    } else {
      if (trace) out << format_trace(t);
      out << rendered << '\n';
    }
    return kOk;
  }
};

struct VerifyCommand : Command {
  std::string file;
  std::size_t random = 0;
  std::optional<std::uint64_t> seed;
  bool as_json = false;

  int execute(std::ostream& out) override {
    if (file.empty() && random == 0) throw InvalidArgument("verify needs a system file or --random N");
    bool ok = true;
    json doc;
    if (!file.empty()) {
      const SetSystem system = load_system(file);
      const auto report = verify_bijection(system);
      ok = report.ok();
      if (as_json) {
        doc["P"] = report.function_count;
        doc["Q"] = report.set_count;
        doc["ok"] = report.ok();
        doc["failures"] = report.failures;
        doc["pairing"] = pairing_json(system, report);
      } else {
        out << status_line(report) << '\n';
        for (const auto& f : report.failures) out << "failure: " << f << '\n';
        out << render_pairing_table(system, report);
      }
    }
    if (random > 0) {
      const std::uint64_t s = resolve_seed(seed);
      std::mt19937_64 rng(s);
      auto universe = std::make_shared<const Universe>(Universe::range(6));
      std::size_t failed = 0;
      for (std::size_t i = 0; i < random; ++i) {
        const auto system = random_set_system(rng, 4, universe);
        if (!verify_bijection(system).ok()) ++failed;
      }
      ok = ok && failed == 0;
      if (as_json) {
        doc["random"] = {{"systems", random}, {"seed", s}, {"failed", failed}};
      } else {
        out << "random systems: " << random << " seed: " << s << " failed: " << failed
            << (failed == 0 ? " OK" : " FAIL") << '\n';
      }
    }
    if (as_json) out << doc.dump(2) << '\n';
    return ok ? kOk : kVerificationFailure;
  }
};

std::optional<Matroid> load_matroid(const std::string& file, const std::vector<std::size_t>& uniform,
                                    const std::string& graphic) {
  const int given = !file.empty() + !uniform.empty() + !graphic.empty();
  if (given != 1) throw InvalidArgument("give exactly one of <matroid-file>, --uniform N R, --graphic FILE");
  if (!uniform.empty()) return uniform_matroid(uniform.at(0), uniform.at(1));
  if (!graphic.empty()) return graphic_matroid(load_graph(graphic));
  return load(file, [](const std::string& t) { return parse_matroid(t); });
}

struct MatroidCommand : Command {
  std::string file;
  std::vector<std::size_t> uniform;
  std::string graphic;
  std::string parts_file;
  std::string side_name = "circuit";
  bool search_cover = false, as_json = false;

  int execute(std::ostream& out) override {
    const Matroid m = *load_matroid(file, uniform, graphic);
    const Universe& u = m.ground();
    if (search_cover) {
      const auto family = find_full_cover_family(m);
      if (as_json) {
        json doc;
        doc["found"] = family.has_value();
        if (family) {
          doc["parts"] = json::array();
          for (ElementSet s : family->sets()) doc["parts"].push_back(ids_json(u, s));
        }
        out << doc.dump(2) << '\n';
      } else if (family) {
        out << "full-cover cocircuit family:\n";
        for (ElementSet s : family->sets()) out << format_set(u, s) << '\n';
      } else {
        out << "no full-cover cocircuit family found\n";
      }
      return kOk;
    }
    if (parts_file.empty()) throw InvalidArgument("matroid needs --parts FILE (or --search-cover)");
    const Side side = side_name == "cocircuit" ? Side::Cocircuit : Side::Circuit;
    const SetSystem parts(m.ground_ptr(), load_set_list(parts_file));

    const auto identity = side == Side::Circuit ? parking_sets_vs_bases_circuit_side(m, parts)
                                                : parking_sets_vs_bases_cocircuit_side(m, parts);
    const auto bij = theorem_bijection(m, parts, side);
    const auto cover = corollary_full_cover(m, parts, side);
    const bool ok = identity.holds && bij.ok() && cover.consequence_verified;

    if (as_json) {
      json doc;
      doc["side"] = to_string(side);
      doc["identity"] = {{"form", to_string(identity.form)}, {"holds", identity.holds}, {"target", json::array()}};
      for (ElementSet b : identity.target) doc["identity"]["target"].push_back(ids_json(u, b));
      doc["pairs"] = json::array();
      for (const auto& p : bij.pairs) doc["pairs"].push_back({{"f", p.function.values}, {"basis", ids_json(u, p.basis)}});
      doc["injective"] = bij.injective;
      doc["image_is_target"] = bij.image_is_target;
      doc["full_cover"] = {{"hypothesis", cover.hypothesis}, {"consequence_verified", cover.consequence_verified}};
      doc["ok"] = ok;
      out << doc.dump(2) << '\n';
    } else {
      out << "side: " << to_string(side) << '\n';
      out << "identity (" << to_string(identity.form) << "): " << (identity.holds ? "holds" : "FAILS") << ", "
          << identity.target.size() << " target bases\n";
      std::size_t width = 1;
      for (const auto& p : bij.pairs) width = std::max(width, format_function(p.function).size());
      for (const auto& p : bij.pairs) {
        const auto f = format_function(p.function);
        out << f << std::string(width - f.size(), ' ') << " -> " << format_set(u, p.basis) << '\n';
      }
      out << "bijection onto target: " << (bij.ok() ? "yes" : "NO") << '\n';
      out << "full cover: " << (cover.hypothesis ? "yes" : "no");
      if (cover.hypothesis) out << (cover.consequence_verified ? ", all bases reached" : ", CONSEQUENCE FAILS");
      out << '\n' << (ok ? "OK" : "FAIL") << '\n';
    }
    return ok ? kOk : kVerificationFailure;
  }
};

struct GraphCommand : Command {
  std::string file;
  std::string faces_file;
  bool as_json = false;

  int execute(std::ostream& out) override {
    const Multigraph g = load_graph(file);
    const auto universe = g.edge_universe();
    const bool faces = !faces_file.empty();
    const auto bij = faces ? face_boundary_bijection(g, load_set_list(faces_file)) : spanning_tree_bijection(g);
    const std::uint64_t counted = spanning_tree_count(g);
    bool ok = bij.ok() && counted == bij.trees.size() && bij.pairs.size() == counted;
    std::optional<FamilyComparison> gp;
    if (!faces) {
      gp = g_parking_equals_s_parking(g);
      ok = ok && gp->equal;
    }
    if (as_json) {
      json doc;
      doc["side"] = faces ? "faces" : "stars";
      doc["pairs"] = json::array();
      for (const auto& p : bij.pairs) doc["pairs"].push_back({{"f", p.function.values}, {"tree", ids_json(*universe, p.tree)}});
      doc["trees"] = bij.trees.size();
      doc["deletion_contraction"] = counted;
      doc["injective"] = bij.injective;
      doc["covers_all_trees"] = bij.covers_all_trees;
      if (gp) doc["g_parking_equals_s_parking"] = gp->equal;
      doc["ok"] = ok;
      out << doc.dump(2) << '\n';
    } else {
      std::size_t width = 1;
      for (const auto& p : bij.pairs) width = std::max(width, format_function(p.function).size());
      for (const auto& p : bij.pairs) {
        const auto f = format_function(p.function);
        out << f << std::string(width - f.size(), ' ') << " -> " << format_set(*universe, p.tree) << '\n';
      }
      out << "trees: " << bij.trees.size() << " |P|=" << bij.pairs.size() << " deletion-contraction: " << counted;
      if (gp) out << " G-parking=S-parking: " << (gp->equal ? "yes" : "NO");
      out << '\n' << (ok ? "OK" : "FAIL") << '\n';
    }
    return ok ? kOk : kVerificationFailure;
  }
};

bool u42_matches(const SetSystem& system, const BijectionReport& report) {
  const auto& expected = u42_expected();
  if (!report.ok() || report.pairing.size() != expected.size()) return false;
  const Universe& u = system.universe();
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& row = report.pairing[i];
    const auto& want = expected[i];
    if (row.function.values != std::vector<std::uint32_t>{want.e1, want.e2}) return false;
    if (u.to_ids(row.set.elements) != want.sigma) return false;
    if (u.to_ids(u.all() - row.set.elements) != want.complement) return false;
  }
  return true;
}

struct DemoCommand : Command {
  std::string name;
  bool as_json = false;

  int execute(std::ostream& out) override {
    if (name != "u42") throw InvalidArgument("unknown demo '" + name + "' (available: u42)");
    const SetSystem system = u42_system();
    const auto report = verify_bijection(system);
    const bool ok = u42_matches(system, report);
    if (as_json) {
      json doc;
      doc["rows"] = json::array();
      const Universe& u = system.universe();
      for (const auto& row : report.pairing) {
        doc["rows"].push_back({{"f", row.function.values},
                               {"sigma", ids_json(u, row.set.elements)},
                               {"complement", ids_json(u, u.all() - row.set.elements)}});
      }
      doc["ok"] = ok;
      out << doc.dump(2) << '\n';
    } else {
      out << render_pairing_table(system, report, system.universe().all());
    }
    return ok ? kOk : kVerificationFailure;
  }
};

}  // namespace

std::string u42_table() {
  const SetSystem system = u42_system();
  return render_pairing_table(system, verify_bijection(system), system.universe().all());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"S-parking functions, S-parking sets, and their bijections", "sparking"};
  app.require_subcommand(1);

  EnumerateCommand enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List parking functions and/or parking sets");
  enumerate_cmd->add_option("system", enumerate.file, "Set-system file")->required();
  auto* fn_flag = enumerate_cmd->add_flag("--functions", enumerate.functions, "Only parking functions");
  auto* set_flag = enumerate_cmd->add_flag("--sets", enumerate.sets, "Only parking sets");
  auto* both_flag = enumerate_cmd->add_flag("--both", enumerate.both, "Both families (default)");
  fn_flag->excludes(set_flag)->excludes(both_flag);
  set_flag->excludes(both_flag);
  enumerate_cmd->add_flag("--json", enumerate.as_json);

  MapCommand map;
  auto* map_cmd = app.add_subcommand("map", "Apply rho to a parking set or sigma to a parking function");
  map_cmd->add_option("system", map.file, "Set-system file")->required();
  auto* rho_opt = map_cmd->add_option("--rho", map.rho_set, "Element ids of D");
  auto* sigma_opt = map_cmd->add_option("--sigma", map.sigma_values, "Values f(A_1) .. f(A_k)");
  rho_opt->excludes(sigma_opt);
  map_cmd->add_flag("--trace", map.trace, "Print DEL/FIX events");
  map_cmd->add_flag("--trusted", map.trusted, "Skip the up-front membership check");
  map_cmd->add_flag("--json", map.as_json);

  VerifyCommand verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that rho and sigma are mutually inverse bijections");
  verify_cmd->add_option("system", verify.file, "Set-system file");
  verify_cmd->add_option("--random", verify.random, "Also verify N random systems (k <= 4, 6 elements)");
  verify_cmd->add_option("--seed", verify.seed, "Seed for --random (default $SPARKING_SEED or 0)");
  verify_cmd->add_flag("--json", verify.as_json);

  MatroidCommand matroid;
  auto* matroid_cmd = app.add_subcommand("matroid", "Parking-function / basis bijection for a matroid");
  matroid_cmd->add_option("matroid", matroid.file, "Matroid file: 'ground n r' then one basis per line");
  matroid_cmd->add_option("--uniform", matroid.uniform, "Uniform matroid U_{N,R}")->expected(2);
  matroid_cmd->add_option("--graphic", matroid.graphic, "Graphic matroid of a graph file");
  matroid_cmd->add_option("--parts", matroid.parts_file, "Subsets E_1..E_k, one per line");
  matroid_cmd->add_option("--side", matroid.side_name, "circuit or cocircuit")
      ->check(CLI::IsMember({"circuit", "cocircuit"}));
  matroid_cmd->add_flag("--search-cover", matroid.search_cover, "Search for a full-cover cocircuit-union family");
  matroid_cmd->add_flag("--json", matroid.as_json);

  GraphCommand graph;
  auto* graph_cmd = app.add_subcommand("graph", "G-parking functions versus spanning trees");
  graph_cmd->add_option("graph", graph.file, "Graph file")->required();
  graph_cmd->add_option("--faces", graph.faces_file, "Interior face boundaries, one per line");
  graph_cmd->add_flag("--json", graph.as_json);

  DemoCommand demo;
  auto* demo_cmd = app.add_subcommand("demo", "Built-in worked examples");
  demo_cmd->add_option("name", demo.name, "Example name (u42)")->required();
  demo_cmd->add_flag("--json", demo.as_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Command* command = &demo;
  if (enumerate_cmd->parsed()) command = &enumerate;
  else if (map_cmd->parsed()) {
    if (rho_opt->count() == 0 && sigma_opt->count() == 0) {
      err << "error: map needs --rho or --sigma\n";
      return kInputError;
    }
    map.use_rho = rho_opt->count() > 0;
    command = &map;
  }
  else if (verify_cmd->parsed()) command = &verify;
  else if (matroid_cmd->parsed()) command = &matroid;
  else if (graph_cmd->parsed()) command = &graph;

  try {
    return command->execute(out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionFailure& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPreconditionFailure;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace sparking::cli
