#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lozenge/counting.hpp"
#include "lozenge/duality.hpp"
#include "lozenge/lattice.hpp"
#include "lozenge/render.hpp"
#include "lozenge/verify.hpp"

using namespace lozenge;
using nlohmann::ordered_json;

namespace {

struct Flags {
  std::string family = "hexagon";
  std::string region_file;
  int a = 0, b = 0, c = 0, x = 0, eps = -1, eq = 0;
  std::string ks, is, l, q;
  std::string sym;
  std::string method = "auto";
  std::string id;
  std::string grid;
  std::string out;
  std::string overlay = "none";
  bool json = false;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ParameterError("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<SymKind> parse_syms(const std::string& s) {
  std::vector<SymKind> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_sym_kind(item));
  return out;
}

void add_region_flags(CLI::App* app, Flags& f) {
  app->add_option("--family", f.family, "hexagon, holed, cored, dregion or rbar")
      ->check(CLI::IsMember({"hexagon", "holed", "cored", "dregion", "rbar"}));
  app->add_option("--region", f.region_file, "region JSON file (overrides --family)");
  app->add_option("--a", f.a);
  app->add_option("--b", f.b);
  app->add_option("--c", f.c);
  app->add_option("--x", f.x, "core parameter of a cored hexagon");
  app->add_option("--eps", f.eps, "-1 or 0 for dregion");
  app->add_option("--ks", f.ks, "hole indices, comma separated");
  app->add_option("--is", f.is, "dregion indices, comma separated");
  app->add_option("--l", f.l, "rbar lower list");
  app->add_option("--q", f.q, "rbar upper list");
}

Region build_region(const Flags& f) {
  if (!f.region_file.empty()) {
    std::ifstream in(f.region_file, std::ios::binary);
    if (!in) throw ParameterError("cannot read " + f.region_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return deserialize_region(ss.str());
  }
  if (f.family == "hexagon") return hexagon(f.a, f.b, f.c);
  if (f.family == "holed") return holed_hexagon(f.a, f.b, parse_ints(f.ks));
  if (f.family == "cored") return cored_hexagon(f.a, f.b, parse_ints(f.ks), f.x);
  if (f.family == "dregion") return d_region(f.a, f.b, f.eps, parse_ints(f.is));
  return rbar_region(parse_ints(f.l), parse_ints(f.q), f.b);
}

ordered_json region_params_json(const Region& r) {
  return ordered_json::parse(serialize_region(r)).value("params", ordered_json::object());
}

void emit(const Flags& f, const std::string& command, const ordered_json& params,
          const ordered_json& result, const std::string& text) {
  if (f.json) {
    ordered_json j;
    j["command"] = command;
    j["params"] = params;
    j["result"] = result;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text;
  }
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path);
  out << text;
}

SymMethod parse_method(const std::string& m) {
  if (m == "auto") return SymMethod::Auto;
  if (m == "enumerate") return SymMethod::Enumerate;
  if (m == "quotient") return SymMethod::Quotient;
  throw ParameterError("unknown method '" + m + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"lozenge: exact counts of lozenge tilings and their symmetry classes"};
  app.require_subcommand(1);
  Flags f;
  app.add_flag("--json", f.json, "machine-readable output");

  auto* count = app.add_subcommand("count", "number of tilings");
  add_region_flags(count, f);
  count->add_flag("--json", f.json);

  auto* count_sym = app.add_subcommand("count-sym", "number of tilings fixed by a symmetry group");
  add_region_flags(count_sym, f);
  count_sym->add_option("--sym", f.sym, "generators, e.g. rot180,reflv")->required();
  count_sym->add_option("--method", f.method, "auto, enumerate or quotient");
  count_sym->add_flag("--json", f.json);

  auto* verify = app.add_subcommand("verify", "check one identity at one parameter point");
  verify->add_option("--id", f.id)->required();
  verify->add_option("--a", f.a);
  verify->add_option("--b", f.b);
  verify->add_option("--x", f.x);
  verify->add_option("--eq", f.eq, "identity number for FOUR_CLASS");
  verify->add_option("--ks", f.ks);
  verify->add_option("--is", f.is);
  verify->add_flag("--json", f.json);

  auto* sweep_cmd = app.add_subcommand("sweep", "check one identity over a grid, CSV output");
  sweep_cmd->add_option("--id", f.id)->required();
  sweep_cmd->add_option("--grid", f.grid, "e.g. \"a=1..3;b=1..2\"")->required();
  sweep_cmd->add_option("--out", f.out, "CSV file (default stdout)");

  auto* render = app.add_subcommand("render", "SVG picture of a region");
  add_region_flags(render, f);
  render->add_option("--overlay", f.overlay, "none, tiling, dual or quotient");
  render->add_option("--sym", f.sym, "symmetry for the quotient overlay (default rot180)");
  render->add_option("--out", f.out, "SVG file (default stdout)");

  auto* quotient = app.add_subcommand("quotient", "orbit graph of the dual graph");
  add_region_flags(quotient, f);
  quotient->add_option("--sym", f.sym, "rotation, e.g. rot180")->required();
  quotient->add_option("--out", f.out);

  auto* split = app.add_subcommand("split", "half graph of the 180-degree quotient");
  add_region_flags(split, f);
  split->add_option("--out", f.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) {
      Region r = build_region(f);
      Integer n = r.free_edges().empty() ? count_tilings(r) : count_tilings_free(r);
      emit(f, "count", region_params_json(r), n.get_str(), n.get_str() + "\n");
      return 0;
    }
    if (count_sym->parsed()) {
      Region r = build_region(f);
      Integer n = count_symmetric_tilings(r, parse_syms(f.sym), parse_method(f.method));
      ordered_json p = region_params_json(r);
      p["sym"] = f.sym;
      emit(f, "count-sym", p, n.get_str(), n.get_str() + "\n");
      return 0;
    }
    if (verify->parsed()) {
      IdentityId id = parse_identity(f.id);
      CheckParams p;
      p.a = f.a;
      p.b = f.b;
      p.x = f.x;
      p.eq = f.eq;
      p.ks = parse_ints(f.ks);
      p.is = parse_ints(f.is);
      IdentityCheck c = check(id, p);
      ordered_json params;
      params["id"] = identity_name(id);
      params["params"] = p.str(id);
      ordered_json result;
      result["lhs"] = c.lhs.get_str();
      result["rhs"] = c.rhs.get_str();
      result["lhs_source"] = c.lhs_source;
      result["rhs_source"] = c.rhs_source;
      result["verdict"] = c.verdict;
      emit(f, "verify", params, result, c.summary() + "\n");
      return c.verdict ? 0 : 1;
    }
    if (sweep_cmd->parsed()) {
      IdentityId id = parse_identity(f.id);
      auto rows = sweep(id, parse_grid(id, f.grid));
      std::ostringstream csv;
      write_csv(csv, rows);
      write_out(f.out, csv.str());
      for (const SweepRow& r : rows)
        if (!r.verdict) return 1;
      return 0;
    }
    if (render->parsed()) {
      Region r = build_region(f);
      RenderOptions opt;
      opt.overlay = parse_overlay(f.overlay);
      opt.holes = family_holes(r);
      if (!f.sym.empty()) opt.quotient_sym = parse_sym_kind(f.sym);
      write_out(f.out, render_svg(r, opt));
      return 0;
    }
    if (quotient->parsed()) {
      Region r = build_region(f);
      MatchGraph q = quotient_graph(dual_graph(r), symmetry(r, parse_sym_kind(f.sym)));
      write_out(f.out, export_graph(q));
      return 0;
    }
    if (split->parsed()) {
      Region r = build_region(f);
      MatchGraph q = quotient_graph(dual_graph(r), symmetry(r, SymKind::Rot180));
      Rational factor = 1;
      if (!q.loops().empty()) {
        auto [h, w] = remove_loop_vertex(q);
        q = std::move(h);
        factor = w;
      }
      FactorSplit fs = factorization_split(q, SymKind::ReflV);
      std::string text = "# multiplier 2^" + std::to_string(fs.multiplier_log2) + "\n";
      if (factor != 1) text += "# loop factor " + factor.get_str() + "\n";
      write_out(f.out, text + export_graph(fs.subgraph));
      return 0;
    }
  } catch (const FormulaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SymmetryAbsentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
