// lapgraph: command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lapgraph/colorings.hpp"
#include "lapgraph/error.hpp"
#include "lapgraph/io.hpp"
#include "lapgraph/linalg.hpp"
#include "lapgraph/mahler.hpp"
#include "lapgraph/parallel.hpp"
#include "lapgraph/planar.hpp"
#include "lapgraph/spanning.hpp"
#include "lapgraph/verify.hpp"

using json = nlohmann::json;
using namespace lapgraph;

namespace {

std::string poly_text(const LaurentPoly& p) { return p.is_zero() ? "0" : p.to_string(); }

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(10) << v;
  return out.str();
}

Sublattice parse_cover(const std::string& text, int rank) {
  std::vector<long> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = std::stol(item, &used);
    if (used != item.size()) throw Error("bad cover '" + text + "'");
    parts.push_back(v);
  }
  if (rank == 1 && parts.size() == 1) return Sublattice::cyclic(parts[0]);
  if (rank == 2 && parts.size() == 1) return Sublattice::square(parts[0]);
  if (rank == 2 && parts.size() == 4) return Sublattice::planar({parts[0], parts[1], parts[2], parts[3]});
  throw Error("cover '" + text + "' does not fit d = " + std::to_string(rank));
}

FiniteGraph graph_for(const GraphFile& file, const std::string& cover) {
  if (file.graph.rank() == 0) {
    if (!cover.empty()) throw Error("--cover needs a periodic graph (d >= 1)");
    return file.graph.base();
  }
  if (cover.empty()) throw Error("--cover is required for d >= 1");
  return cover_graph(file.graph, parse_cover(cover, file.graph.rank()));
}

std::string scalar_text(const mpq_class& v) { return v.get_str(); }

json vector_json(const std::vector<mpq_class>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_text(x));
  return a;
}

std::string vector_text(const std::vector<mpq_class>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
  return s + ")";
}

template <class T>
std::string int_vector_text(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int cmd_delta(const GraphFile& file, const std::string& field_text, int k, bool as_json) {
  if (file.graph.rank() == 0) throw Error("delta needs a periodic graph (d >= 1)");
  CoeffField field = CoeffField::parse(field_text);
  LaurentMatrix l = voltage_laplacian(file.graph);
  const std::size_t n = l.rows();
  std::vector<std::size_t> ks;
  if (k >= 0) ks.push_back(static_cast<std::size_t>(k));
  else
    for (std::size_t i = 0; i < n; ++i) ks.push_back(i);
  json rows = json::array();
  for (std::size_t kk : ks) {
    LaurentPoly d = elementary_divisor(l, kk, field);
    if (as_json) {
      json row = {{"k", kk}, {"delta", poly_text(d)}};
      if (!d.is_zero()) {
        auto span = degree_span(d);
        row["degree"] = file.graph.rank() == 1 ? json(span[0]) : json({span[0], span[1]});
      }
      rows.push_back(row);
    } else {
      std::cout << "delta_" << kk << " = " << poly_text(d) << "\n";
    }
  }
  if (as_json) {
    json l_json = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json r = json::array();
      for (std::size_t j = 0; j < n; ++j) r.push_back(poly_text(l(i, j)));
      l_json.push_back(r);
    }
    std::cout << json{{"field", field.to_string()}, {"laplacian", l_json}, {"divisors", rows}}.dump(2)
              << "\n";
  }
  return 0;
}

int cmd_bicycle(const GraphFile& file, const std::string& field_text, const std::string& cover,
                bool as_json) {
  CoeffField field = CoeffField::parse(field_text);
  FiniteGraph g = graph_for(file, cover);
  ColoringBasis b = bicycle_basis(g, field);
  if (as_json) {
    json basis = json::array();
    for (std::size_t j = 0; j < b.cols(); ++j) basis.push_back(vector_json(basis_column(b, j)));
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back(e.name);
    std::cout << json{{"field", field.to_string()}, {"dimension", b.cols()}, {"edges", edges},
                      {"basis", basis}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "field " << field.to_string() << "\n";
  std::cout << "dimension " << b.cols() << "\n";
  for (std::size_t j = 0; j < b.cols(); ++j) std::cout << vector_text(basis_column(b, j)) << "\n";
  return 0;
}

int cmd_medial(const GraphFile& file, long base_component, long base_face, bool as_json) {
  PlaneGraph pg = file.plane();
  const FiniteGraph& g = pg.base();
  json out;
  auto comps = medial_components(pg);
  json comps_json = json::array();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    std::vector<std::string> crossings;
    for (std::size_t e : c.crossings) crossings.push_back(g.edge(e).name);
    json cj = {{"crossings", crossings}, {"residue", c.residue}};
    if (pg.graph().rank() == 1) cj["winding"] = c.winding;
    comps_json.push_back(cj);
    if (!as_json) {
      std::cout << "component " << i << ": crossings";
      for (const auto& name : crossings) std::cout << " " << name;
      std::cout << "  residue " << int_vector_text(c.residue);
      if (pg.graph().rank() == 1) std::cout << "  winding " << c.winding;
      std::cout << "\n";
    }
  }
  out["components"] = comps_json;
  if (pg.graph().rank() == 1) {
    VoltageMedial vm = medial_components_voltage(pg);
    out["noncompact"] = vm.noncompact;
    out["compact_orbits"] = vm.compact_orbits;
    if (!as_json)
      std::cout << "noncompact " << vm.noncompact << "\ncompact orbits " << vm.compact_orbits << "\n";
  } else if (!comps.empty()) {
    auto base_c = static_cast<std::size_t>(base_component);
    auto base_f = static_cast<std::size_t>(base_face);
    ColoringBasis shank = shank_basis(pg, base_c);
    json shank_json = json::array();
    for (std::size_t j = 0; j < shank.cols(); ++j) shank_json.push_back(vector_json(basis_column(shank, j)));
    out["shank_basis"] = shank_json;
    DehnColoring dc = component_coloring(pg, comps.at(base_c), base_f);
    out["base_component_coloring"] = {{"vertex", vector_json(dc.vertex)}, {"face", vector_json(dc.face)}};
    if (!as_json) {
      std::cout << "shank basis (base component " << base_c << ")\n";
      for (std::size_t j = 0; j < shank.cols(); ++j)
        std::cout << "  " << vector_text(basis_column(shank, j)) << "\n";
      std::cout << "coloring of component " << base_c << " from face " << base_f << ": vertices "
                << vector_text(dc.vertex) << " faces " << vector_text(dc.face) << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_trees(const GraphFile& file, const std::string& cover, bool as_json) {
  FiniteGraph g = graph_for(file, cover);
  mpz_class t = complexity(g);
  std::size_t comps = connected_components(g).size();
  if (as_json) {
    std::cout << json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()},
                      {"components", comps}, {"complexity", t.get_str()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "vertices " << g.vertex_count() << "\nedges " << g.edge_count() << "\ncomponents "
              << comps << "\ncomplexity " << t.get_str() << "\n";
  }
  return 0;
}

int cmd_growth(const GraphFile& file, const std::string& mode, long max_n, long fibers,
               bool as_json) {
  long default_max = file.graph.rank() == 2 ? 8 : 64;
  std::vector<long> schedule = doubling_schedule(max_n > 0 ? max_n : default_max);
  GrowthReport r = mode == "restrictions" ? growth_restrictions(file.graph, schedule, fibers)
                                          : growth_covers(file.graph, schedule, fibers);
  if (as_json) {
    json rows = json::array();
    for (std::size_t i = 0; i < r.rows.size(); ++i)
      rows.push_back({{"n", schedule[i]}, {"index", r.rows[i].index}, {"count", r.rows[i].count.get_str()},
                      {"normalized_log", r.rows[i].normalized},
                      {"gap", r.rows[i].normalized - r.reference}});
    std::cout << json{{"mode", to_string(r.mode)}, {"reference", r.reference}, {"rows", rows}}.dump(2)
              << "\n";
    return 0;
  }
  std::cout << "mode " << to_string(r.mode) << "\nreference " << fmt(r.reference) << "\n";
  std::cout << std::setw(6) << "n" << std::setw(8) << (r.mode == GrowthReport::Mode::kCovers ? "r" : "s")
            << std::setw(16) << "normalized" << std::setw(18) << "gap" << "  count\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    std::string count = r.rows[i].count.get_str();
    if (count.size() > 40) count = count.substr(0, 12) + "...(" + std::to_string(count.size()) + " digits)";
    std::cout << std::setw(6) << schedule[i] << std::setw(8) << r.rows[i].index << std::setw(16)
              << fmt(r.rows[i].normalized) << std::setw(18) << fmt(r.rows[i].normalized - r.reference)
              << "  " << count << "\n";
  }
  return 0;
}

int cmd_crsf(const GraphFile& file, bool as_json) {
  CrsfReport r = crsf_coefficients(file.graph);
  LaurentPoly delta0 = laplacian_delta0(file.graph);
  bool match = !r.reconstruction.is_zero() && !delta0.is_zero() && normalize(r.reconstruction) == delta0;
  std::vector<std::string> cs;
  for (const auto& c : r.coefficients) cs.push_back(c.get_str());
  if (as_json) {
    std::cout << json{{"coefficients", cs}, {"reconstruction", poly_text(r.reconstruction)},
                      {"unit_windings", r.unit_windings}, {"delta0", poly_text(delta0)},
                      {"matches_delta0", match}}
                     .dump(2)
              << "\n";
    return 0;
  }
  for (std::size_t k = 0; k < cs.size(); ++k) std::cout << "C_" << k + 1 << " = " << cs[k] << "\n";
  std::cout << "reconstruction " << poly_text(r.reconstruction) << "\n";
  if (!r.unit_windings) std::cout << "(some cycles wind more than once)\n";
  std::cout << "delta_0 " << poly_text(delta0) << "\nmatch " << (match ? "yes" : "no") << "\n";
  return 0;
}

int cmd_kappa(const GraphFile& file, bool as_json) {
  auto cut = annular_cut_set(file.graph);
  std::vector<std::string> names;
  for (std::size_t v : cut) names.push_back(file.graph.base().vertex_name(v));
  if (as_json) {
    std::cout << json{{"kappa", cut.size()}, {"cut_set", names}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "kappa " << cut.size() << "\ncut set";
  for (const auto& n : names) std::cout << " " << n;
  std::cout << "\n";
  return 0;
}

int cmd_mahler(const std::string& poly, const std::string& from_graph, long fibers, bool as_json) {
  if (poly.empty() == from_graph.empty()) throw Error("give exactly one of --poly and --from-graph");
  LaurentPoly f = poly.empty() ? laplacian_delta0(read_graph_file(from_graph).graph) : parse_laurent(poly);
  MahlerResult r = mahler(f, fibers);
  if (as_json) {
    std::cout << json{{"polynomial", poly_text(f)}, {"value", r.value}, {"method", r.method},
                      {"error_estimate", r.error_estimate}, {"samples", r.samples}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "polynomial " << poly_text(f) << "\nvalue " << fmt(r.value) << "\nmethod " << r.method
            << "\nerror estimate " << fmt(r.error_estimate) << "\n";
  if (r.method == "fiberwise") std::cout << "fibers " << r.samples << "\n";
  return 0;
}

int cmd_verify(const GraphFile& file, long max_n, long fibers, bool as_json) {
  VerifyOptions opt;
  opt.max_cover = max_n;
  opt.fibers = fibers;
  VerifyReport r = run_verify(file, opt);
  if (as_json) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    std::cout << json{{"ok", r.ok()}, {"checks", checks}}.dump(2) << "\n";
  } else {
    for (const auto& c : r.checks)
      std::cout << to_string(c.status) << "  " << c.name << ": " << c.detail << "\n";
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_env();
  CLI::App app{"Algebraic invariants of finite and periodic graphs"};
  app.require_subcommand(1);

  std::string file, field = "z", cover, mode = "covers", poly, from_graph;
  int k = -1;
  long max_n = 0, fibers = 1024, base_component = 0, base_face = 0;
  bool as_json = false;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Graph file")->required(); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "JSON output"); };

  auto* delta = app.add_subcommand("delta", "Laplacian polynomials delta_k");
  add_file(delta);
  delta->add_option("--field", field, "q, z or gf:P");
  delta->add_option("--k", k, "Only this k");
  add_json(delta);

  auto* bicycle = app.add_subcommand("bicycle", "Bicycle space basis");
  add_file(bicycle);
  bicycle->add_option("--field", field, "q or gf:P (default gf:2)");
  bicycle->add_option("--cover", cover, "n or a,b,c,d for periodic input");
  add_json(bicycle);

  auto* medial = app.add_subcommand("medial", "Medial graph components");
  add_file(medial);
  medial->add_option("--base-component", base_component, "Component left out of the Shank basis");
  medial->add_option("--base-face", base_face, "Face colored zero");
  add_json(medial);

  auto* trees = app.add_subcommand("trees", "Spanning-tree complexity");
  add_file(trees);
  trees->add_option("--cover", cover, "n or a,b,c,d for periodic input");
  add_json(trees);

  auto* growth = app.add_subcommand("growth", "Tree growth against m(delta_0)");
  add_file(growth);
  growth->add_option("--mode", mode, "covers or restrictions")->check(CLI::IsMember({"covers", "restrictions"}));
  growth->add_option("--max", max_n, "Largest n in the doubling schedule");
  growth->add_option("--fibers", fibers, "Fibers for two-variable Mahler measure");
  add_json(growth);

  auto* crsf = app.add_subcommand("crsf", "Cycle-rooted spanning forest counts");
  add_file(crsf);
  add_json(crsf);

  auto* kappa = app.add_subcommand("kappa", "Annular connectivity");
  add_file(kappa);
  add_json(kappa);

  auto* mahler_cmd = app.add_subcommand("mahler", "Logarithmic Mahler measure");
  mahler_cmd->add_option("--poly", poly, "Laurent polynomial, e.g. 4-x-x^-1-y-y^-1");
  mahler_cmd->add_option("--from-graph", from_graph, "Use delta_0 of this graph file");
  mahler_cmd->add_option("--fibers", fibers, "Fiber count (two variables)");
  add_json(mahler_cmd);

  auto* verify = app.add_subcommand("verify", "Check every applicable identity");
  add_file(verify);
  verify->add_option("--max", max_n, "Cover size for the growth check");
  verify->add_option("--fibers", fibers, "Fibers for two-variable Mahler measure");
  add_json(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (delta->parsed()) return cmd_delta(read_graph_file(file), field, k, as_json);
    if (bicycle->parsed())
      return cmd_bicycle(read_graph_file(file), bicycle->count("--field") ? field : "gf:2", cover, as_json);
    if (medial->parsed()) return cmd_medial(read_graph_file(file), base_component, base_face, as_json);
    if (trees->parsed()) return cmd_trees(read_graph_file(file), cover, as_json);
    if (growth->parsed()) return cmd_growth(read_graph_file(file), mode, max_n, fibers, as_json);
    if (crsf->parsed()) return cmd_crsf(read_graph_file(file), as_json);
    if (kappa->parsed()) return cmd_kappa(read_graph_file(file), as_json);
    if (mahler_cmd->parsed()) return cmd_mahler(poly, from_graph, fibers, as_json);
    if (verify->parsed()) return cmd_verify(read_graph_file(file), max_n, fibers, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
