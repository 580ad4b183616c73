// Acceptance run: one PASS/FAIL line per criterion, with measured values
// and runtimes. Criteria listed in kKnownFailures fail for reasons recorded
// in the README; they are still evaluated and printed as FAIL, and the exit
// status is nonzero only if some other criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "lapgraph/colorings.hpp"
#include "lapgraph/io.hpp"
#include "lapgraph/linalg.hpp"
#include "lapgraph/mahler.hpp"
#include "lapgraph/parallel.hpp"
#include "lapgraph/planar.hpp"
#include "lapgraph/spanning.hpp"
#include "property_suites.hpp"

using namespace lapgraph;

namespace {

const std::set<int> kKnownFailures = {4, 5, 8};

constexpr double kCatalan = 0.915965594177219015054603514932;

LaurentPoly P(const std::string& s, int nvars = 0) { return parse_laurent(s, nvars); }

VoltageGraph load(const std::string& name) { return read_graph_file(oracle::data_path(name)).graph; }

std::string fmt(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& note) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + note);
  }
};

int unexpected = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double secs = seconds_since(t0);
  bool known = kKnownFailures.count(id) > 0;
  std::printf("%s criterion %d: %s (%.2f s)%s\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              !out.pass && known ? " [known failure]" : "");
  for (const auto& n : out.notes) std::printf("    %s\n", n.c_str());
  if (!out.pass && !known) ++unexpected;
  if (out.pass && known) std::printf("    note: listed as a known failure but passed\n");
  std::fflush(stdout);
}

// Runs f and records whether it finished within the limit.
template <class F>
auto timed(Outcome& out, const std::string& what, double limit, F f) {
  auto t0 = std::chrono::steady_clock::now();
  auto value = f();
  double secs = seconds_since(t0);
  out.require(secs < limit, what + " took " + fmt(secs, 3) + " s (limit " + fmt(limit, 3) + " s)");
  return value;
}

bool strictly_decreasing(const std::vector<double>& gaps) {
  for (std::size_t i = 1; i < gaps.size(); ++i)
    if (!(gaps[i] < gaps[i - 1])) return false;
  return true;
}

std::string list(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : ", ") + fmt(x, 4);
  return s;
}

void delta_matches(Outcome& out, const std::string& label, const std::function<LaurentPoly()>& compute,
                   const LaurentPoly& expected) {
  LaurentPoly got = timed(out, label + " delta_0", 1.0, compute);
  out.require(equal_up_to_unit(got, expected),
              label + ": " + (got.is_zero() ? "0" : normalize(got).to_string()));
}

}  // namespace

int main() {
  apply_thread_env();
  const CoeffField gf2 = CoeffField::prime(2);

  criterion(1, "delta_0 exact matches", [&](Outcome& out) {
    delta_matches(out, "ladder", [] { return laplacian_delta0(load("ladder.lg")); },
                  P("x-1").pow(2) * P("x^2-4x+1"));
    delta_matches(out, "girder/Q", [] { return laplacian_delta0(load("girder.lg")); },
                  P("x-1").pow(2) * P("4x^2-17x+4"));
    delta_matches(
        out, "girder/GF(2)",
        [&] { return elementary_divisor(voltage_laplacian(load("girder.lg")), 0, gf2); },
        P("x+1").pow(2).over(gf2));
    delta_matches(out, "grid", [] { return laplacian_delta0(load("grid.lg")); }, P("4-x-x^-1-y-y^-1"));
    delta_matches(out, "mitsubishi", [] { return laplacian_delta0(load("mitsubishi.lg")); },
                  P("6-x-x^-1-y-y^-1-x*y^-1-x^-1*y").scaled(6));
    LaurentPoly mod2 = timed(out, "mitsubishi/GF(2) delta_0", 1.0, [&] {
      return elementary_divisor(voltage_laplacian(load("mitsubishi.lg")), 0, gf2);
    });
    out.require(mod2.is_zero(), "mitsubishi delta_0 = 0 mod 2");
    delta_matches(out, "circulant{1,2}", [] { return laplacian_delta0(load("circulant12.lg")); },
                  P("x-1").pow(2) * P("x^2+3x+1"));
  });

  criterion(2, "one-variable mahler measures", [&](Outcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    double a = mahler_1var(P("x^2-4x+1")).value;
    double b = mahler_1var(P("x^2+3x+1")).value;
    double c = mahler_1var(P("x^2-2x+1")).value;
    double secs = seconds_since(t0);
    out.require(std::abs(a - std::log(2 + std::sqrt(3.0))) < 1e-9, "m(x^2-4x+1) = " + fmt(a, 12));
    out.require(std::abs(b - std::log((3 + std::sqrt(5.0)) / 2)) < 1e-9, "m(x^2+3x+1) = " + fmt(b, 12));
    out.require(std::abs(c) < 1e-12, "m((x-1)^2) = " + fmt(c, 3));
    out.require(secs < 0.1, "all three took " + fmt(secs, 3) + " s (limit 0.1 s)");
  });

  criterion(3, "two-variable mahler measure of the grid", [&](Outcome& out) {
    MahlerResult r = timed(out, "N = 1024", 60.0, [&] { return mahler_2var(laplacian_delta0(load("grid.lg")), 1024); });
    double ref = 4 * kCatalan / std::numbers::pi;
    out.require(std::abs(r.value - 1.16624) < 2e-3,
                "m = " + fmt(r.value, 10) + " (4G/pi = " + fmt(ref, 10) + ", error estimate " +
                    fmt(r.error_estimate, 3) + ")");
  });

  criterion(4, "tree growth of covers", [&](Outcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    for (const char* name : {"ladder.lg", "circulant12.lg"}) {
      GrowthReport g = growth_covers(load(name), {4, 8, 16, 32, 64});
      std::vector<double> gaps;
      for (const auto& row : g.rows) gaps.push_back(std::abs(row.normalized - g.reference));
      out.require(gaps.back() < 0.05, std::string(name) + ": gap at n = 64 is " + fmt(gaps.back(), 5) +
                                          " (m(delta_0) = " + fmt(g.reference, 8) + ")");
      out.require(strictly_decreasing(gaps), std::string(name) + ": gaps " + list(gaps));
    }
    double secs = seconds_since(t0);
    out.require(secs < 30, "runtime " + fmt(secs, 3) + " s (limit 30 s)");
  });

  criterion(5, "thermodynamic limit of restrictions", [&](Outcome& out) {
    GrowthReport ladder = growth_restrictions(load("ladder.lg"), doubling_schedule(64));
    double lgap = std::abs(ladder.rows.back().normalized - 0.658);
    out.require(lgap < 0.02, "ladder 64 rungs: (1/2n) log tau = " + fmt(ladder.rows.back().normalized, 6) +
                                 ", gap to 0.658 is " + fmt(lgap, 4));
    GrowthReport grid = growth_restrictions(load("grid.lg"), doubling_schedule(12));
    std::vector<double> gaps;
    for (const auto& row : grid.rows) gaps.push_back(std::abs(row.normalized - 1.166));
    out.require(gaps.back() < 0.15, "grid 12x12: gap to 1.166 is " + fmt(gaps.back(), 5));
    out.require(strictly_decreasing(gaps), "grid gaps over sides 2, 4, 8, 12: " + list(gaps));
  });

  criterion(6, "K4 suite", [&](Outcome& out) {
    PlaneGraph k4 = read_graph_file(oracle::data_path("k4.lg")).plane();
    out.require(tree_count(k4.base()) == 16, "tau = " + tree_count(k4.base()).get_str());
    ColoringBasis b = bicycle_basis(k4.base(), gf2);
    IntMatrix expected(6, 2, mpz_class(0));
    const int r1[] = {1, 0, 1, 0, 1, 1};
    const int r2[] = {1, 1, 0, 1, 0, 1};
    for (std::size_t e = 0; e < 6; ++e) {
      expected(e, 0) = r1[e];
      expected(e, 1) = r2[e];
    }
    out.require(b.cols() == 2 && same_column_span(b, to_field(expected, gf2)),
                "GF(2) bicycles: dimension " + std::to_string(b.cols()) +
                    ", span {(1,0,1,0,1,1), (1,1,0,1,0,1)}");
    auto comps = medial_components(k4);
    out.require(comps.size() == 3, "medial components: " + std::to_string(comps.size()));
    ColoringBasis shank = shank_basis(k4, 0);
    out.require(same_column_span(shank, to_field(expected, gf2)), "residues of the non-base components");
    std::size_t q = bicycle_basis(k4.base(), CoeffField::rationals()).cols();
    out.require(q == 0, "Q bicycles: dimension " + std::to_string(q));
  });

  criterion(7, "noncompact medial components vs GF(2) degree", [&](Outcome& out) {
    for (auto [name, expected] : {std::pair{"ladder.lg", 4}, std::pair{"girder.lg", 2}}) {
      PlaneGraph pg = read_graph_file(oracle::data_path(name)).plane();
      long count = static_cast<long>(medial_components_voltage(pg).noncompact);
      LaurentPoly d2 = elementary_divisor(voltage_laplacian(pg.graph()), 0, gf2);
      long deg = degree_span(d2)[0];
      out.require(count == expected && deg == expected,
                  std::string(name) + ": noncompact " + std::to_string(count) + ", deg GF(2) delta_0 = " +
                      std::to_string(deg));
    }
    suites::AnnulusResult a = suites::annulus(60, 8);
    out.require(a.medial.ok() && a.medial.cases >= 50, "random annulus quotients: " + suites::summary(a.medial));
  });

  criterion(8, "forman reconstruction", [&](Outcome& out) {
    CrsfReport ladder = crsf_coefficients(load("ladder.lg"));
    out.require(ladder.coefficients == std::vector<mpz_class>{2, 1},
                "ladder C_1 = " + ladder.coefficients.at(0).get_str() + ", C_2 = " + ladder.coefficients.at(1).get_str());
    for (const char* name : {"ladder.lg", "girder.lg", "circulant12.lg", "single_loop.lg"}) {
      VoltageGraph vg = load(name);
      CrsfReport rep = crsf_coefficients(vg);
      LaurentPoly d0 = laplacian_delta0(vg);
      bool unit = equal_up_to_unit(rep.unit_reconstruction, d0);
      bool weighted = equal_up_to_unit(rep.reconstruction, d0);
      std::string detail = std::string(name) + ": sum C_k (2-x-x^-1)^k = " + normalize(rep.unit_reconstruction).to_string();
      if (!unit)
        detail += "; winding-weighted sum " + std::string(weighted ? "matches" : "does not match") +
                  " delta_0 = " + normalize(d0).to_string();
      out.require(unit, detail);
    }
  });

  criterion(9, "degree and annular connectivity", [&](Outcome& out) {
    for (const char* name : {"ladder.lg", "girder.lg"}) {
      VoltageGraph vg = load(name);
      long deg = degree_span(laplacian_delta0(vg))[0];
      std::size_t kappa = annular_connectivity(vg);
      out.require(deg == 4 && kappa == 2,
                  std::string(name) + ": deg delta_0 = " + std::to_string(deg) + ", kappa = " + std::to_string(kappa));
    }
    auto quotient = [](const std::string& body) { return parse_graph_file("lapgraph v1\nd 1\n" + body).graph; };
    const std::pair<const char*, VoltageGraph> ones[] = {
        {"single loop", load("single_loop.lg")},
        {"loop with pendant triangle",
         quotient("vertex v\nvertex u\nvertex w\nedge a v v 1\nedge b v u 0\nedge c u w 0\nedge d w v 0\n")},
        {"two-edge bridge", quotient("vertex v\nvertex u\nedge a v v 1\nedge b v u 0\nedge c u v 1\n")},
        {"double loop with chord",
         quotient("vertex v\nvertex u\nedge a v v 1\nedge b v v -1\nedge c v u 0\nedge d u v 1\nedge e u u 0\n")},
    };
    for (const auto& [label, vg] : ones) {
      std::size_t kappa = annular_connectivity(vg);
      std::size_t cut = annular_cut_set(vg).at(0);
      FiniteGraph h = kappa_one_split(vg, cut);
      mpz_class tau = tree_count(h);
      LaurentPoly d0 = laplacian_delta0(vg);
      out.require(kappa == 1 && equal_up_to_unit(d0, P("x-1").pow(2).scaled(tau)),
                  std::string(label) + ": kappa = " + std::to_string(kappa) + ", tau(H) = " + tau.get_str() +
                      ", delta_0 = " + normalize(d0).to_string());
    }
  });

  criterion(10, "property suites", [&](Outcome& out) {
    for (const suites::Result& r :
         {suites::matrix_tree(500), suites::bicycle_methods(500), suites::residues_are_bicycles(500),
          suites::shank_bases(500), suites::dehn_roundtrip(500), suites::reciprocity(500), suites::grimmett(500)})
      out.require(r.ok() && r.cases >= 500, suites::summary(r));
  });

  std::printf("known failures:");
  for (int id : kKnownFailures) std::printf(" %d", id);
  std::printf("\n%s\n", unexpected == 0 ? "acceptance: no unexpected failures" : "acceptance: UNEXPECTED FAILURES");
  return unexpected == 0 ? 0 : 1;
}
