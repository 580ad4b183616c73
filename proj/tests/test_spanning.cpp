#include <doctest.h>

#include <cmath>
#include <random>

#include "lapgraph/io.hpp"
#include "lapgraph/linalg.hpp"
#include "lapgraph/mahler.hpp"
#include "lapgraph/spanning.hpp"
#include "oracles.hpp"

using namespace lapgraph;

namespace {

VoltageGraph load(const std::string& name) { return read_graph_file(oracle::data_path(name)).graph; }

LaurentPoly P(const std::string& s) { return parse_laurent(s); }

VoltageGraph quotient(const std::string& body) { return parse_graph_file("lapgraph v1\nd 1\n" + body).graph; }

}  // namespace

TEST_CASE("tree counts") {
  CHECK(tree_count(load("k4.lg").base()) == 16);
  FiniteGraph prism = cover_graph(load("ladder.lg"), Sublattice::cyclic(3));
  CHECK(tree_count(prism) == 75);
  CHECK(oracle::tree_count_by_subsets(prism) == 75);
  CHECK(tree_count(FiniteGraph::with_vertices(1)) == 1);
  CHECK_THROWS_AS(tree_count(FiniteGraph::with_vertices(2)), Error);
}

TEST_CASE("complexity") {
  FiniteGraph two = FiniteGraph::with_vertices(6);
  for (std::size_t base : {0, 3}) {
    two.add_edge(base, base + 1);
    two.add_edge(base + 1, base + 2);
    two.add_edge(base + 2, base);
  }
  CHECK(complexity(two) == 9);
  CHECK(complexity(load("k4.lg").base()) == 16);
  CHECK(complexity(FiniteGraph::with_vertices(4)) == 1);
}

TEST_CASE("tree count does not depend on the deleted row") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    FiniteGraph g = oracle::random_connected(rng, 1 + t % 7, 2 + t % 9);
    mpz_class ref = tree_count(g);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) CHECK(tree_count(g, v) == ref);
  }
}

TEST_CASE("cycle-rooted spanning forests") {
  CrsfReport ladder = crsf_coefficients(load("ladder.lg"));
  REQUIRE(ladder.coefficients.size() == 2);
  CHECK(ladder.coefficients[0] == 2);
  CHECK(ladder.coefficients[1] == 1);
  CHECK(ladder.unit_windings);
  CHECK(normalize(ladder.unit_reconstruction) == P("x-1").pow(2) * P("x^2-4x+1"));

  CrsfReport loop = crsf_coefficients(load("single_loop.lg"));
  REQUIRE(loop.coefficients.size() == 1);
  CHECK(loop.coefficients[0] == 1);
  CHECK(loop.reconstruction == P("2-x-x^-1"));

  CrsfReport girder = crsf_coefficients(load("girder.lg"));
  CHECK(normalize(girder.reconstruction) == P("x-1").pow(2) * P("4x^2-17x+4"));

  // Loops of voltage 2 wind twice, so only the weighted form matches.
  CrsfReport circ = crsf_coefficients(load("circulant12.lg"));
  CHECK_FALSE(circ.unit_windings);
  CHECK(normalize(circ.reconstruction) == laplacian_delta0(load("circulant12.lg")));
  CHECK(normalize(circ.unit_reconstruction) != laplacian_delta0(load("circulant12.lg")));

  CHECK_THROWS_AS(crsf_coefficients(load("grid.lg")), Error);
}

TEST_CASE("annular connectivity") {
  CHECK(annular_connectivity(load("ladder.lg")) == 2);
  CHECK(annular_connectivity(load("girder.lg")) == 2);
  CHECK(annular_connectivity(load("single_loop.lg")) == 1);
  CHECK(annular_connectivity(quotient("vertex v\nedge a v v 0\n")) == 0);
  CHECK(annular_cut_set(load("ladder.lg")) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("vertex split for connectivity one") {
  // Loop plus a triangle hanging off the cut vertex.
  VoltageGraph tri = quotient(
      "vertex v\nvertex u\nvertex w\nedge a v v 1\nedge b v u 0\nedge c u w 0\nedge d w v 0\n");
  FiniteGraph h = kappa_one_split(tri, 0);
  CHECK(h.vertex_count() == 4);
  CHECK(tree_count(h) == 3);
  CHECK(normalize(laplacian_delta0(tri)) == P("x-1").pow(2).scaled(3));

  // A vertex joined to two consecutive lifts of v.
  VoltageGraph bridge = quotient("vertex v\nvertex u\nedge a v v 1\nedge b v u 0\nedge c u v 1\n");
  FiniteGraph hb = kappa_one_split(bridge, 0);
  CHECK(tree_count(hb) == 3);
  CHECK(laplacian_delta0(bridge) == P("x-1").pow(2).scaled(3));

  CHECK_THROWS_AS(kappa_one_split(load("ladder.lg"), 0), Error);
  CHECK_THROWS_AS(kappa_one_split(quotient("vertex v\nedge a v v 2\n"), 0), Error);
}

TEST_CASE("growth schedules") {
  CHECK(doubling_schedule(64) == std::vector<long>{2, 4, 8, 16, 32, 64});
  CHECK(doubling_schedule(12) == std::vector<long>{2, 4, 8, 12});
  CHECK(doubling_schedule(64, 4) == std::vector<long>{4, 8, 16, 32, 64});
  CHECK_THROWS_AS(doubling_schedule(0), Error);
}

TEST_CASE("growth of covers") {
  GrowthReport loop = growth_covers(load("single_loop.lg"), {4, 8, 16});
  CHECK(loop.reference == doctest::Approx(0.0).epsilon(1e-12));
  // tau(C_n) = n.
  for (const auto& row : loop.rows) CHECK(row.count == static_cast<long>(row.index));

  GrowthReport ladder = growth_covers(load("ladder.lg"), {3, 64});
  CHECK(ladder.rows[0].count == 75);
  // Closed form (n/2)((2+sqrt3)^n + (2-sqrt3)^n - 2) for the circular ladder.
  double expected = (std::log(32.0) + 64 * std::log(2 + std::sqrt(3.0))) / 64;
  CHECK(ladder.rows[1].normalized == doctest::Approx(expected).epsilon(1e-12));
  CHECK(ladder.reference == doctest::Approx(std::log(2 + std::sqrt(3.0))).epsilon(1e-12));

  GrowthReport serial = growth_covers_serial(load("ladder.lg"), {3, 64});
  CHECK(serial.rows[1].count == ladder.rows[1].count);
}

TEST_CASE("growth of restrictions") {
  GrowthReport loop = growth_restrictions(load("single_loop.lg"), {4, 9});
  for (const auto& row : loop.rows) {
    CHECK(row.count == 1);
    CHECK(row.normalized == 0.0);
  }
  GrowthReport ladder = growth_restrictions(load("ladder.lg"), {3});
  CHECK(ladder.rows[0].index == 6);
  CHECK(ladder.rows[0].count == 15);
  CHECK(ladder.reference == doctest::Approx(std::log(2 + std::sqrt(3.0)) / 2));
  VoltageGraph apart = quotient("vertex v\nvertex w\nedge a v v 1\nedge b w w 1\nedge c v w 3\n");
  CHECK_THROWS_AS(growth_restrictions(apart, {2}), Error);
}

TEST_CASE("grimmett bound") {
  CHECK(grimmett_bound(load("ladder.lg")) == doctest::Approx(2.1972).epsilon(1e-4));
  CHECK(grimmett_bound(load("grid.lg")) == doctest::Approx(1.3863).epsilon(1e-4));
  VoltageGraph cyc = quotient("vertex v\nvertex w\nedge a v w 0\nedge b w v 1\n");
  CHECK(grimmett_bound(cyc) == doctest::Approx(2 * std::log(2.0)));
}
