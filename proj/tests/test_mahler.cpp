#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lapgraph/mahler.hpp"
#include "oracles.hpp"

using namespace lapgraph;

namespace {

LaurentPoly P(const std::string& s) { return parse_laurent(s); }

constexpr double kCatalan = 0.915965594177219015054603514932;

}  // namespace

TEST_CASE("root finder") {
  using cd = std::complex<double>;
  auto roots = polynomial_roots({cd(-6), cd(11), cd(-6), cd(1)});
  std::vector<double> re;
  for (auto r : roots) re.push_back(r.real());
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(re[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(re[2] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(polynomial_roots({cd(1), cd(0)}), Error);
  // Roots of unity of high degree.
  std::vector<cd> c(41, cd(0));
  c[0] = -1;
  c[40] = 1;
  for (auto r : polynomial_roots(c)) CHECK(std::abs(r) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("one-variable measures") {
  CHECK(std::abs(mahler_1var(P("x^2-4x+1")).value - std::log(2 + std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(mahler_1var(P("x^2+3x+1")).value - std::log((3 + std::sqrt(5.0)) / 2)) < 1e-12);
  CHECK(std::abs(mahler_1var(P("x^2-2x+1")).value) < 1e-12);
  CHECK(mahler_1var(P("x^2-2x+1")).method == "jensen-roots");
  CHECK_THROWS_AS(mahler_1var(LaurentPoly(1)), Error);
  // Lehmer's polynomial.
  CHECK(mahler_1var(P("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1")).value ==
        doctest::Approx(std::log(1.17628081825991750654)).epsilon(1e-12));
  // Repeated factors are peeled exactly.
  LaurentPoly f = P("x^2-4x+1").pow(3) * P("x+1").pow(2) * P("x^2+x+1").pow(2);
  CHECK(mahler_1var(f).value == doctest::Approx(3 * std::log(2 + std::sqrt(3.0))).epsilon(1e-12));
}

TEST_CASE("one-variable measure identities") {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    LaurentPoly f = oracle::random_laurent(rng, 1, CoeffField::integers(), 4, 3, 5);
    LaurentPoly g = oracle::random_laurent(rng, 1, CoeffField::integers(), 3, 3, 5);
    if (f.is_zero() || g.is_zero()) continue;
    double mf = mahler_1var(f).value;
    double mg = mahler_1var(g).value;
    CHECK(std::abs(mahler_1var(f * g).value - mf - mg) < 1e-9);
    CHECK(std::abs(mahler_1var(f.inverted()).value - mf) < 1e-12);
    CHECK(std::abs(mahler_1var(f.shifted({5, 0})).value - mf) < 1e-12);
    CHECK(std::abs(mahler_1var(f.scaled(-7)).value - std::log(7.0) - mf) < 1e-12);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("two-variable measures") {
  MahlerResult grid = mahler_2var(parse_laurent("4-x-x^-1-y-y^-1"), 1024);
  CHECK(grid.method == "fiberwise");
  CHECK(grid.samples == 1024);
  CHECK(std::abs(grid.value - 4 * kCatalan / std::numbers::pi) < 2e-3);
  CHECK(grid.error_estimate >= 0);
  CHECK(grid.error_estimate < 1e-4);

  // y-only polynomial times x: every fiber is the same.
  LaurentPoly g = parse_laurent("y^2-4y+1", 2);
  MahlerResult mg = mahler_2var(g * LaurentPoly::monomial(1, {1, 0}, 2), 64);
  CHECK(mg.value == doctest::Approx(mahler_1var(parse_laurent("x^2-4x+1")).value).epsilon(1e-12));

  // Product of cyclotomic factors: midpoint error only.
  MahlerResult zero = mahler_2var(parse_laurent("2-x-x^-1", 2) * parse_laurent("2-y-y^-1"), 1024);
  CHECK(std::abs(zero.value) <= 2 * zero.error_estimate);

  CHECK_THROWS_AS(mahler_2var(parse_laurent("4-x-x^-1-y-y^-1"), 7), Error);
  CHECK_THROWS_AS(mahler_2var(P("x"), 8), Error);
}

TEST_CASE("two-variable multiplicativity") {
  LaurentPoly f = parse_laurent("4-x-x^-1-y-y^-1");
  LaurentPoly g = parse_laurent("3+x+y");
  MahlerResult mf = mahler_2var(f, 1024);
  MahlerResult mg = mahler_2var(g, 1024);
  MahlerResult mfg = mahler_2var(f * g, 1024);
  double tol = 2 * (mf.error_estimate + mg.error_estimate + mfg.error_estimate);
  CHECK(std::abs(mfg.value - mf.value - mg.value) < tol);
  // m(3 + x + y) = log 3 since |x + y| <= 2 < 3.
  CHECK(mg.value == doctest::Approx(std::log(3.0)).epsilon(1e-10));
}

TEST_CASE("serial and parallel fibers agree bit for bit") {
  LaurentPoly f = parse_laurent("6-x-x^-1-y-y^-1-x*y^-1-x^-1*y");
  MahlerResult a = mahler_2var(f, 512);
  MahlerResult b = mahler_2var_serial(f, 512);
  CHECK(a.value == b.value);
  CHECK(a.error_estimate == b.error_estimate);
}

TEST_CASE("substitution limit") {
  LaurentPoly f = parse_laurent("4-x-x^-1-y-y^-1");
  auto [one, two] = mahler_limit_check(f, 1);
  CHECK(one.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  auto [far, ref] = mahler_limit_check(f, 25);
  CHECK(std::abs(far.value - ref.value) < 0.02);
  auto cyc = mahler_limit_check(parse_laurent("2-x-x^-1", 2) * parse_laurent("2-y-y^-1"), 7);
  CHECK(std::abs(cyc.first.value) < 1e-12);
  CHECK(std::abs(cyc.second.value) <= 2 * cyc.second.error_estimate);
  CHECK_THROWS_AS(mahler_limit_check(P("x+2"), 2), Error);
  CHECK_THROWS_AS(mahler_limit_check(f, 0), Error);
}
