#include "lapgraph/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lapgraph/error.hpp"

namespace lapgraph {

namespace {

using cd = std::complex<double>;
using cld = std::complex<long double>;

constexpr double kUnitCircleBand = 1e-10;
constexpr double kResidualGate = 1e-9;

template <class C>
std::pair<C, C> horner_with_derivative(const std::vector<C>& c, C z) {
  C p = c.back();
  C dp = 0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
  return {p, dp};
}

double residual_scale(const std::vector<cd>& c, cd z) {
  double r = std::abs(z);
  double s = 0;
  double pw = 1;
  for (const auto& ci : c) {
    s += std::abs(ci) * pw;
    pw *= r;
  }
  return s;
}

double log_plus(double r) {
  if (r <= 1.0 + kUnitCircleBand) return 0.0;
  return std::log(r);
}

std::vector<cd> trimmed(const std::vector<cd>& coeffs) {
  double scale = 0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0) return {};
  const double tiny = 1e-14 * scale;
  std::size_t lo = 0;
  std::size_t hi = coeffs.size();
  while (lo < hi && std::abs(coeffs[lo]) <= tiny) ++lo;
  while (hi > lo && std::abs(coeffs[hi - 1]) <= tiny) --hi;
  return {coeffs.begin() + static_cast<long>(lo), coeffs.begin() + static_cast<long>(hi)};
}

// Coefficients of f (one variable) from its minimal exponent upwards.
std::vector<mpz_class> dense(const LaurentPoly& f) {
  const long lo = f.min_exponent()[0];
  const long hi = f.max_exponent()[0];
  std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [e, v] : f.terms()) c[static_cast<std::size_t>(e[0] - lo)] = v;
  return c;
}

LaurentPoly derivative(const LaurentPoly& f) {
  std::vector<mpz_class> c = dense(f);
  LaurentPoly d(1, f.field());
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) d.add_term({static_cast<long>(i) - 1, 0}, c[i] * static_cast<long>(i));
  return d;
}

double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 0) return 0.0;
  if (hi - lo == 1) return v[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// Fiber polynomial in y at x = exp(2 pi i theta).
std::vector<cd> fiber(const LaurentPoly& f, double theta) {
  const long ylo = f.min_exponent()[1];
  const long yhi = f.max_exponent()[1];
  std::vector<cd> c(static_cast<std::size_t>(yhi - ylo + 1), cd(0, 0));
  for (const auto& [e, v] : f.terms()) {
    double angle = 2.0 * std::numbers::pi * theta * static_cast<double>(e[0]);
    c[static_cast<std::size_t>(e[1] - ylo)] += v.get_d() * cd(std::cos(angle), std::sin(angle));
  }
  return c;
}

double fiber_value(const LaurentPoly& f, double theta, double step) {
  std::vector<cd> c = trimmed(fiber(f, theta));
  if (c.empty()) {
    c = trimmed(fiber(f, theta + 0.5 * step));
    if (c.empty()) throw Error("fiber polynomial vanishes identically near x = exp(2 pi i " +
                               std::to_string(theta) + ")");
  }
  return mahler_of_coefficients(c);
}

double midpoint_average(const LaurentPoly& f, long n, bool parallel) {
  std::vector<double> values(static_cast<std::size_t>(n), 0.0);
  const double step = 1.0 / static_cast<double>(n);
#pragma omp parallel for schedule(static) if (parallel)
  for (long j = 0; j < n; ++j)
    values[static_cast<std::size_t>(j)] = fiber_value(f, (static_cast<double>(j) + 0.5) * step, step);
  return pairwise_sum(values, 0, values.size()) / static_cast<double>(n);
}

MahlerResult fiberwise(const LaurentPoly& f, long fibers, bool parallel) {
  if (f.is_zero()) throw Error("Mahler measure of the zero polynomial");
  if (f.nvars() != 2) throw Error("fiberwise Mahler measure needs two variables");
  if (fibers < 2 || fibers % 2 != 0) throw Error("fiber count must be even and at least 2");
  MahlerResult r;
  r.method = "fiberwise";
  r.samples = fibers;
  r.value = midpoint_average(f, fibers, parallel);
  const double coarse = midpoint_average(f, fibers / 2, parallel);
  r.error_estimate = std::max(std::abs(r.value - coarse), 1e-13);
  return r;
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs) {
  if (coeffs.empty() || coeffs.back() == cd(0, 0)) throw Error("leading coefficient is zero");
  const std::size_t n = coeffs.size() - 1;
  std::vector<cd> z(n);
  if (n == 0) return z;
  if (n == 1) {
    z[0] = -coeffs[0] / coeffs[1];
    return z;
  }
  // Start on a circle whose radius is the geometric mean of the root moduli.
  double radius = std::abs(coeffs[0]) > 0
                      ? std::pow(std::abs(coeffs[0] / coeffs[n]), 1.0 / static_cast<double>(n))
                      : 1.0;
  if (!(radius > 0) || !std::isfinite(radius)) radius = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = radius * cd(std::cos(angle), std::sin(angle));
  }
  for (int iter = 0; iter < 2000; ++iter) {
    double largest = 0;
    for (std::size_t k = 0; k < n; ++k) {
      auto [p, dp] = horner_with_derivative(coeffs, z[k]);
      if (p == cd(0, 0)) continue;
      cd ratio = p / dp;
      cd sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      cd w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[k] -= w;
      largest = std::max(largest, std::abs(w) / std::max(1.0, std::abs(z[k])));
    }
    if (largest < 1e-15) break;
  }
  std::vector<cld> cl(coeffs.begin(), coeffs.end());
  for (auto& root : z) {
    cld x(root.real(), root.imag());
    for (int step = 0; step < 3; ++step) {
      auto [p, dp] = horner_with_derivative(cl, x);
      if (dp == cld(0, 0)) break;
      cld nx = x - p / dp;
      if (std::abs(horner_with_derivative(cl, nx).first) >= std::abs(p)) break;
      x = nx;
    }
    root = cd(static_cast<double>(x.real()), static_cast<double>(x.imag()));
    double res = std::abs(horner_with_derivative(coeffs, root).first);
    if (res > kResidualGate * residual_scale(coeffs, root))
      throw Error("root refinement failed the residual test");
  }
  cd sum = 0;
  double mag = 1;
  for (const auto& root : z) {
    sum += root;
    mag += std::abs(root);
  }
  if (std::abs(sum + coeffs[n - 1] / coeffs[n]) > 1e-6 * mag)
    throw Error("root sum disagrees with the coefficients");
  return z;
}

double mahler_of_coefficients(const std::vector<std::complex<double>>& coeffs) {
  std::vector<cd> c = trimmed(coeffs);
  if (c.empty()) throw Error("Mahler measure of the zero polynomial");
  double value = std::log(std::abs(c.back()));
  for (const auto& root : polynomial_roots(c)) value += log_plus(std::abs(root));
  return value;
}

MahlerResult mahler_1var(const LaurentPoly& f) {
  if (f.is_zero()) throw Error("Mahler measure of the zero polynomial");
  if (f.field().is_prime()) throw Error("Mahler measure needs integer coefficients");
  LaurentPoly g = f.over(CoeffField::integers());
  if (g.nvars() == 2) {
    if (g.min_exponent()[1] != g.max_exponent()[1])
      throw Error("one-variable Mahler measure of a polynomial in y");
    g = g.substitute_y_power(0);
  }
  MahlerResult r;
  r.method = "jensen-roots";
  std::vector<mpz_class> c = dense(g);
  mpz_class lead = abs(c.back());
  r.value = std::log(lead.get_d());
  // Peel square-free layers so every root handed to the solver is simple.
  LaurentPoly cur = normalize(g);
  while (degree_span(cur)[0] > 0) {
    LaurentPoly h = gcd(cur, derivative(cur));
    LaurentPoly layer = normalize(div_exact(cur, h));
    std::vector<mpz_class> lc = dense(layer);
    std::vector<cd> lcd;
    for (const auto& v : lc) lcd.push_back(cd(v.get_d(), 0));
    for (const auto& root : polynomial_roots(lcd)) r.value += log_plus(std::abs(root));
    r.samples += static_cast<long>(lc.size() - 1);
    cur = normalize(div_exact(cur, layer));
  }
  return r;
}

MahlerResult mahler_2var(const LaurentPoly& f, long fibers) { return fiberwise(f, fibers, true); }

MahlerResult mahler_2var_serial(const LaurentPoly& f, long fibers) {
  return fiberwise(f, fibers, false);
}

MahlerResult mahler(const LaurentPoly& f, long fibers) {
  return f.nvars() == 1 ? mahler_1var(f) : mahler_2var(f, fibers);
}

std::pair<MahlerResult, MahlerResult> mahler_limit_check(const LaurentPoly& f, long s,
                                                         long fibers) {
  if (f.nvars() != 2) throw Error("limit check needs a two-variable polynomial");
  if (s < 1) throw Error("substitution exponent must be positive");
  return {mahler_1var(f.substitute_y_power(s)), mahler_2var(f, fibers)};
}

}  // namespace lapgraph
