#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lapgraph/laurent.hpp"

namespace lapgraph {

struct MahlerResult {
  double value = 0.0;
  std::string method;
  double error_estimate = 0.0;
  long samples = 0;
};

/// All roots of c[0] + c[1] z + ... + c[n] z^n (c[n] != 0) by Aberth
/// iteration with a long double Newton polish. Throws if a root fails the
/// residual gate.
std::vector<std::complex<double>> polynomial_roots(
    const std::vector<std::complex<double>>& coeffs);

/// log|c_n| + sum of log max(1, |root|), roots within 1e-10 of the unit
/// circle counting as on it. Leading and trailing zeros are stripped.
double mahler_of_coefficients(const std::vector<std::complex<double>>& coeffs);

/// One-variable measure by Jensen's formula. The polynomial is split into
/// square-free layers exactly before root finding.
MahlerResult mahler_1var(const LaurentPoly& f);

/// Two-variable measure: midpoint rule in x over N fibers, exact Jensen in y
/// on each fiber. The error estimate compares N with N/2 fibers.
MahlerResult mahler_2var(const LaurentPoly& f, long fibers = 1024);
/// Single-threaded reference; bit-identical to mahler_2var.
MahlerResult mahler_2var_serial(const LaurentPoly& f, long fibers = 1024);

/// Dispatches on the variable count.
MahlerResult mahler(const LaurentPoly& f, long fibers = 1024);

/// (m(f(x, x^s)), m(f(x, y))).
std::pair<MahlerResult, MahlerResult> mahler_limit_check(const LaurentPoly& f, long s,
                                                         long fibers = 1024);

}  // namespace lapgraph
