#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lapgraph/field.hpp"
#include "lapgraph/matrix.hpp"

namespace lapgraph {

/// Exponent vector; the second slot is always 0 for one-variable polynomials.
using Exponent = std::array<long, 2>;

/// Laurent polynomial in one (x) or two (x, y) variables with coefficients
/// in Z, Q or GF(p). Coefficients are stored as integers: over GF(p) they are
/// reduced into [0, p); over Q the stored polynomial is an integral
/// representative of its class. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, mpz_class>;

  explicit LaurentPoly(int nvars = 1, CoeffField field = CoeffField::integers());

  static LaurentPoly constant(const mpz_class& c, int nvars = 1,
                              CoeffField field = CoeffField::integers());
  static LaurentPoly monomial(const mpz_class& c, Exponent e, int nvars = 1,
                              CoeffField field = CoeffField::integers());

  int nvars() const { return nvars_; }
  const CoeffField& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of a monomial (zero when absent).
  mpz_class coeff(Exponent e) const;

  /// Adds c * (monomial e) in place.
  void add_term(Exponent e, const mpz_class& c);

  /// Reinterprets the coefficients in another domain (e.g. reduce mod p).
  LaurentPoly over(const CoeffField& field) const;
  /// Embeds a one-variable polynomial as a two-variable one (y-free).
  LaurentPoly with_nvars(int nvars) const;

  Exponent min_exponent() const;
  Exponent max_exponent() const;

  /// Multiplies by x^e[0] y^e[1].
  LaurentPoly shifted(Exponent e) const;
  /// f(x^-1) (and y^-1).
  LaurentPoly inverted() const;
  /// f(x, x^s) as a one-variable polynomial.
  LaurentPoly substitute_y_power(long s) const;
  /// Value at x = 1 (and y = 1).
  mpz_class value_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  LaurentPoly scaled(const mpz_class& c) const;
  LaurentPoly pow(unsigned k) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// Canonical text: terms ordered by (total degree, lex) ascending.
  std::string to_string() const;

 private:
  void check_compatible(const LaurentPoly& b) const;

  int nvars_;
  CoeffField field_;
  Terms terms_;
};

using LaurentMatrix = Matrix<LaurentPoly>;

enum class LaurentOp { kAdd, kSub, kMul };

/// Exact ring arithmetic with domain checking.
LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op);

/// Canonical representative of the unit class of f: minimal exponent 0 in
/// every variable; over Z the lexicographically least term is positive;
/// over Q additionally primitive; over GF(p) that term is 1.
/// Throws on the zero polynomial.
LaurentPoly normalize(const LaurentPoly& f);

/// True when a and b agree up to a unit of the Laurent ring.
bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

/// Difference of maximal and minimal exponent, per variable.
Exponent degree_span(const LaurentPoly& f);

/// Exact quotient a / b in the Laurent ring; throws if b does not divide a.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);
/// Whether b divides a in the Laurent ring.
bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// Normalized gcd in the Laurent ring over the polynomials' coefficient
/// domain. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Largest j with (x - 1)^j dividing f (one variable, f != 0).
int x_minus_one_multiplicity(const LaurentPoly& f);

/// Parses "4-x-x^-1-y-y^-1", "6*x^2*y^-1 + 3", ... into a polynomial over Z.
/// Uses two variables iff 'y' occurs (or nvars_hint == 2).
LaurentPoly parse_laurent(const std::string& text, int nvars_hint = 0);

/// Evaluates every entry at x = 1 (and y = 1).
IntMatrix value_at_one(const LaurentMatrix& m);

}  // namespace lapgraph
