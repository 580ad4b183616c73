#pragma once

#include <gmpxx.h>
#include <string>

#include "lapgraph/error.hpp"

namespace lapgraph {

/// Coefficient domain: the rationals, the integers (as a ring), or GF(p).
class CoeffField {
 public:
  enum class Kind { kRationals, kIntegers, kPrime };

  static CoeffField rationals() { return CoeffField(Kind::kRationals, 0); }
  static CoeffField integers() { return CoeffField(Kind::kIntegers, 0); }
  /// Throws if p is not prime.
  static CoeffField prime(unsigned long p);
  /// Accepts "q", "z" or "gf:P".
  static CoeffField parse(const std::string& text);

  Kind kind() const { return kind_; }
  /// Characteristic: p for GF(p), 0 otherwise.
  unsigned long characteristic() const { return p_; }
  bool is_prime() const { return kind_ == Kind::kPrime; }
  std::string to_string() const;

  friend bool operator==(const CoeffField& a, const CoeffField& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

  // Scalar arithmetic on representatives. Over GF(p) results are reduced into
  // [0, p); over Z and Q values pass through unchanged.
  mpq_class reduce(const mpq_class& a) const;
  mpz_class reduce(const mpz_class& a) const;
  mpq_class inverse(const mpq_class& a) const;

 private:
  CoeffField(Kind kind, unsigned long p) : kind_(kind), p_(p) {}

  Kind kind_;
  unsigned long p_;
};

bool is_prime_number(unsigned long n);

}  // namespace lapgraph
