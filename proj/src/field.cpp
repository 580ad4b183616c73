#include "lapgraph/field.hpp"

#include <charconv>

namespace lapgraph {

bool is_prime_number(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

CoeffField CoeffField::prime(unsigned long p) {
  if (!is_prime_number(p)) {
    throw Error("GF(p) requires a prime, got " + std::to_string(p));
  }
  return CoeffField(Kind::kPrime, p);
}

CoeffField CoeffField::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "z" || text == "Z") return integers();
  if (text.rfind("gf:", 0) == 0) {
    unsigned long p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last) {
      throw Error("bad field '" + text + "'");
    }
    return prime(p);
  }
  throw Error("bad field '" + text + "' (expected q, z or gf:P)");
}

std::string CoeffField::to_string() const {
  switch (kind_) {
    case Kind::kRationals:
      return "q";
    case Kind::kIntegers:
      return "z";
    case Kind::kPrime:
      return "gf:" + std::to_string(p_);
  }
  return "?";
}

mpz_class CoeffField::reduce(const mpz_class& a) const {
  if (kind_ != Kind::kPrime) return a;
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p_);
  return r;
}

mpq_class CoeffField::reduce(const mpq_class& a) const {
  if (kind_ != Kind::kPrime) return a;
  mpz_class num = reduce(mpz_class(a.get_num()));
  mpz_class den = reduce(mpz_class(a.get_den()));
  if (den == 0) throw Error("denominator divisible by the characteristic");
  mpz_class inv;
  mpz_class p(p_);
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  return mpq_class(reduce(mpz_class(num * inv)));
}

mpq_class CoeffField::inverse(const mpq_class& a) const {
  if (a == 0) throw Error("division by zero");
  if (kind_ != Kind::kPrime) return 1 / a;
  mpz_class inv;
  mpz_class p(p_);
  mpz_class v = reduce(mpz_class(a.get_num()));
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return mpq_class(inv);
}

}  // namespace lapgraph
