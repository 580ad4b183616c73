#pragma once

// Dense univariate polynomial rings over a coefficient ring policy. Nesting
// PolyRing<PolyRing<BaseRing>> gives bivariate polynomials as polynomials in
// x with coefficients in R[y]. Used for exact division and UFD gcd.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace lapgraph::detail {

/// Z when p == 0, GF(p) otherwise. Elements are canonical mpz values.
class BaseRing {
 public:
  using Elem = mpz_class;

  explicit BaseRing(unsigned long p = 0) : p_(p) {}

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }

  Elem reduce(const Elem& a) const {
    if (p_ == 0) return a;
    Elem r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p_);
    return r;
  }
  Elem add(const Elem& a, const Elem& b) const { return reduce(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
  Elem neg(const Elem& a) const { return reduce(-a); }

  std::optional<Elem> div_exact(const Elem& a, const Elem& b) const {
    if (b == 0) return std::nullopt;
    if (p_ == 0) {
      if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
      Elem q;
      mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return q;
    }
    Elem inv;
    Elem p(p_);
    mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t());
    return mul(a, inv);
  }

  Elem gcd(const Elem& a, const Elem& b) const {
    if (p_ != 0) return (a == 0 && b == 0) ? Elem(0) : Elem(1);
    Elem g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }

  /// Unit u with a = u * canonical(a); one for zero.
  Elem unit(const Elem& a) const {
    if (a == 0) return 1;
    if (p_ != 0) return a;
    return a < 0 ? Elem(-1) : Elem(1);
  }

  bool equal(const Elem& a, const Elem& b) const { return a == b; }

 private:
  unsigned long p_;
};

template <class R>
class PolyRing {
 public:
  using Coef = typename R::Elem;
  using Elem = std::vector<Coef>;  // ascending powers, no trailing zeros

  explicit PolyRing(R base) : base_(std::move(base)) {}

  const R& base() const { return base_; }

  Elem zero() const { return {}; }
  Elem one() const { return {base_.one()}; }
  bool is_zero(const Elem& a) const { return a.empty(); }
  long degree(const Elem& a) const { return static_cast<long>(a.size()) - 1; }
  const Coef& lead(const Elem& a) const { return a.back(); }

  Elem constant(const Coef& c) const {
    if (base_.is_zero(c)) return {};
    return {c};
  }

  void trim(Elem& a) const {
    while (!a.empty() && base_.is_zero(a.back())) a.pop_back();
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(std::max(a.size(), b.size()), base_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = base_.add(r[i], b[i]);
    trim(r);
    return r;
  }

  Elem neg(const Elem& a) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.neg(a[i]);
    return r;
  }

  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

  Elem mul(const Elem& a, const Elem& b) const {
    if (a.empty() || b.empty()) return {};
    Elem r(a.size() + b.size() - 1, base_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (base_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        r[i + j] = base_.add(r[i + j], base_.mul(a[i], b[j]));
      }
    }
    trim(r);
    return r;
  }

  Elem scale(const Elem& a, const Coef& c) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.mul(a[i], c);
    trim(r);
    return r;
  }

  /// Quotient a / b when b divides a exactly, otherwise nullopt.
  std::optional<Elem> div_exact(const Elem& a, const Elem& b) const {
    if (b.empty()) return std::nullopt;
    if (a.empty()) return Elem{};
    if (a.size() < b.size()) return std::nullopt;
    Elem rem = a;
    Elem q(a.size() - b.size() + 1, base_.zero());
    while (!rem.empty() && rem.size() >= b.size()) {
      std::size_t shift = rem.size() - b.size();
      auto c = base_.div_exact(rem.back(), b.back());
      if (!c) return std::nullopt;
      q[shift] = *c;
      for (std::size_t i = 0; i < b.size(); ++i) {
        rem[shift + i] = base_.sub(rem[shift + i], base_.mul(*c, b[i]));
      }
      trim(rem);
    }
    if (!rem.empty()) return std::nullopt;
    trim(q);
    return q;
  }

  /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
  Elem prem(const Elem& a, const Elem& b) const {
    if (a.size() < b.size()) return a;
    Elem r = a;
    const Coef& lb = b.back();
    long steps = static_cast<long>(a.size() - b.size()) + 1;
    while (!r.empty() && r.size() >= b.size()) {
      std::size_t shift = r.size() - b.size();
      Coef lr = r.back();
      for (auto& c : r) c = base_.mul(c, lb);
      for (std::size_t i = 0; i < b.size(); ++i) {
        r[shift + i] = base_.sub(r[shift + i], base_.mul(lr, b[i]));
      }
      trim(r);
      --steps;
    }
    for (; steps > 0; --steps) r = scale(r, lb);
    return r;
  }

  Coef content(const Elem& a) const {
    Coef g = base_.zero();
    for (const auto& c : a) g = base_.gcd(g, c);
    return g;
  }

  Elem primitive(const Elem& a) const {
    if (a.empty()) return a;
    Coef c = content(a);
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = *base_.div_exact(a[i], c);
    return r;
  }

  Elem unit(const Elem& a) const {
    if (a.empty()) return one();
    return {base_.unit(a.back())};
  }

  Elem canonical(const Elem& a) const {
    if (a.empty()) return a;
    Coef u = base_.unit(a.back());
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = *base_.div_exact(a[i], u);
    return r;
  }

  /// Canonical gcd in a polynomial ring over a gcd domain (primitive PRS).
  Elem gcd(const Elem& a, const Elem& b) const {
    if (a.empty()) return canonical(b);
    if (b.empty()) return canonical(a);
    Coef c = base_.gcd(content(a), content(b));
    Elem f = primitive(a);
    Elem g = primitive(b);
    if (f.size() < g.size()) std::swap(f, g);
    while (!g.empty()) {
      Elem r = prem(f, g);
      f = std::move(g);
      g = r.empty() ? r : primitive(r);
    }
    return canonical(scale(primitive(f), c));
  }

  bool equal(const Elem& a, const Elem& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!base_.equal(a[i], b[i])) return false;
    }
    return true;
  }

 private:
  R base_;
};

}  // namespace lapgraph::detail
