#include "lapgraph/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "lapgraph/detail/polyring.hpp"

namespace lapgraph {

namespace {

using detail::BaseRing;
using detail::PolyRing;
using Ring1 = PolyRing<BaseRing>;
using Ring2 = PolyRing<Ring1>;

BaseRing base_ring(const CoeffField& f) {
  return BaseRing(f.is_prime() ? f.characteristic() : 0);
}

// Dense forms of a polynomial after shifting its minimal exponent to 0.
Ring1::Elem to_dense1(const LaurentPoly& f, Exponent lo) {
  Ring1::Elem d;
  for (const auto& [e, c] : f.terms()) {
    std::size_t i = static_cast<std::size_t>(e[0] - lo[0]);
    if (d.size() <= i) d.resize(i + 1, mpz_class(0));
    d[i] = c;
  }
  return d;
}

Ring2::Elem to_dense2(const LaurentPoly& f, Exponent lo) {
  Ring2::Elem d;
  for (const auto& [e, c] : f.terms()) {
    std::size_t i = static_cast<std::size_t>(e[0] - lo[0]);
    std::size_t j = static_cast<std::size_t>(e[1] - lo[1]);
    if (d.size() <= i) d.resize(i + 1);
    if (d[i].size() <= j) d[i].resize(j + 1, mpz_class(0));
    d[i][j] = c;
  }
  return d;
}

LaurentPoly from_dense1(const Ring1::Elem& d, Exponent shift, int nvars,
                        const CoeffField& field) {
  LaurentPoly f(nvars, field);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) f.add_term({static_cast<long>(i) + shift[0], shift[1]}, d[i]);
  }
  return f;
}

LaurentPoly from_dense2(const Ring2::Elem& d, Exponent shift,
                        const CoeffField& field) {
  LaurentPoly f(2, field);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[i].size(); ++j)
      if (d[i][j] != 0)
        f.add_term({static_cast<long>(i) + shift[0], static_cast<long>(j) + shift[1]},
                   d[i][j]);
  return f;
}

mpz_class content_of(const LaurentPoly& f) {
  mpz_class g = 0;
  for (const auto& [e, c] : f.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  mpz_class g = content_of(f);
  LaurentPoly r(f.nvars(), f.field());
  for (const auto& [e, c] : f.terms()) r.add_term(e, mpz_class(c / g));
  return r;
}

// Total degree first, then lexicographic.
bool display_less(const Exponent& a, const Exponent& b) {
  long ta = a[0] + a[1];
  long tb = b[0] + b[1];
  if (ta != tb) return ta < tb;
  return a < b;
}

}  // namespace

LaurentPoly::LaurentPoly(int nvars, CoeffField field)
    : nvars_(nvars), field_(field) {
  if (nvars != 1 && nvars != 2) throw Error("Laurent polynomials have 1 or 2 variables");
}

LaurentPoly LaurentPoly::constant(const mpz_class& c, int nvars, CoeffField field) {
  return monomial(c, {0, 0}, nvars, field);
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, Exponent e, int nvars,
                                  CoeffField field) {
  LaurentPoly f(nvars, field);
  f.add_term(e, c);
  return f;
}

mpz_class LaurentPoly::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(Exponent e, const mpz_class& c) {
  if (nvars_ == 1 && e[1] != 0) throw Error("y exponent in a one-variable polynomial");
  auto it = terms_.find(e);
  mpz_class v = field_.reduce(it == terms_.end() ? c : mpz_class(it->second + c));
  if (v == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(e, std::move(v));
  } else {
    it->second = std::move(v);
  }
}

LaurentPoly LaurentPoly::over(const CoeffField& field) const {
  LaurentPoly r(nvars_, field);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::with_nvars(int nvars) const {
  if (nvars < nvars_) {
    for (const auto& [e, c] : terms_)
      if (e[1] != 0) throw Error("polynomial depends on y");
  }
  LaurentPoly r(nvars, field_);
  r.terms_ = terms_;
  return r;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error("zero polynomial has no exponents");
  Exponent lo{std::numeric_limits<long>::max(), std::numeric_limits<long>::max()};
  for (const auto& [e, c] : terms_) {
    lo[0] = std::min(lo[0], e[0]);
    lo[1] = std::min(lo[1], e[1]);
  }
  return lo;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error("zero polynomial has no exponents");
  Exponent hi{std::numeric_limits<long>::min(), std::numeric_limits<long>::min()};
  for (const auto& [e, c] : terms_) {
    hi[0] = std::max(hi[0], e[0]);
    hi[1] = std::max(hi[1], e[1]);
  }
  return hi;
}

LaurentPoly LaurentPoly::shifted(Exponent s) const {
  if (nvars_ == 1) s[1] = 0;
  LaurentPoly r(nvars_, field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e[0] + s[0], e[1] + s[1]}, c);
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r(nvars_, field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{-e[0], -e[1]}, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_y_power(long s) const {
  LaurentPoly r(1, field_);
  for (const auto& [e, c] : terms_) r.add_term({e[0] + s * e[1], 0}, c);
  return r;
}

mpz_class LaurentPoly::value_at_one() const {
  mpz_class v = 0;
  for (const auto& [e, c] : terms_) v += c;
  return field_.reduce(v);
}

void LaurentPoly::check_compatible(const LaurentPoly& b) const {
  if (nvars_ != b.nvars_) throw Error("Laurent arithmetic: variable count mismatch");
  if (!(field_ == b.field_)) throw Error("Laurent arithmetic: coefficient domain mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  check_compatible(b);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
  check_compatible(b);
  for (const auto& [e, c] : b.terms_) add_term(e, mpz_class(-c));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) {
  check_compatible(b);
  LaurentPoly r(nvars_, field_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
  *this = std::move(r);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_, field_);
  for (const auto& [e, c] : terms_) r.add_term(e, mpz_class(-c));
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& k) const {
  LaurentPoly r(nvars_, field_);
  for (const auto& [e, c] : terms_) r.add_term(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = constant(1, nvars_, field_);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, mpz_class>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return display_less(a.first, b.first); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (e[0] == 1) factors.push_back("x");
    else if (e[0] != 0) factors.push_back("x^" + std::to_string(e[0]));
    if (e[1] == 1) factors.push_back("y");
    else if (e[1] != 0) factors.push_back("y^" + std::to_string(e[1]));
    if (factors.empty()) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op) {
  switch (op) {
    case LaurentOp::kAdd:
      return a + b;
    case LaurentOp::kSub:
      return a - b;
    case LaurentOp::kMul:
      return a * b;
  }
  throw Error("unknown Laurent operation");
}

LaurentPoly normalize(const LaurentPoly& f) {
  if (f.is_zero()) throw Error("normalize: zero polynomial");
  Exponent lo = f.min_exponent();
  LaurentPoly r = f.shifted({-lo[0], -lo[1]});
  if (f.field().kind() == CoeffField::Kind::kRationals) r = primitive_part(r);
  const mpz_class& least = r.terms().begin()->second;
  if (f.field().is_prime()) {
    mpz_class inv;
    mpz_class p(f.field().characteristic());
    mpz_invert(inv.get_mpz_t(), least.get_mpz_t(), p.get_mpz_t());
    return r.scaled(inv);
  }
  if (least < 0) return -r;
  return r;
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize(a) == normalize(b);
}

Exponent degree_span(const LaurentPoly& f) {
  if (f.is_zero()) throw Error("degree of the zero polynomial");
  Exponent lo = f.min_exponent();
  Exponent hi = f.max_exponent();
  return {hi[0] - lo[0], hi[1] - lo[1]};
}

namespace {

// Quotient of Laurent polynomials, nullopt when not exact.
std::optional<LaurentPoly> try_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars() || !(a.field() == b.field()))
    throw Error("division: domain mismatch");
  if (b.is_zero()) throw Error("division by the zero polynomial");
  if (a.is_zero()) return a;
  const CoeffField& field = a.field();
  // Over Q only the unit class matters, so divide primitive parts over Z.
  LaurentPoly na = field.kind() == CoeffField::Kind::kRationals ? primitive_part(a) : a;
  LaurentPoly nb = field.kind() == CoeffField::Kind::kRationals ? primitive_part(b) : b;
  Exponent la = na.min_exponent();
  Exponent lb = nb.min_exponent();
  Exponent shift{la[0] - lb[0], la[1] - lb[1]};
  BaseRing base = base_ring(field);
  if (a.nvars() == 1) {
    Ring1 ring(base);
    auto q = ring.div_exact(to_dense1(na, la), to_dense1(nb, lb));
    if (!q) return std::nullopt;
    return from_dense1(*q, shift, 1, field);
  }
  Ring2 ring{Ring1(base)};
  auto q = ring.div_exact(to_dense2(na, la), to_dense2(nb, lb));
  if (!q) return std::nullopt;
  return from_dense2(*q, shift, field);
}

}  // namespace

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_div(a, b);
  if (!q) throw Error("division is not exact");
  return *q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return try_div(a, b).has_value();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars() || !(a.field() == b.field()))
    throw Error("gcd: domain mismatch");
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  const CoeffField& field = a.field();
  Exponent la = a.min_exponent();
  Exponent lb = b.min_exponent();
  BaseRing base = base_ring(field);
  LaurentPoly g(a.nvars(), field);
  if (a.nvars() == 1) {
    Ring1 ring(base);
    g = from_dense1(ring.gcd(to_dense1(a, la), to_dense1(b, lb)), {0, 0}, 1, field);
  } else {
    Ring2 ring{Ring1(base)};
    g = from_dense2(ring.gcd(to_dense2(a, la), to_dense2(b, lb)), {0, 0}, field);
  }
  return normalize(g);
}

int x_minus_one_multiplicity(const LaurentPoly& f) {
  if (f.is_zero()) throw Error("multiplicity in the zero polynomial");
  if (f.nvars() != 1) throw Error("x - 1 multiplicity needs one variable");
  LaurentPoly factor(1, f.field());
  factor.add_term({1, 0}, 1);
  factor.add_term({0, 0}, -1);
  int j = 0;
  LaurentPoly g = f;
  while (auto q = try_div(g, factor)) {
    g = *q;
    ++j;
  }
  return j;
}

IntMatrix value_at_one(const LaurentMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).value_at_one();
  return r;
}

// ---------------------------------------------------------------------------
// Text syntax.

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  struct Term {
    mpz_class coeff = 1;
    Exponent exp{0, 0};
  };

  std::vector<Term> parse() {
    std::vector<Term> out;
    skip_ws();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = term();
      t.coeff *= sign;
      out.push_back(t);
      first = false;
      skip_ws();
    }
    if (out.empty()) fail("empty polynomial");
    return out;
  }

  bool saw_y() const { return saw_y_; }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() { return s_[pos_++]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, static_cast<int>(pos_) + 1, what);
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  void factor(Term& t) {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coeff *= integer();
      return;
    }
    if (c != 'x' && c != 'y') fail("expected a number, x or y");
    take();
    int var = c == 'x' ? 0 : 1;
    if (var == 1) saw_y_ = true;
    long e = 1;
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      long sign = 1;
      if (peek() == '-' || peek() == '+') sign = take() == '-' ? -1 : 1;
      e = sign * integer().get_si();
    }
    t.exp[var] += e;
  }

  Term term() {
    Term t;
    factor(t);
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        take();
        factor(t);
      } else if (c == 'x' || c == 'y') {
        factor(t);  // implicit product, e.g. "2x"
      } else {
        break;
      }
    }
    return t;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  bool saw_y_ = false;
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text, int nvars_hint) {
  PolyParser parser(text);
  auto terms = parser.parse();
  int nvars = (parser.saw_y() || nvars_hint == 2) ? 2 : 1;
  LaurentPoly f(nvars);
  for (const auto& t : terms) f.add_term(t.exp, t.coeff);
  return f;
}

}  // namespace lapgraph
