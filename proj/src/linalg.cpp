#include "lapgraph/linalg.hpp"

#include <algorithm>

#include "lapgraph/error.hpp"

namespace lapgraph {

namespace {

CoeffField effective(const CoeffField& f) {
  return f.kind() == CoeffField::Kind::kIntegers ? CoeffField::rationals() : f;
}

}  // namespace

FieldMatrix to_field(const IntMatrix& m, const CoeffField& field) {
  FieldMatrix r{effective(field), Matrix<mpq_class>(m.rows(), m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.entries(i, j) = r.field.reduce(mpq_class(m(i, j)));
  return r;
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product: dimension mismatch");
  if (!(a.field == b.field)) throw Error("matrix product: field mismatch");
  FieldMatrix c{a.field, Matrix<mpq_class>(a.rows(), b.cols(), mpq_class(0))};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.entries(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.entries(i, j) += a.entries(i, k) * b.entries(k, j);
    }
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      c.entries(i, j) = c.field.reduce(c.entries(i, j));
  return c;
}

FieldMatrix rref(const FieldMatrix& m, std::vector<std::size_t>* pivots) {
  FieldMatrix r = m;
  const CoeffField& f = r.field;
  auto& a = r.entries;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    a.swap_rows(row, sel);
    mpq_class inv = f.inverse(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = f.reduce(a(row, j) * inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      mpq_class factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a(i, j) = f.reduce(a(i, j) - factor * a(row, j));
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return r;
}

std::size_t rank(const FieldMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

FieldMatrix nullspace(const FieldMatrix& m) {
  std::vector<std::size_t> piv;
  FieldMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  FieldMatrix basis{r.field, Matrix<mpq_class>(m.cols(), free.size(), mpq_class(0))};
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis.entries(free[k], k) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      basis.entries(piv[i], k) = r.field.reduce(-r.entries(i, free[k]));
  }
  return basis;
}

FieldMatrix column_span_basis(const FieldMatrix& m) {
  FieldMatrix t{m.field, m.entries.transpose()};
  std::vector<std::size_t> piv;
  FieldMatrix r = rref(t, &piv);
  FieldMatrix basis{m.field, Matrix<mpq_class>(m.rows(), piv.size())};
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) basis.entries(i, k) = r.entries(k, i);
  return basis;
}

bool same_column_span(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows() || !(a.field == b.field)) return false;
  return column_span_basis(a).entries == column_span_basis(b).entries;
}

FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows() || !(a.field == b.field)) throw Error("hconcat: shape mismatch");
  FieldMatrix r{a.field, Matrix<mpq_class>(a.rows(), a.cols() + b.cols())};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.entries(i, j) = a.entries(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.entries(i, a.cols() + j) = b.entries(i, j);
  }
  return r;
}

namespace {

// Bareiss elimination; `parallel` toggles the OpenMP row loop only.
mpz_class bareiss(IntMatrix a, bool parallel) {
  if (!a.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a(sel, k) == 0) ++sel;
      if (sel == n) return 0;
      a.swap_rows(k, sel);
      sign = -sign;
    }
    const long rows_left = static_cast<long>(n - k - 1);
    const long first = static_cast<long>(k + 1);
    const long last = static_cast<long>(n);
    (void)rows_left;
#pragma omp parallel for schedule(static) if (parallel && rows_left >= 32)
    for (long i = first; i < last; ++i) {
      mpz_class t;
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a(i, j) * a(k, k);
        t -= a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

mpz_class int_det(const IntMatrix& m) { return bareiss(m, true); }
mpz_class int_det_serial(const IntMatrix& m) { return bareiss(m, false); }

LaurentMatrix over(const LaurentMatrix& m, const CoeffField& field) {
  LaurentMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).over(field);
  return r;
}

namespace {

LaurentPoly cofactor_det(const LaurentMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  LaurentPoly det(m(0, 0).nvars(), m(0, 0).field());
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    LaurentPoly term = m(0, j) * cofactor_det(m.select(rows, cols));
    if (j % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

LaurentPoly bareiss_laurent(LaurentMatrix a) {
  const std::size_t n = a.rows();
  const int nvars = a(0, 0).nvars();
  const CoeffField field = a(0, 0).field();
  LaurentPoly prev = LaurentPoly::constant(1, nvars, field);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t sel = k + 1;
      while (sel < n && a(sel, k).is_zero()) ++sel;
      if (sel == n) return LaurentPoly(nvars, field);
      a.swap_rows(k, sel);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = div_exact(t, prev);
      }
      a(i, k) = LaurentPoly(nvars, field);
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

}  // namespace

LaurentPoly det_laurent(const LaurentMatrix& m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  if (m.rows() == 0) throw Error("determinant of an empty matrix");
  // Over Q the exact divisions of the elimination are done over Z.
  if (m(0, 0).field().kind() == CoeffField::Kind::kRationals) {
    return det_laurent(over(m, CoeffField::integers())).over(CoeffField::rationals());
  }
  if (m.rows() <= 4) return cofactor_det(m);
  return bareiss_laurent(m);
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

LaurentPoly elementary_divisor(const LaurentMatrix& m, std::size_t k,
                               const CoeffField& field) {
  if (!m.is_square()) throw Error("elementary divisor of a non-square matrix");
  const std::size_t n = m.rows();
  if (k >= n) throw Error("elementary divisor index out of range");
  LaurentMatrix mf = over(m, field);
  const std::size_t size = n - k;
  const auto subsets = combinations(n, size);
  const std::size_t count = subsets.size() * subsets.size();
  std::vector<LaurentPoly> minors(count, LaurentPoly(mf(0, 0).nvars(), field));
  const long total = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) if (total >= 16)
  for (long idx = 0; idx < total; ++idx) {
    const auto& rows = subsets[static_cast<std::size_t>(idx) / subsets.size()];
    const auto& cols = subsets[static_cast<std::size_t>(idx) % subsets.size()];
    minors[static_cast<std::size_t>(idx)] = det_laurent(mf.select(rows, cols));
  }
  // Fixed-order reduction keeps the result independent of the thread count.
  LaurentPoly g(mf(0, 0).nvars(), field);
  for (const auto& d : minors) g = gcd(g, d);
  return g;
}

FirstDivisor first_nonzero_divisor(const LaurentMatrix& m, const CoeffField& field) {
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    LaurentPoly d = elementary_divisor(m, k, field);
    if (!d.is_zero()) return {k, d};
  }
  const int nvars = n ? m(0, 0).nvars() : 1;
  CoeffField f = field;
  return {n, LaurentPoly::constant(1, nvars, f)};
}

}  // namespace lapgraph
