#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "lapgraph/field.hpp"
#include "lapgraph/laurent.hpp"
#include "lapgraph/matrix.hpp"

namespace lapgraph {

/// Matrix over a field. Integer-ring requests are carried out over Q.
struct FieldMatrix {
  CoeffField field = CoeffField::rationals();
  Matrix<mpq_class> entries;

  std::size_t rows() const { return entries.rows(); }
  std::size_t cols() const { return entries.cols(); }
};

FieldMatrix to_field(const IntMatrix& m, const CoeffField& field);
FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b);

/// Reduced row echelon form; pivot columns chosen leftmost-first.
FieldMatrix rref(const FieldMatrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const FieldMatrix& m);

/// Basis of the kernel {v : M v = 0}, one vector per column. Column j of the
/// result sets the j-th free variable to 1 and the others to 0.
FieldMatrix nullspace(const FieldMatrix& m);

/// Basis of the column span: the nonzero rows of rref(M^T), as columns.
/// Two matrices span the same space iff these bases are identical.
FieldMatrix column_span_basis(const FieldMatrix& m);
bool same_column_span(const FieldMatrix& a, const FieldMatrix& b);

/// Horizontal concatenation (same row count, same field).
FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination. Row updates of
/// each elimination step run in parallel on large matrices.
mpz_class int_det(const IntMatrix& m);
/// Single-threaded reference for int_det; always identical results.
mpz_class int_det_serial(const IntMatrix& m);

/// Determinant of a matrix of Laurent polynomials: cofactor expansion up to
/// 4x4, fraction-free elimination with exact division beyond.
LaurentPoly det_laurent(const LaurentMatrix& m);

/// Reinterprets every entry over another coefficient domain.
LaurentMatrix over(const LaurentMatrix& m, const CoeffField& field);

/// k-th Laplacian polynomial: normalized gcd of all (n-k)-minors of M over
/// the field; zero if all minors vanish. Requires 0 <= k < n.
LaurentPoly elementary_divisor(const LaurentMatrix& m, std::size_t k,
                               const CoeffField& field);

/// Index s and value of the first nonzero elementary divisor. When every
/// minor of every order vanishes, s = n and the value is 1.
struct FirstDivisor {
  std::size_t index;
  LaurentPoly value;
};
FirstDivisor first_nonzero_divisor(const LaurentMatrix& m, const CoeffField& field);

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace lapgraph
