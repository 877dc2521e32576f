#ifndef AGFLAG_LINALG_HPP
#define AGFLAG_LINALG_HPP

#include <utility>
#include <vector>

#include "agflag/gf.hpp"

namespace agflag::linalg {

using gf::Field;
using gf::FieldPtr;
using gf::Repr;

/// Univariate polynomial over F_q, constant coefficient first, no trailing
/// zeros. The zero polynomial is the empty list.
class Poly {
 public:
  Poly(FieldPtr field, std::vector<Repr> coeffs);
  static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }
  static Poly constant(FieldPtr field, Repr c) { return Poly(std::move(field), {c}); }
  /// x - alpha
  static Poly linear_root(FieldPtr field, Repr alpha);

  const Field& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  const std::vector<Repr>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  Poly operator+(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly times_x_power(int s) const;

  /// Horner evaluation.
  Repr eval(Repr alpha) const;

  /// Multiplicity of alpha as a root (repeated exact division by x - alpha).
  int root_multiplicity(Repr alpha) const;
  /// Exact quotient by (x - alpha); throws RangeError if alpha is not a root.
  Poly divide_linear_root(Repr alpha) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void require_same(const Poly& other) const;

  FieldPtr field_;
  std::vector<Repr> coeffs_;
};

/// Dense matrix over F_q; desk-scale only.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Repr>>& rows);

  const Field& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Repr at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Repr v) {
    field_->check_repr(v);
    a_[i * cols_ + j] = v;
  }
  std::vector<Repr> row(std::size_t i) const;
  void append_row(const std::vector<Repr>& r);

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  /// Vertical concatenation; column counts must match.
  Matrix stacked(const Matrix& below) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<Repr> a_;  // row-major reprs
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form with deterministic leftmost-pivot,
/// first-nonzero-row tie-breaking.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Rows form a basis of { v : M v^T = 0 } in the canonical free-variable
/// order induced by rref; row count = cols - rank.
Matrix nullspace(const Matrix& m);

/// h(alpha), with the spec-level signature of the module contract.
inline Repr poly_eval(const Poly& h, Repr alpha) { return h.eval(alpha); }

}  // namespace agflag::linalg

#endif
