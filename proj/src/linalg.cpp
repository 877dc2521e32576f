#include "agflag/linalg.hpp"

#include <algorithm>

namespace agflag::linalg {

Poly::Poly(FieldPtr field, std::vector<Repr> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Repr c : coeffs_) field_->check_repr(c);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::linear_root(FieldPtr field, Repr alpha) {
  const Repr neg = field->neg(alpha);
  return Poly(std::move(field), {neg, 1});
}

void Poly::require_same(const Poly& other) const {
  if (!field_->same_spec(*other.field_)) fail(Errc::SpecMismatch, "polynomials over different fields");
}

Poly Poly::operator+(const Poly& other) const {
  require_same(other);
  std::vector<Repr> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Repr a = i < coeffs_.size() ? coeffs_[i] : 0;
    const Repr b = i < other.coeffs_.size() ? other.coeffs_[i] : 0;
    out[i] = field_->add(a, b);
  }
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& other) const {
  require_same(other);
  if (is_zero() || other.is_zero()) return zero(field_);
  std::vector<Repr> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], other.coeffs_[j]));
  return Poly(field_, std::move(out));
}

Poly Poly::times_x_power(int s) const {
  if (is_zero() || s == 0) return *this;
  std::vector<Repr> out(static_cast<std::size_t>(s), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Poly(field_, std::move(out));
}

Repr Poly::eval(Repr alpha) const {
  field_->check_repr(alpha);
  Repr acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, alpha), coeffs_[i]);
  return acc;
}

int Poly::root_multiplicity(Repr alpha) const {
  if (is_zero()) fail(Errc::RangeError, "root multiplicity of the zero polynomial");
  int mult = 0;
  Poly cur = *this;
  while (cur.eval(alpha) == 0) {
    cur = cur.divide_linear_root(alpha);
    ++mult;
  }
  return mult;
}

Poly Poly::divide_linear_root(Repr alpha) const {
  if (eval(alpha) != 0) fail(Errc::RangeError, "not a root, exact division impossible");
  // Synthetic division by (x - alpha).
  std::vector<Repr> out(coeffs_.size() - 1, 0);
  Repr carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry = field_->add(coeffs_[i], field_->mul(carry, alpha));
    out[i - 1] = carry;
  }
  return Poly(field_, std::move(out));
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Repr>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(Errc::RangeError, "ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::vector<Repr> Matrix::row(std::size_t i) const {
  return std::vector<Repr>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void Matrix::append_row(const std::vector<Repr>& r) {
  if (r.size() != cols_) fail(Errc::RangeError, "row length mismatch");
  for (Repr v : r) field_->check_repr(v);
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (!field_->same_spec(other.field())) fail(Errc::SpecMismatch, "matrices over different fields");
  if (cols_ != other.rows_) fail(Errc::RangeError, "inner dimensions disagree");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Repr aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.set(i, j, field_->add(out.at(i, j), field_->mul(aik, other.at(k, j))));
    }
  return out;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (cols_ != below.cols_) fail(Errc::RangeError, "column counts disagree");
  Matrix out = *this;
  out.a_.insert(out.a_.end(), below.a_.begin(), below.a_.end());
  out.rows_ += below.rows_;
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Repr v) { return v == 0; });
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  const Field& f = r.field();
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < r.cols(); ++j) {
        const Repr tmp = r.at(sel, j);
        r.set(sel, j, r.at(pivot_row, j));
        r.set(pivot_row, j, tmp);
      }
    const Repr scale = f.inv(r.at(pivot_row, col));
    for (std::size_t j = col; j < r.cols(); ++j) r.set(pivot_row, j, f.mul(scale, r.at(pivot_row, j)));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pivot_row) continue;
      const Repr factor = r.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < r.cols(); ++j)
        r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(pivot_row, j))));
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  return RrefResult{std::move(r), pivot_cols.size(), std::move(pivot_cols)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace(const Matrix& m) {
  const RrefResult res = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : res.pivot_cols) is_pivot[c] = true;

  Matrix basis(m.field_ptr(), 0, m.cols());
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Repr> v(m.cols(), 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < res.rank; ++i)
      v[res.pivot_cols[i]] = f.neg(res.reduced.at(i, free_col));
    basis.append_row(v);
  }
  return basis;
}

}  // namespace agflag::linalg
