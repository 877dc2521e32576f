#ifndef AGFLAG_GF_HPP
#define AGFLAG_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "agflag/error.hpp"

namespace agflag::gf {

using Repr = std::int64_t;

/// Exact arithmetic in F_q, q = p^k. Elements are encoded as integers in
/// [0, q): the base-p digits of repr are the coefficients of the polynomial
/// residue, constant coefficient first (digit i = coefficient of x^i).
///
/// A Field is immutable after construction and safe to share across threads.
class Field {
 public:
  /// Builds F_p[x]/(modulus). The modulus is given constant-first, must be
  /// monic of degree k, and is verified irreducible by trial division
  /// (desk-scale k only). Throws Error on any violation.
  Field(Repr p, int k, std::vector<Repr> modulus);

  /// Prime field F_p with the canonical degree-1 modulus x.
  static Field prime(Repr p);

  Repr p() const { return p_; }
  int k() const { return k_; }
  Repr q() const { return q_; }
  const std::vector<Repr>& modulus() const { return modulus_; }

  bool same_spec(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  Repr add(Repr a, Repr b) const;
  Repr sub(Repr a, Repr b) const;
  Repr neg(Repr a) const;
  Repr mul(Repr a, Repr b) const;
  Repr inv(Repr a) const;  // throws DivisionByZero on 0
  Repr div(Repr a, Repr b) const;
  /// Square-and-multiply; negative exponents allowed for nonzero base.
  Repr pow(Repr a, std::int64_t e) const;

  std::vector<Repr> to_digits(Repr a) const;
  Repr from_digits(const std::vector<Repr>& digits) const;

  void check_repr(Repr a) const {
    if (a < 0 || a >= q_) fail(Errc::RangeError, "element repr out of [0, q)");
  }

 private:
  Repr mul_nocache(Repr a, Repr b) const;

  Repr p_;
  int k_;
  Repr q_;
  std::vector<Repr> modulus_;
  // Dense op tables for small q; empty above the threshold.
  std::vector<Repr> mul_table_;
  std::vector<Repr> inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(Repr p, int k, std::vector<Repr> modulus) {
  return std::make_shared<const Field>(p, k, std::move(modulus));
}
inline FieldPtr make_prime_field(Repr p) { return std::make_shared<const Field>(Field::prime(p)); }

/// Value-semantics element wrapper. Operations across distinct field specs
/// are a hard error, never an implicit coercion. The referenced Field must
/// outlive the element.
class FieldElement {
 public:
  FieldElement() : field_(nullptr), repr_(0) {}
  FieldElement(const Field* field, Repr repr) : field_(field), repr_(repr) {
    field->check_repr(repr);
  }

  Repr repr() const { return repr_; }
  const Field& field() const { return *field_; }
  bool is_zero() const { return repr_ == 0; }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    a.require_same(b);
    return FieldElement(a.field_, a.field_->add(a.repr_, b.repr_));
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    a.require_same(b);
    return FieldElement(a.field_, a.field_->sub(a.repr_, b.repr_));
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    a.require_same(b);
    return FieldElement(a.field_, a.field_->mul(a.repr_, b.repr_));
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    a.require_same(b);
    return FieldElement(a.field_, a.field_->div(a.repr_, b.repr_));
  }
  FieldElement operator-() const { return FieldElement(field_, field_->neg(repr_)); }
  FieldElement inv() const { return FieldElement(field_, field_->inv(repr_)); }
  FieldElement pow(std::int64_t e) const { return FieldElement(field_, field_->pow(repr_, e)); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    a.require_same(b);
    return a.repr_ == b.repr_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  void require_same(const FieldElement& other) const {
    if (field_ == other.field_) return;
    if (field_ == nullptr || other.field_ == nullptr || !field_->same_spec(*other.field_))
      fail(Errc::SpecMismatch, "operands live in different fields");
  }

  const Field* field_;
  Repr repr_;
};

/// True iff nonzero u is an m-th power in F_q, decided by the subgroup test
/// u^((q-1)/d) = 1 with d = gcd(m, q-1).
bool mth_power_class(const Field& field, Repr u, std::int64_t m);

/// All v in F_q* with v^m = u, by exhaustive scan, sorted by repr.
/// Empty iff mth_power_class is false.
std::vector<Repr> mth_roots(const Field& field, Repr u, std::int64_t m);

}  // namespace agflag::gf

#endif
