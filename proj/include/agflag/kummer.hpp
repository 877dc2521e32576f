#ifndef AGFLAG_KUMMER_HPP
#define AGFLAG_KUMMER_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "agflag/linalg.hpp"

namespace agflag::kummer {

using gf::Field;
using gf::FieldPtr;
using gf::Repr;
using linalg::Poly;

/// Rational places of the curve y^m = f(x):
///   Infinity      the unique place above the infinite place of F_q(x),
///   Ramified(i)   the unique place above the zero of x - alpha_i (1-based),
///   Split(a, y0)  one of the m places above a completely split line x = a.
struct Place {
  enum class Kind { Infinity, Ramified, Split } kind;
  int ram_index = 0;   // 1..r, Ramified only
  Repr alpha = 0;      // Split only
  Repr y0 = 0;         // Split only

  static Place infinity() { return {Kind::Infinity, 0, 0, 0}; }
  static Place ramified(int i) { return {Kind::Ramified, i, 0, 0}; }
  static Place split(Repr alpha, Repr y0) { return {Kind::Split, 0, alpha, y0}; }

  friend auto operator<=>(const Place&, const Place&) = default;
};

std::string to_string(const Place& p);

/// Rational places of the shadow field F_q(x).
struct RationalPlaceX {
  bool at_infinity = false;
  Repr alpha = 0;

  static RationalPlaceX infinity() { return {true, 0}; }
  static RationalPlaceX finite(Repr alpha) { return {false, alpha}; }

  friend auto operator<=>(const RationalPlaceX&, const RationalPlaceX&) = default;
};

/// Finitely supported integer map on curve places. Zero coefficients are
/// never stored.
class CurveDivisor {
 public:
  CurveDivisor() = default;

  std::int64_t coeff(const Place& p) const {
    const auto it = coeffs_.find(p);
    return it == coeffs_.end() ? 0 : it->second;
  }
  void add(const Place& p, std::int64_t c);
  const std::map<Place, std::int64_t>& support() const { return coeffs_; }
  std::int64_t degree() const;  // all places here are rational, degree 1

  CurveDivisor operator+(const CurveDivisor& other) const;
  CurveDivisor operator-(const CurveDivisor& other) const;
  CurveDivisor scaled(std::int64_t s) const;

  friend bool operator==(const CurveDivisor&, const CurveDivisor&) = default;

 private:
  std::map<Place, std::int64_t> coeffs_;
};

/// Divisor on the projective line, the target of restriction.
class DivisorP1 {
 public:
  void add(const RationalPlaceX& p, std::int64_t c);
  std::int64_t coeff(const RationalPlaceX& p) const {
    const auto it = coeffs_.find(p);
    return it == coeffs_.end() ? 0 : it->second;
  }
  const std::map<RationalPlaceX, std::int64_t>& support() const { return coeffs_; }
  std::int64_t degree() const;

 private:
  std::map<RationalPlaceX, std::int64_t> coeffs_;
};

struct CurveConfig {
  FieldPtr field;
  int m = 0;
  std::vector<Repr> roots;  // the alpha_i, order fixed by the config
};

/// The Kummer curve y^m = f(x) = prod (x - alpha_i) with gcd(m, r) = 1,
/// 2 <= r <= m-1, f separable, and m | q-1 so that split places are rational.
/// Immutable after construction.
class KummerCurve {
 public:
  explicit KummerCurve(CurveConfig config);

  const Field& field() const { return *config_.field; }
  FieldPtr field_ptr() const { return config_.field; }
  int m() const { return config_.m; }
  int r() const { return static_cast<int>(config_.roots.size()); }
  const std::vector<Repr>& roots() const { return config_.roots; }
  Repr root(int i) const {  // 1-based
    if (i < 1 || i > r()) fail(Errc::RangeError, "ramified index out of [1, r]");
    return config_.roots[static_cast<std::size_t>(i) - 1];
  }
  std::int64_t genus() const { return genus_; }
  /// Inverse of r modulo m.
  int r_tilde() const { return r_tilde_; }
  const std::vector<Repr>& split_lines() const { return split_lines_; }
  const std::vector<Repr>& split_fibre(Repr alpha) const;
  std::int64_t rational_place_count() const;
  /// Length of the standard evaluation divisor for a given t.
  std::int64_t n_for(int t) const;

  /// All split places ordered by (alpha repr, y0 repr).
  std::vector<Place> split_places() const;

  bool is_root(Repr alpha) const;
  int root_index(Repr alpha) const;  // 1-based; 0 if not a root

 private:
  CurveConfig config_;
  std::int64_t genus_;
  int r_tilde_;
  std::vector<Repr> split_lines_;                  // sorted by repr
  std::map<Repr, std::vector<Repr>> split_fibres_;  // alpha -> sorted y0 list
};

KummerCurve build_curve(CurveConfig config);

/// D = Q_{t+1} + ... + Q_r + (every split place); n = (r-t) + m * #split lines.
CurveDivisor standard_D(const KummerCurve& curve, int t);

/// j * ((y)) = j * (Q_1 + ... + Q_r - r P).
CurveDivisor y_power_divisor(const KummerCurve& curve, int j);

/// True iff coefficients are constant across the m places of every split
/// fibre touched by A (the Galois orbits).
bool is_galois_invariant(const KummerCurve& curve, const CurveDivisor& a);

/// Restriction of A to F_q(x): coefficient at R is min over P|R of
/// floor(n_P / e(P|R)), with e = m above Infinity/Ramified and e = 1 above
/// split lines. Requires A Galois-invariant.
DivisorP1 restrict(const KummerCurve& curve, const CurveDivisor& a);

/// Exact Riemann-Roch dimension of a Galois-invariant divisor, via the
/// Maharaj decomposition into m projective-line summands.
std::int64_t rr_dim(const KummerCurve& curve, const CurveDivisor& a);

/// One element of a Riemann-Roch basis: y^ypow * num(x) / prod (x-alpha)^e.
struct BasisFunction {
  int ypow = 0;
  Poly num;
  std::map<Repr, std::int64_t> poles;  // alpha -> multiplicity, all > 0

  BasisFunction(int j, Poly n, std::map<Repr, std::int64_t> p)
      : ypow(j), num(std::move(n)), poles(std::move(p)) {}
};

/// Explicit basis of L(A): for every Maharaj summand of degree d >= 0 emit
/// y^j * u_j(x) * x^s, s = 0..d, where u_j carries the required zeros and
/// allowed poles. Size always equals rr_dim(A).
std::vector<BasisFunction> rr_basis(const KummerCurve& curve, const CurveDivisor& a);

/// Valuation of a basis function at a rational place of the curve.
std::int64_t valuation(const KummerCurve& curve, const BasisFunction& b, const Place& place);

/// Value at a Split or Ramified place. Evaluation at a ramified place is
/// cancellation-aware: powers of (x - alpha_i) and y are netted against each
/// other before any substitution, so exact zeros and units come out right.
Repr evaluate_basis(const KummerCurve& curve, const BasisFunction& b, const Place& place);

}  // namespace agflag::kummer

#endif
