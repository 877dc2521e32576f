#include "agflag/kummer.hpp"

#include <algorithm>
#include <numeric>

namespace agflag::kummer {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  // b > 0 throughout this module
  std::int64_t q = a / b;
  if ((a % b) != 0 && (a < 0)) --q;
  return q;
}

}  // namespace

std::string to_string(const Place& p) {
  switch (p.kind) {
    case Place::Kind::Infinity:
      return "P_inf";
    case Place::Kind::Ramified:
      return "Q" + std::to_string(p.ram_index);
    case Place::Kind::Split:
      return "S(" + std::to_string(p.alpha) + "," + std::to_string(p.y0) + ")";
  }
  return "?";
}

void CurveDivisor::add(const Place& p, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::int64_t CurveDivisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, c] : coeffs_) d += c;
  return d;
}

CurveDivisor CurveDivisor::operator+(const CurveDivisor& other) const {
  CurveDivisor out = *this;
  for (const auto& [p, c] : other.coeffs_) out.add(p, c);
  return out;
}

CurveDivisor CurveDivisor::operator-(const CurveDivisor& other) const {
  CurveDivisor out = *this;
  for (const auto& [p, c] : other.coeffs_) out.add(p, -c);
  return out;
}

CurveDivisor CurveDivisor::scaled(std::int64_t s) const {
  CurveDivisor out;
  if (s == 0) return out;
  for (const auto& [p, c] : coeffs_) out.add(p, s * c);
  return out;
}

void DivisorP1::add(const RationalPlaceX& p, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::int64_t DivisorP1::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, c] : coeffs_) d += c;
  return d;
}

KummerCurve::KummerCurve(CurveConfig config) : config_(std::move(config)) {
  const Field& f = *config_.field;
  const int m = config_.m;
  const int r = static_cast<int>(config_.roots.size());

  if (m < 3) fail(Errc::DegreeRange, "extension degree m must be at least 3");
  if (r < 2 || r > m - 1) fail(Errc::DegreeRange, "need 2 <= deg f = r <= m-1");
  if (std::gcd(static_cast<std::int64_t>(m), static_cast<std::int64_t>(r)) != 1)
    fail(Errc::GcdViolation, "m and r must be coprime");
  if ((f.q() - 1) % m != 0)
    fail(Errc::KummerConditionFailed, "m must divide q-1 so split places are rational");
  for (Repr a : config_.roots) f.check_repr(a);
  for (std::size_t i = 0; i < config_.roots.size(); ++i)
    for (std::size_t j = i + 1; j < config_.roots.size(); ++j)
      if (config_.roots[i] == config_.roots[j]) fail(Errc::NotSeparable, "f has a repeated root");

  genus_ = static_cast<std::int64_t>(m - 1) * (r - 1) / 2;

  r_tilde_ = 0;
  for (int c = 1; c < m; ++c)
    if ((c * r) % m == 1) {
      r_tilde_ = c;
      break;
    }

  // A line x = alpha with f(alpha) != 0 splits completely exactly when
  // f(alpha) is an m-th power; its fibre is the m-element root set of
  // y^m = f(alpha).
  for (Repr alpha = 0; alpha < f.q(); ++alpha) {
    if (is_root(alpha)) continue;
    Repr value = 1;
    for (Repr root : config_.roots) value = f.mul(value, f.sub(alpha, root));
    if (!gf::mth_power_class(f, value, m)) continue;
    auto fibre = gf::mth_roots(f, value, m);
    if (static_cast<int>(fibre.size()) != m)
      fail(Errc::KummerConditionFailed, "split fibre has unexpected size");
    split_lines_.push_back(alpha);
    split_fibres_.emplace(alpha, std::move(fibre));
  }
}

KummerCurve build_curve(CurveConfig config) { return KummerCurve(std::move(config)); }

const std::vector<Repr>& KummerCurve::split_fibre(Repr alpha) const {
  const auto it = split_fibres_.find(alpha);
  if (it == split_fibres_.end()) fail(Errc::RangeError, "not a split line");
  return it->second;
}

std::int64_t KummerCurve::rational_place_count() const {
  return r() + 1 + static_cast<std::int64_t>(split_lines_.size()) * m();
}

std::int64_t KummerCurve::n_for(int t) const {
  if (t < 1 || t > r()) fail(Errc::RangeError, "t out of [1, r]");
  return (r() - t) + static_cast<std::int64_t>(split_lines_.size()) * m();
}

std::vector<Place> KummerCurve::split_places() const {
  std::vector<Place> out;
  for (Repr alpha : split_lines_)
    for (Repr y0 : split_fibres_.at(alpha)) out.push_back(Place::split(alpha, y0));
  return out;
}

bool KummerCurve::is_root(Repr alpha) const { return root_index(alpha) != 0; }

int KummerCurve::root_index(Repr alpha) const {
  for (std::size_t i = 0; i < config_.roots.size(); ++i)
    if (config_.roots[i] == alpha) return static_cast<int>(i) + 1;
  return 0;
}

CurveDivisor standard_D(const KummerCurve& curve, int t) {
  if (t < 1 || t > curve.r()) fail(Errc::RangeError, "t out of [1, r]");
  CurveDivisor d;
  for (int i = t + 1; i <= curve.r(); ++i) d.add(Place::ramified(i), 1);
  for (const Place& p : curve.split_places()) d.add(p, 1);
  return d;
}

CurveDivisor y_power_divisor(const KummerCurve& curve, int j) {
  if (j < 0) fail(Errc::RangeError, "negative power of y");
  CurveDivisor d;
  if (j == 0) return d;
  for (int i = 1; i <= curve.r(); ++i) d.add(Place::ramified(i), j);
  d.add(Place::infinity(), -static_cast<std::int64_t>(j) * curve.r());
  return d;
}

bool is_galois_invariant(const KummerCurve& curve, const CurveDivisor& a) {
  std::map<Repr, std::vector<std::int64_t>> per_line;
  for (const auto& [p, c] : a.support()) {
    if (p.kind == Place::Kind::Ramified) {
      if (p.ram_index < 1 || p.ram_index > curve.r()) return false;
      continue;
    }
    if (p.kind != Place::Kind::Split) continue;
    const auto& lines = curve.split_lines();
    if (std::find(lines.begin(), lines.end(), p.alpha) == lines.end()) return false;
    const auto& fibre = curve.split_fibre(p.alpha);
    if (std::find(fibre.begin(), fibre.end(), p.y0) == fibre.end()) return false;
    per_line[p.alpha].push_back(c);
  }
  for (const auto& [alpha, cs] : per_line) {
    if (static_cast<int>(cs.size()) != curve.m()) return false;  // some fibre place missing => 0 != c
    for (std::int64_t c : cs)
      if (c != cs.front()) return false;
  }
  return true;
}

DivisorP1 restrict(const KummerCurve& curve, const CurveDivisor& a) {
  if (!is_galois_invariant(curve, a))
    fail(Errc::NotGaloisInvariant, "restriction needs a Galois-invariant divisor");
  const std::int64_t m = curve.m();
  DivisorP1 out;
  for (const auto& [p, c] : a.support()) {
    switch (p.kind) {
      case Place::Kind::Infinity:
        out.add(RationalPlaceX::infinity(), floor_div(c, m));
        break;
      case Place::Kind::Ramified:
        out.add(RationalPlaceX::finite(curve.root(p.ram_index)), floor_div(c, m));
        break;
      case Place::Kind::Split:
        // e = 1 and the fibre is constant, so each of the m places
        // contributes the same value; record it once.
        if (p.y0 == curve.split_fibre(p.alpha).front()) out.add(RationalPlaceX::finite(p.alpha), c);
        break;
    }
  }
  return out;
}

namespace {

// The j-th Maharaj summand of L(A): the restriction of A + (y^j) to F_q(x).
DivisorP1 maharaj_summand(const KummerCurve& curve, const CurveDivisor& a, int j) {
  return restrict(curve, a + y_power_divisor(curve, j));
}

std::int64_t p1_dim(const DivisorP1& b) {
  const std::int64_t d = b.degree();
  return d >= 0 ? d + 1 : 0;
}

}  // namespace

std::int64_t rr_dim(const KummerCurve& curve, const CurveDivisor& a) {
  if (!is_galois_invariant(curve, a))
    fail(Errc::NotGaloisInvariant, "Riemann-Roch dimension needs a Galois-invariant divisor");
  std::int64_t total = 0;
  for (int j = 0; j < curve.m(); ++j) total += p1_dim(maharaj_summand(curve, a, j));
  return total;
}

std::vector<BasisFunction> rr_basis(const KummerCurve& curve, const CurveDivisor& a) {
  if (!is_galois_invariant(curve, a))
    fail(Errc::NotGaloisInvariant, "Riemann-Roch basis needs a Galois-invariant divisor");
  std::vector<BasisFunction> out;
  for (int j = 0; j < curve.m(); ++j) {
    const DivisorP1 b = maharaj_summand(curve, a, j);
    const std::int64_t d = b.degree();
    if (d < 0) continue;
    Poly num = Poly::constant(curve.field_ptr(), 1);
    std::map<Repr, std::int64_t> poles;
    for (const auto& [pl, c] : b.support()) {
      if (pl.at_infinity) continue;
      if (c > 0) {
        poles[pl.alpha] = c;
      } else {
        const Poly lin = Poly::linear_root(curve.field_ptr(), pl.alpha);
        for (std::int64_t e = 0; e < -c; ++e) num = num * lin;
      }
    }
    for (std::int64_t s = 0; s <= d; ++s)
      out.emplace_back(j, num.times_x_power(static_cast<int>(s)), poles);
  }
  return out;
}

std::int64_t valuation(const KummerCurve& curve, const BasisFunction& b, const Place& place) {
  const std::int64_t m = curve.m();
  std::int64_t pole_total = 0;
  for (const auto& [alpha, e] : b.poles) pole_total += e;
  switch (place.kind) {
    case Place::Kind::Infinity:
      // v(y) = -r, v(x - alpha) = -m.
      return -static_cast<std::int64_t>(b.ypow) * curve.r() - m * (b.num.degree() - pole_total);
    case Place::Kind::Ramified: {
      const Repr alpha = curve.root(place.ram_index);
      const auto it = b.poles.find(alpha);
      const std::int64_t pole = it == b.poles.end() ? 0 : it->second;
      return b.ypow + m * (b.num.root_multiplicity(alpha) - pole);
    }
    case Place::Kind::Split: {
      const auto it = b.poles.find(place.alpha);
      const std::int64_t pole = it == b.poles.end() ? 0 : it->second;
      return b.num.root_multiplicity(place.alpha) - pole;
    }
  }
  fail(Errc::RangeError, "unknown place kind");
}

Repr evaluate_basis(const KummerCurve& curve, const BasisFunction& b, const Place& place) {
  const Field& f = curve.field();
  if (place.kind == Place::Kind::Infinity)
    fail(Errc::RangeError, "evaluation at infinity is not defined here");

  const Repr x0 = place.kind == Place::Kind::Split ? place.alpha : curve.root(place.ram_index);

  // Net multiplicity of the local parameter data at the place.
  const auto pole_it = b.poles.find(x0);
  const std::int64_t pole_mult = pole_it == b.poles.end() ? 0 : pole_it->second;
  const std::int64_t zero_mult = b.num.is_zero() ? 0 : b.num.root_multiplicity(x0);

  std::int64_t val;
  if (place.kind == Place::Kind::Split) {
    val = zero_mult - pole_mult;
  } else {
    val = b.ypow + curve.m() * (zero_mult - pole_mult);
  }
  if (val < 0) fail(Errc::PoleAtEvaluationPoint, "function has a pole at the evaluation place");
  if (val > 0) return 0;

  // val == 0: at a ramified place this forces ypow == 0 and equal
  // (x - alpha) powers above and below; cancel them before substituting.
  Poly num = b.num;
  for (std::int64_t e = 0; e < zero_mult; ++e) num = num.divide_linear_root(x0);
  Repr value = num.eval(x0);
  for (const auto& [alpha, e] : b.poles) {
    if (alpha == x0) continue;
    const Repr base = f.sub(x0, alpha);
    value = f.div(value, f.pow(base, e));
  }
  if (place.kind == Place::Kind::Split) value = f.mul(value, f.pow(place.y0, b.ypow));
  return value;
}

}  // namespace agflag::kummer
