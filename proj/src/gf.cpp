#include "agflag/gf.hpp"

#include <algorithm>
#include <numeric>

namespace agflag::gf {

namespace {

constexpr Repr kTableMaxQ = 1024;

bool is_prime(Repr p) {
  if (p < 2) return false;
  for (Repr d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Z_p[x] helpers on constant-first coefficient vectors (no trailing zeros).
std::vector<Repr> zp_trim(std::vector<Repr> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Remainder of a mod b over Z_p, b monic.
std::vector<Repr> zp_mod(std::vector<Repr> a, const std::vector<Repr>& b, Repr p) {
  a = zp_trim(std::move(a));
  const auto db = static_cast<std::int64_t>(b.size()) - 1;
  while (static_cast<std::int64_t>(a.size()) - 1 >= db) {
    const Repr lead = a.back();
    const auto shift = a.size() - b.size();
    if (lead != 0) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        Repr& c = a[shift + i];
        c = ((c - lead * b[i]) % p + p) % p;
      }
    }
    a.pop_back();
    a = zp_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

std::vector<Repr> zp_mul(const std::vector<Repr>& a, const std::vector<Repr>& b, Repr p) {
  if (a.empty() || b.empty()) return {};
  std::vector<Repr> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return zp_trim(std::move(out));
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const std::vector<Repr>& modulus, Repr p, int k) {
  if (k == 1) return true;
  for (int d = 1; 2 * d <= k; ++d) {
    Repr count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (Repr code = 0; code < count; ++code) {
      std::vector<Repr> cand(d + 1, 0);
      Repr c = code;
      for (int i = 0; i < d; ++i) {
        cand[i] = c % p;
        c /= p;
      }
      cand[d] = 1;
      if (zp_mod(modulus, cand, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(Repr p, int k, std::vector<Repr> modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) fail(Errc::ConfigError, "field characteristic must be prime");
  if (k_ < 1) fail(Errc::ConfigError, "extension degree must be >= 1");
  if (static_cast<int>(modulus_.size()) != k_ + 1)
    fail(Errc::ConfigError, "modulus must list k+1 coefficients, constant first");
  for (Repr c : modulus_)
    if (c < 0 || c >= p_) fail(Errc::ConfigError, "modulus coefficients must lie in [0, p)");
  if (modulus_.back() != 1) fail(Errc::ConfigError, "modulus must be monic");
  if (!is_irreducible(modulus_, p_, k_)) fail(Errc::ConfigError, "modulus is reducible over Z_p");

  q_ = 1;
  for (int i = 0; i < k_; ++i) {
    if (q_ > (INT64_C(1) << 40) / p_) fail(Errc::TooLarge, "field size beyond desk scale");
    q_ *= p_;
  }

  if (q_ <= kTableMaxQ) {
    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (Repr a = 0; a < q_; ++a)
      for (Repr b = a; b < q_; ++b) {
        const Repr ab = mul_nocache(a, b);
        mul_table_[static_cast<std::size_t>(a) * q_ + b] = ab;
        mul_table_[static_cast<std::size_t>(b) * q_ + a] = ab;
      }
    inv_table_.assign(static_cast<std::size_t>(q_), 0);
    for (Repr a = 1; a < q_; ++a)
      for (Repr b = 1; b < q_; ++b)
        if (mul_table_[static_cast<std::size_t>(a) * q_ + b] == 1) {
          inv_table_[a] = b;
          break;
        }
  }
}

Field Field::prime(Repr p) { return Field(p, 1, {0, 1}); }

std::vector<Repr> Field::to_digits(Repr a) const {
  check_repr(a);
  std::vector<Repr> digits(k_, 0);
  for (int i = 0; i < k_; ++i) {
    digits[i] = a % p_;
    a /= p_;
  }
  return digits;
}

Repr Field::from_digits(const std::vector<Repr>& digits) const {
  Repr a = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] < 0 || digits[i] >= p_) fail(Errc::RangeError, "digit out of [0, p)");
    a = a * p_ + digits[i];
  }
  return a;
}

Repr Field::add(Repr a, Repr b) const {
  check_repr(a);
  check_repr(b);
  if (k_ == 1) return (a + b) % p_;
  Repr out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Repr Field::neg(Repr a) const {
  check_repr(a);
  if (k_ == 1) return (p_ - a) % p_;
  Repr out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Repr Field::sub(Repr a, Repr b) const { return add(a, neg(b)); }

Repr Field::mul_nocache(Repr a, Repr b) const {
  const auto da = to_digits(a);
  const auto db = to_digits(b);
  auto prod = zp_mod(zp_mul(zp_trim(da), zp_trim(db), p_), modulus_, p_);
  prod.resize(k_, 0);
  return from_digits(prod);
}

Repr Field::mul(Repr a, Repr b) const {
  check_repr(a);
  check_repr(b);
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return mul_nocache(a, b);
}

Repr Field::inv(Repr a) const {
  check_repr(a);
  if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

Repr Field::div(Repr a, Repr b) const { return mul(a, inv(b)); }

Repr Field::pow(Repr a, std::int64_t e) const {
  check_repr(a);
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Repr acc = 1;
  while (e > 0) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

bool mth_power_class(const Field& field, Repr u, std::int64_t m) {
  if (u == 0) fail(Errc::ZeroInput, "m-th power test needs nonzero input");
  if (m <= 0) fail(Errc::RangeError, "m must be positive");
  const std::int64_t d = std::gcd(m, static_cast<std::int64_t>(field.q() - 1));
  return field.pow(u, (field.q() - 1) / d) == 1;
}

std::vector<Repr> mth_roots(const Field& field, Repr u, std::int64_t m) {
  if (u == 0) fail(Errc::ZeroInput, "m-th root scan needs nonzero input");
  if (m <= 0) fail(Errc::RangeError, "m must be positive");
  std::vector<Repr> roots;
  for (Repr v = 1; v < field.q(); ++v)
    if (field.pow(v, m) == u) roots.push_back(v);
  return roots;  // scan order is already sorted by repr
}

}  // namespace agflag::gf
