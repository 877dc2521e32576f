#include "agflag/semigroups.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

#include "agflag/codes.hpp"

namespace agflag::semigroups {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b) != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t exact_div(std::int64_t a, std::int64_t b) {
  if (a % b != 0) fail(Errc::InternalDisagreement, "expected exact division");
  return a / b;
}

unsigned thread_budget() {
  if (const char* env = std::getenv("AGFLAG_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Deterministic parallel map over [0, count), chunked across the thread
// budget; results land by index.
template <typename Fn>
std::vector<std::int64_t> parallel_values(std::size_t count, Fn&& fn) {
  std::vector<std::int64_t> out(count, 0);
  const unsigned budget = std::min<unsigned>(thread_budget(), count == 0 ? 1 : count);
  if (budget <= 1 || count < 4) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> workers;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < budget; ++w) {
    workers.emplace_back([&, w]() {
      try {
        for (std::size_t i = w; i < count; i += budget) out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace

std::string to_string(BasePlace base) {
  return base == BasePlace::Infinity ? "infinity" : "q1";
}

std::string to_string(Method method) {
  switch (method) {
    case Method::Closed:
      return "closed";
    case Method::Generic:
      return "generic";
    case Method::CodeOracle:
      return "code-oracle";
  }
  return "?";
}

void check_params(const KummerCurve& curve, const FlagParams& params) {
  if (params.t < 1 || params.t > curve.r()) fail(Errc::RangeError, "t out of [1, r]");
  if (params.base == BasePlace::FirstRamified && params.t < 2)
    fail(Errc::PreconditionViolated, "flag parameter on Q_1 needs t >= 2");
  const std::size_t want =
      params.base == BasePlace::Infinity ? params.t : params.t - 1;
  if (params.beta.size() != want)
    fail(Errc::ArityMismatch, "beta arity does not match t and base place");
}

std::int64_t beta_sum(const FlagParams& params) {
  return std::accumulate(params.beta.begin(), params.beta.end(), std::int64_t{0});
}

CurveDivisor flag_divisor(const KummerCurve& curve, const FlagParams& params, std::int64_t a) {
  check_params(curve, params);
  CurveDivisor g;
  if (params.base == BasePlace::Infinity) {
    g.add(Place::infinity(), a);
    for (int i = 1; i <= params.t; ++i) g.add(Place::ramified(i), params.beta[i - 1]);
  } else {
    g.add(Place::ramified(1), a);
    for (int i = 2; i <= params.t; ++i) g.add(Place::ramified(i), params.beta[i - 2]);
  }
  return g;
}

bool JumpSet::contains(std::int64_t a) const {
  return std::binary_search(values.begin(), values.end(), a);
}

bool dim_jump_generic(const KummerCurve& curve, const FlagParams& params, std::int64_t a) {
  return kummer::rr_dim(curve, flag_divisor(curve, params, a)) !=
         kummer::rr_dim(curve, flag_divisor(curve, params, a - 1));
}

bool code_jump_generic(const KummerCurve& curve, const FlagParams& params, std::int64_t a) {
  const CurveDivisor d = kummer::standard_D(curve, params.t);
  const CurveDivisor high = flag_divisor(curve, params, a);
  const CurveDivisor low = flag_divisor(curve, params, a - 1);
  const bool ell_jumps = kummer::rr_dim(curve, high) != kummer::rr_dim(curve, low);
  const bool tail_jumps = kummer::rr_dim(curve, high - d) != kummer::rr_dim(curve, low - d);
  return ell_jumps && !tail_jumps;
}

namespace {

void check_closed_preconditions_infinity(const KummerCurve& curve, int t,
                                         const std::vector<std::int64_t>& beta) {
  if (t < 1 || t > curve.r()) fail(Errc::RangeError, "t out of [1, r]");
  if (beta.size() != static_cast<std::size_t>(t)) fail(Errc::ArityMismatch, "beta arity != t");
  const std::int64_t s = std::accumulate(beta.begin(), beta.end(), std::int64_t{0});
  if (s < 0) fail(Errc::PreconditionViolated, "closed form needs sum(beta) >= 0");
  if (curve.n_for(t) < 2 * curve.genus())
    fail(Errc::PreconditionViolated, "closed form needs n >= 2g");
}

}  // namespace

bool code_jump_closed_infinity(const KummerCurve& curve, int t,
                               const std::vector<std::int64_t>& beta, std::int64_t a) {
  check_closed_preconditions_infinity(curve, t, beta);
  const std::int64_t m = curve.m();
  const std::int64_t r = curve.r();
  const std::int64_t n = curve.n_for(t);
  const std::int64_t g = curve.genus();
  const std::int64_t s = std::accumulate(beta.begin(), beta.end(), std::int64_t{0});

  if (a + s < 0 || a + s > n + 2 * g - 1) return false;
  if (a + s < n) {
    const std::int64_t j = pos_mod(curve.r_tilde() * a, m);
    std::int64_t lhs = 0;
    for (std::int64_t b : beta) lhs += floor_div(b + j, m);
    return lhs >= exact_div(r * j - a, m);
  }
  const std::int64_t j = pos_mod(curve.r_tilde() * (a - n - t), m);
  std::int64_t lhs = 0;
  for (std::int64_t b : beta) lhs += floor_div(b + j + 1, m);
  return lhs < exact_div(r * j + n + t - a, m);
}

bool dim_jump_closed_infinity(const KummerCurve& curve, int t,
                              const std::vector<std::int64_t>& beta, std::int64_t a) {
  check_closed_preconditions_infinity(curve, t, beta);
  const std::int64_t m = curve.m();
  const std::int64_t r = curve.r();
  const std::int64_t n = curve.n_for(t);
  const std::int64_t s = std::accumulate(beta.begin(), beta.end(), std::int64_t{0});

  if (a >= n - s) return true;
  if (a < -s) return false;
  const std::int64_t j = pos_mod(curve.r_tilde() * a, m);
  std::int64_t lhs = 0;
  for (std::int64_t b : beta) lhs += floor_div(b + j, m);
  return lhs >= exact_div(r * j - a, m);
}

bool code_jump_closed_ramified(const KummerCurve& curve, int t,
                               const std::vector<std::int64_t>& beta, std::int64_t a) {
  if (t < 2 || t > curve.r()) fail(Errc::PreconditionViolated, "flag parameter on Q_1 needs 2 <= t <= r");
  if (beta.size() != static_cast<std::size_t>(t) - 1) fail(Errc::ArityMismatch, "beta arity != t-1");
  const std::int64_t m = curve.m();
  const std::int64_t r = curve.r();
  const std::int64_t n = curve.n_for(t);
  const std::int64_t g = curve.genus();
  if (n < 2 * g) fail(Errc::PreconditionViolated, "closed form needs n >= 2g");
  const std::int64_t s = std::accumulate(beta.begin(), beta.end(), std::int64_t{0});

  if (a + s < 0 || a + s > n + 2 * g - 1) return false;
  if (a + s < n) {
    // The projective-line summand picked out by m | (a + j) has degree
    // (a+j)/m + sum floor((beta_i+j)/m) + floor(-r j / m); membership is
    // degree >= 0.
    const std::int64_t j = pos_mod(-a, m);
    std::int64_t deg = exact_div(a + j, m) + floor_div(-r * j, m);
    for (std::int64_t b : beta) deg += floor_div(b + j, m);
    return deg >= 0;
  }
  // Here membership asks that l(. - D) does not jump, i.e. the summand
  // picked out by m | (a + j + 1) has negative degree.
  const std::int64_t j = pos_mod(-a - 1, m);
  std::int64_t deg = exact_div(a + j + 1, m) + floor_div(-(n + t + r * j), m);
  for (std::int64_t b : beta) deg += floor_div(b + j + 1, m);
  return deg < 0;
}

bool code_jump(const KummerCurve& curve, const FlagParams& params, std::int64_t a, Method method) {
  check_params(curve, params);
  switch (method) {
    case Method::Closed:
      return params.base == BasePlace::Infinity
                 ? code_jump_closed_infinity(curve, params.t, params.beta, a)
                 : code_jump_closed_ramified(curve, params.t, params.beta, a);
    case Method::Generic:
      return code_jump_generic(curve, params, a);
    case Method::CodeOracle: {
      const CurveDivisor d = kummer::standard_D(curve, params.t);
      return codes::code_dimension(curve, d, flag_divisor(curve, params, a)) !=
             codes::code_dimension(curve, d, flag_divisor(curve, params, a - 1));
    }
  }
  fail(Errc::RangeError, "unknown method");
}

JumpSet code_jump_set(const KummerCurve& curve, const FlagParams& params, Method method) {
  check_params(curve, params);
  const std::int64_t s = beta_sum(params);
  const std::int64_t n = curve.n_for(params.t);
  const std::int64_t g = curve.genus();
  const std::int64_t lo = -s;
  const std::int64_t hi = n + 2 * g - 1 - s;

  std::vector<std::int64_t> members;
  if (method == Method::CodeOracle) {
    const CurveDivisor d = kummer::standard_D(curve, params.t);
    const std::size_t count = static_cast<std::size_t>(hi - lo + 2);
    // dims[i] = dim C_L(D, (lo-1+i)P + G_beta), parallel across a-values.
    const auto dims = parallel_values(count, [&](std::size_t i) {
      return codes::code_dimension(curve, d, flag_divisor(curve, params, lo - 1 + static_cast<std::int64_t>(i)));
    });
    if (dims.front() != 0)
      fail(Errc::CardinalityMismatch, "oracle: dimension not zero below the window");
    if (dims.back() != n) fail(Errc::CardinalityMismatch, "oracle: dimension not n at the window top");
    for (std::size_t i = 1; i < count; ++i) {
      const std::int64_t step = dims[i] - dims[i - 1];
      if (step != 0 && step != 1)
        fail(Errc::CardinalityMismatch, "oracle: dimension step outside {0,1}");
      if (step == 1) members.push_back(lo - 1 + static_cast<std::int64_t>(i));
    }
  } else if (method == Method::Generic) {
    // Carry l-values across the scan; each step needs one new pair.
    const CurveDivisor d = kummer::standard_D(curve, params.t);
    std::int64_t prev_ell = kummer::rr_dim(curve, flag_divisor(curve, params, lo - 1));
    std::int64_t prev_tail = kummer::rr_dim(curve, flag_divisor(curve, params, lo - 1) - d);
    for (std::int64_t a = lo; a <= hi; ++a) {
      const CurveDivisor ga = flag_divisor(curve, params, a);
      const std::int64_t ell = kummer::rr_dim(curve, ga);
      const std::int64_t tail = kummer::rr_dim(curve, ga - d);
      if (ell != prev_ell && tail == prev_tail) members.push_back(a);
      prev_ell = ell;
      prev_tail = tail;
    }
  } else {
    for (std::int64_t a = lo; a <= hi; ++a)
      if (code_jump(curve, params, a, Method::Closed)) members.push_back(a);
  }

  if (static_cast<std::int64_t>(members.size()) != n)
    fail(Errc::CardinalityMismatch,
         "jump set has " + std::to_string(members.size()) + " members, expected " + std::to_string(n));
  for (std::int64_t a = 2 * g - s; a <= n - 1 - s; ++a)
    if (!std::binary_search(members.begin(), members.end(), a))
      fail(Errc::CardinalityMismatch, "guaranteed block element missing from jump set");
  if (g > 0 && members.back() < n - s)
    fail(Errc::CardinalityMismatch, "jump set maximum below n - sum(beta)");

  JumpSet out;
  out.values = std::move(members);
  out.a0 = out.values.front() - 1;
  out.n = n;
  return out;
}

ReducedBeta reduce_beta(int m, std::int64_t a, const std::vector<std::int64_t>& beta) {
  ReducedBeta out;
  out.beta.reserve(beta.size());
  out.theta.reserve(beta.size());
  std::int64_t shift = 0;
  for (std::int64_t b : beta) {
    const std::int64_t theta = floor_div(b, m);
    out.theta.push_back(theta);
    out.beta.push_back(b - theta * m);
    shift += theta;
  }
  out.a = a + shift * m;
  return out;
}

namespace {

CurveDivisor tuple_divisor(const KummerCurve& curve, const std::vector<Place>& places,
                           const std::vector<std::int64_t>& alpha) {
  if (places.size() != alpha.size()) fail(Errc::ArityMismatch, "places and alpha disagree in arity");
  CurveDivisor g;
  for (std::size_t i = 0; i < places.size(); ++i) {
    if (places[i].kind == Place::Kind::Split)
      fail(Errc::NotGaloisInvariant, "semigroup places must be Galois-invariant singletons");
    for (std::size_t j = i + 1; j < places.size(); ++j)
      if (places[i] == places[j]) fail(Errc::RangeError, "places must be pairwise distinct");
    g.add(places[i], alpha[i]);
  }
  (void)curve;
  return g;
}

}  // namespace

bool ghat_member(const KummerCurve& curve, const std::vector<Place>& places,
                 const std::vector<std::int64_t>& alpha) {
  const CurveDivisor g = tuple_divisor(curve, places, alpha);
  const std::int64_t ell = kummer::rr_dim(curve, g);
  for (const Place& p : places) {
    CurveDivisor lower = g;
    lower.add(p, -1);
    if (kummer::rr_dim(curve, lower) + 1 != ell) return false;
  }
  return true;
}

bool nabla_empty(const KummerCurve& curve, const std::vector<Place>& places,
                 const std::vector<std::int64_t>& alpha, std::size_t i) {
  if (i >= places.size()) fail(Errc::RangeError, "coordinate index out of range");
  const CurveDivisor g = tuple_divisor(curve, places, alpha);
  CurveDivisor lower = g;
  lower.add(places[i], -1);
  return kummer::rr_dim(curve, lower) == kummer::rr_dim(curve, g);
}

std::vector<std::int64_t> lub(const std::vector<std::vector<std::int64_t>>& vectors) {
  if (vectors.empty()) fail(Errc::ArityMismatch, "lub of an empty set");
  std::vector<std::int64_t> out = vectors.front();
  for (const auto& v : vectors) {
    if (v.size() != out.size()) fail(Errc::ArityMismatch, "lub needs equal-arity tuples");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], v[i]);
  }
  return out;
}

}  // namespace agflag::semigroups
