#ifndef AGFLAG_SEMIGROUPS_HPP
#define AGFLAG_SEMIGROUPS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "agflag/kummer.hpp"

namespace agflag::semigroups {

using kummer::CurveDivisor;
using kummer::KummerCurve;
using kummer::Place;

/// Where the running flag parameter a sits: on the place at infinity (beta
/// covers Q_1..Q_t) or on Q_1 (beta covers Q_2..Q_t).
enum class BasePlace { Infinity, FirstRamified };

std::string to_string(BasePlace base);

/// Methods for computing jump sets.
enum class Method { Closed, Generic, CodeOracle };

std::string to_string(Method method);

struct FlagParams {
  int t = 0;
  BasePlace base = BasePlace::Infinity;
  std::vector<std::int64_t> beta;  // arity t (Infinity) or t-1 (FirstRamified)
};

/// Validates t and beta arity against the curve; throws on violation.
void check_params(const KummerCurve& curve, const FlagParams& params);

std::int64_t beta_sum(const FlagParams& params);

/// The divisor aP + G_beta for the given base-place mode.
CurveDivisor flag_divisor(const KummerCurve& curve, const FlagParams& params, std::int64_t a);

/// The ordered jump values a_1 < ... < a_n together with a_0 = a_1 - 1.
struct JumpSet {
  std::vector<std::int64_t> values;
  std::int64_t a0 = 0;
  std::int64_t n = 0;

  bool contains(std::int64_t a) const;
  friend bool operator==(const JumpSet&, const JumpSet&) = default;
};

/// Membership of a in the dimension-jump set: l(aP + G_beta) != l((a-1)P + G_beta).
bool dim_jump_generic(const KummerCurve& curve, const FlagParams& params, std::int64_t a);

/// Membership of a in the code-jump set, decided from four Riemann-Roch
/// dimensions: the l-value jumps while l(. - D) does not.
bool code_jump_generic(const KummerCurve& curve, const FlagParams& params, std::int64_t a);

/// Closed-form code-jump membership for the infinity base place.
/// Requires sum(beta) >= 0 and n >= 2g; false outside the feasible window.
bool code_jump_closed_infinity(const KummerCurve& curve, int t,
                               const std::vector<std::int64_t>& beta, std::int64_t a);

/// Closed-form dimension-jump membership for the infinity base place.
bool dim_jump_closed_infinity(const KummerCurve& curve, int t,
                              const std::vector<std::int64_t>& beta, std::int64_t a);

/// Closed-form code-jump membership with the flag parameter on Q_1 and beta
/// on Q_2..Q_t (beta has t-1 entries). Requires n >= 2g and t >= 2.
bool code_jump_closed_ramified(const KummerCurve& curve, int t,
                               const std::vector<std::int64_t>& beta, std::int64_t a);

bool code_jump(const KummerCurve& curve, const FlagParams& params, std::int64_t a, Method method);

/// Scans [-sum(beta), n + 2g - 1 - sum(beta)] and asserts exactly n members,
/// including the guaranteed block [2g - sum(beta), n - 1 - sum(beta)].
JumpSet code_jump_set(const KummerCurve& curve, const FlagParams& params, Method method);

struct ReducedBeta {
  std::int64_t a = 0;                // shifted flag value
  std::vector<std::int64_t> beta;    // entries in [0, m)
  std::vector<std::int64_t> theta;   // beta_i = theta_i * m + beta'_i
};

/// Normalizes beta into [0, m)^t; membership is preserved under
/// a -> a + m * sum(theta). Infinity base place only.
ReducedBeta reduce_beta(int m, std::int64_t a, const std::vector<std::int64_t>& beta);

/// Membership of an integer tuple in the generalized Weierstrass semigroup
/// at the given places (Infinity / Ramified places only): the dimension of
/// G_alpha drops at every coordinate.
bool ghat_member(const KummerCurve& curve, const std::vector<Place>& places,
                 const std::vector<std::int64_t>& alpha);

/// True iff l(G_alpha) = l(G_alpha - places[i]), i.e. no semigroup element
/// matches alpha at coordinate i while staying below elsewhere.
bool nabla_empty(const KummerCurve& curve, const std::vector<Place>& places,
                 const std::vector<std::int64_t>& alpha, std::size_t i);

/// Coordinatewise maximum of a nonempty list of equal-arity tuples.
std::vector<std::int64_t> lub(const std::vector<std::vector<std::int64_t>>& vectors);

}  // namespace agflag::semigroups

#endif
