#ifndef AGFLAG_ISODUAL_HPP
#define AGFLAG_ISODUAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "agflag/codes.hpp"
#include "agflag/semigroups.hpp"

namespace agflag::isodual {

using gf::Repr;
using kummer::CurveDivisor;
using kummer::KummerCurve;
using kummer::Place;
using linalg::Matrix;
using semigroups::BasePlace;
using semigroups::FlagParams;
using semigroups::JumpSet;

/// The complete flag {0} = C_0 < C_1 < ... < C_n = F_q^n of evaluation codes
/// C_i = C_L(D, a_i P + G_beta). Row i-1 of `nested` is a vector w_i with
/// C_i = span(w_1, ..., w_i); the w_i are produced by forward elimination
/// while sweeping a, so the spans are exact per step.
struct Flag {
  const KummerCurve* curve = nullptr;
  FlagParams params;
  JumpSet jumps;
  std::vector<Place> columns;
  Matrix nested;
  std::int64_t n = 0;
  std::int64_t genus = 0;

  Flag(const KummerCurve* c, FlagParams p, JumpSet j, std::vector<Place> cols, Matrix m,
       std::int64_t nn, std::int64_t gg)
      : curve(c), params(std::move(p)), jumps(std::move(j)), columns(std::move(cols)),
        nested(std::move(m)), n(nn), genus(gg) {}

  /// Generator rows of C_i (the first i nested rows).
  Matrix code_rows(std::int64_t i) const;
};

/// Builds the flag by rank accumulation over the full a-window; the jump
/// set falls out of the construction and is asserted to have n elements.
Flag build_flag(const KummerCurve& curve, const FlagParams& params);

enum class Verdict { IsoDual, NotIsoDual, NotApplicable, Inconclusive };

std::string to_string(Verdict v);

/// Hypothesis-free core of the canonical-divisor route, applicable to both
/// base places: decides whether E = (n+2g-2-2 sum(beta))P + 2 G_beta - D is
/// canonical. Both sub-checks (l(E) = g, and the equivalent jump-set
/// membership of n+2g-1-2 sum(beta) for doubled beta) are computed and must
/// agree.
bool canonical_divisor_test(const KummerCurve& curve, const FlagParams& params);

/// Canonical route with its theorem hypotheses enforced:
/// sum(beta) >= 0 and n >= 2g + 2 sum(beta) + 2.
Verdict check_canonical_route(const KummerCurve& curve, const FlagParams& params);

/// Divisibility criterion for the infinity base place, by modular arithmetic
/// alone: t < r needs m | (2 beta_i + 1) for all i; t = r needs all
/// 2 beta_i congruent mod m. Requires 0 <= sum(beta) < (n+2g-1)/2.
Verdict check_kummer_criterion(const KummerCurve& curve, int t, const std::vector<std::int64_t>& beta);

/// With the flag parameter on Q_1 no isometry-dual flag exists; kept as an
/// explicit operation so the search oracle can confirm it empirically.
/// Requires 0 <= sum(beta) < (n+2g-1)/2.
Verdict check_ramified_none(const KummerCurve& curve, int t, const std::vector<std::int64_t>& beta);

struct IsometrySearch {
  enum class Status { Found, NoneProven, Inconclusive } status = Status::NoneProven;
  std::vector<Repr> x;  // everywhere-nonzero witness when Found
};

/// Searches for x in (F_q*)^n with C_i = x . C_{n-i}^perp for all i. The
/// reciprocal vector z = x^{-1} must satisfy sum_j z_j u_j v_j = 0 over all
/// u in C_i, v in C_{n-i}; the search reduces to an everywhere-nonzero
/// element of an explicit null space (exhaustive when q^dim <= 2^16, else
/// randomized with an Inconclusive outcome).
IsometrySearch find_isometry_vector(const Flag& flag);

/// Full matrix verification of C_i = x . C_{n-i}^perp for every i.
bool verify_isometry(const Flag& flag, const std::vector<Repr>& x);

/// a_i + a_{n+1-i} = n + 2g - 1 - 2 sum(beta) for all pairs of jump values.
bool symmetry_holds(const JumpSet& jumps, std::int64_t n, std::int64_t genus, std::int64_t beta_total);

/// Jump set recomputed from the dimension-jump set alone via the duality
/// a in set iff a and its mirror partner both jump. Infinity base place;
/// requires the flag to be isometry-dual (canonical divisor test).
JumpSet code_jump_set_via_duality(const KummerCurve& curve, int t, const std::vector<std::int64_t>& beta);

/// Jump set reassembled from its g head elements, the guaranteed middle
/// block, and the mirrored tail. Same applicability as via_duality plus
/// 0 <= sum(beta) < (n+2g-1)/2.
JumpSet code_jump_set_from_head(const KummerCurve& curve, int t, const std::vector<std::int64_t>& beta);

struct FlagReport {
  Verdict canonical_route = Verdict::NotApplicable;
  Verdict closed_form_route = Verdict::NotApplicable;
  Verdict oracle_route = Verdict::NotApplicable;
  std::optional<std::vector<Repr>> x;
  bool symmetry_ok = false;
  JumpSet jumps;
  bool routes_agree = true;
};

/// Runs every applicable route plus the search oracle and packages the
/// verdicts. Applicable verdicts are compared; disagreement is reported,
/// not asserted.
FlagReport analyze_flag(const KummerCurve& curve, const FlagParams& params);

}  // namespace agflag::isodual

#endif
