#include "agflag/isodual.hpp"

#include <algorithm>
#include <random>

namespace agflag::isodual {

using semigroups::beta_sum;
using semigroups::flag_divisor;
using semigroups::Method;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::IsoDual:
      return "isodual";
    case Verdict::NotIsoDual:
      return "not_isodual";
    case Verdict::NotApplicable:
      return "not_applicable";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Matrix Flag::code_rows(std::int64_t i) const {
  Matrix out(curve->field_ptr(), 0, nested.cols());
  for (std::int64_t row = 0; row < i; ++row) out.append_row(nested.row(static_cast<std::size_t>(row)));
  return out;
}

Flag build_flag(const KummerCurve& curve, const FlagParams& params) {
  semigroups::check_params(curve, params);
  const std::int64_t s = beta_sum(params);
  if (params.base == BasePlace::Infinity && s < 0)
    fail(Errc::PreconditionViolated, "flag construction needs sum(beta) >= 0");
  const std::int64_t n = curve.n_for(params.t);
  const std::int64_t g = curve.genus();
  const CurveDivisor d = kummer::standard_D(curve, params.t);
  const auto columns = codes::evaluation_columns(d);
  const gf::Field& f = curve.field();

  // Forward-elimination accumulator. Each accepted vector is reduced
  // against all earlier pivots and kept verbatim afterwards, so the span of
  // the first i accepted vectors is exactly C_i.
  std::vector<std::vector<Repr>> nested_rows;
  std::vector<std::size_t> pivot_col;
  std::vector<std::int64_t> jump_values;

  for (std::int64_t a = -s; a <= n + 2 * g - 1 - s; ++a) {
    const Matrix rows = codes::evaluation_matrix(curve, flag_divisor(curve, params, a), columns);
    std::int64_t new_pivots = 0;
    for (std::size_t ri = 0; ri < rows.rows(); ++ri) {
      std::vector<Repr> v = rows.row(ri);
      for (std::size_t pi = 0; pi < nested_rows.size(); ++pi) {
        const Repr factor = v[pivot_col[pi]];
        if (factor == 0) continue;
        const auto& w = nested_rows[pi];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(factor, w[j]));
      }
      std::size_t col = 0;
      while (col < v.size() && v[col] == 0) ++col;
      if (col == v.size()) continue;
      const Repr scale = f.inv(v[col]);
      for (std::size_t j = col; j < v.size(); ++j) v[j] = f.mul(scale, v[j]);
      nested_rows.push_back(std::move(v));
      pivot_col.push_back(col);
      ++new_pivots;
    }
    if (new_pivots > 1)
      fail(Errc::CardinalityMismatch, "code dimension stepped by more than one");
    if (new_pivots == 1) jump_values.push_back(a);
  }

  if (static_cast<std::int64_t>(jump_values.size()) != n)
    fail(Errc::CardinalityMismatch, "flag does not reach the full space in the window");

  JumpSet jumps;
  jumps.values = std::move(jump_values);
  jumps.a0 = jumps.values.front() - 1;
  jumps.n = n;

  Matrix nested = Matrix::from_rows(curve.field_ptr(), nested_rows);
  return Flag(&curve, params, std::move(jumps), columns, std::move(nested), n, g);
}

bool canonical_divisor_test(const KummerCurve& curve, const FlagParams& params) {
  semigroups::check_params(curve, params);
  const std::int64_t s = beta_sum(params);
  const std::int64_t n = curve.n_for(params.t);
  const std::int64_t g = curve.genus();
  const std::int64_t c = n + 2 * g - 1 - 2 * s;

  std::vector<std::int64_t> doubled = params.beta;
  for (auto& b : doubled) b *= 2;

  bool member;
  if (params.base == BasePlace::Infinity) {
    // Bring doubled beta into [0, m) first; membership is invariant under
    // the normalization shift.
    const auto reduced = semigroups::reduce_beta(curve.m(), c, doubled);
    member = semigroups::code_jump_closed_infinity(curve, params.t, reduced.beta, reduced.a);
  } else {
    member = semigroups::code_jump_closed_ramified(curve, params.t, doubled, c);
  }

  // Independent cross-check: E = (c-1)P + 2 G_beta - D is canonical exactly
  // when l(E) = g (it has degree 2g-2).
  FlagParams doubled_params{params.t, params.base, doubled};
  const CurveDivisor e =
      flag_divisor(curve, doubled_params, c - 1) - kummer::standard_D(curve, params.t);
  if (e.degree() != 2 * g - 2) fail(Errc::InternalDisagreement, "E does not have degree 2g-2");
  const bool canonical = kummer::rr_dim(curve, e) == g;
  if (canonical != member)
    fail(Errc::InternalDisagreement, "l(E) = g and the jump-set membership test disagree");
  return canonical;
}

Verdict check_canonical_route(const KummerCurve& curve, const FlagParams& params) {
  semigroups::check_params(curve, params);
  const std::int64_t s = beta_sum(params);
  const std::int64_t n = curve.n_for(params.t);
  const std::int64_t g = curve.genus();
  if (s < 0) fail(Errc::PreconditionViolated, "canonical route needs sum(beta) >= 0");
  if (n < 2 * g + 2 * s + 2)
    fail(Errc::PreconditionViolated, "canonical route needs n >= 2g + 2 sum(beta) + 2");
  return canonical_divisor_test(curve, params) ? Verdict::IsoDual : Verdict::NotIsoDual;
}

namespace {

void check_criterion_window(const KummerCurve& curve, int t, std::int64_t s) {
  const std::int64_t n = curve.n_for(t);
  const std::int64_t g = curve.genus();
  if (s < 0 || 2 * s >= n + 2 * g - 1)
    fail(Errc::PreconditionViolated, "criterion needs 0 <= sum(beta) < (n+2g-1)/2");
}

}  // namespace

Verdict check_kummer_criterion(const KummerCurve& curve, int t, const std::vector<std::int64_t>& beta) {
  if (t < 1 || t > curve.r()) fail(Errc::RangeError, "t out of [1, r]");
  if (beta.size() != static_cast<std::size_t>(t)) fail(Errc::ArityMismatch, "beta arity != t");
  std::int64_t s = 0;
  for (std::int64_t b : beta) s += b;
  check_criterion_window(curve, t, s);

  const std::int64_t m = curve.m();
  auto mod_m = [m](std::int64_t v) { return ((v % m) + m) % m; };
  bool ok;
  if (t < curve.r()) {
    ok = std::all_of(beta.begin(), beta.end(), [&](std::int64_t b) { return mod_m(2 * b + 1) == 0; });
  } else {
    ok = std::all_of(beta.begin(), beta.end(),
                     [&](std::int64_t b) { return mod_m(2 * b) == mod_m(2 * beta.front()); });
  }
  return ok ? Verdict::IsoDual : Verdict::NotIsoDual;
}

Verdict check_ramified_none(const KummerCurve& curve, int t, const std::vector<std::int64_t>& beta) {
  if (t < 2 || t > curve.r()) fail(Errc::PreconditionViolated, "flag parameter on Q_1 needs 2 <= t <= r");
  if (beta.size() != static_cast<std::size_t>(t) - 1) fail(Errc::ArityMismatch, "beta arity != t-1");
  std::int64_t s = 0;
  for (std::int64_t b : beta) s += b;
  check_criterion_window(curve, t, s);
  return Verdict::NotIsoDual;
}

namespace {

// Everywhere-nonzero member of the row space of `basis`, or nothing.
// Exhaustive enumeration in lexicographic coefficient order when the space
// is small enough; deterministic randomized sampling otherwise.
struct NonzeroSearch {
  bool exhaustive;
  std::optional<std::vector<Repr>> z;
};

NonzeroSearch search_everywhere_nonzero(const Matrix& basis) {
  const gf::Field& f = basis.field();
  const std::size_t dim = basis.rows();
  const std::size_t n = basis.cols();
  if (dim == 0) return {true, std::nullopt};

  double space = 1.0;
  for (std::size_t i = 0; i < dim; ++i) space *= static_cast<double>(f.q());
  const bool exhaustive = space <= static_cast<double>(1u << 16);

  auto combine = [&](const std::vector<Repr>& coeff) {
    std::vector<Repr> z(n, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (coeff[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        z[j] = f.add(z[j], f.mul(coeff[i], basis.at(i, j)));
    }
    return z;
  };
  auto all_nonzero = [](const std::vector<Repr>& z) {
    return std::all_of(z.begin(), z.end(), [](Repr v) { return v != 0; });
  };

  if (exhaustive) {
    std::vector<Repr> coeff(dim, 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < dim && ++coeff[pos] == f.q()) coeff[pos++] = 0;
      if (pos == dim) break;
      auto z = combine(coeff);
      if (all_nonzero(z)) return {true, std::move(z)};
    }
    return {true, std::nullopt};
  }

  std::mt19937 rng(0x5eedu);
  std::uniform_int_distribution<Repr> dist(0, f.q() - 1);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<Repr> coeff(dim);
    bool nonzero = false;
    for (auto& c : coeff) {
      c = dist(rng);
      nonzero |= (c != 0);
    }
    if (!nonzero) continue;
    auto z = combine(coeff);
    if (all_nonzero(z)) return {false, std::move(z)};
  }
  return {false, std::nullopt};
}

}  // namespace

IsometrySearch find_isometry_vector(const Flag& flag) {
  const gf::Field& f = flag.curve->field();
  const std::size_t n = static_cast<std::size_t>(flag.n);

  // z = x^{-1} must be orthogonal to every coordinatewise product u*v with
  // u in C_i, v in C_{n-i}. Over the nested rows this is exactly the pairs
  // w_a, w_b with a + b <= n.
  Matrix constraints(flag.curve->field_ptr(), 0, n);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a; a + b <= n; ++b) {
      std::vector<Repr> row(n);
      for (std::size_t j = 0; j < n; ++j)
        row[j] = f.mul(flag.nested.at(a - 1, j), flag.nested.at(b - 1, j));
      constraints.append_row(row);
    }

  const Matrix basis = linalg::nullspace(constraints);
  const NonzeroSearch found = search_everywhere_nonzero(basis);
  if (!found.z.has_value()) {
    return IsometrySearch{found.exhaustive ? IsometrySearch::Status::NoneProven
                                           : IsometrySearch::Status::Inconclusive,
                          {}};
  }
  std::vector<Repr> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = f.inv((*found.z)[j]);
  return IsometrySearch{IsometrySearch::Status::Found, std::move(x)};
}

bool verify_isometry(const Flag& flag, const std::vector<Repr>& x) {
  const gf::Field& f = flag.curve->field();
  const std::size_t n = static_cast<std::size_t>(flag.n);
  if (x.size() != n) return false;
  for (Repr v : x)
    if (v == 0) return false;

  for (std::size_t i = 1; i < n; ++i) {
    // C_i must equal x . C_{n-i}^perp; both have dimension i.
    const Matrix dual = linalg::nullspace(flag.code_rows(static_cast<std::int64_t>(n - i)));
    if (dual.rows() != i) return false;
    Matrix scaled(flag.curve->field_ptr(), 0, n);
    for (std::size_t row = 0; row < dual.rows(); ++row) {
      std::vector<Repr> v = dual.row(row);
      for (std::size_t j = 0; j < n; ++j) v[j] = f.mul(v[j], x[j]);
      scaled.append_row(v);
    }
    const Matrix ci = flag.code_rows(static_cast<std::int64_t>(i));
    if (linalg::rank(ci.stacked(scaled)) != i) return false;
  }
  return true;
}

bool symmetry_holds(const JumpSet& jumps, std::int64_t n, std::int64_t genus, std::int64_t beta_total) {
  const std::int64_t target = n + 2 * genus - 1 - 2 * beta_total;
  for (std::size_t i = 0; i < jumps.values.size(); ++i)
    if (jumps.values[i] + jumps.values[jumps.values.size() - 1 - i] != target) return false;
  return true;
}

namespace {

void require_isodual_gate(const KummerCurve& curve, const FlagParams& params) {
  if (!canonical_divisor_test(curve, params))
    fail(Errc::NotIsoDualFlag, "flag is not isometry-dual");
}

}  // namespace

JumpSet code_jump_set_via_duality(const KummerCurve& curve, int t, const std::vector<std::int64_t>& beta) {
  FlagParams params{t, BasePlace::Infinity, beta};
  const std::int64_t s = beta_sum(params);
  if (s < 0) fail(Errc::PreconditionViolated, "needs sum(beta) >= 0");
  require_isodual_gate(curve, params);
  const std::int64_t n = curve.n_for(t);
  const std::int64_t g = curve.genus();

  JumpSet out;
  for (std::int64_t a = -s; a <= n + 2 * g - 1 - s; ++a) {
    const std::int64_t partner = n + 2 * g - 2 - 2 * s - a + 1;
    if (semigroups::dim_jump_closed_infinity(curve, t, beta, a) &&
        semigroups::dim_jump_closed_infinity(curve, t, beta, partner))
      out.values.push_back(a);
  }
  if (static_cast<std::int64_t>(out.values.size()) != n)
    fail(Errc::CardinalityMismatch, "duality route produced wrong cardinality");
  out.a0 = out.values.front() - 1;
  out.n = n;
  return out;
}

JumpSet code_jump_set_from_head(const KummerCurve& curve, int t, const std::vector<std::int64_t>& beta) {
  FlagParams params{t, BasePlace::Infinity, beta};
  const std::int64_t s = beta_sum(params);
  check_criterion_window(curve, t, s);
  require_isodual_gate(curve, params);
  const std::int64_t n = curve.n_for(t);
  const std::int64_t g = curve.genus();

  // Head: the members among the first 2g candidate values.
  std::vector<std::int64_t> head;
  for (std::int64_t a = -s; a <= -s + 2 * g - 1; ++a)
    if (semigroups::code_jump_closed_infinity(curve, t, beta, a)) head.push_back(a);
  if (static_cast<std::int64_t>(head.size()) != g)
    fail(Errc::CardinalityMismatch, "head block does not have g elements");

  JumpSet out;
  out.values = head;
  for (std::int64_t a = 2 * g - s; a <= n - 1 - s; ++a) out.values.push_back(a);
  for (auto it = head.rbegin(); it != head.rend(); ++it)
    out.values.push_back(n + 2 * g - 1 - 2 * s - *it);
  if (!std::is_sorted(out.values.begin(), out.values.end()) ||
      std::adjacent_find(out.values.begin(), out.values.end()) != out.values.end() ||
      static_cast<std::int64_t>(out.values.size()) != n)
    fail(Errc::CardinalityMismatch, "head/middle/mirror blocks do not assemble to n values");
  out.a0 = out.values.front() - 1;
  out.n = n;
  return out;
}

FlagReport analyze_flag(const KummerCurve& curve, const FlagParams& params) {
  FlagReport report;
  const Flag flag = build_flag(curve, params);
  report.jumps = flag.jumps;
  report.symmetry_ok = symmetry_holds(flag.jumps, flag.n, flag.genus, beta_sum(params));

  try {
    report.canonical_route = check_canonical_route(curve, params);
  } catch (const Error& e) {
    if (e.code() != Errc::PreconditionViolated) throw;
    report.canonical_route = Verdict::NotApplicable;
  }

  try {
    report.closed_form_route = params.base == BasePlace::Infinity
                                   ? check_kummer_criterion(curve, params.t, params.beta)
                                   : check_ramified_none(curve, params.t, params.beta);
  } catch (const Error& e) {
    if (e.code() != Errc::PreconditionViolated) throw;
    report.closed_form_route = Verdict::NotApplicable;
  }

  const IsometrySearch search = find_isometry_vector(flag);
  switch (search.status) {
    case IsometrySearch::Status::Found:
      report.oracle_route = Verdict::IsoDual;
      report.x = search.x;
      if (!verify_isometry(flag, search.x))
        fail(Errc::InternalDisagreement, "isometry witness failed matrix verification");
      break;
    case IsometrySearch::Status::NoneProven:
      report.oracle_route = Verdict::NotIsoDual;
      break;
    case IsometrySearch::Status::Inconclusive:
      report.oracle_route = Verdict::Inconclusive;
      break;
  }

  std::vector<Verdict> decided;
  for (Verdict v : {report.canonical_route, report.closed_form_route, report.oracle_route})
    if (v == Verdict::IsoDual || v == Verdict::NotIsoDual) decided.push_back(v);
  report.routes_agree =
      std::all_of(decided.begin(), decided.end(), [&](Verdict v) { return v == decided.front(); });
  return report;
}

}  // namespace agflag::isodual
