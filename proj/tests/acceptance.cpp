// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. All arithmetic is exact; every comparison below is exact equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "agflag/config.hpp"
#include "agflag/isodual.hpp"

using namespace agflag;
using gf::Repr;
using kummer::CurveDivisor;
using kummer::KummerCurve;
using kummer::Place;
using semigroups::BasePlace;
using semigroups::FlagParams;
using semigroups::Method;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream log;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      log << "    FAILED: " << what << "\n";
    }
  }
};

KummerCurve make_hermitian() { return KummerCurve(config::hermitian16_config()); }

KummerCurve make_c7() {
  kummer::CurveConfig config;
  config.field = gf::make_prime_field(7);
  config.m = 3;
  config.roots = {0, 1};
  return kummer::build_curve(config);
}

struct GoldenCase {
  int t;
  std::vector<std::int64_t> beta;
  std::int64_t a0;
  std::vector<std::int64_t> set;
};

// The five reference F_16 jump sets, frozen as data.
std::vector<GoldenCase> golden_cases() {
  auto expand = [](std::vector<std::int64_t> head, std::int64_t lo, std::int64_t hi,
                   std::vector<std::int64_t> tail) {
    for (std::int64_t a = lo; a <= hi; ++a) head.push_back(a);
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
  };
  return {
      {4, {1, 1, 1, 1}, -5, expand({-4, 0, 1, 4, 5, 6}, 8, 55, {57, 58, 59, 62, 63, 67})},
      {4, {2, 2, -1, -1}, 1, expand({2, 4, 6, 7, 8, 9}, 10, 57, {58, 59, 60, 61, 63, 65})},
      {3, {2, 2, 2}, -4, expand({-3, 0, 1, 2, 4, 5}, 6, 54, {55, 56, 58, 59, 60, 63})},
      {3, {-3, -3, 7}, 1, expand({2, 5, 6, 7, 9, 10}, 11, 59, {60, 61, 63, 64, 65, 68})},
      {3, {-3, 7, 7}, -9, expand({-8, -5, -4, -3, -1, 0}, 1, 49, {50, 51, 53, 54, 55, 58})},
  };
}

std::string beta_label(const std::vector<std::int64_t>& beta) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < beta.size(); ++i) out << (i ? "," : "") << beta[i];
  out << ")";
  return out.str();
}

// Every (t, base, beta) case exercised by criterion 3.
std::vector<FlagParams> small_curve_cases() {
  std::vector<FlagParams> cases;
  for (std::int64_t b1 = 0; b1 < 3; ++b1)
    for (std::int64_t b2 = 0; b2 < 3; ++b2) cases.push_back({2, BasePlace::Infinity, {b1, b2}});
  for (std::int64_t b2 = 0; b2 < 3; ++b2) cases.push_back({2, BasePlace::FirstRamified, {b2}});
  return cases;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------

Check criterion1_example_reproduction() {
  Check c;
  const KummerCurve h = make_hermitian();
  const auto start = std::chrono::steady_clock::now();
  for (const auto& expect : golden_cases()) {
    const auto got =
        semigroups::code_jump_set(h, FlagParams{expect.t, BasePlace::Infinity, expect.beta},
                                  Method::Closed);
    c.require(got.values == expect.set, "closed-form set mismatch for beta=" + beta_label(expect.beta));
    c.require(got.a0 == expect.a0, "a0 mismatch for beta=" + beta_label(expect.beta));
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 1.0, "closed-form path took " + std::to_string(elapsed) + " s (budget 1 s)");
  c.log << "    5/5 reference sets matched in " << elapsed << " s\n";
  return c;
}

Check criterion2_oracle_equivalence() {
  Check c;
  const KummerCurve h = make_hermitian();
  const auto start = std::chrono::steady_clock::now();
  for (const auto& expect : golden_cases()) {
    const auto oracle =
        semigroups::code_jump_set(h, FlagParams{expect.t, BasePlace::Infinity, expect.beta},
                                  Method::CodeOracle);
    c.require(oracle.values == expect.set,
              "rank-oracle set mismatch for beta=" + beta_label(expect.beta));
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 120.0, "oracle path took " + std::to_string(elapsed) + " s (budget 120 s)");
  c.log << "    5/5 rank-jump sets matched in " << elapsed << " s\n";
  return c;
}

Check criterion3_small_curve_equivalence() {
  Check c;
  const KummerCurve curve = make_c7();
  for (const auto& params : small_curve_cases()) {
    const auto closed = semigroups::code_jump_set(curve, params, Method::Closed);
    const auto generic = semigroups::code_jump_set(curve, params, Method::Generic);
    const auto oracle = semigroups::code_jump_set(curve, params, Method::CodeOracle);
    const std::string label =
        semigroups::to_string(params.base) + " beta=" + beta_label(params.beta);
    c.require(closed == generic, "closed vs generic mismatch at " + label);
    c.require(generic == oracle, "generic vs oracle mismatch at " + label);
    c.require(static_cast<std::int64_t>(closed.values.size()) == curve.n_for(params.t),
              "cardinality != n at " + label);
  }
  c.log << "    " << small_curve_cases().size() << " parameter sets, 3 methods each, all equal\n";
  return c;
}

Check criterion4_canonical_consistency() {
  Check c;
  const KummerCurve h = make_hermitian();
  const KummerCurve small = make_c7();

  auto check_case = [&](const KummerCurve& curve, const FlagParams& params) {
    const std::int64_t s = semigroups::beta_sum(params);
    const std::int64_t n = curve.n_for(params.t);
    const std::int64_t g = curve.genus();
    const std::int64_t cc = n + 2 * g - 1 - 2 * s;
    std::vector<std::int64_t> doubled = params.beta;
    for (auto& b : doubled) b *= 2;
    const FlagParams doubled_params{params.t, params.base, doubled};

    // l(E) = g, via the Riemann-Roch machinery
    const CurveDivisor e = semigroups::flag_divisor(curve, doubled_params, cc - 1) -
                           kummer::standard_D(curve, params.t);
    const bool canonical = kummer::rr_dim(curve, e) == g;
    // membership of the dual index in the doubled-beta jump set, generic route
    const bool member = semigroups::code_jump_generic(curve, doubled_params, cc);
    c.require(canonical == member,
              "l(E)=g vs membership mismatch, " + semigroups::to_string(params.base) +
                  " beta=" + beta_label(params.beta));
    // and the closed-form route agrees with the whole test
    c.require(isodual::canonical_divisor_test(curve, params) == canonical,
              "closed-form canonical test mismatch at beta=" + beta_label(params.beta));
  };

  int hermitian_cases = 0;
  for (std::int64_t b1 = -2; b1 <= 2; ++b1)
    for (std::int64_t b2 = -1; b2 <= 2; ++b2) {
      const std::vector<std::int64_t> beta{b1, b2, 1, 0};
      if (b1 + b2 + 1 < 0) continue;
      check_case(h, {4, BasePlace::Infinity, beta});
      ++hermitian_cases;
    }
  for (const auto& beta : std::vector<std::vector<std::int64_t>>{{2, 2, 2}, {-3, 7, 7}, {0, 1, 5}}) {
    check_case(h, {3, BasePlace::Infinity, beta});
    ++hermitian_cases;
  }

  int small_cases = 0;
  for (std::int64_t b1 = -1; b1 <= 3; ++b1)
    for (std::int64_t b2 = -1; b2 <= 3; ++b2) {
      if (b1 + b2 < 0) continue;
      check_case(small, {2, BasePlace::Infinity, {b1, b2}});
      ++small_cases;
    }
  for (std::int64_t b2 = 0; b2 <= 2; ++b2) {
    check_case(small, {2, BasePlace::FirstRamified, {b2}});
    ++small_cases;
  }

  c.require(hermitian_cases >= 20, "need >= 20 sampled betas on the F_16 curve");
  c.require(small_cases >= 20, "need >= 20 sampled betas on the F_7 curve");
  c.log << "    " << hermitian_cases << " F_16 betas and " << small_cases
        << " F_7 betas, equivalence exact\n";
  return c;
}

Check criterion5_oracle_vs_theorem() {
  Check c;
  const KummerCurve small = make_c7();
  const KummerCurve h = make_hermitian();

  auto run_case = [&](const KummerCurve& curve, const FlagParams& params) {
    const isodual::Flag flag = isodual::build_flag(curve, params);
    const auto search = isodual::find_isometry_vector(flag);
    const std::string label =
        semigroups::to_string(params.base) + " t=" + std::to_string(params.t) +
        " beta=" + beta_label(params.beta);
    c.require(search.status != isodual::IsometrySearch::Status::Inconclusive,
              "oracle inconclusive at " + label);
    const bool found = search.status == isodual::IsometrySearch::Status::Found;

    // Canonical-route verdict; where the theorem hypothesis n >= 2g+2B+2
    // fails, fall back to the hypothesis-free divisor test and demand the
    // same equivalence.
    bool canonical;
    try {
      canonical = isodual::check_canonical_route(curve, params) == isodual::Verdict::IsoDual;
    } catch (const Error& e) {
      if (e.code() != Errc::PreconditionViolated) throw;
      canonical = isodual::canonical_divisor_test(curve, params);
      c.log << "    note: theorem hypothesis unmet at " << label
            << "; used the divisor test directly\n";
    }
    c.require(found == canonical, "oracle/canonical disagreement at " + label);
    if (found)
      c.require(isodual::verify_isometry(flag, search.x),
                "witness failed full matrix verification at " + label);
  };

  for (const auto& params : small_curve_cases()) run_case(small, params);
  for (const auto& expect : golden_cases())
    run_case(h, FlagParams{expect.t, BasePlace::Infinity, expect.beta});

  c.log << "    " << small_curve_cases().size() + golden_cases().size()
        << " flags: existence of x matches the canonical verdict, witnesses verified\n";
  return c;
}

Check criterion6_ramified_impossibility() {
  Check c;
  const KummerCurve small = make_c7();
  const KummerCurve h = make_hermitian();

  // Sampled betas inside the stated hypotheses whose impossibility the
  // canonical route confirms; the exhaustive search must prove emptiness.
  std::vector<std::pair<const KummerCurve*, FlagParams>> cases;
  for (std::int64_t b2 = 1; b2 < 3; ++b2)
    cases.push_back({&small, {2, BasePlace::FirstRamified, {b2}}});
  cases.push_back({&h, {4, BasePlace::FirstRamified, {1, 1, 1}}});
  cases.push_back({&h, {4, BasePlace::FirstRamified, {2, 1, 0}}});
  cases.push_back({&h, {4, BasePlace::FirstRamified, {3, 0, 2}}});
  cases.push_back({&h, {4, BasePlace::FirstRamified, {1, 0, 1}}});
  cases.push_back({&h, {3, BasePlace::FirstRamified, {0, 0}}});
  cases.push_back({&h, {3, BasePlace::FirstRamified, {2, 1}}});
  cases.push_back({&h, {3, BasePlace::FirstRamified, {1, 3}}});

  for (const auto& [curve, params] : cases) {
    const std::string label = "t=" + std::to_string(params.t) + " beta=" + beta_label(params.beta);
    c.require(isodual::check_ramified_none(*curve, params.t, params.beta) ==
                  isodual::Verdict::NotIsoDual,
              "ramified verdict not NotIsoDual at " + label);
    c.require(!isodual::canonical_divisor_test(*curve, params),
              "canonical route contradicts impossibility at " + label);
    const isodual::Flag flag = isodual::build_flag(*curve, params);
    const auto search = isodual::find_isometry_vector(flag);
    c.require(search.status == isodual::IsometrySearch::Status::NoneProven,
              "expected a proven-empty search at " + label);
  }
  c.log << "    " << cases.size() << " ramified-base flags, all searches exhaustively empty\n";

  // Surfaced disagreement: at beta = 0 (either curve) the blanket
  // impossibility claim fails. E = (n+2g-2)Q_1 - D is canonical there
  // (on the F_7 curve, (x-3)(x-5)/x^2 has divisor exactly D - 6 Q_1), so an
  // isometry vector exists; the search finds one and full verification
  // passes. The canonical route is ground truth for these cases.
  std::vector<std::pair<const KummerCurve*, FlagParams>> counterexamples = {
      {&small, {2, BasePlace::FirstRamified, {0}}},
      {&h, {4, BasePlace::FirstRamified, {0, 0, 0}}},
  };
  for (const auto& [curve, params] : counterexamples) {
    const std::string label = "t=" + std::to_string(params.t) + " beta=" + beta_label(params.beta);
    c.require(isodual::canonical_divisor_test(*curve, params),
              "expected the canonical route to accept " + label);
    const isodual::Flag flag = isodual::build_flag(*curve, params);
    const auto search = isodual::find_isometry_vector(flag);
    c.require(search.status == isodual::IsometrySearch::Status::Found,
              "expected a witness at the counterexample " + label);
    if (search.status == isodual::IsometrySearch::Status::Found)
      c.require(isodual::verify_isometry(flag, search.x), "witness failed verification at " + label);
    c.log << "    note: reported disagreement at " << label
          << ": the blanket ramified-impossibility claim fails; a fully verified"
             " isometry vector exists and l(E) = g confirms it\n";
  }
  return c;
}

Check criterion7_symmetry() {
  Check c;
  const KummerCurve small = make_c7();
  const KummerCurve h = make_hermitian();
  int isodual_count = 0;

  auto run_case = [&](const KummerCurve& curve, const FlagParams& params) {
    if (params.base != BasePlace::Infinity) return;
    if (!isodual::canonical_divisor_test(curve, params)) return;
    ++isodual_count;
    const std::string label = "t=" + std::to_string(params.t) + " beta=" + beta_label(params.beta);
    const auto jumps = semigroups::code_jump_set(curve, params, Method::Closed);
    c.require(isodual::symmetry_holds(jumps, curve.n_for(params.t), curve.genus(),
                                      semigroups::beta_sum(params)),
              "pairwise symmetry fails at " + label);
    c.require(isodual::code_jump_set_via_duality(curve, params.t, params.beta) == jumps,
              "duality route differs at " + label);
    const std::int64_t s = semigroups::beta_sum(params);
    if (2 * s < curve.n_for(params.t) + 2 * curve.genus() - 1) {
      c.require(isodual::code_jump_set_from_head(curve, params.t, params.beta) == jumps,
                "head/mirror route differs at " + label);
    } else {
      c.log << "    note: head/mirror route skipped at " << label
            << " (sum(beta) outside its stated window)\n";
    }
  };

  for (const auto& params : small_curve_cases()) run_case(small, params);
  for (const auto& expect : golden_cases())
    run_case(h, FlagParams{expect.t, BasePlace::Infinity, expect.beta});

  c.require(isodual_count > 0, "no isometry-dual case reached");
  c.log << "    " << isodual_count
        << " isometry-dual flags: symmetry and both reconstruction routes exact\n";
  return c;
}

Check criterion8_structural_invariants() {
  Check c;
  const KummerCurve small = make_c7();
  const KummerCurve h = make_hermitian();

  // Riemann-Roch consistency beyond 2g - 2.
  for (const KummerCurve* curve : {&small, &h}) {
    const std::int64_t g = curve->genus();
    for (std::int64_t a = 2 * g - 1; a <= 2 * g + 20; ++a) {
      CurveDivisor d;
      d.add(Place::infinity(), a);
      c.require(kummer::rr_dim(*curve, d) == a + 1 - g, "RR consistency fails at aP");
      d.add(Place::ramified(1), 2);
      d.add(Place::ramified(2), -1);
      c.require(kummer::rr_dim(*curve, d) == d.degree() + 1 - g, "RR consistency fails with tail");
    }
  }

  // k = l(G) - l(G - D) for every constructed code.
  for (const KummerCurve* curve : {&small, &h}) {
    for (int t : {2, curve->r()}) {
      const CurveDivisor d = kummer::standard_D(*curve, t);
      const FlagParams params{t, BasePlace::Infinity,
                              std::vector<std::int64_t>(static_cast<std::size_t>(t), 1)};
      const std::int64_t lo = -semigroups::beta_sum(params) - 1;
      const std::int64_t hi = curve == &h ? lo + 12 : curve->n_for(t) + 2 * curve->genus();
      for (std::int64_t a = lo; a <= hi; ++a) {
        const CurveDivisor gdiv = semigroups::flag_divisor(*curve, params, a);
        const std::int64_t k = codes::code_dimension(*curve, d, gdiv);
        c.require(k == kummer::rr_dim(*curve, gdiv) - kummer::rr_dim(*curve, gdiv - d),
                  "k != l(G) - l(G-D) at a=" + std::to_string(a));
      }
    }
  }

  // Divisor-equivalence identity across a full sweep.
  for (const KummerCurve* curve : {&small, &h}) {
    for (int t : {2, curve->r()}) {
      const CurveDivisor d = kummer::standard_D(*curve, t);
      const std::int64_t n = curve->n_for(t);
      CurveDivisor g_beta, g_beta_plus1;
      for (int i = 1; i <= t; ++i) {
        g_beta.add(Place::ramified(i), i);
        g_beta_plus1.add(Place::ramified(i), i + 1);
      }
      for (std::int64_t a = -4; a <= n + 2 * curve->genus() + 2; ++a) {
        CurveDivisor high;
        high.add(Place::infinity(), a);
        CurveDivisor low;
        low.add(Place::infinity(), a - n - t);
        c.require(kummer::rr_dim(*curve, high + g_beta - d) ==
                      kummer::rr_dim(*curve, low + g_beta_plus1),
                  "divisor-equivalence identity fails at a=" + std::to_string(a));
      }
    }
  }

  // Rank-nullity and exact annihilation on random matrices.
  std::mt19937 rng(2024);
  for (auto field : {small.field_ptr(), h.field_ptr()}) {
    std::uniform_int_distribution<Repr> dist(0, field->q() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      linalg::Matrix m(field, 6, 9);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 9; ++j) m.set(i, j, dist(rng));
      const auto kernel = linalg::nullspace(m);
      c.require(linalg::rank(m) + kernel.rows() == m.cols(), "rank-nullity violated");
      c.require(kernel.rows() == 0 || (m * kernel.transpose()).is_zero(),
                "nullspace product not zero");
      const auto reduced = linalg::rref(m).reduced;
      c.require(linalg::rref(reduced).reduced == reduced, "rref not idempotent");
    }
  }

  c.log << "    Riemann-Roch, code-dimension, divisor-equivalence and linear-algebra sweeps exact\n";
  return c;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    std::string label;
    std::function<Check()> run;
  };
  const std::vector<Entry> criteria = {
      {1, "Example reproduction, closed form, < 1 s", criterion1_example_reproduction},
      {2, "Oracle equivalence on the five F_16 sets, < 2 min", criterion2_oracle_equivalence},
      {3, "Exhaustive small-curve method equivalence", criterion3_small_curve_equivalence},
      {4, "Canonical-divisor internal consistency, >= 20 betas per curve",
       criterion4_canonical_consistency},
      {5, "Oracle-vs-theorem duality with witness verification", criterion5_oracle_vs_theorem},
      {6, "Ramified-base impossibility by exhaustive search", criterion6_ramified_impossibility},
      {7, "Jump-set symmetry and reconstruction routes", criterion7_symmetry},
      {8, "Structural invariants", criterion8_structural_invariants},
  };

  int failures = 0;
  for (const auto& entry : criteria) {
    Check result;
    try {
      result = entry.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.log << "    exception: " << e.what() << "\n";
    }
    std::cout << (result.ok ? "[PASS]" : "[FAIL]") << " criterion " << entry.id << ": "
              << entry.label << "\n"
              << result.log.str();
    if (!result.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
