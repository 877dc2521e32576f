#include "agflag/codes.hpp"

namespace agflag::codes {

std::vector<Place> evaluation_columns(const CurveDivisor& d) {
  std::vector<Place> columns;
  for (const auto& [p, c] : d.support()) {
    if (c != 1) fail(Errc::PreconditionViolated, "evaluation divisor must have coefficient 1 everywhere");
    if (p.kind == Place::Kind::Infinity)
      fail(Errc::PreconditionViolated, "evaluation at infinity unsupported");
    columns.push_back(p);
  }
  return columns;  // map order: ramified by index, then split by (alpha, y0)
}

Matrix evaluation_matrix(const KummerCurve& curve, const CurveDivisor& g,
                         const std::vector<Place>& columns) {
  const auto basis = kummer::rr_basis(curve, g);
  Matrix rows(curve.field_ptr(), basis.size(), columns.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j)
      rows.set(i, j, kummer::evaluate_basis(curve, basis[i], columns[j]));
  return rows;
}

AGCode build_code(const KummerCurve& curve, const CurveDivisor& d, const CurveDivisor& g) {
  for (const auto& [p, c] : d.support())
    if (g.coeff(p) != 0) fail(Errc::SupportOverlap, "supp(G) meets supp(D) at " + to_string(p));
  if (!kummer::is_galois_invariant(curve, g))
    fail(Errc::NotGaloisInvariant, "G must be Galois-invariant");

  auto columns = evaluation_columns(d);
  const auto reduced = linalg::rref(evaluation_matrix(curve, g, columns));
  Matrix generator(curve.field_ptr(), 0, columns.size());
  for (std::size_t i = 0; i < reduced.rank; ++i) generator.append_row(reduced.reduced.row(i));

  AGCode code{&curve, d, g, std::move(columns), std::move(generator), 0, 0};
  code.n = static_cast<std::int64_t>(code.columns.size());
  code.k = static_cast<std::int64_t>(reduced.rank);
  return code;
}

std::int64_t code_dimension(const KummerCurve& curve, const CurveDivisor& d, const CurveDivisor& g) {
  return static_cast<std::int64_t>(linalg::rank(evaluation_matrix(curve, g, evaluation_columns(d))));
}

Matrix dual_code(const AGCode& code) { return linalg::nullspace(code.generator); }

std::int64_t designed_distance(const AGCode& code) { return code.n - code.g.degree(); }

std::int64_t min_distance_exhaustive(const AGCode& code) {
  if (code.k == 0) return code.n + 1;  // zero-code sentinel
  const Repr q = code.curve->field().q();
  double size = 1.0;
  for (std::int64_t i = 0; i < code.k; ++i) size *= static_cast<double>(q);
  if (size > static_cast<double>(1u << 20)) fail(Errc::TooLarge, "codeword enumeration beyond guard");

  const auto& f = code.curve->field();
  std::vector<Repr> msg(static_cast<std::size_t>(code.k), 0);
  std::int64_t best = code.n + 1;
  while (true) {
    // advance odometer
    std::size_t pos = 0;
    while (pos < msg.size() && ++msg[pos] == q) msg[pos++] = 0;
    if (pos == msg.size()) break;

    std::int64_t weight = 0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(code.n); ++j) {
      Repr acc = 0;
      for (std::size_t i = 0; i < msg.size(); ++i)
        if (msg[i] != 0) acc = f.add(acc, f.mul(msg[i], code.generator.at(i, j)));
      if (acc != 0) ++weight;
    }
    if (weight < best) best = weight;
  }
  return best;
}

}  // namespace agflag::codes
