#ifndef AGFLAG_CODES_HPP
#define AGFLAG_CODES_HPP

#include <vector>

#include "agflag/kummer.hpp"

namespace agflag::codes {

using gf::Repr;
using kummer::CurveDivisor;
using kummer::KummerCurve;
using kummer::Place;
using linalg::Matrix;

/// Column order of an evaluation code: ramified places in index order, then
/// split places by (alpha repr, y0 repr). This is the natural place order
/// filtered to supp(D).
std::vector<Place> evaluation_columns(const CurveDivisor& d);

/// Evaluation matrix of a Riemann-Roch basis of L(G) at the given places.
Matrix evaluation_matrix(const KummerCurve& curve, const CurveDivisor& g,
                         const std::vector<Place>& columns);

/// The code C_L(D, G) with generator in reduced row-echelon form.
struct AGCode {
  const KummerCurve* curve;
  CurveDivisor d;
  CurveDivisor g;
  std::vector<Place> columns;
  Matrix generator;  // k x n, rref
  std::int64_t n = 0;
  std::int64_t k = 0;
};

/// Evaluates L(G) at the places of D. D must be a sum of distinct rational
/// places with coefficient one, disjoint from supp(G); G Galois-invariant.
AGCode build_code(const KummerCurve& curve, const CurveDivisor& d, const CurveDivisor& g);

/// Dimension only (rank of the evaluation matrix); the cheap oracle kernel.
std::int64_t code_dimension(const KummerCurve& curve, const CurveDivisor& d, const CurveDivisor& g);

/// Basis of the dual code, dimension n - k.
Matrix dual_code(const AGCode& code);

/// n - deg(G), the designed (Goppa) distance bound.
std::int64_t designed_distance(const AGCode& code);

/// True minimum Hamming weight by codeword enumeration; guarded to
/// q^k <= 2^20. Returns n + 1 for the zero code.
std::int64_t min_distance_exhaustive(const AGCode& code);

}  // namespace agflag::codes

#endif
