#include <doctest.h>

#include <random>

#include "agflag/linalg.hpp"

using namespace agflag;
using gf::Repr;
using linalg::Matrix;
using linalg::Poly;

namespace {

gf::FieldPtr f7() { return gf::make_prime_field(7); }
gf::FieldPtr f16() { return gf::make_field(2, 4, {1, 1, 0, 0, 1}); }

Matrix random_matrix(gf::FieldPtr f, std::size_t rows, std::size_t cols, std::mt19937& rng) {
  std::uniform_int_distribution<Repr> dist(0, f->q() - 1);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, dist(rng));
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  auto f = f7();
  CHECK(linalg::rref(Matrix::identity(f, 3)).rank == 3);

  const Matrix dependent = Matrix::from_rows(f, {{1, 2}, {2, 4}});
  const auto res = linalg::rref(dependent);
  CHECK(res.rank == 1);
  CHECK(res.pivot_cols == std::vector<std::size_t>{0});
  CHECK(res.reduced.at(0, 0) == 1);
  CHECK(res.reduced.at(0, 1) == 2);
  CHECK(res.reduced.at(1, 0) == 0);
  CHECK(res.reduced.at(1, 1) == 0);

  CHECK(linalg::rref(Matrix(f, 2, 5)).rank == 0);
}

TEST_CASE("rref is idempotent and deterministic") {
  std::mt19937 rng(7);
  for (auto f : {f7(), f16()})
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix m = random_matrix(f, 5, 7, rng);
      const Matrix once = linalg::rref(m).reduced;
      CHECK(linalg::rref(once).reduced == once);
      CHECK(linalg::rref(m).reduced == once);
    }
}

TEST_CASE("nullspace basis and rank-nullity") {
  auto f = f7();
  CHECK(linalg::nullspace(Matrix::identity(f, 4)).rows() == 0);

  const Matrix row = Matrix::from_rows(f, {{1, 1}});
  const Matrix ns = linalg::nullspace(row);
  REQUIRE(ns.rows() == 1);
  CHECK(ns.row(0) == std::vector<Repr>{6, 1});

  std::mt19937 rng(11);
  for (auto field : {f7(), f16()})
    for (int trial = 0; trial < 25; ++trial) {
      const Matrix m = random_matrix(field, 4, 6, rng);
      const Matrix kernel = linalg::nullspace(m);
      CHECK(linalg::rank(m) + kernel.rows() == m.cols());
      if (kernel.rows() > 0) CHECK((m * kernel.transpose()).is_zero());
      CHECK(linalg::rank(kernel) == kernel.rows());
    }
}

TEST_CASE("poly evaluation") {
  auto f = f7();
  const Poly h = Poly::linear_root(f, 0) * Poly::linear_root(f, 1);  // x(x-1)
  CHECK(linalg::poly_eval(h, 3) == 6);
  CHECK(linalg::poly_eval(h, 0) == 0);

  const Poly c = Poly(f, {4, 0, 2});
  CHECK(linalg::poly_eval(c, 0) == 4);
  CHECK(linalg::poly_eval(Poly::zero(f), 5) == 0);
}

TEST_CASE("poly root multiplicity and exact division") {
  auto f = f7();
  Poly h = Poly::constant(f, 3);
  for (int i = 0; i < 3; ++i) h = h * Poly::linear_root(f, 2);
  h = h * Poly::linear_root(f, 5);
  CHECK(h.root_multiplicity(2) == 3);
  CHECK(h.root_multiplicity(5) == 1);
  CHECK(h.root_multiplicity(1) == 0);
  CHECK(h.divide_linear_root(2).root_multiplicity(2) == 2);
  CHECK_THROWS_AS((void)h.divide_linear_root(3), Error);
}

TEST_CASE("poly degree bookkeeping") {
  auto f = f7();
  CHECK(Poly(f, {0, 0, 0}).is_zero());
  CHECK(Poly(f, {1, 2, 0}).degree() == 1);
  CHECK(Poly(f, {5}).times_x_power(3).degree() == 3);
  const Poly a(f, {1, 1});
  const Poly b(f, {6, 6});
  CHECK((a + b).is_zero());
}
