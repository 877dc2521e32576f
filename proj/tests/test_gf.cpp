#include <doctest.h>

#include <algorithm>
#include <set>

#include "agflag/gf.hpp"

using namespace agflag;
using gf::Field;
using gf::FieldElement;
using gf::Repr;

namespace {

gf::FieldPtr f7() { return gf::make_prime_field(7); }
gf::FieldPtr f16() { return gf::make_field(2, 4, {1, 1, 0, 0, 1}); }

// Independent oracle: the set of m-th powers by direct enumeration.
std::set<Repr> power_set(const Field& f, std::int64_t m) {
  std::set<Repr> out;
  for (Repr v = 1; v < f.q(); ++v) out.insert(f.pow(v, m));
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  auto f = f7();
  CHECK(f->mul(3, 5) == 1);
  CHECK(f->inv(3) == 5);
  CHECK(f->add(4, 5) == 2);
  CHECK(f->sub(2, 5) == 4);
  CHECK(f->neg(0) == 0);
  CHECK(f->div(6, 2) == 3);
}

TEST_CASE("extension field reduction") {
  auto f = f16();
  // w has repr 2; w^4 = w + 1 has repr 3.
  CHECK(f->pow(2, 4) == 3);
  CHECK(f->q() == 16);
  // w generates the multiplicative group.
  std::set<Repr> seen;
  Repr acc = 1;
  for (int i = 0; i < 15; ++i) {
    seen.insert(acc);
    acc = f->mul(acc, 2);
  }
  CHECK(seen.size() == 15);
  CHECK(acc == 1);
}

TEST_CASE("field axioms on all of F_16") {
  auto f = f16();
  for (Repr a = 0; a < f->q(); ++a) {
    CHECK(f->add(a, f->neg(a)) == 0);
    if (a != 0) {
      CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->pow(a, f->q() - 1) == 1);
    }
    for (Repr b = 0; b < f->q(); ++b) {
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
    }
  }
}

TEST_CASE("encoding round-trip") {
  auto f = f16();
  for (Repr a = 0; a < f->q(); ++a) CHECK(f->from_digits(f->to_digits(a)) == a);
}

TEST_CASE("negative exponents") {
  auto f = f7();
  CHECK(f->pow(3, -1) == 5);
  CHECK(f->pow(3, -2) == f->mul(5, 5));
  CHECK_THROWS_AS((void)f->pow(0, -1), Error);
}

TEST_CASE("element wrapper enforces one field per expression") {
  auto a_field = f7();
  auto b_field = f16();
  FieldElement a(a_field.get(), 3);
  FieldElement b(b_field.get(), 3);
  CHECK_THROWS_AS((void)(a + b), Error);
  auto a2_field = gf::make_prime_field(7);
  FieldElement a2(a2_field.get(), 5);
  CHECK((a * a2).repr() == 1);  // same spec by content, distinct objects
}

TEST_CASE("division by zero is an error") {
  auto f = f7();
  CHECK_THROWS_AS((void)f->inv(0), Error);
  CHECK_THROWS_AS((void)f->div(1, 0), Error);
}

TEST_CASE("construction rejects bad specs") {
  CHECK_THROWS_AS(Field(6, 1, {0, 1}), Error);         // p not prime
  CHECK_THROWS_AS(Field(2, 4, {1, 0, 0, 0, 1}), Error);  // x^4+1 = (x+1)^4 over F_2
  CHECK_THROWS_AS(Field(2, 4, {1, 1, 0, 0, 2}), Error);  // out-of-range coefficient
  CHECK_THROWS_AS(Field(2, 2, {1, 1}), Error);           // wrong length
}

TEST_CASE("mth power class against enumeration") {
  auto f = f7();
  const auto cubes = power_set(*f, 3);
  CHECK(cubes == std::set<Repr>{1, 6});
  CHECK(gf::mth_power_class(*f, 6, 3));
  CHECK_FALSE(gf::mth_power_class(*f, 2, 3));
  CHECK(gf::mth_power_class(*f, 1, 3));

  for (auto field : {f7(), f16()})
    for (std::int64_t m : {2, 3, 5}) {
      const auto powers = power_set(*field, m);
      for (Repr u = 1; u < field->q(); ++u) {
        CHECK(gf::mth_power_class(*field, u, m) == (powers.count(u) > 0));
        CHECK(gf::mth_power_class(*field, u, m) == !gf::mth_roots(*field, u, m).empty());
      }
    }
}

TEST_CASE("mth roots by exhaustive scan") {
  auto f = f7();
  CHECK(gf::mth_roots(*f, 6, 3) == std::vector<Repr>{3, 5, 6});
  CHECK(gf::mth_roots(*f, 2, 3).empty());
  CHECK(gf::mth_roots(*f, 1, 3) == std::vector<Repr>{1, 2, 4});
  CHECK_THROWS_AS((void)gf::mth_roots(*f, 0, 3), Error);

  auto f2 = f16();
  for (Repr u = 1; u < f2->q(); ++u) {
    const auto roots = gf::mth_roots(*f2, u, 5);
    if (!roots.empty()) CHECK(roots.size() == 5);  // gcd(5, 15) = 5
    for (Repr v : roots) CHECK(f2->pow(v, 5) == u);
    CHECK(std::is_sorted(roots.begin(), roots.end()));
  }
}
