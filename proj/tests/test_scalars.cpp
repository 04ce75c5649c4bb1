/**
 * @file test_scalars.cpp
 * @brief Exact cyclotomic arithmetic and sparse linear algebra.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gsym/error.hpp"
#include "gsym/linalg.hpp"
#include "gsym/scalars.hpp"

using namespace gsym;

namespace {

Scalar random_scalar(const FieldCtx* f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c;
  for (int k = 0; k < f->degree; ++k) c.emplace_back(num(rng), den(rng));
  return Scalar(f, c);
}

}  // namespace

TEST_CASE("field contexts have cyclotomic minimal polynomials") {
  CHECK(make_field(1)->degree == 1);
  CHECK(make_field(2)->degree == 1);
  const FieldCtx* f4 = make_field(4);
  CHECK(f4->degree == 2);
  CHECK(f4->minpoly[0] == Rational(1));
  CHECK(f4->minpoly[1] == Rational(0));
  CHECK(f4->minpoly[2] == Rational(1));
  for (int m = 1; m <= 24; ++m) CHECK(make_field(m)->degree == euler_phi(m));
  // Phi_12 = x^4 - x^2 + 1.
  const FieldCtx* f12 = make_field(12);
  CHECK(f12->minpoly[0] == Rational(1));
  CHECK(f12->minpoly[2] == Rational(-1));
  CHECK(f12->minpoly[4] == Rational(1));
  CHECK_THROWS_AS(make_field(0), Error);
  CHECK(make_field(6) == make_field(6));
}

TEST_CASE("roots of unity") {
  const FieldCtx* f4 = make_field(4);
  Scalar i = root_of_unity(f4, 4, 1);
  CHECK(i * i == Scalar(-1));
  CHECK(root_of_unity(f4, 2, 1) == Scalar(-1));
  CHECK(root_of_unity(make_field(6), 3, 3) == Scalar(1));
  CHECK_THROWS_AS(root_of_unity(f4, 3, 1), Error);
  try {
    root_of_unity(f4, 3, 1);
  } catch (const Error& e) {
    CHECK(e.name() == "root-not-in-field");
  }
  for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
    const FieldCtx* f = make_field(m);
    for (int k = 1; k <= m; ++k) {
      if (m % k) continue;
      Scalar z = root_of_unity(f, k, 1);
      CHECK(pow(z, k) == Scalar(1));
      for (int d = 1; d < k; ++d) CHECK(pow(z, d) != Scalar(1));
    }
  }
}

TEST_CASE("field axioms hold exactly on random elements") {
  std::mt19937 rng(7);
  for (int m : {3, 4, 5, 8, 12}) {
    const FieldCtx* f = make_field(m);
    for (int t = 0; t < 40; ++t) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
      Scalar d = a;
      d.add_mul(b, c);
      CHECK(d == a + b * c);
    }
  }
}

TEST_CASE("rationals survive overflow of the machine-word fast path") {
  Rational big(1LL << 61);
  Rational sq = big * big;
  CHECK(sq / big == big);
  CHECK((sq - sq).is_zero());
  CHECK(Rational(6, -4).str() == "-3/2");
  Rational h(1, 3);
  Rational acc;
  for (int k = 0; k < 200; ++k) acc = acc * h + Rational(1);
  CHECK((acc * Rational(2) - Rational(3)) * Rational(1) == acc * Rational(2) - Rational(3));
}

TEST_CASE("rendering of cyclotomic scalars") {
  const FieldCtx* f4 = make_field(4);
  CHECK(Scalar(1, 2).str() == "1/2");
  Scalar i = root_of_unity(f4, 4, 1);
  CHECK((Scalar(1, 2) + Scalar(1, 2) * i).str() == "1/2 + 1/2*zeta(4)^1");
}

TEST_CASE("echelon forms, kernels and inverses") {
  const FieldCtx* f4 = make_field(4);
  Scalar i = root_of_unity(f4, 4, 1);
  Mat a = Mat::from_rows({{1, 2, 3}, {0, i, 1}, {1, 2 + i, 4}}, 3);
  CHECK(rank(a) == 2);
  auto ker = kernel(a);
  REQUIRE(ker.size() == 1);
  CHECK(a.apply(ker[0]).empty());
  Mat b = Mat::from_rows({{1, 2, 0}, {0, i, 1}, {1, 0, 1}}, 3);
  REQUIRE(invertible(b));
  CHECK(b * inverse(b) == Mat::identity(3));
  CHECK(inverse(b) * b == Mat::identity(3));
  Echelon e(3, true);
  e.insert({{0, Scalar(1)}, {1, Scalar(1)}});
  e.insert({{1, Scalar(1)}, {2, Scalar(1)}});
  SVec c;
  CHECK(e.coords({{0, Scalar(1)}, {2, Scalar(-1)}}, c));
  CHECK(svec_get(c, 0) == Scalar(1));
  CHECK(svec_get(c, 1) == Scalar(-1));
  CHECK_FALSE(e.coords(svec_unit(2), c));
  Mat k = kron(Mat::identity(2), b);
  CHECK(k.rows() == 6);
  CHECK(k.block(3, 3, 3, 3) == b);
}
