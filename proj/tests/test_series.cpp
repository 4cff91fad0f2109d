#include "bifree/error.hpp"
#include "bifree/series.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bifree;

namespace {

Series1 poly(int order, std::vector<Rational> c) { return Series1(order, std::move(c)); }

Series1 random_series1(RationalSampler& rng, int order, bool zero_constant) {
  Series1 s(order);
  for (int d = zero_constant ? 1 : 0; d <= order; ++d) s.set(d, rng.next());
  return s;
}

Series2 random_series2(RationalSampler& rng, int order) {
  Series2 s(order);
  for (int t = 0; t <= order; ++t)
    for (int a = 0; a <= t; ++a) s.set(a, t - a, rng.next());
  return s;
}

// Naive product by direct double loop, used as the multiplication oracle.
Series1 naive_product(const Series1& a, const Series1& b) {
  const int n = std::min(a.order(), b.order());
  Series1 out(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) out.set(i + j, out[i + j] + a[i] * b[j]);
  return out;
}

}  // namespace

TEST_CASE("one-variable ring operations") {
  const Series1 one_plus_z = poly(2, {1, 1});
  CHECK(one_plus_z * one_plus_z == poly(2, {1, 2, 1}));
  CHECK((one_plus_z * Series1(2)).is_zero());
  CHECK(poly(4, {0, 1, 1}) * poly(4, {0, 1, -1}) == poly(4, {0, 0, 1, 0, -1}));
  CHECK((poly(3, {1, 2}) + poly(2, {0, 1})).order() == 2);
}

TEST_CASE("multiplication agrees with a naive double loop") {
  RationalSampler rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Series1 a = random_series1(rng, 6, false);
    const Series1 b = random_series1(rng, 6, false);
    CHECK(a * b == naive_product(a, b));
  }
}

TEST_CASE("composition") {
  RationalSampler rng(5);
  const Series1 g = random_series1(rng, 5, true);
  CHECK(compose(Series1::variable(5), g) == g);
  CHECK(compose(poly(4, {1, 1, 1}), poly(4, {0, 0, 1})) == poly(4, {1, 0, 1, 0, 1}));
  CHECK(compose(poly(3, {0, 1, 1}), poly(3, {0, 1, -1, 2})) == poly(3, {0, 1, 0, 0}));
  CHECK_THROWS_AS(compose(g, poly(5, {1, 1})), Error);
  try {
    compose(g, poly(5, {1, 1}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonzeroConstantTerm);
  }
}

TEST_CASE("compositional inverse") {
  CHECK(compositional_inverse(Series1::variable(4)) == Series1::variable(4));
  CHECK(compositional_inverse(poly(3, {0, 2})) == poly(3, {0, Rational(1, 2)}));

  // Signed Catalan numbers invert z + z^2.
  Series1 expected(5);
  for (int k = 1; k <= 5; ++k) {
    const long c = static_cast<long>(testing_support::catalan_number(k - 1));
    expected.set(k, k % 2 == 1 ? c : -c);
  }
  CHECK(compositional_inverse(poly(5, {0, 1, 1})) == expected);

  try {
    compositional_inverse(poly(3, {0, 0, 1}));
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvertible);
  }
  CHECK_THROWS_AS(compositional_inverse(poly(3, {1, 1})), Error);
}

TEST_CASE("inverse composes to the identity on both sides") {
  RationalSampler rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    Series1 f = random_series1(rng, 7, true);
    if (f[1] == 0) f.set(1, 1);
    const Series1 g = compositional_inverse(f);
    CHECK(compose(f, g) == Series1::variable(7));
    CHECK(compose(g, f) == Series1::variable(7));
  }
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(Series1::constant(3, 1)) == Series1::constant(3, 1));
  CHECK(reciprocal(poly(3, {1, -1})) == poly(3, {1, 1, 1, 1}));
  CHECK(reciprocal(poly(2, {1, 2, 1})) == poly(2, {1, -2, 3}));
  try {
    reciprocal(poly(2, {0, 1}));
    FAIL("expected ZeroConstantTerm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroConstantTerm);
  }
  RationalSampler rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Series1 f = random_series1(rng, 6, false);
    if (f[0] == 0) f.set(0, 3);
    CHECK(reciprocal(reciprocal(f)) == f);
    CHECK(f * reciprocal(f) == Series1::constant(6, 1));
  }
}

TEST_CASE("division by z lowers the order") {
  const Series1 f = poly(4, {0, 2, 3});
  CHECK(f.div_z() == poly(3, {2, 3}));
  CHECK(f.mul_z().order() == 5);
  CHECK_THROWS_AS(poly(3, {1, 1}).div_z(), Error);
}

TEST_CASE("comparison reports the common order and first difference") {
  const auto same = compare(poly(3, {1, 2, 3, 4}), poly(5, {1, 2, 3, 4, 9, 9}));
  CHECK(same.equal);
  CHECK(same.order == 3);
  const auto diff = compare(poly(3, {1, 2, 5}), poly(3, {1, 2, 3}));
  CHECK_FALSE(diff.equal);
  REQUIRE(diff.first_mismatch.has_value());
  CHECK(diff.first_mismatch->first == 2);
  CHECK(diff.lhs == 5);
  CHECK(diff.rhs == 3);
}

TEST_CASE("text rendering") {
  CHECK(to_string(poly(2, {1, -1, 2})) == "1 - z + 2*z^2");
  CHECK(to_string(Series1(3)) == "0");
  CHECK(to_string(poly(2, {0, Rational(-1, 2)})) == "-1/2*z");
  Series2 s(3);
  s.set(0, 0, 1);
  s.set(1, 0, 1);
  s.set(1, 1, Rational(-3, 2));
  s.set(0, 2, 1);
  s.set(2, 1, 1);
  CHECK(to_string(s) == "1 + z - 3/2*z*w + w^2 + z^2*w");
}

TEST_CASE("bivariate substitution") {
  Series2 zw(3);
  zw.set(1, 1, 1);
  CHECK(compose_each_variable(zw, Series1::variable(3), Series1::variable(3)) == zw);

  Series2 expected(3);
  expected.set(1, 1, 1);
  expected.set(1, 2, -1);
  CHECK(compose_each_variable(zw, Series1::variable(3), poly(3, {0, 1, -1})) == expected);

  Series2 squares(3);
  squares.set(2, 0, 1);
  squares.set(0, 2, 1);
  Series2 four_z2(3);
  four_z2.set(2, 0, 4);
  CHECK(compose_each_variable(squares, poly(3, {0, 2}), Series1(3)) == four_z2);

  CHECK_THROWS_AS(compose_each_variable(zw, poly(3, {1, 1}), Series1::variable(3)), Error);
}

TEST_CASE("bivariate ring axioms on random inputs") {
  RationalSampler rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Series2 a = random_series2(rng, 5);
    const Series2 b = random_series2(rng, 5);
    const Series2 c = random_series2(rng, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == Series2(5));
  }
}

TEST_CASE("bivariate reciprocal and divisions") {
  RationalSampler rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    Series2 f = random_series2(rng, 5);
    f.set(0, 0, 2);
    CHECK(f * reciprocal(f) == Series2::constant(5, 1));
  }
  Series2 g(4);
  g.set(1, 1, 3);
  g.set(2, 1, 1);
  Series2 q(2);
  q.set(0, 0, 3);
  q.set(1, 0, 1);
  CHECK(g.div_zw() == q);
  CHECK(g.div_w().order() == 3);
  Series2 h(3);
  h.set(1, 0, 1);
  CHECK_THROWS_AS(h.div_w(), Error);
}
