#include "bifree/error.hpp"
#include "bifree/multfn.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bifree;
namespace ts = testing_support;

namespace {

Rational eval_labels(const MultFn& f, const ts::Labels& l) {
  Rational v = 1;
  for (int s : ts::block_sizes(l)) v *= f[s];
  return v;
}

// Kreweras sums over NC(n) (or NC'(n)) built from set partitions and the brute-force complement.
MultFn brute_convolve(const MultFn& f, const MultFn& g, bool pinched) {
  const int trunc = std::min(f.trunc(), g.trunc());
  std::vector<Rational> out;
  for (int n = 1; n <= trunc; ++n) {
    Rational sum = 0;
    for (const auto& l : ts::all_set_partitions(n)) {
      if (!ts::crossing_free(l)) continue;
      if (pinched && n > 1 && std::count(l.begin(), l.end(), l[0]) != 1) continue;
      sum += eval_labels(f, l) * eval_labels(g, ts::brute_kreweras(l));
    }
    out.push_back(sum);
  }
  return MultFn(out);
}

MultFn ints(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return MultFn(v);
}

}  // namespace

TEST_CASE("basic access") {
  const MultFn f = ints({1, 2, 3});
  CHECK(f.trunc() == 3);
  CHECK(f[2] == 2);
  CHECK(f.is_normalized());
  CHECK(!ints({2, 1}).is_normalized());
  CHECK_THROWS_AS(f[4], Error);
  CHECK_THROWS_AS(f[0], Error);
  CHECK(f.truncated(2) == ints({1, 2}));
}

TEST_CASE("evaluation on a partition") {
  const MultFn f = ints({2, 3, 5, 7});
  CHECK(eval_on(f, parse_partition("{1,2|3}")) == 6);
  CHECK(eval_on(f, parse_partition("{1|2|3|4}")) == 16);
  CHECK(eval_on(f, parse_partition("{1,2,3,4}")) == 7);
  CHECK(eval_on(f, parse_partition("{1,4|2,3}")) == 9);
}

TEST_CASE("convolution in low degree") {
  const MultFn f = ints({2, 3, 5});
  const MultFn g = ints({7, 11, 13});
  const MultFn h = convolve(f, g);
  CHECK(h[1] == 14);
  // NC(2): {1,2} with K = {1|2}, and {1|2} with K = {1,2}.
  CHECK(h[2] == 3 * 49 + 4 * 11);
}

TEST_CASE("convolution matches the brute-force Kreweras sum") {
  RationalSampler rng(11);
  for (int rep = 0; rep < 5; ++rep) {
    const MultFn f = random_multfn(rng, 6, false);
    const MultFn g = random_multfn(rng, 6, false);
    CHECK(convolve(f, g) == brute_convolve(f, g, false));
  }
  RationalSampler rng2(12);
  for (int rep = 0; rep < 5; ++rep) {
    const MultFn f = random_multfn(rng2, 6, true);
    const MultFn g = random_multfn(rng2, 6, true);
    CHECK(pinched_convolve(f, g) == brute_convolve(f, g, true));
  }
}

TEST_CASE("convolution is commutative, the pinched one is not") {
  RationalSampler rng(3);
  bool pinched_differs = false;
  for (int rep = 0; rep < 10; ++rep) {
    const MultFn f = random_multfn(rng, 7, true);
    const MultFn g = random_multfn(rng, 7, true);
    CHECK(convolve(f, g) == convolve(g, f));
    if (!(pinched_convolve(f, g).truncated(3) == pinched_convolve(g, f).truncated(3))) pinched_differs = true;
  }
  CHECK(pinched_differs);
}

TEST_CASE("pinched convolution in low degree") {
  const MultFn f = ints({1, 2, 3});
  const MultFn g = ints({1, 5, 7});
  const MultFn h = pinched_convolve(f, g);
  CHECK(h[1] == 1);
  // NC'(2) = {{1|2}}, K({1|2}) = {1,2}.
  CHECK(h[2] == 5);
  // NC'(3): {1|2|3} -> K = {1,2,3}; {1|2,3} -> K = {1,2|3}.
  CHECK(h[3] == 7 + 2 * 5);
  CHECK_THROWS_AS(pinched_convolve(ints({2, 1}), g), Error);
}

TEST_CASE("composition and inverse-product identities") {
  RationalSampler rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    const MultFn f = random_multfn(rng, 7, true);
    const MultFn g = random_multfn(rng, 7, true);
    const Series1 pf = phi_series(f);
    const Series1 pp = phi_series(pinched_convolve(f, g));
    CHECK(compose(pf, pp) == phi_series(convolve(f, g)));
    const Series1 lhs = compositional_inverse(phi_series(convolve(f, g))).mul_z().truncated(7);
    const Series1 rhs = compositional_inverse(pf) * compositional_inverse(phi_series(g));
    CHECK(compare(lhs, rhs).equal);
  }
}

TEST_CASE("inverse-product identity needs the full convolution") {
  const MultFn f = ints({1, 2, 3});
  const MultFn g = ints({1, 5, 7});
  const Series1 inv_f = compositional_inverse(phi_series(f));
  const Series1 inv_g = compositional_inverse(phi_series(g));
  CHECK(to_string(inv_f * inv_g) == "z^2 - 7*z^3");
  const Series1 full = compositional_inverse(phi_series(convolve(f, g))).mul_z().truncated(3);
  CHECK(to_string(full) == "z^2 - 7*z^3");
  // With the pinched product the z^3 coefficients disagree.
  const Series1 pinched = compositional_inverse(phi_series(pinched_convolve(f, g))).mul_z().truncated(3);
  CHECK(to_string(pinched) == "z^2 - 5*z^3");
}

TEST_CASE("series conversions") {
  const MultFn f = ints({1, 2, 3});
  const Series1 p = phi_series(f);
  CHECK(p.order() == 3);
  CHECK(to_string(p) == "z + 2*z^2 + 3*z^3");
  CHECK(from_phi_series(p) == f);
  // Cumulants 1, 0, 0: moments are Catalan numbers at even degree... here all kappa_1 only.
  CHECK(to_string(free_moment_series(ints({1, 0, 0, 0}))) == "1 + z + z^2 + z^3 + z^4");
  CHECK(to_string(free_moment_series(ints({0, 1, 0, 0}))) == "1 + z^2 + 2*z^4");
}
