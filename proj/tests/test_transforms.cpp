#include "bifree/error.hpp"
#include "bifree/transforms.hpp"
#include "doctest.h"

#include <functional>

using namespace bifree;

namespace {

MultFn ints(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return MultFn(v);
}

PairDistribution means_and(int trunc, const Rational& c) {
  PairDistribution d(trunc);
  d.set_kappa(1, 0, 1);
  d.set_kappa(0, 1, 1);
  d.set_kappa(1, 1, c);
  return d;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("one-variable S-transform") {
  CHECK(to_string(s_transform_1var(ints({1, 0, 0, 0}), Method::Cumulant)) == "1");
  CHECK(to_string(s_transform_1var(ints({1, 1, 0, 0}), Method::Cumulant)) == "1 - z + 2*z^2 - 5*z^3");
  CHECK(to_string(s_transform_1var(ints({1, 1, 0, 0}), Method::Analytic)) == "1 - z + 2*z^2 - 5*z^3");
  CHECK(code_of([] { s_transform_1var(ints({0, 1}), Method::Analytic); }) == ErrorCode::ZeroMean);
  CHECK(code_of([] { s_transform_1var(ints({2, 1}), Method::Cumulant); }) == ErrorCode::NotNormalized);
  // Scaling a by 2 divides S by 2.
  CHECK(to_string(s_transform_1var(ints({2, 4, 0, 0}), Method::Analytic)) == "1/2 - 1/2*z + z^2 - 5/2*z^3");

  RationalSampler rng(1);
  for (int trunc = 1; trunc <= 8; ++trunc) {
    const MultFn k = random_multfn(rng, trunc, true);
    CHECK(s_transform_1var(k, Method::Analytic) == s_transform_1var(k, Method::Cumulant));
  }
}

TEST_CASE("rescaling") {
  RationalSampler rng(2);
  const PairDistribution d = random_pair(rng, 4, Normalization::None);
  CHECK(rescale_pair(d, 1, 1) == d);
  const PairDistribution r = rescale_pair(d, 2, 1);
  CHECK(r.kappa(2, 1) == 4 * d.kappa(2, 1));
  CHECK(rescale_pair(d, 2, 3).kappa(1, 2) == 18 * d.kappa(1, 2));
  CHECK(code_of([&] { rescale_pair(d, 0, 1); }) == ErrorCode::ZeroScale);
}

TEST_CASE("partial T-transform examples") {
  PairDistribution plain(4);
  plain.set_kappa(0, 1, 1);
  plain.set_kappa(2, 0, 3);
  plain.set_kappa(0, 3, -2);
  CHECK(to_string(partial_T(plain, Method::Cumulant)) == "1");
  CHECK(to_string(partial_T(plain, Method::Analytic)) == "1");
  CHECK(to_string(partial_T(means_and(4, 5), Method::Cumulant)) == "1 + 5*z");
  CHECK(to_string(partial_T(means_and(4, 5), Method::Analytic)) == "1 + 5*z");
  CHECK(partial_T(means_and(4, 5), Method::Cumulant).order() == 3);
  PairDistribution off = means_and(3, 1);
  off.set_kappa(0, 1, 2);
  CHECK(code_of([&] { partial_T(off, Method::Cumulant); }) == ErrorCode::NotNormalized);
  off.set_kappa(0, 1, 0);
  CHECK(code_of([&] { partial_T(off, Method::Analytic); }) == ErrorCode::ZeroMean);
}

TEST_CASE("partial S-transform examples") {
  PairDistribution plain(4);
  plain.set_kappa(1, 0, 1);
  plain.set_kappa(0, 1, 1);
  plain.set_kappa(3, 0, 7);
  CHECK(to_string(partial_S(plain, Method::Cumulant)) == "1");
  CHECK(to_string(partial_S(plain, Method::Analytic)) == "1");
  CHECK(to_string(partial_S(means_and(3, 2), Method::Cumulant)) == "3 + 2*z + 2*w");
  CHECK(to_string(partial_S(means_and(3, 2), Method::Analytic)) == "3 + 2*z + 2*w");
  PairDistribution off = means_and(3, 1);
  off.set_kappa(1, 0, 3);
  CHECK(code_of([&] { partial_S(off, Method::Cumulant); }) == ErrorCode::NotNormalized);
  CHECK(code_of([&] { partial_S(means_and(1, 1), Method::Cumulant); }) == ErrorCode::TruncationExceeded);
}

TEST_CASE("analytic and cumulant forms agree") {
  RationalSampler rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    const PairDistribution t = random_pair(rng, 8, Normalization::RightMean);
    CHECK(partial_T(t, Method::Analytic) == partial_T(t, Method::Cumulant));
    const PairDistribution s = random_pair(rng, 8, Normalization::BothMeans);
    CHECK(partial_S(s, Method::Analytic) == partial_S(s, Method::Cumulant));
  }
}

TEST_CASE("transforms do not see the scale of the faces") {
  RationalSampler rng(4);
  for (int rep = 0; rep < 5; ++rep) {
    const PairDistribution d = random_pair(rng, 6, Normalization::BothMeans);
    const Rational lambda = rng.next_nonzero();
    const Rational mu = rng.next_nonzero();
    CHECK(partial_T(rescale_pair(d, 1, mu), Method::Analytic) == partial_T(d, Method::Cumulant));
    CHECK(partial_S(rescale_pair(d, lambda, mu), Method::Analytic) == partial_S(d, Method::Cumulant));
  }
}

TEST_CASE("pairs without right cumulants reduce to one variable") {
  RationalSampler rng(5);
  PairDistribution d(6);
  d.set_kappa(0, 1, 1);
  d.set_kappa(1, 0, 1);
  for (int n = 2; n <= 6; ++n) d.set_kappa(n, 0, rng.next());
  CHECK(to_string(partial_S(d, Method::Analytic)) == "1");
  const Series1 s = s_transform_1var(d.left_cumulants(), Method::Analytic);
  CHECK(s.mul_z().truncated(s.order()) == compositional_inverse(phi_series(d.left_cumulants())).truncated(s.order()));
}

TEST_CASE("multiplicativity reports") {
  const BiFreeFamily trivial{means_and(6, 0), means_and(6, 0)};
  CHECK(check_T_multiplicativity(trivial, 5).ok());

  const BiFreeFamily cs{means_and(6, 2), means_and(6, 3)};
  const CheckReport t = check_T_multiplicativity(cs, 5);
  CHECK(t.ok());
  CHECK(t.checks.front().lhs(1, 0) == 5);

  const CheckReport s = check_S_multiplicativity(cs, 3, RightOrder::B1B2, true);
  CHECK(s.ok());
  CHECK(s.checks.front().lhs(0, 0) == 12);
  REQUIRE(s.swapped_order.has_value());

  RationalSampler rng(6);
  const BiFreeFamily fam = random_family(rng, 6, Normalization::BothMeans);
  const CheckReport good = check_S_multiplicativity(fam, 4);
  CHECK(good.ok());
  const CheckReport bad = check_S_multiplicativity(fam, 4, RightOrder::B2B1);
  CHECK(!bad.ok());
  REQUIRE(bad.first_failure() != nullptr);
  CHECK(bad.first_failure()->result.first_mismatch.has_value());

  CHECK(code_of([&] { check_S_multiplicativity(fam, 5); }) == ErrorCode::TruncationExceeded);
  BiFreeFamily unnorm = fam;
  unnorm.second.set_kappa(0, 1, 2);
  CHECK(code_of([&] { check_T_multiplicativity(unnorm, 4); }) == ErrorCode::NotNormalized);
}

TEST_CASE("report rendering") {
  RationalSampler rng(7);
  const BiFreeFamily fam = random_family(rng, 5, Normalization::BothMeans);
  const nlohmann::json ok = to_json(check_S_multiplicativity(fam, 3));
  CHECK(ok["status"] == "ok");
  CHECK(ok["order"] == 3);
  CHECK(ok["witness"].is_null());
  const nlohmann::json bad = to_json(check_S_multiplicativity(fam, 3, RightOrder::B2B1));
  CHECK(bad["status"] == "mismatch");
  CHECK(bad["witness"].contains("n"));
  CHECK(bad["witness"]["lhs"] != bad["witness"]["rhs"]);
  const std::string text = to_text(check_T_multiplicativity(fam, 3));
  CHECK(text.find("PASS") != std::string::npos);
}

TEST_CASE("foundational identities") {
  RationalSampler rng(8);
  for (int rep = 0; rep < 5; ++rep) {
    const MultFn f = random_multfn(rng, 6, true);
    const MultFn g = random_multfn(rng, 6, true);
    CHECK(check_composition_identity(f, g).result.equal);
    CHECK(check_inverse_product_identity(f, g).result.equal);
    CHECK(check_bimoment_identity(random_pair(rng, 6, Normalization::None)).result.equal);
  }
}
