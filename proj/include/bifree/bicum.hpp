#pragma once

// Two-faced pair distributions given by their (l,r)-cumulant tables, the
// moment/cumulant relations over BNC(n,m), and cumulants of sums and products
// of two bi-free pairs.

#include "bifree/multfn.hpp"
#include "bifree/rational.hpp"
#include "bifree/series.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace bifree {

/// Cumulant table kappa_{n,m}, n + m <= trunc, with kappa_{0,0} = 1.
class PairDistribution {
 public:
  explicit PairDistribution(int trunc);
  /// Takes the cumulant series as given, except that the constant term is forced to 1.
  explicit PairDistribution(Series2 cumulants);

  int trunc() const { return kappa_.order(); }
  const Rational& kappa(int n, int m) const { return kappa_(n, m); }
  /// InvalidSize for (0,0): that entry is fixed.
  void set_kappa(int n, int m, const Rational& value);
  /// C(z,w) = sum kappa_{n,m} z^n w^m.
  const Series2& cumulants() const { return kappa_; }

  MultFn left_cumulants() const;   ///< kappa_n(a) = kappa_{n,0}
  MultFn right_cumulants() const;  ///< kappa_m(b) = kappa_{0,m}

  PairDistribution truncated(int trunc) const;
  /// The pair with faces exchanged: kappa'_{n,m} = kappa_{m,n}.
  PairDistribution mirrored() const;

  friend bool operator==(const PairDistribution&, const PairDistribution&) = default;

 private:
  Series2 kappa_;
};

/// Two pairs that are bi-free with each other; mixed cumulants vanish by construction.
struct BiFreeFamily {
  PairDistribution first;
  PairDistribution second;
};

/// Which first-order cumulants a random table pins to 1.
enum class Normalization { None, RightMean, BothMeans };

PairDistribution random_pair(RationalSampler& rng, int trunc, Normalization norm);
BiFreeFamily random_family(RationalSampler& rng, int trunc, Normalization norm);

// ---------------------------------------------------------------------------
// Block-profile plans.
//
// A sum over a class of partitions of products of per-block factors only
// depends on the multiset of block profiles (family, #left, #right). A plan
// lists those multisets with integer weights; it is built once by enumeration
// and evaluated against any number of cumulant tables.

struct BlockProfile {
  int family;  ///< 0 = unassigned (moment tables, or left-only blocks of a sum)
  int lefts;
  int rights;
  friend auto operator<=>(const BlockProfile&, const BlockProfile&) = default;
};

struct PlanTerm {
  std::vector<BlockProfile> blocks;
  std::int64_t weight;
};

using Plan = std::vector<PlanTerm>;

enum class RightOrder { B1B2, B2B1 };

/// BNC(n,m), weight 1.
const Plan& moment_plan(int n, int m);
/// BNC(n,m), weight mu(pi, 1_{n,m}).
const Plan& mobius_plan(int n, int m);
/// BNC(2n,2m) joined with the both-sides doubling to 1, family-pure blocks.
const Plan& product_plan(RightOrder order, int n, int m);
/// BNC(n,2m) joined with the right doubling to 1, right-parity-pure blocks.
const Plan& sum_product_plan(int n, int m);

Rational evaluate(const Plan& plan, const std::function<Rational(const BlockProfile&)>& factor);

// ---------------------------------------------------------------------------

/// phi(a^n b^m) = sum over BNC(n,m) of the block cumulants.
Rational moments_from_cumulants(const PairDistribution& d, int n, int m);
/// Inverse of the above; moments(0,0) must be 1 (NotNormalized).
PairDistribution cumulants_from_moments(const Series2& moments);

/// kappa_{n,m}(a1 a2, b1 b2) (or with b2 b1), n + m >= 1.
Rational product_pair_cumulants(const BiFreeFamily& fam, RightOrder order, int n, int m);
/// kappa_{n,m}(a1 + a2, b1 b2), n + m >= 1.
Rational sum_product_pair_cumulants(const BiFreeFamily& fam, int n, int m);

/// Whole tables, up to the smaller truncation of the two pairs. With parallel
/// set, the plans of the individual cells are built concurrently.
PairDistribution product_pair(const BiFreeFamily& fam, RightOrder order, bool parallel = false);
PairDistribution sum_product_pair(const BiFreeFamily& fam, bool parallel = false);

/// H(z,w) = sum phi(a^n b^m) z^n w^m.
Series2 series_H(const PairDistribution& d);
/// C(z,w), the cumulant series.
Series2 series_C(const PairDistribution& d);
/// K(z,w) = C(z,w) - c_a(z) - c_b(w) - 1.
Series2 series_K(const PairDistribution& d);

}  // namespace bifree
