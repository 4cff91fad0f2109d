#pragma once

// Multiplicative functions on the non-crossing incidence algebra, stored by
// their full-interval values f_k = f(0_k, 1_k), k = 1..N.

#include "bifree/ncpart.hpp"
#include "bifree/rational.hpp"
#include "bifree/series.hpp"

#include <vector>

namespace bifree {

class MultFn {
 public:
  /// values[k-1] = f_k.
  explicit MultFn(std::vector<Rational> values);

  int trunc() const { return static_cast<int>(values_.size()); }
  /// f_k for 1 <= k <= trunc(); TruncationExceeded otherwise.
  const Rational& operator[](int k) const;
  const std::vector<Rational>& values() const { return values_; }
  /// Membership in M_1 (f_1 = 1).
  bool is_normalized() const { return !values_.empty() && values_.front() == 1; }

  MultFn truncated(int n) const;

  friend bool operator==(const MultFn&, const MultFn&) = default;

 private:
  std::vector<Rational> values_;
};

/// f(0_n, pi) = product of f_|V| over the blocks V of pi.
Rational eval_on(const MultFn& f, const Partition& pi);

/// (f * g)_n = sum over NC(n) of f(0, pi) g(0, K(pi)); truncation is the smaller of the two.
MultFn convolve(const MultFn& f, const MultFn& g);
/// Same sum restricted to NC'(n). Both arguments must lie in M_1 (NotNormalized).
MultFn pinched_convolve(const MultFn& f, const MultFn& g);

/// sum_n f_n z^n, order trunc().
Series1 phi_series(const MultFn& f);
/// Coefficients 1..order of a series as a multiplicative function.
MultFn from_phi_series(const Series1& s);

/// Moment series 1 + sum_n m_n z^n of a variable with free cumulants kappa,
/// m_n = sum over NC(n) of kappa(0, pi).
Series1 free_moment_series(const MultFn& kappa);

/// Random f with f_1 = 1 when normalized, otherwise f_1 drawn like the rest.
MultFn random_multfn(RationalSampler& rng, int trunc, bool normalized);

}  // namespace bifree
