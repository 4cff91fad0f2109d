#pragma once

// One-variable S-transform and the two-variable partial T- and S-transforms,
// each computed from moments (analytic form) and from cumulants, together with
// coefficientwise checks of their multiplicativity under bi-free products.

#include "bifree/bicum.hpp"
#include "bifree/multfn.hpp"
#include "bifree/series.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bifree {

enum class Method { Analytic, Cumulant };

/// S_a from free cumulants kappa_1..kappa_N; order N - 1.
/// Analytic: (1 + z) X_a(z)/z with X_a the inverse of h_a - 1 (needs kappa_1 != 0, ZeroMean).
/// Cumulant: c_a^{<-1>}(z)/z (needs kappa_1 = 1, NotNormalized).
Series1 s_transform_1var(const MultFn& kappa, Method method);

/// kappa_{n,m}(lambda a, mu b) = lambda^n mu^m kappa_{n,m}(a, b). ZeroScale if either is 0.
PairDistribution rescale_pair(const PairDistribution& d, const Rational& lambda, const Rational& mu);

/// Partial T-transform, order trunc - 1. The cumulant form needs kappa_{0,1} = 1
/// (NotNormalized); the analytic form only a nonzero right mean (ZeroMean).
Series2 partial_T(const PairDistribution& d, Method method);
/// Partial S-transform, order trunc - 2. The cumulant form needs
/// kappa_{1,0} = kappa_{0,1} = 1; the analytic form only nonzero means.
Series2 partial_S(const PairDistribution& d, Method method);

/// One compared identity inside a report.
struct IdentityCheck {
  std::string name;
  Series2 lhs;
  Series2 rhs;
  SeriesComparison result;
};

struct CheckReport {
  std::string theorem;
  int order = 0;
  std::vector<IdentityCheck> checks;
  /// Set when the opposite right-hand multiplication order was also run (S only).
  std::optional<IdentityCheck> swapped_order;

  bool ok() const;
  /// The first failing check, if any.
  const IdentityCheck* first_failure() const;
};

/// T(a1+a2, b1 b2) = T(a1,b1) T(a2,b2) to total order N, plus the equivalent
/// K-form. Both pairs need kappa_{0,1} = 1 and truncation >= N + 1.
CheckReport check_T_multiplicativity(const BiFreeFamily& fam, int order, bool parallel = false);

/// S(a1 a2, b1 b2) = S(a1,b1) S(a2,b2) to total order N, plus the K-form.
/// Needs every mean equal to 1 and truncation >= N + 2. With `order` set to
/// B2B1 the identity is checked for b2 b1 instead; `also_swapped` additionally
/// records the comparison for the other order in swapped_order.
CheckReport check_S_multiplicativity(const BiFreeFamily& fam, int order, RightOrder right_order = RightOrder::B1B2,
                                     bool also_swapped = false, bool parallel = false);

/// phi_f(phi_{f pinched g}(z)) = phi_{f * g}(z); f, g in M_1.
IdentityCheck check_composition_identity(const MultFn& f, const MultFn& g);
/// z phi^{<-1>}_{f * g}(z) = phi^{<-1>}_f(z) phi^{<-1>}_g(z); f, g in M_1. The same
/// statement with the pinched product in place of f * g is false (see the tests).
IdentityCheck check_inverse_product_identity(const MultFn& f, const MultFn& g);
/// h_a(z) + h_b(w) = h_a(z) h_b(w) / H(z,w) + C(z h_a(z), w h_b(w)).
IdentityCheck check_bimoment_identity(const PairDistribution& d);

/// {"theorem", "order", "status", "witness"}; witness is null or the first
/// differing coefficient.
nlohmann::json to_json(const CheckReport& report);
/// Text form: one line per identity.
std::string to_text(const CheckReport& report);

}  // namespace bifree
