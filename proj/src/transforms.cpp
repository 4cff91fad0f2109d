#include "bifree/transforms.hpp"

#include "bifree/error.hpp"

#include <sstream>

namespace bifree {

namespace {

Series1 left_marginal(const Series2& f) {
  Series1 s(f.order());
  for (int d = 0; d <= f.order(); ++d) s.set(d, f(d, 0));
  return s;
}

Series1 right_marginal(const Series2& f) {
  Series1 s(f.order());
  for (int d = 0; d <= f.order(); ++d) s.set(d, f(0, d));
  return s;
}

Series1 one_plus_var(int order) { return Series1::constant(order, 1) + Series1::variable(order); }

// 1 + z + w.
Series2 one_plus_z_plus_w(int order) { return Series2::constant(order, 1) + Series2::z(order) + Series2::w(order); }

// Inverse of psi = h - 1 for a marginal moment series h.
Series1 chi_inverse(const Series1& h, const char* face) {
  Series1 psi = h - Series1::constant(h.order(), 1);
  if (h.order() >= 1 && psi[1] == 0) throw Error(ErrorCode::ZeroMean, std::string(face) + " has mean 0");
  return compositional_inverse(psi);
}

void require_mean_one(const Rational& mean, const char* which) {
  if (mean == 0) throw Error(ErrorCode::ZeroMean, std::string(which) + " has mean 0");
  if (mean != 1) {
    throw Error(ErrorCode::NotNormalized, std::string(which) + " has mean " + format_rational(mean) +
                                              " but 1 is required; rescale the pair first");
  }
}

void require_trunc(const PairDistribution& d, int needed, const char* what) {
  if (d.trunc() < needed) {
    throw Error(ErrorCode::TruncationExceeded, std::string(what) + " needs cumulants to order " +
                                                   std::to_string(needed) + ", table has " +
                                                   std::to_string(d.trunc()));
  }
}

IdentityCheck make_check(std::string name, Series2 lhs, Series2 rhs) {
  SeriesComparison result = compare(lhs, rhs);
  return {std::move(name), std::move(lhs), std::move(rhs), std::move(result)};
}

// K(c_a^{<-1>}(z) or z, c_b^{<-1>}(w)).
Series2 substituted_K(const PairDistribution& d, bool invert_left) {
  const int n = d.trunc();
  const Series1 sz = invert_left ? compositional_inverse(phi_series(d.left_cumulants())) : Series1::variable(n);
  const Series1 sw = compositional_inverse(phi_series(d.right_cumulants()));
  return compose_each_variable(series_K(d), sz, sw);
}

nlohmann::json witness_json(const IdentityCheck& c) {
  return {{"identity", c.name},
          {"n", c.result.first_mismatch->first},
          {"m", c.result.first_mismatch->second},
          {"lhs", format_rational(c.result.lhs)},
          {"rhs", format_rational(c.result.rhs)}};
}

nlohmann::json check_json(const IdentityCheck& c) {
  nlohmann::json j = {{"name", c.name},
                      {"status", c.result.equal ? "ok" : "mismatch"},
                      {"order", c.result.order},
                      {"lhs", to_string(c.lhs.truncated(c.result.order))},
                      {"rhs", to_string(c.rhs.truncated(c.result.order))}};
  if (!c.result.equal) j["witness"] = witness_json(c);
  return j;
}

std::string check_line(const IdentityCheck& c) {
  std::ostringstream out;
  out << "  " << c.name << ": " << (c.result.equal ? "ok" : "MISMATCH") << " (order " << c.result.order << ")";
  if (!c.result.equal) {
    out << " first difference at z^" << c.result.first_mismatch->first << " w^" << c.result.first_mismatch->second
        << ": " << format_rational(c.result.lhs) << " vs " << format_rational(c.result.rhs);
  }
  return out.str();
}

}  // namespace

Series1 s_transform_1var(const MultFn& kappa, Method method) {
  if (kappa.trunc() < 1 || kappa[1] == 0) throw Error(ErrorCode::ZeroMean, "S-transform needs a nonzero mean");
  if (method == Method::Cumulant) {
    require_mean_one(kappa[1], "variable");
    return compositional_inverse(phi_series(kappa)).div_z();
  }
  const Series1 x = chi_inverse(free_moment_series(kappa), "variable").div_z();
  return one_plus_var(x.order()) * x;
}

PairDistribution rescale_pair(const PairDistribution& d, const Rational& lambda, const Rational& mu) {
  if (lambda == 0 || mu == 0) throw Error(ErrorCode::ZeroScale, "scale factors must be nonzero");
  PairDistribution out(d.trunc());
  Rational lp = 1;
  for (int n = 0; n <= d.trunc(); ++n, lp *= lambda) {
    Rational scale = lp;
    for (int m = 0; n + m <= d.trunc(); ++m, scale *= mu) {
      if (n + m > 0) out.set_kappa(n, m, scale * d.kappa(n, m));
    }
  }
  return out;
}

Series2 partial_T(const PairDistribution& d, Method method) {
  require_trunc(d, 2, "partial T-transform");
  if (method == Method::Cumulant) {
    require_mean_one(d.kappa(0, 1), "right face");
    const Series2 q = substituted_K(d, false).div_w();
    return Series2::constant(q.order(), 1) + q;
  }
  const int n = d.trunc();
  const Series2 h = series_H(d);
  const Series1 ha = left_marginal(h);
  // u = 1/K_a(z) solves u h_a(u) = z, and then h_a(u) = z K_a(z).
  const Series1 u = compositional_inverse(ha.mul_z().truncated(n));
  const Series1 z_ka = compose(ha, u);
  const Series1 xb = chi_inverse(right_marginal(h), "right face");
  const Series2 ratio = Series2::in_z(z_ka) * reciprocal(compose_each_variable(h, u, xb));
  const Series2 q = (Series2::constant(n, 1) - ratio).div_w();
  return (Series2::constant(q.order(), 1) + Series2::w(q.order())) * q;
}

Series2 partial_S(const PairDistribution& d, Method method) {
  require_trunc(d, 2, "partial S-transform");
  if (method == Method::Cumulant) {
    require_mean_one(d.kappa(1, 0), "left face");
    require_mean_one(d.kappa(0, 1), "right face");
    const Series2 q = substituted_K(d, true).div_zw();
    return Series2::constant(q.order(), 1) + one_plus_z_plus_w(q.order()) * q;
  }
  const int n = d.trunc();
  const Series2 h = series_H(d);
  const Series1 xa = chi_inverse(left_marginal(h), "left face");
  const Series1 xb = chi_inverse(right_marginal(h), "right face");
  const Series2 inner = Series2::constant(n, 1) - one_plus_z_plus_w(n) * reciprocal(compose_each_variable(h, xa, xb));
  const Series2 q = inner.div_zw();
  const int k = q.order();
  return (Series2::constant(k, 1) + Series2::z(k)) * (Series2::constant(k, 1) + Series2::w(k)) * q;
}

// ---------------------------------------------------------------------------

bool CheckReport::ok() const { return first_failure() == nullptr; }

const IdentityCheck* CheckReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.result.equal) return &c;
  }
  return nullptr;
}

CheckReport check_T_multiplicativity(const BiFreeFamily& fam, int order, bool parallel) {
  if (order < 1) throw Error(ErrorCode::InvalidSize, "order must be at least 1");
  require_trunc(fam.first, order + 1, "T check");
  require_trunc(fam.second, order + 1, "T check");
  const BiFreeFamily f{fam.first.truncated(order + 1), fam.second.truncated(order + 1)};
  require_mean_one(f.first.kappa(0, 1), "b1");
  require_mean_one(f.second.kappa(0, 1), "b2");

  const PairDistribution sum = sum_product_pair(f, parallel);
  CheckReport report{"T-multiplicativity", order, {}, std::nullopt};
  report.checks.push_back(make_check("T(a1+a2,b1b2) = T(a1,b1)T(a2,b2)", partial_T(sum, Method::Cumulant),
                                     partial_T(f.first, Method::Cumulant) * partial_T(f.second, Method::Cumulant)));

  const Series2 theta1 = substituted_K(f.first, false);
  const Series2 theta2 = substituted_K(f.second, false);
  report.checks.push_back(make_check("K-form", substituted_K(sum, false),
                                     theta1 + theta2 + (theta1 * theta2).div_w()));
  return report;
}

CheckReport check_S_multiplicativity(const BiFreeFamily& fam, int order, RightOrder right_order, bool also_swapped,
                                     bool parallel) {
  if (order < 1) throw Error(ErrorCode::InvalidSize, "order must be at least 1");
  require_trunc(fam.first, order + 2, "S check");
  require_trunc(fam.second, order + 2, "S check");
  const BiFreeFamily f{fam.first.truncated(order + 2), fam.second.truncated(order + 2)};
  require_mean_one(f.first.kappa(1, 0), "a1");
  require_mean_one(f.second.kappa(1, 0), "a2");
  require_mean_one(f.first.kappa(0, 1), "b1");
  require_mean_one(f.second.kappa(0, 1), "b2");

  const Series2 rhs = partial_S(f.first, Method::Cumulant) * partial_S(f.second, Method::Cumulant);
  auto product_check = [&](RightOrder ro) {
    const PairDistribution product = product_pair(f, ro, parallel);
    const std::string name = ro == RightOrder::B1B2 ? "S(a1a2,b1b2) = S(a1,b1)S(a2,b2)"
                                                    : "S(a1a2,b2b1) = S(a1,b1)S(a2,b2)";
    return std::make_pair(make_check(name, partial_S(product, Method::Cumulant), rhs), product);
  };

  CheckReport report{right_order == RightOrder::B1B2 ? "S-multiplicativity" : "S-multiplicativity (b2b1)", order,
                     {}, std::nullopt};
  auto [main, product] = product_check(right_order);
  report.checks.push_back(std::move(main));

  const Series2 theta1 = substituted_K(f.first, true);
  const Series2 theta2 = substituted_K(f.second, true);
  const Series2 prod = theta1 * theta2;
  report.checks.push_back(make_check("K-form", substituted_K(product, true),
                                     theta1 + theta2 + one_plus_z_plus_w(prod.order()) * prod.div_zw()));

  if (also_swapped) {
    report.swapped_order = product_check(right_order == RightOrder::B1B2 ? RightOrder::B2B1 : RightOrder::B1B2).first;
  }
  return report;
}

IdentityCheck check_composition_identity(const MultFn& f, const MultFn& g) {
  const Series1 lhs = compose(phi_series(f), phi_series(pinched_convolve(f, g)));
  return make_check("composition", Series2::in_z(lhs), Series2::in_z(phi_series(convolve(f, g))));
}

IdentityCheck check_inverse_product_identity(const MultFn& f, const MultFn& g) {
  const Series1 inv = compositional_inverse(phi_series(convolve(f, g)));
  const Series1 lhs = inv.mul_z().truncated(inv.order());
  const Series1 rhs = compositional_inverse(phi_series(f)) * compositional_inverse(phi_series(g));
  return make_check("inverse product", Series2::in_z(lhs), Series2::in_z(rhs));
}

IdentityCheck check_bimoment_identity(const PairDistribution& d) {
  const int n = d.trunc();
  const Series2 h = series_H(d);
  const Series1 ha = left_marginal(h);
  const Series1 hb = right_marginal(h);
  const Series2 lhs = Series2::in_z(ha) + Series2::in_w(hb);
  const Series2 rhs = Series2::in_z(ha) * Series2::in_w(hb) * reciprocal(h) +
                      compose_each_variable(series_C(d), ha.mul_z().truncated(n), hb.mul_z().truncated(n));
  return make_check("bi-moment", lhs, rhs);
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json j;
  j["theorem"] = report.theorem;
  j["order"] = report.order;
  j["status"] = report.ok() ? "ok" : "mismatch";
  const IdentityCheck* failure = report.first_failure();
  j["witness"] = failure ? witness_json(*failure) : nlohmann::json(nullptr);
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) j["checks"].push_back(check_json(c));
  if (report.swapped_order) j["swapped_order"] = check_json(*report.swapped_order);
  return j;
}

std::string to_text(const CheckReport& report) {
  std::ostringstream out;
  out << report.theorem << " to order " << report.order << ": " << (report.ok() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : report.checks) out << check_line(c) << '\n';
  if (report.swapped_order) out << check_line(*report.swapped_order) << '\n';
  return out.str();
}

}  // namespace bifree
