#include "bifree/bicum.hpp"

#include "bifree/bnc.hpp"
#include "bifree/error.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace bifree {

namespace {

enum class PlanKind { Moment, Mobius, Product, SumProduct };

using PlanKey = std::tuple<PlanKind, int, int, int>;

// Families carried by the tags: 0 for untagged nodes.
std::vector<BlockProfile> profiles(const BNCShape& shape, const BlockView& view, const std::vector<int>& tags) {
  std::vector<BlockProfile> out(static_cast<std::size_t>(view.block_count), BlockProfile{0, 0, 0});
  for (int node = 0; node < shape.size(); ++node) {
    auto& p = out[static_cast<std::size_t>(view.label_of_node[node])];
    (shape.face(node) == Face::Left ? p.lefts : p.rights) += 1;
    if (!tags.empty() && tags[node] != 0) p.family = tags[node];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational mobius_to_top(const BNCPartition& pi) {
  Rational value = 1;
  const NCPartition complement = kreweras(pi.to_nc());
  for (const auto& w : complement.blocks()) {
    const int k = static_cast<int>(w.size());
    const Rational c(static_cast<long>(catalan(k - 1)));
    value *= (k % 2 == 1) ? c : Rational(-c);
  }
  return value;
}

Plan build_plan(PlanKind kind, int order, int n, int m) {
  if (n < 0 || m < 0 || n + m == 0) throw Error(ErrorCode::InvalidSize, "plans need n, m >= 0 and n + m >= 1");
  EnumerationConstraint constraint;
  BNCShape shape = BNCShape::chi(1, 0);
  switch (kind) {
    case PlanKind::Moment:
    case PlanKind::Mobius:
      shape = BNCShape::chi(n, m);
      break;
    case PlanKind::Product: {
      shape = BNCShape::chi(2 * n, 2 * m);
      const bool swap_right = order == static_cast<int>(RightOrder::B2B1);
      for (int k = 0; k < 2 * n; ++k) constraint.tags.push_back(k % 2 == 0 ? 1 : 2);
      for (int k = 0; k < 2 * m; ++k) constraint.tags.push_back((k % 2 == 0) != swap_right ? 1 : 2);
      constraint.connect_with = sigma_doubling(Doubling::BothDouble, n, m).partition();
      break;
    }
    case PlanKind::SumProduct:
      shape = BNCShape::chi(n, 2 * m);
      constraint.tags.assign(static_cast<std::size_t>(n), 0);
      for (int k = 0; k < 2 * m; ++k) constraint.tags.push_back(k % 2 == 0 ? 1 : 2);
      constraint.connect_with = sigma_doubling(Doubling::LeftSingleRightDouble, n, m).partition();
      break;
  }
  if (shape.size() > enumeration_cap()) {
    throw Error(ErrorCode::CapExceeded, "cell (" + std::to_string(n) + "," + std::to_string(m) + ") needs " +
                                            std::to_string(shape.size()) + " nodes; cap is " +
                                            std::to_string(enumeration_cap()) + " (raise BIFREE_CAP)");
  }

  std::map<std::vector<BlockProfile>, std::int64_t> weights;
  for_each_bnc(shape, constraint, [&](const BlockView& view) {
    std::int64_t weight = 1;
    if (kind == PlanKind::Mobius) weight = mobius_to_top(BNCPartition(shape, to_partition(view))).get_num().get_si();
    weights[profiles(shape, view, constraint.tags)] += weight;
  });
  Plan plan;
  for (auto& [blocks, weight] : weights) {
    if (weight != 0) plan.push_back({blocks, weight});
  }
  return plan;
}

const Plan& cached_plan(PlanKind kind, int order, int n, int m) {
  static std::mutex mutex;
  static std::map<PlanKey, std::unique_ptr<const Plan>> cache;
  const PlanKey key{kind, order, n, m};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto plan = std::make_unique<const Plan>(build_plan(kind, order, n, m));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(plan));
  return *it->second;
}

const Rational& family_kappa(const BiFreeFamily& fam, int family, int p, int q) {
  return (family == 1 ? fam.first : fam.second).kappa(p, q);
}

void require_cell(const PairDistribution& d, int n, int m) {
  if (n < 0 || m < 0 || n + m > d.trunc()) {
    throw Error(ErrorCode::TruncationExceeded, "cell (" + std::to_string(n) + "," + std::to_string(m) +
                                                   ") beyond truncation " + std::to_string(d.trunc()));
  }
}

std::vector<std::pair<int, int>> cells_up_to(int trunc) {
  std::vector<std::pair<int, int>> cells;
  for (int total = 1; total <= trunc; ++total) {
    for (int n = total; n >= 0; --n) cells.emplace_back(n, total - n);
  }
  return cells;
}

// Builds every cell's plan (concurrently when asked), then fills the table.
PairDistribution table_from(int trunc, bool parallel, const std::function<const Plan&(int, int)>& plan_of,
                            const std::function<Rational(int, int)>& value_of) {
  const auto cells = cells_up_to(trunc);
  if (parallel) {
    std::vector<std::future<void>> jobs;
    for (auto [n, m] : cells) jobs.push_back(std::async(std::launch::async, [&, n, m] { plan_of(n, m); }));
    for (auto& j : jobs) j.get();
  }
  PairDistribution out(trunc);
  for (auto [n, m] : cells) out.set_kappa(n, m, value_of(n, m));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

PairDistribution::PairDistribution(int trunc) : kappa_(Series2::constant(trunc, 1)) {}

PairDistribution::PairDistribution(Series2 cumulants) : kappa_(std::move(cumulants)) { kappa_.set(0, 0, 1); }

void PairDistribution::set_kappa(int n, int m, const Rational& value) {
  if (n == 0 && m == 0) throw Error(ErrorCode::InvalidSize, "kappa_{0,0} is fixed to 1");
  kappa_.set(n, m, value);
}

MultFn PairDistribution::left_cumulants() const {
  std::vector<Rational> v;
  for (int n = 1; n <= trunc(); ++n) v.push_back(kappa(n, 0));
  return MultFn(std::move(v));
}

MultFn PairDistribution::right_cumulants() const {
  std::vector<Rational> v;
  for (int m = 1; m <= trunc(); ++m) v.push_back(kappa(0, m));
  return MultFn(std::move(v));
}

PairDistribution PairDistribution::truncated(int trunc) const { return PairDistribution(kappa_.truncated(trunc)); }

PairDistribution PairDistribution::mirrored() const {
  Series2 s(trunc());
  for (int total = 0; total <= trunc(); ++total) {
    for (int n = 0; n <= total; ++n) s.set(n, total - n, kappa(total - n, n));
  }
  return PairDistribution(std::move(s));
}

PairDistribution random_pair(RationalSampler& rng, int trunc, Normalization norm) {
  PairDistribution d(trunc);
  for (auto [n, m] : cells_up_to(trunc)) {
    const bool pinned = (n == 0 && m == 1 && norm != Normalization::None) ||
                        (n == 1 && m == 0 && norm == Normalization::BothMeans);
    d.set_kappa(n, m, pinned ? Rational(1) : rng.next());
  }
  return d;
}

BiFreeFamily random_family(RationalSampler& rng, int trunc, Normalization norm) {
  auto first = random_pair(rng, trunc, norm);
  auto second = random_pair(rng, trunc, norm);
  return {std::move(first), std::move(second)};
}

// ---------------------------------------------------------------------------

const Plan& moment_plan(int n, int m) { return cached_plan(PlanKind::Moment, 0, n, m); }
const Plan& mobius_plan(int n, int m) { return cached_plan(PlanKind::Mobius, 0, n, m); }
const Plan& product_plan(RightOrder order, int n, int m) {
  return cached_plan(PlanKind::Product, static_cast<int>(order), n, m);
}
const Plan& sum_product_plan(int n, int m) { return cached_plan(PlanKind::SumProduct, 0, n, m); }

Rational evaluate(const Plan& plan, const std::function<Rational(const BlockProfile&)>& factor) {
  Rational sum = 0;
  for (const auto& term : plan) {
    Rational product(static_cast<long>(term.weight));
    for (const auto& b : term.blocks) {
      product *= factor(b);
      if (product == 0) break;
    }
    sum += product;
  }
  return sum;
}

Rational moments_from_cumulants(const PairDistribution& d, int n, int m) {
  require_cell(d, n, m);
  if (n + m == 0) return 1;
  return evaluate(moment_plan(n, m), [&](const BlockProfile& b) { return d.kappa(b.lefts, b.rights); });
}

PairDistribution cumulants_from_moments(const Series2& moments) {
  if (moments(0, 0) != 1) throw Error(ErrorCode::NotNormalized, "moment table needs M_{0,0} = 1");
  PairDistribution out(moments.order());
  for (auto [n, m] : cells_up_to(moments.order())) {
    out.set_kappa(n, m, evaluate(mobius_plan(n, m), [&](const BlockProfile& b) { return moments(b.lefts, b.rights); }));
  }
  return out;
}

Rational product_pair_cumulants(const BiFreeFamily& fam, RightOrder order, int n, int m) {
  require_cell(fam.first, n, m);
  require_cell(fam.second, n, m);
  return evaluate(product_plan(order, n, m),
                  [&](const BlockProfile& b) { return family_kappa(fam, b.family, b.lefts, b.rights); });
}

Rational sum_product_pair_cumulants(const BiFreeFamily& fam, int n, int m) {
  require_cell(fam.first, n, m);
  require_cell(fam.second, n, m);
  return evaluate(sum_product_plan(n, m), [&](const BlockProfile& b) -> Rational {
    if (b.family == 0) return fam.first.kappa(b.lefts, 0) + fam.second.kappa(b.lefts, 0);
    return family_kappa(fam, b.family, b.lefts, b.rights);
  });
}

PairDistribution product_pair(const BiFreeFamily& fam, RightOrder order, bool parallel) {
  return table_from(
      std::min(fam.first.trunc(), fam.second.trunc()), parallel,
      [order](int n, int m) -> const Plan& { return product_plan(order, n, m); },
      [&](int n, int m) { return product_pair_cumulants(fam, order, n, m); });
}

PairDistribution sum_product_pair(const BiFreeFamily& fam, bool parallel) {
  return table_from(
      std::min(fam.first.trunc(), fam.second.trunc()), parallel,
      [](int n, int m) -> const Plan& { return sum_product_plan(n, m); },
      [&](int n, int m) { return sum_product_pair_cumulants(fam, n, m); });
}

Series2 series_H(const PairDistribution& d) {
  Series2 h = Series2::constant(d.trunc(), 1);
  for (auto [n, m] : cells_up_to(d.trunc())) h.set(n, m, moments_from_cumulants(d, n, m));
  return h;
}

Series2 series_C(const PairDistribution& d) { return d.cumulants(); }

Series2 series_K(const PairDistribution& d) {
  Series2 k = d.cumulants();
  k.set(0, 0, 0);
  for (int j = 1; j <= d.trunc(); ++j) {
    k.set(j, 0, 0);
    k.set(0, j, 0);
  }
  return k;
}

}  // namespace bifree
