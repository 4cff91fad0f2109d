#include "bifree/multfn.hpp"

#include "bifree/error.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace bifree {

namespace {

// Block-size histograms of pi and K(pi), with multiplicities, for one n.
struct ConvolutionTerm {
  std::vector<int> pi_sizes;
  std::vector<int> complement_sizes;
  std::int64_t count;
};
using ConvolutionPlan = std::vector<ConvolutionTerm>;

std::vector<int> block_sizes(const Partition& p) {
  std::vector<int> sizes;
  for (const auto& b : p.blocks()) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

const ConvolutionPlan& convolution_plan(int n, bool pinched) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::unique_ptr<ConvolutionPlan>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, pinched}];
  if (!slot) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> counts;
    for (const auto& pi : pinched ? enumerate_nc_prime(n) : enumerate_nc(n)) {
      ++counts[{block_sizes(pi), block_sizes(kreweras(pi))}];
    }
    slot = std::make_unique<ConvolutionPlan>();
    for (auto& [key, count] : counts) slot->push_back({key.first, key.second, count});
  }
  return *slot;
}

Rational product_over(const MultFn& f, const std::vector<int>& sizes) {
  Rational value = 1;
  for (int s : sizes) value *= f[s];
  return value;
}

MultFn convolve_impl(const MultFn& f, const MultFn& g, bool pinched) {
  const int n_max = std::min(f.trunc(), g.trunc());
  std::vector<Rational> out;
  for (int n = 1; n <= n_max; ++n) {
    Rational sum = 0;
    for (const auto& term : convolution_plan(n, pinched)) {
      sum += Rational(static_cast<long>(term.count)) * product_over(f, term.pi_sizes) *
             product_over(g, term.complement_sizes);
    }
    out.push_back(sum);
  }
  return MultFn(std::move(out));
}

}  // namespace

MultFn::MultFn(std::vector<Rational> values) : values_(std::move(values)) {}

const Rational& MultFn::operator[](int k) const {
  if (k < 1 || k > trunc()) {
    throw Error(ErrorCode::TruncationExceeded,
                "f_" + std::to_string(k) + " requested of a function known to " + std::to_string(trunc()));
  }
  return values_[static_cast<std::size_t>(k - 1)];
}

MultFn MultFn::truncated(int n) const {
  if (n > trunc()) throw Error(ErrorCode::TruncationExceeded, "cannot extend a multiplicative function");
  return MultFn(std::vector<Rational>(values_.begin(), values_.begin() + n));
}

Rational eval_on(const MultFn& f, const Partition& pi) { return product_over(f, block_sizes(pi)); }

MultFn convolve(const MultFn& f, const MultFn& g) { return convolve_impl(f, g, false); }

MultFn pinched_convolve(const MultFn& f, const MultFn& g) {
  if (!f.is_normalized() || !g.is_normalized()) {
    throw Error(ErrorCode::NotNormalized, "pinched convolution needs f_1 = g_1 = 1");
  }
  return convolve_impl(f, g, true);
}

Series1 phi_series(const MultFn& f) {
  Series1 s(f.trunc());
  for (int k = 1; k <= f.trunc(); ++k) s.set(k, f[k]);
  return s;
}

MultFn from_phi_series(const Series1& s) {
  std::vector<Rational> values;
  for (int k = 1; k <= s.order(); ++k) values.push_back(s[k]);
  return MultFn(std::move(values));
}

Series1 free_moment_series(const MultFn& kappa) {
  Series1 h = Series1::constant(kappa.trunc(), 1);
  for (int n = 1; n <= kappa.trunc(); ++n) {
    Rational sum = 0;
    // NC(n) plan with the complement ignored.
    for (const auto& term : convolution_plan(n, false)) {
      sum += Rational(static_cast<long>(term.count)) * product_over(kappa, term.pi_sizes);
    }
    h.set(n, sum);
  }
  return h;
}

MultFn random_multfn(RationalSampler& rng, int trunc, bool normalized) {
  std::vector<Rational> values;
  for (int k = 1; k <= trunc; ++k) values.push_back(k == 1 && normalized ? Rational(1) : rng.next());
  return MultFn(std::move(values));
}

}  // namespace bifree
