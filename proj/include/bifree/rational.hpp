#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace bifree {

/// Exact arbitrary-precision rational. Always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws Error(ParseError) on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

/// Small-denominator random rationals for property tests and verification runs:
/// numerator in [-max_num, max_num], denominator in [1, max_den].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, int max_num = 4, int max_den = 8)
      : engine_(seed), max_num_(max_num), max_den_(max_den) {}

  Rational next();
  Rational next_nonzero();

 private:
  std::mt19937_64 engine_;
  int max_num_;
  int max_den_;
};

}  // namespace bifree
