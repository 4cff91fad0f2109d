#pragma once

// Truncated formal power series in one variable (z) and in two commuting
// variables (z, w) with exact rational coefficients.
//
// Truncation orders are tracked honestly: every operation returns a series
// whose order is the largest N for which all coefficients of total degree
// <= N are determined by the inputs. Division by a variable therefore lowers
// the order by one.

#include "bifree/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bifree {

/// Outcome of comparing two series on their common truncation order.
struct SeriesComparison {
  bool equal = true;
  int order = 0;  ///< order the comparison was carried out at
  /// First differing monomial in graded-lex order, as (deg_z, deg_w); deg_w = 0 for one variable.
  std::optional<std::pair<int, int>> first_mismatch;
  Rational lhs;  ///< coefficient values at first_mismatch
  Rational rhs;
};

class Series1 {
 public:
  /// The zero series of the given order (order >= 0).
  explicit Series1(int order);
  Series1(int order, std::vector<Rational> coeffs);

  static Series1 constant(int order, const Rational& c);
  static Series1 variable(int order);  ///< z

  int order() const { return order_; }
  /// Coefficient of z^d; degrees above the order are reported as TruncationExceeded.
  const Rational& operator[](int d) const;
  void set(int d, const Rational& value);
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Series1 truncated(int order) const;
  bool is_zero() const;

  friend Series1 operator+(const Series1& a, const Series1& b);
  friend Series1 operator-(const Series1& a, const Series1& b);
  friend Series1 operator*(const Series1& a, const Series1& b);
  friend Series1 operator*(const Rational& c, const Series1& a);
  friend Series1 operator-(const Series1& a);
  friend bool operator==(const Series1& a, const Series1& b) = default;

  /// f / z; requires f(0) = 0 (DivisionError otherwise). Order drops by one.
  Series1 div_z() const;
  /// z * f. Order rises by one.
  Series1 mul_z() const;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

/// outer(inner(z)); inner must have zero constant term (NonzeroConstantTerm).
Series1 compose(const Series1& outer, const Series1& inner);

/// g with f(g(z)) = g(f(z)) = z. Requires f(0) = 0 and f'(0) != 0 (NotInvertible).
Series1 compositional_inverse(const Series1& f);

/// 1/f. Requires f(0) != 0 (ZeroConstantTerm).
Series1 reciprocal(const Series1& f);

SeriesComparison compare(const Series1& a, const Series1& b);

/// Graded (by degree) rendering, e.g. "1 - z + 2*z^2".
std::string to_string(const Series1& f);

class Series2 {
 public:
  explicit Series2(int order);

  static Series2 constant(int order, const Rational& c);
  static Series2 z(int order);
  static Series2 w(int order);
  /// Embeds a one-variable series as a series in z (resp. w).
  static Series2 in_z(const Series1& f);
  static Series2 in_w(const Series1& f);

  int order() const { return order_; }
  const Rational& operator()(int dz, int dw) const;
  void set(int dz, int dw, const Rational& value);

  Series2 truncated(int order) const;
  bool is_zero() const;

  friend Series2 operator+(const Series2& a, const Series2& b);
  friend Series2 operator-(const Series2& a, const Series2& b);
  friend Series2 operator*(const Series2& a, const Series2& b);
  friend Series2 operator*(const Rational& c, const Series2& a);
  friend Series2 operator-(const Series2& a);
  friend bool operator==(const Series2& a, const Series2& b) = default;

  /// Divide by z (resp. w, zw); every monomial must carry the divided variable,
  /// otherwise DivisionError. Order drops by one per divided variable.
  Series2 div_z() const;
  Series2 div_w() const;
  Series2 div_zw() const;

  /// Raw coefficient storage in graded-lex order (z^d, z^{d-1}w, ..., w^d for d = 0..N).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

 private:
  static std::size_t index(int dz, int dw);

  int order_;
  std::vector<Rational> coeffs_;
};

/// f(sub_z(z), sub_w(w)); both substitutions need a zero constant term.
Series2 compose_each_variable(const Series2& f, const Series1& sub_z, const Series1& sub_w);

/// 1/f. Requires f(0,0) != 0.
Series2 reciprocal(const Series2& f);

SeriesComparison compare(const Series2& a, const Series2& b);

/// Graded-lex rendering, e.g. "1 + z - 3/2*z*w + w^2".
std::string to_string(const Series2& f);

}  // namespace bifree
