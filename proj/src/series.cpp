#include "bifree/series.hpp"

#include "bifree/error.hpp"

#include <algorithm>
#include <sstream>

namespace bifree {

namespace {

void require_order(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidSize, "negative truncation order " + std::to_string(order));
}

// Appends "coef*monomial" to out with the sign handled as a binary operator.
void append_term(std::string& out, const Rational& c, const std::string& monomial) {
  if (c == 0) return;
  const bool negative = c < 0;
  const Rational magnitude = negative ? Rational(-c) : c;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += format_rational(magnitude);
  } else if (magnitude == 1) {
    out += monomial;
  } else {
    out += format_rational(magnitude) + "*" + monomial;
  }
}

std::string power(const char* var, int d) {
  if (d == 0) return {};
  if (d == 1) return var;
  return std::string(var) + "^" + std::to_string(d);
}

std::string monomial(int dz, int dw) {
  const std::string a = power("z", dz);
  const std::string b = power("w", dw);
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Series1

Series1::Series1(int order) : order_(order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

Series1::Series1(int order, std::vector<Rational> coeffs) : Series1(order) {
  if (coeffs.size() > coeffs_.size()) {
    throw Error(ErrorCode::TruncationExceeded, "coefficient list longer than order + 1");
  }
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

Series1 Series1::constant(int order, const Rational& c) {
  Series1 s(order);
  s.coeffs_[0] = c;
  return s;
}

Series1 Series1::variable(int order) {
  Series1 s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

const Rational& Series1::operator[](int d) const {
  if (d < 0 || d > order_) {
    throw Error(ErrorCode::TruncationExceeded,
                "degree " + std::to_string(d) + " outside order " + std::to_string(order_));
  }
  return coeffs_[static_cast<std::size_t>(d)];
}

void Series1::set(int d, const Rational& value) {
  if (d < 0 || d > order_) {
    throw Error(ErrorCode::TruncationExceeded,
                "degree " + std::to_string(d) + " outside order " + std::to_string(order_));
  }
  coeffs_[static_cast<std::size_t>(d)] = value;
}

Series1 Series1::truncated(int order) const {
  if (order > order_) {
    throw Error(ErrorCode::TruncationExceeded, "cannot raise order " + std::to_string(order_));
  }
  Series1 s(order);
  std::copy_n(coeffs_.begin(), order + 1, s.coeffs_.begin());
  return s;
}

bool Series1::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Series1 operator+(const Series1& a, const Series1& b) {
  Series1 r(std::min(a.order_, b.order_));
  for (int d = 0; d <= r.order_; ++d) r.coeffs_[d] = a.coeffs_[d] + b.coeffs_[d];
  return r;
}

Series1 operator-(const Series1& a, const Series1& b) {
  Series1 r(std::min(a.order_, b.order_));
  for (int d = 0; d <= r.order_; ++d) r.coeffs_[d] = a.coeffs_[d] - b.coeffs_[d];
  return r;
}

Series1 operator*(const Series1& a, const Series1& b) {
  Series1 r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= r.order_; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

Series1 operator*(const Rational& c, const Series1& a) {
  Series1 r(a.order_);
  for (int d = 0; d <= r.order_; ++d) r.coeffs_[d] = c * a.coeffs_[d];
  return r;
}

Series1 operator-(const Series1& a) { return Rational(-1) * a; }

Series1 Series1::div_z() const {
  if (coeffs_[0] != 0) throw Error(ErrorCode::DivisionError, "z does not divide a series with nonzero constant term");
  if (order_ == 0) throw Error(ErrorCode::TruncationExceeded, "division by z of an order-0 series");
  Series1 r(order_ - 1);
  for (int d = 0; d < order_; ++d) r.coeffs_[d] = coeffs_[d + 1];
  return r;
}

Series1 Series1::mul_z() const {
  Series1 r(order_ + 1);
  for (int d = 0; d <= order_; ++d) r.coeffs_[d + 1] = coeffs_[d];
  return r;
}

Series1 compose(const Series1& outer, const Series1& inner) {
  if (inner[0] != 0) throw Error(ErrorCode::NonzeroConstantTerm, "inner series of a composition must vanish at 0");
  const int order = std::min(outer.order(), inner.order());
  const Series1 in = inner.truncated(order);
  // Horner: (((a_N) g + a_{N-1}) g + ...) + a_0
  Series1 acc = Series1::constant(order, outer[order]);
  for (int k = order - 1; k >= 0; --k) {
    acc = acc * in;
    acc.set(0, acc[0] + outer[k]);
  }
  return acc;
}

Series1 compositional_inverse(const Series1& f) {
  if (f.order() < 1 || f[0] != 0 || f[1] == 0) {
    throw Error(ErrorCode::NotInvertible, "compositional inverse needs f(0) = 0 and f'(0) != 0");
  }
  const int order = f.order();
  const Rational lead = f[1];
  Series1 g(order);
  g.set(1, 1 / lead);
  // Degree d of f(g) is lead * g_d + (terms in g_1..g_{d-1}); solve for g_d.
  for (int d = 2; d <= order; ++d) {
    const Series1 partial = compose(f, g);
    g.set(d, -partial[d] / lead);
  }
  return g;
}

Series1 reciprocal(const Series1& f) {
  if (f[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "reciprocal of a series vanishing at 0");
  const int order = f.order();
  Series1 r(order);
  const Rational inv0 = 1 / f[0];
  r.set(0, inv0);
  for (int d = 1; d <= order; ++d) {
    Rational acc = 0;
    for (int k = 1; k <= d; ++k) acc += f[k] * r[d - k];
    r.set(d, -acc * inv0);
  }
  return r;
}

SeriesComparison compare(const Series1& a, const Series1& b) {
  SeriesComparison out;
  out.order = std::min(a.order(), b.order());
  for (int d = 0; d <= out.order; ++d) {
    if (a[d] != b[d]) {
      out.equal = false;
      out.first_mismatch = std::pair{d, 0};
      out.lhs = a[d];
      out.rhs = b[d];
      break;
    }
  }
  return out;
}

std::string to_string(const Series1& f) {
  std::string out;
  for (int d = 0; d <= f.order(); ++d) append_term(out, f[d], power("z", d));
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Series2

std::size_t Series2::index(int dz, int dw) {
  const int d = dz + dw;
  return static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2 + static_cast<std::size_t>(dw);
}

Series2::Series2(int order) : order_(order) {
  require_order(order);
  coeffs_.assign(index(0, order) + 1, Rational(0));
}

Series2 Series2::constant(int order, const Rational& c) {
  Series2 s(order);
  s.coeffs_[0] = c;
  return s;
}

Series2 Series2::z(int order) {
  Series2 s(order);
  if (order >= 1) s.set(1, 0, 1);
  return s;
}

Series2 Series2::w(int order) {
  Series2 s(order);
  if (order >= 1) s.set(0, 1, 1);
  return s;
}

Series2 Series2::in_z(const Series1& f) {
  Series2 s(f.order());
  for (int d = 0; d <= f.order(); ++d) s.set(d, 0, f[d]);
  return s;
}

Series2 Series2::in_w(const Series1& f) {
  Series2 s(f.order());
  for (int d = 0; d <= f.order(); ++d) s.set(0, d, f[d]);
  return s;
}

const Rational& Series2::operator()(int dz, int dw) const {
  if (dz < 0 || dw < 0 || dz + dw > order_) {
    throw Error(ErrorCode::TruncationExceeded, "monomial z^" + std::to_string(dz) + " w^" + std::to_string(dw) +
                                                   " outside order " + std::to_string(order_));
  }
  return coeffs_[index(dz, dw)];
}

void Series2::set(int dz, int dw, const Rational& value) {
  if (dz < 0 || dw < 0 || dz + dw > order_) {
    throw Error(ErrorCode::TruncationExceeded, "monomial z^" + std::to_string(dz) + " w^" + std::to_string(dw) +
                                                   " outside order " + std::to_string(order_));
  }
  coeffs_[index(dz, dw)] = value;
}

Series2 Series2::truncated(int order) const {
  if (order > order_) {
    throw Error(ErrorCode::TruncationExceeded, "cannot raise order " + std::to_string(order_));
  }
  Series2 s(order);
  std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
  return s;
}

bool Series2::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Series2 operator+(const Series2& a, const Series2& b) {
  Series2 r(std::min(a.order_, b.order_));
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

Series2 operator-(const Series2& a, const Series2& b) {
  Series2 r(std::min(a.order_, b.order_));
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

Series2 operator*(const Series2& a, const Series2& b) {
  const int n = std::min(a.order_, b.order_);
  Series2 r(n);
  for (int i1 = 0; i1 <= n; ++i1) {
    for (int j1 = 0; i1 + j1 <= n; ++j1) {
      const Rational& x = a.coeffs_[Series2::index(i1, j1)];
      if (x == 0) continue;
      for (int i2 = 0; i1 + j1 + i2 <= n; ++i2) {
        for (int j2 = 0; i1 + j1 + i2 + j2 <= n; ++j2) {
          const Rational& y = b.coeffs_[Series2::index(i2, j2)];
          if (y == 0) continue;
          r.coeffs_[Series2::index(i1 + i2, j1 + j2)] += x * y;
        }
      }
    }
  }
  return r;
}

Series2 operator*(const Rational& c, const Series2& a) {
  Series2 r(a.order_);
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = c * a.coeffs_[k];
  return r;
}

Series2 operator-(const Series2& a) { return Rational(-1) * a; }

Series2 Series2::div_z() const {
  for (int j = 0; j <= order_; ++j) {
    if ((*this)(0, j) != 0) {
      throw Error(ErrorCode::DivisionError, "monomial w^" + std::to_string(j) + " is not divisible by z");
    }
  }
  if (order_ == 0) throw Error(ErrorCode::TruncationExceeded, "division by z of an order-0 series");
  Series2 r(order_ - 1);
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; i + j < order_; ++j) r.set(i, j, (*this)(i + 1, j));
  }
  return r;
}

Series2 Series2::div_w() const {
  for (int i = 0; i <= order_; ++i) {
    if ((*this)(i, 0) != 0) {
      throw Error(ErrorCode::DivisionError, "monomial z^" + std::to_string(i) + " is not divisible by w");
    }
  }
  if (order_ == 0) throw Error(ErrorCode::TruncationExceeded, "division by w of an order-0 series");
  Series2 r(order_ - 1);
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; i + j < order_; ++j) r.set(i, j, (*this)(i, j + 1));
  }
  return r;
}

Series2 Series2::div_zw() const { return div_z().div_w(); }

Series2 compose_each_variable(const Series2& f, const Series1& sub_z, const Series1& sub_w) {
  if (sub_z[0] != 0) throw Error(ErrorCode::NonzeroConstantTerm, "z-substitution must vanish at 0");
  if (sub_w[0] != 0) throw Error(ErrorCode::NonzeroConstantTerm, "w-substitution must vanish at 0");
  const int n = std::min({f.order(), sub_z.order(), sub_w.order()});

  auto powers = [n](const Series1& s) {
    std::vector<Series1> p;
    p.push_back(Series1::constant(n, 1));
    const Series1 base = s.truncated(n);
    for (int k = 1; k <= n; ++k) p.push_back(p.back() * base);
    return p;
  };
  const auto zp = powers(sub_z);
  const auto wp = powers(sub_w);

  Series2 r(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const Rational& c = f(i, j);
      if (c == 0) continue;
      // zp[i] starts at degree i, wp[j] at degree j.
      for (int a = i; a <= n - j; ++a) {
        const Rational& za = zp[i][a];
        if (za == 0) continue;
        for (int b = j; a + b <= n; ++b) {
          const Rational& wb = wp[j][b];
          if (wb == 0) continue;
          r.set(a, b, r(a, b) + c * za * wb);
        }
      }
    }
  }
  return r;
}

Series2 reciprocal(const Series2& f) {
  if (f(0, 0) == 0) throw Error(ErrorCode::ZeroConstantTerm, "reciprocal of a series vanishing at (0,0)");
  const int n = f.order();
  const Rational inv0 = 1 / f(0, 0);
  Series2 r(n);
  r.set(0, 0, inv0);
  for (int d = 1; d <= n; ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      Rational acc = 0;
      for (int p = 0; p <= i; ++p) {
        for (int q = 0; q <= j; ++q) {
          if (p == 0 && q == 0) continue;
          const Rational& c = f(p, q);
          if (c != 0) acc += c * r(i - p, j - q);
        }
      }
      r.set(i, j, -acc * inv0);
    }
  }
  return r;
}

SeriesComparison compare(const Series2& a, const Series2& b) {
  SeriesComparison out;
  out.order = std::min(a.order(), b.order());
  for (int d = 0; d <= out.order && out.equal; ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      if (a(i, j) != b(i, j)) {
        out.equal = false;
        out.first_mismatch = std::pair{i, j};
        out.lhs = a(i, j);
        out.rhs = b(i, j);
        break;
      }
    }
  }
  return out;
}

std::string to_string(const Series2& f) {
  std::string out;
  for (int d = 0; d <= f.order(); ++d) {
    for (int j = 0; j <= d; ++j) append_term(out, f(d - j, j), monomial(d - j, j));
  }
  return out.empty() ? "0" : out;
}

}  // namespace bifree
