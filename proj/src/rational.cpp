#include "bifree/rational.hpp"

#include "bifree/error.hpp"

#include <cctype>

namespace bifree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UniquenessViolation: return "UniquenessViolation";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ZeroMean: return "ZeroMean";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::DivisionError: return "DivisionError";
    case ErrorCode::InvalidSubclass: return "InvalidSubclass";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotNoncrossing: return "NotNoncrossing";
  }
  return "UnknownError";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class numerator(n, 10);
  mpz_class denominator(std::string(den), 10);
  if (denominator == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

Rational RationalSampler::next() {
  const auto span_num = static_cast<std::uint64_t>(2 * max_num_ + 1);
  const auto num = static_cast<long>(engine_() % span_num) - max_num_;
  const auto den = static_cast<long>(engine_() % static_cast<std::uint64_t>(max_den_)) + 1;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational RationalSampler::next_nonzero() {
  for (;;) {
    Rational r = next();
    if (r != 0) return r;
  }
}

}  // namespace bifree
