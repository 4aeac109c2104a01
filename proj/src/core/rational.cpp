#include "homtwist/rational.hpp"

#include <ostream>

#include "homtwist/error.hpp"

namespace homtwist {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedRational: return "MalformedRational";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::NotComultiplicative: return "NotComultiplicative";
    case ErrorKind::NotInvolutive: return "NotInvolutive";
    case ErrorKind::NotCommutingWithAlpha: return "NotCommutingWithAlpha";
    case ErrorKind::CommutationFailure: return "CommutationFailure";
    case ErrorKind::IntertwiningFailure: return "IntertwiningFailure";
    case ErrorKind::BraidViolation: return "BraidViolation";
    case ErrorKind::YDViolation: return "YDViolation";
    case ErrorKind::PreconditionFailure: return "PreconditionFailure";
    case ErrorKind::DegenerateQ: return "DegenerateQ";
    case ErrorKind::ParamConstraintViolation: return "ParamConstraintViolation";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::WrongKind: return "WrongKind";
  }
  return "Error";
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) raise(ErrorKind::ZeroDenominator, "denominator is zero");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    raise(ErrorKind::MalformedRational, "'" + std::string(text) + "' is not of the form -?digits(/digits)?");

  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) raise(ErrorKind::ZeroDenominator, "'" + std::string(text) + "'");
  if (text.front() == '-') n = -n;

  Rational r;
  r.value_ = mpq_class(n, d);
  r.value_.canonicalize();
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) raise(ErrorKind::NotInvertible, "zero has no inverse");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational result(1);
  Rational base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) raise(ErrorKind::ZeroDenominator, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.value_.get_str(); }

}  // namespace homtwist
