#include "jordan/rat.hpp"

#include <cctype>

#include "jordan/error.hpp"

namespace jordan {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::Singular: return "SINGULAR";
    case ErrorCode::NotNilpotent: return "NOT_NILPOTENT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::RelationFails: return "RELATION_FAILS";
    case ErrorCode::YNotNilpotent: return "Y_NOT_NILPOTENT";
    case ErrorCode::ParamCountMismatch: return "PARAM_COUNT_MISMATCH";
    case ErrorCode::ZeroPolynomial: return "ZERO_POLYNOMIAL";
    case ErrorCode::EigenvaluesNotRational: return "EIGENVALUES_NOT_RATIONAL";
    case ErrorCode::NotAnAlgebra: return "NOT_AN_ALGEBRA";
    case ErrorCode::GensNotInAlgebra: return "GENS_NOT_IN_ALGEBRA";
    case ErrorCode::InvarianceFailure: return "INVARIANCE_FAILURE";
    case ErrorCode::NotFullBlock: return "NOT_FULL_BLOCK";
    case ErrorCode::ZeroParameter: return "ZERO_PARAMETER";
    case ErrorCode::Inconclusive: return "INCONCLUSIVE";
    case ErrorCode::InvariantViolation: return "INVARIANT_VIOLATION";
  }
  return "UNKNOWN";
}

Rat::Rat(long numerator, long denominator) : Rat(mpz_class(numerator), mpz_class(denominator)) {}

Rat::Rat(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw Error(ErrorCode::Singular, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

// Canonical integer: "0" or optional '-' followed by a nonzero leading digit.
bool is_canonical_int(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-') {
    if (!allow_sign) return false;
    i = 1;
    if (s.size() == 1) return false;
    if (s[1] == '0') return false;  // "-0" and "-01"
  }
  if (s[i] == '0' && s.size() > i + 1) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_canonical_int(num, true)) {
    throw Error(ErrorCode::ParseError, "non-canonical rational '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  if (slash == std::string_view::npos) return Rat(mpq_class(p));

  const std::string_view den = text.substr(slash + 1);
  if (!is_canonical_int(den, false)) {
    throw Error(ErrorCode::ParseError, "non-canonical rational '" + std::string(text) + "'");
  }
  mpz_class q(std::string(den), 10);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (q <= 1 || g != 1) {
    throw Error(ErrorCode::ParseError, "non-canonical rational '" + std::string(text) + "'");
  }
  return Rat(p, q);
}

std::string Rat::str() const { return value_.get_str(10); }

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::Singular, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace jordan
