#include "qmwords/ratio.hpp"

#include <cctype>

#include "qmwords/error.hpp"

namespace qmw {

namespace {

Ratio::Int int_pow2(unsigned long e) {
  Ratio::Int one(1);
  return one << e;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotLeftKCauchy: return "NotLeftKCauchy";
    case ErrorCode::MalformedPresentation: return "MalformedPresentation";
    case ErrorCode::NotAscending: return "NotAscending";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::OrderAxiomViolation: return "OrderAxiomViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Ratio::Ratio(long long num, long long den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "ratio with zero denominator");
  value_ = Backend(Int(num), Int(den));
}

Ratio Ratio::pow2(long e) {
  if (e >= 0) return Ratio(Backend(int_pow2(static_cast<unsigned long>(e))));
  return Ratio(Backend(Int(1), int_pow2(static_cast<unsigned long>(-e))));
}

Ratio Ratio::operator/(const Ratio& o) const {
  if (o.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero ratio");
  return Ratio(Backend(value_ / o.value_));
}

bool Ratio::is_dyadic() const {
  Int den = denominator(value_);
  // den is a power of two iff it has exactly one set bit.
  return den > 0 && (den & (den - 1)) == 0;
}

std::optional<unsigned long> Ratio::pow2_negative_exponent() const {
  if (numerator(value_) != 1) return std::nullopt;
  Int den = denominator(value_);
  if (den <= 1 || (den & (den - 1)) != 0) return std::nullopt;
  return static_cast<unsigned long>(boost::multiprecision::lsb(den));
}

long Ratio::ceil_log2() const {
  if (value_ <= 0) fail(ErrorCode::InvalidArgument, "ceil_log2 of non-positive ratio");
  Int num = numerator(value_);
  Int den = denominator(value_);
  // Candidate from bit lengths, then adjust exactly.
  long k = static_cast<long>(boost::multiprecision::msb(num)) -
           static_cast<long>(boost::multiprecision::msb(den));
  // Ensure 2^k >= num/den, i.e. den*2^k >= num, with minimal k.
  auto ge = [&](long e) {
    if (e >= 0) return den * int_pow2(static_cast<unsigned long>(e)) >= num;
    return den >= num * int_pow2(static_cast<unsigned long>(-e));
  };
  while (!ge(k)) ++k;
  while (k > std::numeric_limits<long>::min() && ge(k - 1)) --k;
  return k;
}

std::string Ratio::str() const {
  Int num = numerator(value_);
  Int den = denominator(value_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Ratio Ratio::parse(const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i < text.size() && text[i] == '2' && i + 1 < text.size() && text[i + 1] == '^') {
    // "2^-k" form.
    i += 2;
    if (i >= text.size() || text[i] != '-')
      fail(ErrorCode::ParseError, "expected '-' after '2^' in ratio literal", static_cast<long>(i));
    ++i;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail(ErrorCode::ParseError, "expected exponent digits", static_cast<long>(i));
    long k = std::stol(text.substr(start, i - start));
    skip_ws();
    if (i != text.size()) fail(ErrorCode::ParseError, "trailing characters in ratio literal", static_cast<long>(i));
    Ratio r = pow2(-k);
    return negative ? Ratio(0) - r : r;
  }
  size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start) fail(ErrorCode::ParseError, "expected digits in ratio literal", static_cast<long>(i));
  Int num(text.substr(start, i - start));
  Int den(1);
  skip_ws();
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    size_t dstart = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == dstart) fail(ErrorCode::ParseError, "expected denominator digits", static_cast<long>(i));
    den = Int(text.substr(dstart, i - dstart));
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator", static_cast<long>(dstart));
  }
  skip_ws();
  if (i != text.size()) fail(ErrorCode::ParseError, "trailing characters in ratio literal", static_cast<long>(i));
  if (negative) num = -num;
  return Ratio(Backend(num, den));
}

}  // namespace qmw
