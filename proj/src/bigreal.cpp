#include "hypergerm/bigreal.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hypergerm/errors.hpp"

namespace hypergerm {

namespace {

// boost starts variable-precision floats at its own (much lower) default;
// every thread that touches the precision API gets ours first.
struct PrecisionInit {
  PrecisionInit() { BigReal::default_precision(kDefaultPrecision); }
};
thread_local PrecisionInit precision_init;

void touch_precision_init() { (void)&precision_init; }

}  // namespace

unsigned working_precision() {
  touch_precision_init();
  return BigReal::default_precision();
}

void set_working_precision(unsigned digits) {
  touch_precision_init();
  BigReal::default_precision(std::max(digits, kMinPrecision));
}

PrecisionGuard::PrecisionGuard(unsigned digits) : saved_(working_precision()) {
  set_working_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { BigReal::default_precision(saved_); }

BigReal bigreal_from_decimal(const std::string& text) {
  // Validate by hand: mpfr's parser accepts hex floats, "@nan@" and similar
  // forms we do not want to admit as decimal literals.
  std::size_t i = 0;
  auto digits = [&](std::size_t& j) {
    std::size_t start = j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j > start;
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  bool ok = digits(i);
  if (ok && i < text.size() && text[i] == '.') {
    ++i;
    ok = digits(i);
  }
  if (ok && i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    ok = digits(i);
  }
  if (!ok || i != text.size()) {
    throw DomainError("not a decimal literal: '" + text + "'");
  }
  return BigReal(text);
}

Rational rational_from_bigreal(const BigReal& x) {
  if (!mpfr_number_p(x.backend().data())) {
    throw DomainError("cannot convert a non-finite value to a rational");
  }
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x.backend().data());
  Rational r(q);
  mpq_clear(q);
  return r;
}

BigReal bigreal_from_rational(const Rational& q) { return BigReal(q); }

std::string decimal_string(const BigReal& x, unsigned digits) {
  if (digits == 0) digits = working_precision();
  std::string s = x.str(digits, std::ios_base::fmtflags{});
  // x.str() already produces plain decimal or scientific as appropriate;
  // normalize "-0" and trim a trailing '.' if one ever appears.
  if (s == "-0") s = "0";
  return s;
}

std::string decimal_string(const BigReal& x) {
  return decimal_string(x, working_precision());
}

bool has_finite_decimal(const Rational& q) {
  BigInt den = denominator(q);
  for (BigInt p : {BigInt(2), BigInt(5)}) {
    while (den % p == 0) den /= p;
  }
  return den == 1;
}

std::string rational_string(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  if (den == 1) return num.str();
  if (!has_finite_decimal(q)) return num.str() + "/" + den.str();
  // Scale so that num * 10^k / den is integral, then place the point.
  unsigned k = 0;
  BigInt d = den;
  while (d % 2 == 0) { d /= 2; ++k; }
  unsigned k5 = 0;
  while (d % 5 == 0) { d /= 5; ++k5; }
  k = std::max(k, k5);
  BigInt scaled = num;
  for (unsigned i = 0; i < k; ++i) scaled *= 10;
  scaled /= den;
  bool neg = scaled < 0;
  std::string body = BigInt(abs(scaled)).str();
  if (body.size() <= k) body.insert(0, k - body.size() + 1, '0');
  body.insert(body.size() - k, ".");
  while (body.back() == '0') body.pop_back();
  if (body.back() == '.') body.pop_back();
  return (neg ? "-" : "") + body;
}

BigReal const_pi() {
  BigReal r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

BigReal const_e() { return exp(BigReal(1)); }

}  // namespace hypergerm
