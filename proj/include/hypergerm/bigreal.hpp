#ifndef HYPERGERM_BIGREAL_HPP
#define HYPERGERM_BIGREAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace hypergerm {

/// Working scalar of the engine: arbitrary-precision binary float with a
/// runtime-selectable precision counted in significant decimal digits.
/// Values are immutable in practice (every operation returns a fresh value);
/// the default precision is a thread-local setting.
using BigReal = boost::multiprecision::mpfr_float;

/// Exact rational, used for expression constants so that structural
/// canonicalization can fold arithmetic without rounding.
using Rational = boost::multiprecision::mpq_rational;

/// Exact integer (convergents, subset sums, witness indices).
using BigInt = boost::multiprecision::mpz_int;

inline constexpr unsigned kDefaultPrecision = 60;
inline constexpr unsigned kMinPrecision = 30;

/// Current working precision in significant decimal digits.
unsigned working_precision();

/// Sets the working precision. Values below kMinPrecision are clamped up.
void set_working_precision(unsigned digits);

/// Scoped precision bump for internal guard computations.
class PrecisionGuard {
public:
  explicit PrecisionGuard(unsigned digits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
  unsigned saved_;
};

/// Parses a decimal literal ("12", "0.25", "1e-9"). Throws DomainError on
/// malformed input. The result carries the current working precision.
BigReal bigreal_from_decimal(const std::string& text);

/// Exact conversion BigReal -> Rational (every finite binary float is
/// rational). Used to admit measured values as expression constants.
Rational rational_from_bigreal(const BigReal& x);

BigReal bigreal_from_rational(const Rational& q);

/// Shortest-ish decimal rendering at the current working precision with
/// trailing zeros trimmed. Round-trips through bigreal_from_decimal to the
/// same value at equal precision.
std::string decimal_string(const BigReal& x);

/// Decimal rendering with an explicit digit count (0 = full precision).
std::string decimal_string(const BigReal& x, unsigned digits);

/// True iff `q` has a finite decimal expansion (denominator 2^a * 5^b).
bool has_finite_decimal(const Rational& q);

/// Exact decimal rendering of a rational with finite expansion; for other
/// rationals renders "p/q".
std::string rational_string(const Rational& q);

/// pi and e materialized at the current working precision.
BigReal const_pi();
BigReal const_e();

}  // namespace hypergerm

#endif  // HYPERGERM_BIGREAL_HPP
