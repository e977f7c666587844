#ifndef HYPERGERM_ROTATION_HPP
#define HYPERGERM_ROTATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hypergerm/bigreal.hpp"

namespace hypergerm {

/// A positive irrational. Named forms carry exact continued fraction rules;
/// "dec:" trusts the given digits and nothing beyond; "cf:" trusts exactly
/// the listed coefficients.
struct IrrationalSpec {
  enum class Kind { Phi, Sqrt2, E, Decimal, CF };
  Kind kind = Kind::Phi;
  std::string decimal_digits;  // Decimal: the literal as given
  std::vector<BigInt> cf;      // CF: a0, a1, ...

  /// "phi" | "sqrt2" | "e" | "dec:<digits>" | "cf:a0,a1,...".
  static IrrationalSpec parse(std::string_view text);

  std::string to_string() const;

  /// Decimal digits this spec can vouch for; 0 means unlimited (named
  /// irrationals are recomputable at any precision).
  unsigned trusted_digits() const;
};

/// The value of gamma to `digits` decimal digits (default: working
/// precision). For Decimal/CF specs the returned value is exact only to
/// trusted_digits().
BigReal gamma_value(const IrrationalSpec& spec, unsigned digits = 0);

/// Exact-integer continued fraction convergents p_k/q_k of gamma. Grows on
/// demand; `at(k)` for k >= 1 (the stream deliberately skips the 0th
/// convergent, whose remainder is not yet a best approximation).
///
/// Throws PrecisionExhausted when a coefficient beyond what the spec can
/// vouch for is requested (finite cf: list, or dec: digits running out).
class ConvergentStream {
 public:
  explicit ConvergentStream(IrrationalSpec spec);

  struct Convergent {
    BigInt p, q;
  };

  const Convergent& at(std::size_t k);
  const IrrationalSpec& spec() const noexcept { return spec_; }

 private:
  BigInt coefficient(std::size_t k);

  IrrationalSpec spec_;
  std::vector<Convergent> conv_;      // conv_[k] = k-th convergent, from k=0
  std::vector<BigInt> decimal_cf_;    // extracted terms for Kind::Decimal
  bool decimal_done_ = false;
};

/// Signed distance from n to the nearest integer multiple of gamma:
/// rm(n) = n - k*gamma with k = round(n/gamma). Always in (-gamma/2,
/// gamma/2) and nonzero. Computed with enough extra digits that the result
/// carries full working precision even after cancellation.
///
/// Throws PrecisionExhausted when the spec cannot support n (guard:
/// n * 10^-trusted < 10^-10 * |rm|).
BigReal rm(const IrrationalSpec& spec, const BigInt& n);

/// `count` integers n with |rm(n)| < eps, drawn from convergent numerators
/// in increasing order. Constructive: continued fraction theory supplies
/// infinitely many for every eps > 0.
std::vector<BigInt> small_rm_witnesses(const IrrationalSpec& spec,
                                       const BigReal& eps, int count);

}  // namespace hypergerm

#endif  // HYPERGERM_ROTATION_HPP
