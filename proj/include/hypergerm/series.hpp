#ifndef HYPERGERM_SERIES_HPP
#define HYPERGERM_SERIES_HPP

#include <vector>

#include "hypergerm/bigreal.hpp"
#include "hypergerm/expr.hpp"

namespace hypergerm {

inline constexpr int kDefaultOrder = 32;

/// Truncated Laurent expansion at 0+ with exact valuation tracking.
///
/// A nonzero series carries the window c_v .. c_{v+order}; every stored
/// coefficient with magnitude below zero_threshold() has been snapped to an
/// exact 0. A zero series has an empty coefficient list: all coefficients
/// with exponent < confidence are certified below the threshold (the
/// semi-decision side of germ equality).
struct LaurentSeries {
  int order = kDefaultOrder;
  bool zero = false;
  long valuation = 0;
  std::vector<BigReal> coefficients;
  long confidence = 0;

  const BigReal& coeff(long exponent) const;  // 0 outside the window
};

/// Magnitude below which a computed coefficient counts as zero. Scales with
/// the working precision p as 10^(-2p/3): 1e-40 at the default 60 digits.
BigReal zero_threshold();

/// Tolerance for the numeric sampling arm of germ equality: 10^(-p/3),
/// 1e-20 at 60 digits.
BigReal sample_tolerance();

/// Expands a smooth expression into its truncated Laurent series.
///
/// Throws NonSmoothExpression (abs/floor present), NotLaurent (essential
/// singularity or logarithm at 0), DomainError (log of a negative leading
/// value), DivisionByZeroGerm (division by a germ that vanishes at the
/// certified order).
LaurentSeries expand_series(const Expr& e, int order = kDefaultOrder);

/// Human-readable rendering such as "1-0.5*x^2+O(x^33)".
std::string series_string(const LaurentSeries& s);

}  // namespace hypergerm

#endif  // HYPERGERM_SERIES_HPP
