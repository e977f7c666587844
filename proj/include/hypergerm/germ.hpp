#ifndef HYPERGERM_GERM_HPP
#define HYPERGERM_GERM_HPP

#include <memory>
#include <string>
#include <vector>

#include "hypergerm/expr.hpp"
#include "hypergerm/series.hpp"

namespace hypergerm {

/// A germ of an elementary function at 0+, the working model of a hyperreal.
/// Immutable: arithmetic builds new germs. The series cache is filled on
/// first demand and shared between copies; concurrent readers are safe.
class HyperGerm {
 public:
  HyperGerm();              // the zero germ
  explicit HyperGerm(Expr repr);

  const Expr& repr() const noexcept { return repr_; }
  bool smooth() const noexcept { return repr_->smooth(); }
  std::string to_string() const { return print_expr(repr_); }

  /// Truncated Laurent expansion of the representative, cached per
  /// (order, working precision).
  std::shared_ptr<const LaurentSeries> series(int order = kDefaultOrder) const;

 private:
  Expr repr_;
  struct CacheSlot;
  mutable std::shared_ptr<CacheSlot> cache_;
};

/// The germ of the identity: the canonical positive infinitesimal.
HyperGerm omega();

/// Classification of a hyperreal by its standard part.
struct StdPart {
  enum class Tag { Finite, PlusInfinite, MinusInfinite };
  Tag tag = Tag::Finite;
  BigReal value;  // meaningful only when tag == Finite

  bool finite() const noexcept { return tag == Tag::Finite; }
};

enum class Ordering { Less, Equal, Greater };

/// Field arithmetic on germs. Division checks the divisor against the zero
/// germ first and throws DivisionByZeroGerm.
HyperGerm germ_add(const HyperGerm& a, const HyperGerm& b);
HyperGerm germ_sub(const HyperGerm& a, const HyperGerm& b);
HyperGerm germ_mul(const HyperGerm& a, const HyperGerm& b);
HyperGerm germ_div(const HyperGerm& a, const HyperGerm& b);
HyperGerm germ_neg(const HyperGerm& a);

/// Decides whether two germs agree on some interval (0, delta).
///
/// Semi-decision by conjunction: the difference must expand to a certified
/// zero series at `order` AND |a-b| must stay below sample_tolerance() at
/// the probe points x = 10^-3, 10^-6, 10^-9, 10^-12 (evaluated with 40 extra
/// guard digits; probe points where the representative is undefined are
/// skipped).
bool germ_equal(const HyperGerm& a, const HyperGerm& b, int order = kDefaultOrder);

/// One probe of the sampling arm of germ equality.
struct SamplePoint {
  int exponent = 0;    // probe at x = 10^-exponent
  bool skipped = false;  // representative undefined there
  BigReal magnitude;   // |a-b| when not skipped
};

/// Full verdict with the evidence behind it, for verbose/JSON output.
struct EqualityReport {
  bool equal = false;
  bool series_zero = false;
  long confidence = 0;   // certified order of the zero window
  long first_difference = 0;  // valuation of a-b when series_zero is false
  int order = kDefaultOrder;
  std::vector<SamplePoint> samples;  // empty when the series arm already failed
};

EqualityReport germ_equal_report(const HyperGerm& a, const HyperGerm& b,
                                 int order = kDefaultOrder);

/// Total order on germs: sign of a-b on some (0, delta), read off the
/// leading coefficient of the difference series.
Ordering germ_compare(const HyperGerm& a, const HyperGerm& b,
                      int order = kDefaultOrder);

/// Standard part: the unique real infinitely close to a finite germ, or the
/// infinite classification when the valuation is negative.
StdPart st(const HyperGerm& g, int order = kDefaultOrder);

std::string to_string(const StdPart& p);
std::string to_string(Ordering o);

}  // namespace hypergerm

#endif  // HYPERGERM_GERM_HPP
