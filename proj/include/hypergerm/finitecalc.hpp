#ifndef HYPERGERM_FINITECALC_HPP
#define HYPERGERM_FINITECALC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypergerm/bigreal.hpp"
#include "hypergerm/expr.hpp"
#include "hypergerm/rotation.hpp"

// Finite calculus on integer sequences: difference quotients sampled at
// integers whose remainder mod gamma is tiny, and the limit estimator built
// on them. The quotient (f(n+m)-f(n))/rm(m) plays the role of a derivative
// once rm(m) can be driven arbitrarily close to zero.

namespace hypergerm {

// A total function on {1, 2, ...}. Three shapes:
//   sequence:    n -> eval(expr, n)
//   periodized:  n -> eval(outer, rm_gamma(n)), a gamma-periodic extension
//   flat:        n -> floor(1 / |rm_gamma(n)|), bounded differences but
//                unbounded values along convergent numerators
class SeqFn {
 public:
  enum class Kind { Sequence, Periodized, Flat };

  static SeqFn sequence(Expr seq_expr);
  static SeqFn periodized(Expr outer, IrrationalSpec gamma);
  static SeqFn flat_counterexample(IrrationalSpec gamma);

  BigReal operator()(const BigInt& n) const;

  Kind kind() const { return kind_; }
  const Expr& expr() const { return expr_; }  // Sequence/Periodized only
  const IrrationalSpec& gamma() const;        // Periodized/Flat only
  std::string to_string() const;

 private:
  SeqFn(Kind kind, Expr expr, std::optional<IrrationalSpec> gamma)
      : kind_(kind), expr_(std::move(expr)), gamma_(std::move(gamma)) {}

  Kind kind_;
  Expr expr_;
  std::optional<IrrationalSpec> gamma_;
};

// Surface syntax shared by the command line and the bindings:
// "seq:<expr in n>" | "periodized:<expr in x>" | "flat". The gamma is
// attached to the periodized and flat forms.
SeqFn parse_seqfn(std::string_view text, const IrrationalSpec& gamma);

struct DeltaRow {
  BigInt m;         // witness: convergent numerator with small remainder
  BigReal rm_m;     // rm_gamma(m), the step size
  BigReal quotient; // (f(n+m) - f(n)) / rm_m
};

struct DeltaSample {
  BigInt n;
  int depth = 0;  // == rows.size()
  std::vector<DeltaRow> rows;
};

// Difference quotients of f at n along witnesses m with |rm(m)| < witness_eps
// (default gamma/2, i.e. every convergent numerator). Witnesses must also
// pass the additivity guard |rm(n)| + |rm(m)| < gamma/2, which makes the
// nearest multiple of n+m decompose as the sum of the two nearest multiples.
// depth >= 3.
DeltaSample delta_quotients(const SeqFn& f, const IrrationalSpec& gamma,
                            const BigInt& n, int depth,
                            std::optional<BigReal> witness_eps = std::nullopt);

struct DGammaEstimate {
  enum class Kind { Finite, PlusInfinite, MinusInfinite, NoLimit };
  Kind kind = Kind::NoLimit;
  BigReal value;      // Finite only: last quotient
  BigReal error_bar;  // Finite only: max pairwise spread of last 3 quotients
};

// Classifies the tail of the quotient list: Finite when the last three
// quotients agree within 1e-6, signed infinite when they grow past 1e6
// monotonically with one sign, NoLimit otherwise. depth >= 5.
DGammaEstimate d_gamma_estimate(const SeqFn& f, const IrrationalSpec& gamma,
                                const BigInt& n, int depth = 12,
                                std::optional<BigReal> witness_eps = std::nullopt);

// The gamma-periodic sequence n -> outer(rm_gamma(n)).
SeqFn periodize(Expr outer, IrrationalSpec gamma);

// floor(1/|rm|) composed with rm: every difference quotient along deep
// witnesses vanishes, yet the values are unbounded.
SeqFn build_flat_nonconstant(IrrationalSpec gamma);

struct DimensionRow {
  BigInt n;
  BigReal rm_n;
  DGammaEstimate estimate;
  BigReal expected;  // derivative of the outer function at rm_n
  BigReal error;     // |estimate.value - expected|; 0 when estimate not finite
  bool pass = false;
};

struct DimensionCheck {
  bool all_pass = false;
  BigReal tolerance;
  std::vector<DimensionRow> rows;
};

// Checks that differentiating the periodization of a smooth outer function
// recovers the ordinary derivative at the remainder points. Witnesses are
// restricted to |rm(m)| < tolerance/10 so the first-order quotient error is
// already below tolerance.
DimensionCheck check_dimensions(const Expr& f_outer, const IrrationalSpec& gamma,
                                const std::vector<BigInt>& ns, int depth = 12,
                                const BigReal& tolerance = BigReal("1e-6"));

std::string to_string(DGammaEstimate::Kind kind);

}  // namespace hypergerm

#endif
