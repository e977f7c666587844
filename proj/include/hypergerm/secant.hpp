#ifndef HYPERGERM_SECANT_HPP
#define HYPERGERM_SECANT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hypergerm/germ.hpp"

namespace hypergerm {

/// Residual template alpha over the formal symbols
///   Y : the derivative of the candidate germ,
///   X : the indeterminate itself,
///   F : the candidate germ.
/// "Y-2*X" encodes alpha(f) = f' - 2x.
struct ResidualSpec {
  Expr templ;  // Y, X, F as variable ids 0, 1, 2

  /// Parses the template; rejects abs/floor right away since every residual
  /// must stay differentiable/expandable.
  static ResidualSpec parse(std::string_view text);

  std::string to_string() const;
};

/// Applies the template to a candidate: Y gets the candidate's derivative,
/// X the indeterminate, F the candidate itself (substituted in that order,
/// so candidate subtrees are never re-substituted).
HyperGerm residual(const ResidualSpec& spec, const HyperGerm& g);

struct SecantStep {
  int index = 0;           // 0 and 1 are the starting guesses
  Expr candidate;
  Expr residual;
  bool residual_zero = false;
};

/// Outcome of a secant run. `converged` mirrors the last trace flag; a run
/// that exhausts max_iter returns normally with converged == false.
struct SecantResult {
  HyperGerm result;
  bool converged = false;
  int iterations = 0;  // secant updates applied (0 when a guess already solves)
  std::vector<SecantStep> trace;
};

/// Secant iteration f2 = f1 - alpha(f1) * (f1 - f0) / (alpha(f1) - alpha(f0))
/// in germ arithmetic, stopping on an exactly-zero residual germ.
///
/// Throws StalledSecant (a DivisionByZeroGerm) when consecutive residuals
/// coincide while nonzero; propagates expansion errors from the candidates.
SecantResult secant_solve(const ResidualSpec& spec, const HyperGerm& g0,
                          const HyperGerm& g1, int max_iter = 25);

}  // namespace hypergerm

#endif  // HYPERGERM_SECANT_HPP
