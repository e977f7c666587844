#ifndef HYPERGERM_CALCULUS_HPP
#define HYPERGERM_CALCULUS_HPP

#include "hypergerm/germ.hpp"

namespace hypergerm {

/// Syntactic entirety: the representative uses only constants, the
/// indeterminate, +, *, integer powers >= 0, exp, sin and cos. Sound but
/// deliberately incomplete (exp(x)-1 over x is entire as a function yet
/// rejected here).
bool is_entire_form(const Expr& e);

/// Derivative on germs, [f] -> [f']. Differentiates the representative and
/// verifies the result is series-expandable, so callers get the error at the
/// call site rather than at first use.
///
/// Throws NonSmoothExpression (abs/floor), NotLaurent (derivative not
/// expandable at 0).
HyperGerm hyper_derivative(const HyperGerm& g);

/// Composition of entire germs by substitution of the representative.
/// Throws NotEntire if either argument fails the whitelist.
HyperGerm hyper_compose(const HyperGerm& f, const HyperGerm& g);

/// Evidence for one chain-rule instance (f o g)' = (f' o g) * g'.
struct ChainRuleReport {
  bool holds = false;
  HyperGerm lhs;  // (f o g)'
  HyperGerm rhs;  // (f' o g) * g'
};

ChainRuleReport check_chain_rule(const HyperGerm& f, const HyperGerm& g);

/// The affine germ x0 + y0*x: standard part x0, derivative's standard part
/// y0, both exact. Inputs are converted to exact rationals.
HyperGerm lift_point(const BigReal& x0, const BigReal& y0);

}  // namespace hypergerm

#endif  // HYPERGERM_CALCULUS_HPP
