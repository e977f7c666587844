#include "hypergerm/calculus.hpp"

#include "hypergerm/errors.hpp"

namespace hypergerm {

bool is_entire_form(const Expr& e) {
  switch (e->kind()) {
    case ExprKind::Const:
    case ExprKind::Var:
      return true;
    case ExprKind::IntPow:
      if (e->exponent() < 0) return false;
      [[fallthrough]];
    case ExprKind::Add:
    case ExprKind::Mul:
    case ExprKind::Exp:
    case ExprKind::Sin:
    case ExprKind::Cos:
      for (const Expr& k : e->children()) {
        if (!is_entire_form(k)) return false;
      }
      return true;
    case ExprKind::Div:
    case ExprKind::Log:
    case ExprKind::Abs:
    case ExprKind::Floor:
      return false;
  }
  return false;
}

namespace {

void require_entire(const Expr& e, const char* role) {
  if (!is_entire_form(e)) {
    throw NotEntire(std::string(role) +
                    " is outside the entire whitelist (no division, log, "
                    "abs, floor or negative powers)");
  }
}

}  // namespace

HyperGerm hyper_derivative(const HyperGerm& g) {
  Expr d = differentiate(g.repr());
  HyperGerm out(d);
  out.series(8);  // surfaces NotLaurent here instead of at first use
  return out;
}

HyperGerm hyper_compose(const HyperGerm& f, const HyperGerm& g) {
  require_entire(f.repr(), "outer germ");
  require_entire(g.repr(), "inner germ");
  return HyperGerm(substitute(f.repr(), 0, g.repr()));
}

ChainRuleReport check_chain_rule(const HyperGerm& f, const HyperGerm& g) {
  HyperGerm fg = hyper_compose(f, g);
  HyperGerm df = hyper_derivative(f);
  HyperGerm dg = hyper_derivative(g);
  ChainRuleReport r;
  r.lhs = hyper_derivative(fg);
  r.rhs = germ_mul(hyper_compose(df, g), dg);
  r.holds = germ_equal(r.lhs, r.rhs);
  return r;
}

HyperGerm lift_point(const BigReal& x0, const BigReal& y0) {
  Expr e = add(constant(rational_from_bigreal(x0)),
               mul(constant(rational_from_bigreal(y0)), variable(0)));
  return HyperGerm(e);
}

}  // namespace hypergerm
