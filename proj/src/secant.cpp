#include "hypergerm/secant.hpp"

#include "hypergerm/errors.hpp"

namespace hypergerm {

namespace {

const std::vector<std::string>& residual_names() {
  static const std::vector<std::string> names = {"Y", "X", "F"};
  return names;
}

bool zero_residual(const HyperGerm& r) { return germ_equal(r, HyperGerm()); }

}  // namespace

ResidualSpec ResidualSpec::parse(std::string_view text) {
  ResidualSpec spec{parse_expr(text, residual_names())};
  if (!spec.templ->smooth()) {
    throw NonSmoothExpression(
        "residual templates cannot contain abs or floor");
  }
  return spec;
}

std::string ResidualSpec::to_string() const {
  return print_expr(templ, residual_names());
}

HyperGerm residual(const ResidualSpec& spec, const HyperGerm& g) {
  Expr d = differentiate(g.repr());
  Expr r = substitute(spec.templ, 0, d);      // Y := g'
  r = substitute(r, 1, variable(0));          // X := the indeterminate
  r = substitute(r, 2, g.repr());             // F := g
  return HyperGerm(r);
}

SecantResult secant_solve(const ResidualSpec& spec, const HyperGerm& g0,
                          const HyperGerm& g1, int max_iter) {
  SecantResult out;

  HyperGerm f0 = g0, f1 = g1;
  HyperGerm r0 = residual(spec, f0);
  bool z0 = zero_residual(r0);
  out.trace.push_back({0, f0.repr(), r0.repr(), z0});
  if (z0) {
    out.result = f0;
    out.converged = true;
    return out;
  }

  HyperGerm r1 = residual(spec, f1);
  bool z1 = zero_residual(r1);
  out.trace.push_back({1, f1.repr(), r1.repr(), z1});
  if (z1) {
    out.result = f1;
    out.converged = true;
    return out;
  }

  for (int k = 1; k <= max_iter; ++k) {
    HyperGerm denom = germ_sub(r1, r0);
    if (germ_equal(denom, HyperGerm())) {
      throw StalledSecant(
          "consecutive residuals coincide; the secant update is undefined");
    }
    HyperGerm f2 =
        germ_sub(f1, germ_mul(r1, germ_div(germ_sub(f1, f0), denom)));
    HyperGerm r2 = residual(spec, f2);
    bool z2 = zero_residual(r2);
    out.trace.push_back({k + 1, f2.repr(), r2.repr(), z2});
    if (z2) {
      out.result = f2;
      out.converged = true;
      out.iterations = k;
      return out;
    }
    f0 = f1;
    r0 = r1;
    f1 = f2;
    r1 = r2;
  }

  out.result = f1;
  out.converged = false;
  out.iterations = max_iter;
  return out;
}

}  // namespace hypergerm
