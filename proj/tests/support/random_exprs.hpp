#ifndef HYPERGERM_TESTS_RANDOM_EXPRS_HPP
#define HYPERGERM_TESTS_RANDOM_EXPRS_HPP

#include <random>

#include "hypergerm/expr.hpp"

namespace hypergerm::testing {

// Random trees over the entire whitelist: constants, x, +, *, integer
// powers >= 0, exp, sin, cos. Everything generated here is
// Laurent-expandable with valuation >= 0 and passes is_entire_form.
inline Expr random_entire(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  switch (pick(rng)) {
    case 0: {
      std::uniform_int_distribution<int> num(-4, 4);
      std::uniform_int_distribution<int> den(1, 3);
      return constant(Rational(num(rng), den(rng)));
    }
    case 1: return variable(0);
    case 2: return add(random_entire(rng, depth - 1), random_entire(rng, depth - 1));
    case 3: return mul(random_entire(rng, depth - 1), random_entire(rng, depth - 1));
    case 4: {
      std::uniform_int_distribution<int> k(2, 3);
      return int_pow(random_entire(rng, depth - 1), k(rng));
    }
    case 5: return exp_of(random_entire(rng, depth - 2));
    case 6: return sin_of(random_entire(rng, depth - 1));
    default: return cos_of(random_entire(rng, depth - 1));
  }
}

// Germ-zero but not structurally zero; used to build semantically equal twins.
inline Expr hidden_zero(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 2);
  switch (coin(rng)) {
    case 0: return parse_expr("sin(x)^2+cos(x)^2-1");
    case 1: return parse_expr("exp(2*x)-exp(x)^2");
    default: return parse_expr("cos(2*x)-1+2*sin(x)^2");
  }
}

}  // namespace hypergerm::testing

#endif  // HYPERGERM_TESTS_RANDOM_EXPRS_HPP
