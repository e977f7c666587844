#include "hypergerm/expr.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <utility>

#include "hypergerm/errors.hpp"

namespace hypergerm {

Expr make_node(ExprKind kind, Rational value, int var_id, long exponent,
               std::vector<Expr> kids) {
  auto node = std::shared_ptr<ExprNode>(new ExprNode());
  node->kind_ = kind;
  node->value_ = std::move(value);
  node->var_id_ = var_id;
  node->exponent_ = exponent;
  node->kids_ = std::move(kids);
  node->smooth_ = kind != ExprKind::Abs && kind != ExprKind::Floor;
  node->var_mask_ = kind == ExprKind::Var ? (1u << var_id) : 0u;
  for (const Expr& k : node->kids_) {
    node->smooth_ = node->smooth_ && k->smooth();
    node->var_mask_ |= k->var_mask();
  }
  return node;
}

namespace {

Expr raw(ExprKind kind, std::vector<Expr> kids) {
  return make_node(kind, Rational(0), 0, 0, std::move(kids));
}

int kind_rank(ExprKind k) {
  switch (k) {
    case ExprKind::Const: return 0;
    case ExprKind::Var: return 1;
    case ExprKind::Exp: return 2;
    case ExprKind::Log: return 3;
    case ExprKind::IntPow: return 4;
    case ExprKind::Sin: return 5;
    case ExprKind::Cos: return 6;
    case ExprKind::Abs: return 7;
    case ExprKind::Floor: return 8;
    case ExprKind::Mul: return 9;
    case ExprKind::Div: return 10;
    case ExprKind::Add: return 11;
  }
  return 12;
}

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

Rational rat_pow(const Rational& q, long k) {
  if (k == 0) return Rational(1);
  unsigned long a = static_cast<unsigned long>(k < 0 ? -k : k);
  BigInt nn = pow(numerator(q), static_cast<unsigned>(a));
  BigInt dd = pow(denominator(q), static_cast<unsigned>(a));
  if (k > 0) return Rational(nn, dd);
  if (nn == 0) throw DomainError("zero raised to a negative power");
  return Rational(dd, nn);
}

// Splits a canonical term into (rational coefficient, core). Core is null for
// pure constants.
std::pair<Rational, Expr> split_coeff(const Expr& e) {
  if (e->kind() == ExprKind::Const) return {e->value(), nullptr};
  if (e->kind() == ExprKind::Mul &&
      e->children().front()->kind() == ExprKind::Const) {
    const auto& kids = e->children();
    if (kids.size() == 2) return {kids.front()->value(), kids[1]};
    std::vector<Expr> rest(kids.begin() + 1, kids.end());
    return {kids.front()->value(), raw(ExprKind::Mul, std::move(rest))};
  }
  return {Rational(1), e};
}

// Inverse of split_coeff for nonzero coefficients.
Expr join_coeff(const Rational& coeff, const Expr& core) {
  if (!core) return constant(coeff);
  if (coeff == 1) return core;
  std::vector<Expr> kids;
  kids.push_back(constant(coeff));
  if (core->kind() == ExprKind::Mul) {
    for (const Expr& k : core->children()) kids.push_back(k);
  } else {
    kids.push_back(core);
  }
  return raw(ExprKind::Mul, std::move(kids));
}

std::pair<Expr, long> split_pow(const Expr& e) {
  if (e->kind() == ExprKind::IntPow) return {e->children().front(), e->exponent()};
  return {e, 1};
}

// Factor-level view of a product: rational coefficient plus base -> exponent.
struct FactorMap {
  Rational coeff{1};
  std::map<Expr, long, ExprLess> powers;
};

void absorb_factor(FactorMap& fm, const Expr& factor, long sign) {
  if (factor->kind() == ExprKind::Const) {
    fm.coeff *= sign > 0 ? factor->value() : rat_pow(factor->value(), -1);
    return;
  }
  auto [base, k] = split_pow(factor);
  fm.powers[base] += sign * k;
}

FactorMap factor_view(const Expr& e, long sign) {
  FactorMap fm;
  if (e->kind() == ExprKind::Mul) {
    for (const Expr& f : e->children()) absorb_factor(fm, f, sign);
  } else {
    absorb_factor(fm, e, sign);
  }
  return fm;
}

Expr assemble_product(const Rational& coeff, std::vector<Expr> factors) {
  if (coeff == 0) return constant(Rational(0));
  std::sort(factors.begin(), factors.end(), ExprLess{});
  if (factors.empty()) return constant(coeff);
  if (coeff != 1) factors.insert(factors.begin(), constant(coeff));
  if (factors.size() == 1) return factors.front();
  return raw(ExprKind::Mul, std::move(factors));
}

}  // namespace

Expr constant(Rational v) {
  return make_node(ExprKind::Const, std::move(v), 0, 0, {});
}

Expr constant(long v) { return constant(Rational(v)); }

Expr variable(int id) { return make_node(ExprKind::Var, Rational(0), id, 0, {}); }

int compare(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return 0;
  int ra = kind_rank(a->kind()), rb = kind_rank(b->kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a->kind()) {
    case ExprKind::Const: {
      if (a->value() == b->value()) return 0;
      return a->value() < b->value() ? -1 : 1;
    }
    case ExprKind::Var:
      if (a->var_id() == b->var_id()) return 0;
      return a->var_id() < b->var_id() ? -1 : 1;
    case ExprKind::IntPow: {
      int c = compare(a->children().front(), b->children().front());
      if (c != 0) return c;
      if (a->exponent() == b->exponent()) return 0;
      return a->exponent() < b->exponent() ? -1 : 1;
    }
    default: {
      const auto& ka = a->children();
      const auto& kb = b->children();
      std::size_t n = std::min(ka.size(), kb.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = compare(ka[i], kb[i]);
        if (c != 0) return c;
      }
      if (ka.size() == kb.size()) return 0;
      return ka.size() < kb.size() ? -1 : 1;
    }
  }
}

bool structurally_equal(const Expr& a, const Expr& b) { return compare(a, b) == 0; }

Expr add(std::vector<Expr> terms) {
  Rational const_sum(0);
  std::map<Expr, Rational, ExprLess> by_core;
  std::vector<Expr> stack(terms.rbegin(), terms.rend());
  while (!stack.empty()) {
    Expr t = stack.back();
    stack.pop_back();
    if (t->kind() == ExprKind::Add) {
      for (auto it = t->children().rbegin(); it != t->children().rend(); ++it)
        stack.push_back(*it);
      continue;
    }
    auto [coeff, core] = split_coeff(t);
    if (!core) {
      const_sum += coeff;
    } else if (core->kind() == ExprKind::Add) {
      // Rational multiple of a sum, e.g. -(x^2-x^3): distribute so the
      // pieces collect with like terms instead of hiding behind the product.
      for (auto it = core->children().rbegin(); it != core->children().rend();
           ++it) {
        auto [c2, k2] = split_coeff(*it);
        stack.push_back(join_coeff(coeff * c2, k2));
      }
    } else {
      by_core[core] += coeff;
    }
  }
  std::vector<Expr> out;
  if (const_sum != 0) out.push_back(constant(const_sum));
  for (const auto& [core, coeff] : by_core) {
    if (coeff != 0) out.push_back(join_coeff(coeff, core));
  }
  if (out.empty()) return constant(Rational(0));
  if (out.size() == 1) return out.front();
  return raw(ExprKind::Add, std::move(out));
}

Expr add(const Expr& a, const Expr& b) { return add(std::vector<Expr>{a, b}); }

Expr neg(const Expr& a) { return mul(constant(Rational(-1)), a); }

Expr sub(const Expr& a, const Expr& b) { return add(a, neg(b)); }

Expr mul(std::vector<Expr> factors) {
  // First pass: flatten products and pull quotients up into a single Div.
  std::vector<Expr> nums, dens;
  std::vector<Expr> stack(factors.rbegin(), factors.rend());
  while (!stack.empty()) {
    Expr f = stack.back();
    stack.pop_back();
    if (f->kind() == ExprKind::Mul) {
      for (auto it = f->children().rbegin(); it != f->children().rend(); ++it)
        stack.push_back(*it);
    } else if (f->kind() == ExprKind::Div) {
      nums.push_back(f->children().front());
      dens.push_back(f->children().back());
    } else {
      nums.push_back(f);
    }
  }
  if (!dens.empty()) return div(mul(std::move(nums)), mul(std::move(dens)));

  FactorMap fm;
  for (const Expr& f : nums) absorb_factor(fm, f, +1);
  if (fm.coeff == 0) return constant(Rational(0));
  std::vector<Expr> out;
  for (const auto& [base, k] : fm.powers) {
    if (k == 0) continue;
    out.push_back(int_pow(base, k));
  }
  // int_pow may have produced quotients (negative powers of non-monomials);
  // rebuild if so.
  bool has_div = std::any_of(out.begin(), out.end(), [](const Expr& e) {
    return e->kind() == ExprKind::Div;
  });
  if (has_div) {
    out.push_back(constant(fm.coeff));
    return mul(std::move(out));
  }
  return assemble_product(fm.coeff, std::move(out));
}

Expr mul(const Expr& a, const Expr& b) { return mul(std::vector<Expr>{a, b}); }

Expr int_pow(const Expr& base, long k) {
  if (k == 1) return base;
  if (k == 0) return constant(Rational(1));
  switch (base->kind()) {
    case ExprKind::Const:
      return constant(rat_pow(base->value(), k));
    case ExprKind::IntPow: {
      long j = base->exponent();
      if ((j > 0 ? j : -j) > (1L << 20) || (k > 0 ? k : -k) > (1L << 20))
        throw DomainError("exponent overflow");
      return int_pow(base->children().front(), j * k);
    }
    case ExprKind::Mul: {
      std::vector<Expr> kids;
      for (const Expr& f : base->children()) kids.push_back(int_pow(f, k));
      return mul(std::move(kids));
    }
    case ExprKind::Div:
      return div(int_pow(base->children().front(), k),
                 int_pow(base->children().back(), k));
    case ExprKind::Var:
      return make_node(ExprKind::IntPow, Rational(0), 0, k, {base});
    default:
      if (k < 0) {
        return div(constant(Rational(1)), int_pow(base, -k));
      }
      return make_node(ExprKind::IntPow, Rational(0), 0, k, {base});
  }
}

Expr div(const Expr& num, const Expr& den) {
  // Flatten nested quotients: (a/b) / (c/d) = (a*d) / (b*c).
  if (num->kind() == ExprKind::Div || den->kind() == ExprKind::Div) {
    auto top = [](const Expr& e) {
      return e->kind() == ExprKind::Div ? e->children().front() : e;
    };
    auto bottom = [](const Expr& e) -> Expr {
      return e->kind() == ExprKind::Div ? e->children().back() : nullptr;
    };
    Expr a = top(num), b = bottom(num), c = top(den), d = bottom(den);
    std::vector<Expr> nn{a}, dd{c};
    if (d) nn.push_back(d);
    if (b) dd.push_back(b);
    return div(mul(std::move(nn)), mul(std::move(dd)));
  }
  if (den->kind() == ExprKind::Const) {
    if (den->value() == 0) throw DomainError("division by the zero constant");
    return mul(constant(rat_pow(den->value(), -1)), num);
  }
  if (num->kind() == ExprKind::Const && num->value() == 0) {
    return constant(Rational(0));
  }

  // Cancel shared factors exactly; pure powers of a variable always live on
  // the numerator side (possibly with a negative exponent).
  FactorMap fm = factor_view(num, +1);
  FactorMap dfm = factor_view(den, +1);
  if (dfm.coeff == 0) throw DomainError("division by the zero constant");
  fm.coeff /= dfm.coeff;
  for (const auto& [base, k] : dfm.powers) fm.powers[base] -= k;

  std::vector<Expr> up, down;
  for (const auto& [base, k] : fm.powers) {
    if (k == 0) continue;
    if (base->kind() == ExprKind::Var || k > 0) {
      up.push_back(int_pow(base, k));
    } else {
      down.push_back(int_pow(base, -k));
    }
  }
  Expr n = assemble_product(fm.coeff, std::move(up));
  if (down.empty()) return n;
  Expr d = assemble_product(Rational(1), std::move(down));
  if (n->kind() == ExprKind::Const && n->value() == 0) return constant(Rational(0));
  return raw(ExprKind::Div, {n, d});
}

Expr exp_of(const Expr& a) {
  if (a->kind() == ExprKind::Const && a->value() == 0) return constant(Rational(1));
  return raw(ExprKind::Exp, {a});
}

Expr log_of(const Expr& a) {
  if (a->kind() == ExprKind::Const && a->value() == 1) return constant(Rational(0));
  return raw(ExprKind::Log, {a});
}

Expr sin_of(const Expr& a) {
  if (a->kind() == ExprKind::Const && a->value() == 0) return constant(Rational(0));
  return raw(ExprKind::Sin, {a});
}

Expr cos_of(const Expr& a) {
  if (a->kind() == ExprKind::Const && a->value() == 0) return constant(Rational(1));
  return raw(ExprKind::Cos, {a});
}

Expr abs_of(const Expr& a) {
  if (a->kind() == ExprKind::Const) return constant(abs(a->value()));
  return raw(ExprKind::Abs, {a});
}

Expr floor_of(const Expr& a) {
  if (a->kind() == ExprKind::Const) {
    BigInt num = numerator(a->value());
    BigInt den = denominator(a->value());
    BigInt q = num / den;
    if (num < 0 && q * den != num) q -= 1;  // round toward minus infinity
    return constant(Rational(q));
  }
  return raw(ExprKind::Floor, {a});
}

Expr canonicalize(const Expr& e) {
  std::vector<Expr> kids;
  kids.reserve(e->children().size());
  for (const Expr& k : e->children()) kids.push_back(canonicalize(k));
  switch (e->kind()) {
    case ExprKind::Const: return constant(e->value());
    case ExprKind::Var: return variable(e->var_id());
    case ExprKind::Add: return add(std::move(kids));
    case ExprKind::Mul: return mul(std::move(kids));
    case ExprKind::Div: return div(kids.front(), kids.back());
    case ExprKind::IntPow: return int_pow(kids.front(), e->exponent());
    case ExprKind::Exp: return exp_of(kids.front());
    case ExprKind::Log: return log_of(kids.front());
    case ExprKind::Sin: return sin_of(kids.front());
    case ExprKind::Cos: return cos_of(kids.front());
    case ExprKind::Abs: return abs_of(kids.front());
    case ExprKind::Floor: return floor_of(kids.front());
  }
  return e;
}

Expr substitute(const Expr& e, int id, const Expr& replacement) {
  if (e->kind() == ExprKind::Var) {
    return e->var_id() == id ? replacement : e;
  }
  if ((e->var_mask() & (1u << id)) == 0) return e;
  std::vector<Expr> kids;
  kids.reserve(e->children().size());
  for (const Expr& k : e->children()) kids.push_back(substitute(k, id, replacement));
  switch (e->kind()) {
    case ExprKind::Add: return add(std::move(kids));
    case ExprKind::Mul: return mul(std::move(kids));
    case ExprKind::Div: return div(kids.front(), kids.back());
    case ExprKind::IntPow: return int_pow(kids.front(), e->exponent());
    case ExprKind::Exp: return exp_of(kids.front());
    case ExprKind::Log: return log_of(kids.front());
    case ExprKind::Sin: return sin_of(kids.front());
    case ExprKind::Cos: return cos_of(kids.front());
    case ExprKind::Abs: return abs_of(kids.front());
    case ExprKind::Floor: return floor_of(kids.front());
    default: return e;
  }
}

Expr differentiate(const Expr& e) {
  switch (e->kind()) {
    case ExprKind::Const: return constant(Rational(0));
    case ExprKind::Var:
      return constant(Rational(e->var_id() == 0 ? 1 : 0));
    case ExprKind::Add: {
      std::vector<Expr> kids;
      for (const Expr& k : e->children()) kids.push_back(differentiate(k));
      return add(std::move(kids));
    }
    case ExprKind::Mul: {
      std::vector<Expr> terms;
      const auto& kids = e->children();
      for (std::size_t i = 0; i < kids.size(); ++i) {
        std::vector<Expr> parts;
        for (std::size_t j = 0; j < kids.size(); ++j)
          parts.push_back(i == j ? differentiate(kids[j]) : kids[j]);
        terms.push_back(mul(std::move(parts)));
      }
      return add(std::move(terms));
    }
    case ExprKind::Div: {
      const Expr& n = e->children().front();
      const Expr& d = e->children().back();
      return div(sub(mul(differentiate(n), d), mul(n, differentiate(d))),
                 int_pow(d, 2));
    }
    case ExprKind::IntPow: {
      const Expr& b = e->children().front();
      long k = e->exponent();
      return mul({constant(k), int_pow(b, k - 1), differentiate(b)});
    }
    case ExprKind::Exp:
      return mul(exp_of(e->children().front()),
                 differentiate(e->children().front()));
    case ExprKind::Log:
      return div(differentiate(e->children().front()), e->children().front());
    case ExprKind::Sin:
      return mul(cos_of(e->children().front()),
                 differentiate(e->children().front()));
    case ExprKind::Cos:
      return neg(mul(sin_of(e->children().front()),
                     differentiate(e->children().front())));
    case ExprKind::Abs:
      throw NonSmoothExpression("cannot differentiate abs(...)");
    case ExprKind::Floor:
      throw NonSmoothExpression("cannot differentiate floor(...)");
  }
  throw DomainError("unreachable expression kind");
}

namespace {

BigReal eval_rec(const Expr& e, const BigReal& x) {
  switch (e->kind()) {
    case ExprKind::Const: return BigReal(e->value());
    case ExprKind::Var:
      if (e->var_id() != 0)
        throw DomainError("evaluation of a free auxiliary symbol");
      return x;
    case ExprKind::Add: {
      BigReal acc(0);
      for (const Expr& k : e->children()) acc += eval_rec(k, x);
      return acc;
    }
    case ExprKind::Mul: {
      BigReal acc(1);
      for (const Expr& k : e->children()) acc *= eval_rec(k, x);
      return acc;
    }
    case ExprKind::Div: {
      BigReal d = eval_rec(e->children().back(), x);
      if (d == 0) throw DomainError("division by zero during evaluation");
      return eval_rec(e->children().front(), x) / d;
    }
    case ExprKind::IntPow: {
      BigReal b = eval_rec(e->children().front(), x);
      long k = e->exponent();
      if (b == 0 && k < 0)
        throw DomainError("zero raised to a negative power during evaluation");
      return pow(b, k);
    }
    case ExprKind::Exp: return exp(eval_rec(e->children().front(), x));
    case ExprKind::Log: {
      BigReal v = eval_rec(e->children().front(), x);
      if (v <= 0) throw DomainError("log of a nonpositive value");
      return log(v);
    }
    case ExprKind::Sin: return sin(eval_rec(e->children().front(), x));
    case ExprKind::Cos: return cos(eval_rec(e->children().front(), x));
    case ExprKind::Abs: return abs(eval_rec(e->children().front(), x));
    case ExprKind::Floor: return floor(eval_rec(e->children().front(), x));
  }
  throw DomainError("unreachable expression kind");
}

}  // namespace

BigReal eval_expr(const Expr& e, const BigReal& at) {
  unsigned target = working_precision();
  BigReal r;
  {
    PrecisionGuard guard(target + 20);
    BigReal hi = at;
    hi.precision(target + 20);
    r = eval_rec(e, hi);
  }
  r.precision(target);
  return r;
}

// --- printing ---------------------------------------------------------------

namespace {

void print_rec(std::ostream& os, const Expr& e,
               const std::vector<std::string>& names);

void print_parenthesized(std::ostream& os, const Expr& e,
                         const std::vector<std::string>& names) {
  os << '(';
  print_rec(os, e, names);
  os << ')';
}

bool needs_parens_as_factor(const Expr& e) {
  return e->kind() == ExprKind::Add || e->kind() == ExprKind::Mul ||
         e->kind() == ExprKind::Div ||
         (e->kind() == ExprKind::Const && e->value() < 0);
}

void print_factor(std::ostream& os, const Expr& e,
                  const std::vector<std::string>& names) {
  if (needs_parens_as_factor(e)) {
    print_parenthesized(os, e, names);
  } else {
    print_rec(os, e, names);
  }
}

void print_product(std::ostream& os, const Expr& e,
                   const std::vector<std::string>& names) {
  const auto& kids = e->children();
  std::size_t start = 0;
  if (kids.front()->kind() == ExprKind::Const) {
    Rational c = kids.front()->value();
    bool neg_c = c < 0;
    if (neg_c) {
      os << '-';
      c = -c;
    }
    start = 1;
    if (c != 1) {
      os << rational_string(c);
      os << '*';
    }
  }
  for (std::size_t i = start; i < kids.size(); ++i) {
    if (i > start) os << '*';
    print_factor(os, kids[i], names);
  }
}

void print_rec(std::ostream& os, const Expr& e,
               const std::vector<std::string>& names) {
  switch (e->kind()) {
    case ExprKind::Const:
      os << rational_string(e->value());
      return;
    case ExprKind::Var: {
      std::size_t id = static_cast<std::size_t>(e->var_id());
      os << (id < names.size() ? names[id] : "v" + std::to_string(id));
      return;
    }
    case ExprKind::Add: {
      const auto& kids = e->children();
      print_rec(os, kids.front(), names);
      for (std::size_t i = 1; i < kids.size(); ++i) {
        auto [coeff, core] = split_coeff(kids[i]);
        if (coeff < 0) {
          os << '-';
          Expr rest = join_coeff(-coeff, core);
          if (rest->kind() == ExprKind::Add) {
            print_parenthesized(os, rest, names);
          } else {
            print_rec(os, rest, names);
          }
        } else {
          os << '+';
          print_rec(os, kids[i], names);
        }
      }
      return;
    }
    case ExprKind::Mul:
      print_product(os, e, names);
      return;
    case ExprKind::Div: {
      const Expr& n = e->children().front();
      const Expr& d = e->children().back();
      if (n->kind() == ExprKind::Add) {
        print_parenthesized(os, n, names);
      } else {
        print_rec(os, n, names);  // products keep left-associative meaning
      }
      os << '/';
      print_factor(os, d, names);
      return;
    }
    case ExprKind::IntPow: {
      print_factor(os, e->children().front(), names);
      os << '^' << e->exponent();
      return;
    }
    case ExprKind::Exp:
    case ExprKind::Log:
    case ExprKind::Sin:
    case ExprKind::Cos:
    case ExprKind::Abs:
    case ExprKind::Floor: {
      static const char* fn_names[] = {"exp", "log", "sin", "cos", "abs", "floor"};
      os << fn_names[static_cast<int>(e->kind()) - static_cast<int>(ExprKind::Exp)];
      os << '(';
      print_rec(os, e->children().front(), names);
      os << ')';
      return;
    }
  }
}

}  // namespace

std::string print_expr(const Expr& e, const std::vector<std::string>& names) {
  std::ostringstream os;
  print_rec(os, e, names);
  return os.str();
}

}  // namespace hypergerm
