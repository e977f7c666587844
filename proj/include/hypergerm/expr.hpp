#ifndef HYPERGERM_EXPR_HPP
#define HYPERGERM_EXPR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hypergerm/bigreal.hpp"

namespace hypergerm {

/// Node kinds of the expression tree. Surface unary minus is folded into
/// Mul(-1, e) during construction, so no Neg kind survives canonicalization.
enum class ExprKind : std::uint8_t {
  Const,   // exact rational
  Var,     // the indeterminate (id 0 is the series/eval variable)
  Exp,
  Log,
  Sin,
  Cos,
  Abs,     // evaluation-only
  Floor,   // evaluation-only
  IntPow,  // integer exponent, possibly negative, never 0 or 1
  Mul,     // >= 2 factors, at most one leading Const, like bases merged
  Div,     // denominator free of constants and pure powers of the variable
  Add,     // >= 2 terms, at most one leading Const, like terms merged
};

class ExprNode;

/// Immutable shared expression handle. All builders return canonical forms,
/// so two structurally equal expressions compare equal with compare() == 0.
using Expr = std::shared_ptr<const ExprNode>;

class ExprNode {
public:
  ExprKind kind() const noexcept { return kind_; }
  const Rational& value() const noexcept { return value_; }      // Const
  int var_id() const noexcept { return var_id_; }                // Var
  long exponent() const noexcept { return exponent_; }           // IntPow
  const std::vector<Expr>& children() const noexcept { return kids_; }

  /// False iff the subtree contains abs or floor.
  bool smooth() const noexcept { return smooth_; }

  /// Bit i set iff variable id i occurs in the subtree.
  std::uint32_t var_mask() const noexcept { return var_mask_; }

private:
  friend Expr make_node(ExprKind, Rational, int, long, std::vector<Expr>);
  ExprNode() = default;

  ExprKind kind_ = ExprKind::Const;
  Rational value_;
  int var_id_ = 0;
  long exponent_ = 0;
  std::vector<Expr> kids_;
  bool smooth_ = true;
  std::uint32_t var_mask_ = 0;
};

// --- canonicalizing builders -------------------------------------------------

Expr constant(Rational v);
Expr constant(long v);
Expr variable(int id = 0);

Expr add(std::vector<Expr> terms);
Expr add(const Expr& a, const Expr& b);
Expr sub(const Expr& a, const Expr& b);
Expr neg(const Expr& a);
Expr mul(std::vector<Expr> factors);
Expr mul(const Expr& a, const Expr& b);
Expr div(const Expr& num, const Expr& den);
Expr int_pow(const Expr& base, long k);
Expr exp_of(const Expr& a);
Expr log_of(const Expr& a);
Expr sin_of(const Expr& a);
Expr cos_of(const Expr& a);
Expr abs_of(const Expr& a);
Expr floor_of(const Expr& a);

// --- structure ---------------------------------------------------------------

/// Total order used for sorting terms/factors; 0 means structurally equal.
int compare(const Expr& a, const Expr& b);
bool structurally_equal(const Expr& a, const Expr& b);

/// Rebuilds an arbitrary (e.g. hand-assembled) tree through the canonical
/// builders. Idempotent; builder outputs are already canonical.
Expr canonicalize(const Expr& e);

/// Replaces every occurrence of variable `id` by `replacement` and
/// re-canonicalizes bottom-up.
Expr substitute(const Expr& e, int id, const Expr& replacement);

// --- text --------------------------------------------------------------------

/// Grammar (no implicit multiplication, '^' takes a literal integer):
///
///   expr    := ["-"] term (("+" | "-") term)*
///   term    := factor (("*" | "/") factor)*
///   factor  := base ("^" integer)?
///   base    := number | variable | ident "(" expr ")" | "(" expr ")"
///   ident   := "exp" | "log" | "sin" | "cos" | "abs" | "floor"
///   number  := digits ["." digits] [("e"|"E") ["+"|"-"] digits]
///   integer := ["-"] digits
///
/// `variables` supplies the admissible variable names in id order; the
/// default exposes the single indeterminate as "x". Throws SyntaxError with
/// a byte offset, or UnknownIdentifier.
Expr parse_expr(std::string_view text,
                const std::vector<std::string>& variables = {"x"});

/// Prints canonical text that parse_expr maps back to the same tree.
std::string print_expr(const Expr& e,
                       const std::vector<std::string>& variables = {"x"});

// --- calculus & evaluation ---------------------------------------------------

/// Symbolic derivative with respect to variable id 0. Throws
/// NonSmoothExpression if the tree contains abs or floor.
Expr differentiate(const Expr& e);

/// Evaluates at x = `at` using guard digits internally; the result is
/// rounded to the current working precision. Throws DomainError when the
/// value is undefined (log of a nonpositive number, division by zero, 0 to
/// a negative power).
BigReal eval_expr(const Expr& e, const BigReal& at);

}  // namespace hypergerm

#endif  // HYPERGERM_EXPR_HPP
