#include "hypergerm/series.hpp"

#include <algorithm>
#include <sstream>

#include "hypergerm/errors.hpp"

namespace hypergerm {

namespace {

// Working form during expansion: coefficients for exponents [lo, hi), the
// value being sum + O(x^hi). lo == hi encodes "zero modulo x^hi". Negative
// valuations and cancellation shrink hi below the request; the top-level
// driver retries with a larger budget when the certified window ends up too
// short.
struct Window {
  long lo = 0;
  long hi = 0;
  std::vector<BigReal> c;  // size hi - lo

  bool empty() const { return hi <= lo; }
};

struct Ctx {
  long budget;   // requested accuracy exponent for leaves
  BigReal thr;   // zero threshold
};

Window zero_window(long hi) { return Window{hi, hi, {}}; }

Window const_window(const Rational& q, long hi) {
  if (hi <= 0) return zero_window(hi);
  Window w{0, hi, std::vector<BigReal>(static_cast<std::size_t>(hi), BigReal(0))};
  w.c[0] = BigReal(q);
  return w;
}

Window var_window(long hi) {
  if (hi <= 1) return zero_window(hi);
  Window w{1, hi, std::vector<BigReal>(static_cast<std::size_t>(hi - 1), BigReal(0))};
  w.c[0] = 1;
  return w;
}

// First exponent whose coefficient clears the threshold, or hi if none.
long true_valuation(const Window& w, const BigReal& thr) {
  for (long e = w.lo; e < w.hi; ++e) {
    if (abs(w.c[static_cast<std::size_t>(e - w.lo)]) >= thr) return e;
  }
  return w.hi;
}

Window add_windows(const Window& a, const Window& b) {
  long hi = std::min(a.hi, b.hi);
  long lo = std::min(a.lo, b.lo);
  lo = std::min(lo, hi);
  Window r{lo, hi, std::vector<BigReal>(static_cast<std::size_t>(hi - lo), BigReal(0))};
  for (long e = a.lo; e < std::min(a.hi, hi); ++e)
    r.c[static_cast<std::size_t>(e - lo)] += a.c[static_cast<std::size_t>(e - a.lo)];
  for (long e = b.lo; e < std::min(b.hi, hi); ++e)
    r.c[static_cast<std::size_t>(e - lo)] += b.c[static_cast<std::size_t>(e - b.lo)];
  return r;
}

Window scale_window(Window w, const BigReal& s) {
  for (auto& x : w.c) x *= s;
  return w;
}

Window mul_windows(const Window& a, const Window& b) {
  long hi = std::min(a.hi + b.lo, b.hi + a.lo);
  long lo = a.lo + b.lo;
  if (a.empty() || b.empty() || hi <= lo) return zero_window(std::min(hi, a.hi + b.hi));
  Window r{lo, hi, std::vector<BigReal>(static_cast<std::size_t>(hi - lo), BigReal(0))};
  for (long i = a.lo; i < a.hi; ++i) {
    const BigReal& ai = a.c[static_cast<std::size_t>(i - a.lo)];
    if (ai == 0) continue;
    long jmax = std::min(b.hi, hi - i);
    for (long j = b.lo; j < jmax; ++j) {
      r.c[static_cast<std::size_t>(i + j - lo)] +=
          ai * b.c[static_cast<std::size_t>(j - b.lo)];
    }
  }
  return r;
}

// Relative view: coefficients F_0..F_{L-1} of x^-v * f starting at the true
// valuation v.
struct Relative {
  long v;
  long hi;  // of the original window
  std::vector<BigReal> f;
};

Relative relative_view(const Window& w, const BigReal& thr) {
  long v = true_valuation(w, thr);
  Relative r{v, w.hi, {}};
  r.f.reserve(static_cast<std::size_t>(w.hi - v));
  for (long e = v; e < w.hi; ++e) r.f.push_back(w.c[static_cast<std::size_t>(e - w.lo)]);
  return r;
}

Window recip_window(const Window& w, const BigReal& thr) {
  Relative rv = relative_view(w, thr);
  long L = rv.hi - rv.v;
  if (L <= 0) {
    throw DivisionByZeroGerm(
        "division by a germ that is zero at the certified order");
  }
  std::vector<BigReal> h(static_cast<std::size_t>(L), BigReal(0));
  BigReal inv0 = 1 / rv.f[0];
  h[0] = inv0;
  for (long n = 1; n < L; ++n) {
    BigReal acc(0);
    for (long k = 1; k <= n; ++k)
      acc += rv.f[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(n - k)];
    h[static_cast<std::size_t>(n)] = -inv0 * acc;
  }
  return Window{-rv.v, rv.hi - 2 * rv.v, std::move(h)};
}

Window pow_window(const Window& w, long k, const BigReal& thr) {
  if (k < 0) return pow_window(recip_window(w, thr), -k, thr);
  // k >= 2 here (0 and 1 are folded away by the expression builders), but
  // handle the small cases anyway.
  Window acc = const_window(Rational(1), w.hi >= 0 ? std::max(w.hi, 1L) : 1);
  Window base = w;
  long e = k;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      acc = first ? base : mul_windows(acc, base);
      first = false;
      if (e == 1) break;
    }
    base = mul_windows(base, base);
    e >>= 1;
  }
  if (k == 0) return const_window(Rational(1), w.hi);
  return acc;
}

// exp/sin/cos/log via the standard coefficient recurrences on the relative
// part. All require the argument to have nonnegative valuation (otherwise
// there is no Laurent expansion at 0).

Relative split_nonneg(const Window& w, const BigReal& thr, const char* what) {
  Relative rv = relative_view(w, thr);
  if (rv.v < 0) {
    throw NotLaurent(std::string(what) +
                     " of a germ with a pole has no Laurent expansion");
  }
  return rv;
}

// u_1..u_{L-1} with u_0 = 0: exp(u) coefficients y_0..y_{L-1}.
std::vector<BigReal> exp_tail(const std::vector<BigReal>& u) {
  std::size_t L = u.size();
  std::vector<BigReal> y(L, BigReal(0));
  if (L == 0) return y;
  y[0] = 1;
  for (std::size_t n = 1; n < L; ++n) {
    BigReal acc(0);
    for (std::size_t k = 1; k <= n; ++k)
      acc += BigReal(static_cast<long>(k)) * u[k] * y[n - k];
    y[n] = acc / static_cast<long>(n);
  }
  return y;
}

void sincos_tail(const std::vector<BigReal>& u, std::vector<BigReal>& s,
                 std::vector<BigReal>& c) {
  std::size_t L = u.size();
  s.assign(L, BigReal(0));
  c.assign(L, BigReal(0));
  if (L == 0) return;
  c[0] = 1;
  for (std::size_t n = 1; n < L; ++n) {
    BigReal sa(0), ca(0);
    for (std::size_t k = 1; k <= n; ++k) {
      BigReal ku = BigReal(static_cast<long>(k)) * u[k];
      sa += ku * c[n - k];
      ca += ku * s[n - k];
    }
    s[n] = sa / static_cast<long>(n);
    c[n] = -ca / static_cast<long>(n);
  }
}

// Builds the full-window argument tail (constant removed, absolute exponents
// 1..hi-1 as relative indices).
std::vector<BigReal> argument_tail(const Relative& rv, long hi) {
  std::vector<BigReal> u(static_cast<std::size_t>(std::max(hi, 0L)), BigReal(0));
  for (long e = std::max(rv.v, 1L); e < rv.hi; ++e) {
    if (e < hi) u[static_cast<std::size_t>(e)] = rv.f[static_cast<std::size_t>(e - rv.v)];
  }
  return u;
}

Window exp_window(const Window& w, const BigReal& thr) {
  long hi = w.hi;
  if (hi <= 0) return zero_window(hi);
  if (w.empty()) return const_window(Rational(1), hi);
  Relative rv = split_nonneg(w, thr, "exp");
  BigReal a = rv.v == 0 ? rv.f[0] : BigReal(0);
  std::vector<BigReal> u = argument_tail(rv, hi);
  std::vector<BigReal> y = exp_tail(u);
  BigReal ea = exp(a);
  Window r{0, hi, std::move(y)};
  return scale_window(std::move(r), ea);
}

Window sin_window(const Window& w, const BigReal& thr) {
  long hi = w.hi;
  if (hi <= 0) return zero_window(hi);
  if (w.empty()) return zero_window(hi);
  Relative rv = split_nonneg(w, thr, "sin");
  BigReal a = rv.v == 0 ? rv.f[0] : BigReal(0);
  std::vector<BigReal> u = argument_tail(rv, hi);
  std::vector<BigReal> s, c;
  sincos_tail(u, s, c);
  Window r{0, hi, std::vector<BigReal>(static_cast<std::size_t>(hi), BigReal(0))};
  BigReal sa = sin(a), ca = cos(a);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = sa * c[i] + ca * s[i];
  return r;
}

Window cos_window(const Window& w, const BigReal& thr) {
  long hi = w.hi;
  if (hi <= 0) return zero_window(hi);
  if (w.empty()) return const_window(Rational(1), hi);
  Relative rv = split_nonneg(w, thr, "cos");
  BigReal a = rv.v == 0 ? rv.f[0] : BigReal(0);
  std::vector<BigReal> u = argument_tail(rv, hi);
  std::vector<BigReal> s, c;
  sincos_tail(u, s, c);
  Window r{0, hi, std::vector<BigReal>(static_cast<std::size_t>(hi), BigReal(0))};
  BigReal sa = sin(a), ca = cos(a);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = ca * c[i] - sa * s[i];
  return r;
}

Window log_window(const Window& w, const BigReal& thr) {
  Relative rv = relative_view(w, thr);
  long L = rv.hi - rv.v;
  if (L <= 0) throw DomainError("log of a germ that is zero at the certified order");
  if (rv.v != 0) {
    throw NotLaurent("log of a germ with valuation " + std::to_string(rv.v) +
                     " has no Laurent expansion");
  }
  if (rv.f[0] < 0) {
    throw DomainError("log of a germ with negative standard value");
  }
  // l' = G'/G with G = f / f0; integrate the recurrence.
  std::vector<BigReal> g(rv.f.begin(), rv.f.end());
  BigReal g0 = g[0];
  for (auto& x : g) x /= g0;
  std::vector<BigReal> l(static_cast<std::size_t>(L), BigReal(0));
  l[0] = log(g0);
  for (long n = 1; n < L; ++n) {
    BigReal acc(0);
    for (long k = 1; k < n; ++k)
      acc += BigReal(k) * l[static_cast<std::size_t>(k)] *
             g[static_cast<std::size_t>(n - k)];
    l[static_cast<std::size_t>(n)] = g[static_cast<std::size_t>(n)] - acc / n;
  }
  return Window{0, rv.hi, std::move(l)};
}

Window expand_window(const Expr& e, const Ctx& ctx) {
  switch (e->kind()) {
    case ExprKind::Const: return const_window(e->value(), ctx.budget);
    case ExprKind::Var:
      if (e->var_id() != 0)
        throw DomainError("series expansion of a free auxiliary symbol");
      return var_window(ctx.budget);
    case ExprKind::Add: {
      Window acc = expand_window(e->children().front(), ctx);
      for (std::size_t i = 1; i < e->children().size(); ++i)
        acc = add_windows(acc, expand_window(e->children()[i], ctx));
      return acc;
    }
    case ExprKind::Mul: {
      Window acc = expand_window(e->children().front(), ctx);
      for (std::size_t i = 1; i < e->children().size(); ++i)
        acc = mul_windows(acc, expand_window(e->children()[i], ctx));
      return acc;
    }
    case ExprKind::Div: {
      Window den = recip_window(expand_window(e->children().back(), ctx), ctx.thr);
      return mul_windows(expand_window(e->children().front(), ctx), den);
    }
    case ExprKind::IntPow:
      return pow_window(expand_window(e->children().front(), ctx), e->exponent(),
                        ctx.thr);
    case ExprKind::Exp: return exp_window(expand_window(e->children().front(), ctx), ctx.thr);
    case ExprKind::Log: return log_window(expand_window(e->children().front(), ctx), ctx.thr);
    case ExprKind::Sin: return sin_window(expand_window(e->children().front(), ctx), ctx.thr);
    case ExprKind::Cos: return cos_window(expand_window(e->children().front(), ctx), ctx.thr);
    case ExprKind::Abs:
    case ExprKind::Floor:
      throw NonSmoothExpression("abs/floor have no series expansion");
  }
  throw DomainError("unreachable expression kind");
}

}  // namespace

BigReal zero_threshold() {
  long digits = static_cast<long>(working_precision());
  return pow(BigReal(10), -(2 * digits) / 3);
}

BigReal sample_tolerance() {
  long digits = static_cast<long>(working_precision());
  return pow(BigReal(10), -digits / 3);
}

const BigReal& LaurentSeries::coeff(long exponent) const {
  static const BigReal kZero(0);
  if (zero) return kZero;
  long idx = exponent - valuation;
  if (idx < 0 || idx >= static_cast<long>(coefficients.size())) return kZero;
  return coefficients[static_cast<std::size_t>(idx)];
}

LaurentSeries expand_series(const Expr& e, int order) {
  if (order < 1) throw DomainError("truncation order must be positive");
  if (!e->smooth()) throw NonSmoothExpression("abs/floor have no series expansion");
  BigReal thr = zero_threshold();
  long budget = order + 9;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Ctx ctx{budget, thr};
    Window w = expand_window(e, ctx);
    long v = true_valuation(w, thr);
    if (v >= w.hi) {
      // Certified zero through x^hi. No escalation: this is the semi-decision.
      LaurentSeries s;
      s.order = order;
      s.zero = true;
      s.confidence = w.hi;
      return s;
    }
    if (w.hi - v >= order + 1) {
      LaurentSeries s;
      s.order = order;
      s.zero = false;
      s.valuation = v;
      s.confidence = v + order + 1;
      s.coefficients.reserve(static_cast<std::size_t>(order) + 1);
      for (long exp = v; exp <= v + order; ++exp) {
        BigReal c = w.c[static_cast<std::size_t>(exp - w.lo)];
        if (abs(c) < thr) c = 0;
        s.coefficients.push_back(std::move(c));
      }
      return s;
    }
    long deficit = (v + order + 1) - w.hi;
    budget += deficit + 8;
  }
  throw NotLaurent("series window could not be certified at the requested order");
}

std::string series_string(const LaurentSeries& s) {
  std::ostringstream os;
  if (s.zero) {
    os << "O(x^" << s.confidence << ")";
    return os.str();
  }
  bool first = true;
  for (std::size_t i = 0; i < s.coefficients.size(); ++i) {
    const BigReal& c = s.coefficients[i];
    if (c == 0) continue;
    long e = s.valuation + static_cast<long>(i);
    BigReal a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    first = false;
    bool unit = a == 1;
    if (!unit || e == 0) os << decimal_string(a);
    if (e != 0) {
      if (!unit) os << "*";
      os << "x";
      if (e != 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  os << "+O(x^" << s.confidence << ")";
  return os.str();
}

}  // namespace hypergerm
