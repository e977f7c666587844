#include "hypergerm/finitecalc.hpp"

#include <utility>

#include "hypergerm/errors.hpp"

namespace hypergerm {

SeqFn SeqFn::sequence(Expr seq_expr) {
  return SeqFn(Kind::Sequence, std::move(seq_expr), std::nullopt);
}

SeqFn SeqFn::periodized(Expr outer, IrrationalSpec gamma) {
  return SeqFn(Kind::Periodized, std::move(outer), std::move(gamma));
}

SeqFn SeqFn::flat_counterexample(IrrationalSpec gamma) {
  return SeqFn(Kind::Flat, constant(Rational(0)), std::move(gamma));
}

const IrrationalSpec& SeqFn::gamma() const {
  if (!gamma_) throw DomainError("plain sequence carries no gamma");
  return *gamma_;
}

BigReal SeqFn::operator()(const BigInt& n) const {
  if (n < 1) throw DomainError("sequences are defined for positive integers");
  switch (kind_) {
    case Kind::Sequence:
      return eval_expr(expr_, BigReal(n));
    case Kind::Periodized:
      return eval_expr(expr_, rm(*gamma_, n));
    case Kind::Flat: {
      BigReal r = rm(*gamma_, n);
      return floor(1 / abs(r));
    }
  }
  throw DomainError("unreachable sequence kind");
}

std::string SeqFn::to_string() const {
  switch (kind_) {
    case Kind::Sequence: return "seq:" + print_expr(expr_, {"n"});
    case Kind::Periodized: return "periodized:" + print_expr(expr_, {"x"});
    case Kind::Flat: return "flat";
  }
  return "";
}

SeqFn parse_seqfn(std::string_view text, const IrrationalSpec& gamma) {
  if (text == "flat") return build_flat_nonconstant(gamma);
  if (text.rfind("seq:", 0) == 0) {
    return SeqFn::sequence(parse_expr(text.substr(4), {"n"}));
  }
  if (text.rfind("periodized:", 0) == 0) {
    return periodize(parse_expr(text.substr(11)), gamma);
  }
  throw DomainError("unrecognized sequence '" + std::string(text) +
                    "' (want seq:<expr in n>, periodized:<expr in x> or flat)");
}

DeltaSample delta_quotients(const SeqFn& f, const IrrationalSpec& gamma,
                            const BigInt& n, int depth,
                            std::optional<BigReal> witness_eps) {
  if (depth < 3) throw DomainError("delta_quotients needs depth >= 3");
  if (n < 1) throw DomainError("base point n must be a positive integer");
  BigReal g = gamma_value(gamma);
  BigReal eps = witness_eps ? *witness_eps : BigReal(g / 2);
  if (!(eps > 0)) throw DomainError("witness bound eps must be positive");

  BigReal rm_n = abs(rm(gamma, n));
  BigReal half = g / 2;
  BigReal fn = f(n);

  DeltaSample out;
  out.n = n;
  out.depth = depth;
  ConvergentStream stream(gamma);
  for (std::size_t k = 1; static_cast<int>(out.rows.size()) < depth; ++k) {
    const BigInt& m = stream.at(k).p;
    BigReal rm_m = rm(gamma, m);
    if (!(abs(rm_m) < eps)) continue;
    // Additivity guard: with both remainders inside a half-period the
    // nearest multiple of n+m is the sum of the two nearest multiples, so
    // the quotient really measures a step of size rm_m.
    if (!(rm_n + abs(rm_m) < half)) continue;
    BigReal quotient = (f(n + m) - fn) / rm_m;
    out.rows.push_back({m, rm_m, quotient});
  }
  return out;
}

namespace {

int sign_of(const BigReal& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

DGammaEstimate d_gamma_estimate(const SeqFn& f, const IrrationalSpec& gamma,
                                const BigInt& n, int depth,
                                std::optional<BigReal> witness_eps) {
  if (depth < 5) throw DomainError("d_gamma_estimate needs depth >= 5");
  DeltaSample sample =
      delta_quotients(f, gamma, n, depth, std::move(witness_eps));
  const BigReal& q1 = sample.rows[depth - 3].quotient;
  const BigReal& q2 = sample.rows[depth - 2].quotient;
  const BigReal& q3 = sample.rows[depth - 1].quotient;

  BigReal spread = abs(q1 - q2);
  spread = std::max(spread, BigReal(abs(q1 - q3)));
  spread = std::max(spread, BigReal(abs(q2 - q3)));

  DGammaEstimate est;
  const BigReal finite_tolerance("1e-6");
  const BigReal divergence_threshold("1e6");
  if (spread < finite_tolerance) {
    est.kind = DGammaEstimate::Kind::Finite;
    est.value = q3;
    est.error_bar = spread;
    return est;
  }
  int s = sign_of(q1);
  if (s != 0 && sign_of(q2) == s && sign_of(q3) == s &&
      abs(q1) > divergence_threshold && abs(q2) > abs(q1) &&
      abs(q3) > abs(q2)) {
    est.kind = s > 0 ? DGammaEstimate::Kind::PlusInfinite
                     : DGammaEstimate::Kind::MinusInfinite;
    return est;
  }
  est.kind = DGammaEstimate::Kind::NoLimit;
  return est;
}

SeqFn periodize(Expr outer, IrrationalSpec gamma) {
  return SeqFn::periodized(std::move(outer), std::move(gamma));
}

SeqFn build_flat_nonconstant(IrrationalSpec gamma) {
  return SeqFn::flat_counterexample(std::move(gamma));
}

DimensionCheck check_dimensions(const Expr& f_outer, const IrrationalSpec& gamma,
                                const std::vector<BigInt>& ns, int depth,
                                const BigReal& tolerance) {
  if (!(tolerance > 0)) throw DomainError("tolerance must be positive");
  Expr fprime = differentiate(f_outer);
  SeqFn f = periodize(f_outer, gamma);
  BigReal eps = tolerance / 10;

  DimensionCheck report;
  report.tolerance = tolerance;
  report.all_pass = true;
  for (const BigInt& n : ns) {
    DimensionRow row;
    row.n = n;
    row.rm_n = rm(gamma, n);
    row.estimate = d_gamma_estimate(f, gamma, n, depth, eps);
    row.expected = eval_expr(fprime, row.rm_n);
    if (row.estimate.kind == DGammaEstimate::Kind::Finite) {
      row.error = abs(row.estimate.value - row.expected);
      row.pass = row.error < tolerance;
    } else {
      row.error = 0;
      row.pass = false;
    }
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string to_string(DGammaEstimate::Kind kind) {
  switch (kind) {
    case DGammaEstimate::Kind::Finite: return "finite";
    case DGammaEstimate::Kind::PlusInfinite: return "+infinite";
    case DGammaEstimate::Kind::MinusInfinite: return "-infinite";
    case DGammaEstimate::Kind::NoLimit: return "no_limit";
  }
  return "";
}

}  // namespace hypergerm
