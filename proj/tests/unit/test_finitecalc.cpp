#include <vector>

#include "doctest.h"
#include "hypergerm/errors.hpp"
#include "hypergerm/finitecalc.hpp"
#include "support/cusp.hpp"

using namespace hypergerm;

namespace {

const IrrationalSpec& phi() {
  static IrrationalSpec spec = IrrationalSpec::parse("phi");
  return spec;
}

Expr X() { return variable(0); }

}  // namespace

TEST_SUITE("finitecalc") {

TEST_CASE("sequence shapes evaluate pointwise") {
  SeqFn sq = SeqFn::sequence(int_pow(X(), 2));
  CHECK(sq(7) == 49);
  CHECK(sq.to_string() == "seq:n^2");

  SeqFn per = periodize(int_pow(X(), 2), phi());
  BigReal a = rm(phi(), 2);
  CHECK(abs(per(2) - a * a) < BigReal("1e-50"));
  CHECK(per.to_string() == "periodized:x^2");

  // periodizing the identity reads off the remainder, not the integer
  SeqFn ident = periodize(X(), phi());
  CHECK(abs(ident(13) - rm(phi(), 13)) < BigReal("1e-50"));
  CHECK(ident(13) < 1);

  SeqFn flat = build_flat_nonconstant(phi());
  CHECK(flat.to_string() == "flat");
  CHECK(flat.gamma().to_string() == "phi");

  CHECK_THROWS_AS(sq(0), DomainError);
  CHECK_THROWS_AS(flat(-3), DomainError);
  CHECK_THROWS_AS(sq.gamma(), DomainError);
}

TEST_CASE("difference quotients of a periodized square are exact algebra") {
  // (a+h)^2 - a^2 = (2a+h) h with a = rm(2), h = rm(m)
  SeqFn per = periodize(int_pow(X(), 2), phi());
  DeltaSample ds = delta_quotients(per, phi(), 2, 4);
  REQUIRE(ds.rows.size() == 4);
  CHECK(ds.depth == 4);
  CHECK(ds.n == 2);
  long expect_m[] = {2, 3, 5, 8};
  BigReal a = rm(phi(), 2);
  for (int i = 0; i < 4; ++i) {
    CHECK(ds.rows[i].m == expect_m[i]);
    CHECK(abs(ds.rows[i].rm_m - rm(phi(), expect_m[i])) < BigReal("1e-50"));
    CHECK(abs(ds.rows[i].quotient - (2 * a + ds.rows[i].rm_m)) <
          BigReal("1e-45"));
  }
}

TEST_CASE("quotient rows respect the witness and additivity filters") {
  SeqFn per = periodize(int_pow(X(), 2), phi());

  // eps = 0.1 drops the early coarse witnesses
  DeltaSample tight = delta_quotients(per, phi(), 2, 3, BigReal("0.1"));
  CHECK(tight.rows[0].m == 8);
  CHECK(tight.rows[1].m == 13);
  CHECK(tight.rows[2].m == 21);

  // n = 1 has |rm| = phi - 1, so the first two witnesses fail the
  // half-period additivity guard
  DeltaSample guarded = delta_quotients(per, phi(), 1, 3);
  CHECK(guarded.rows[0].m == 5);

  CHECK_THROWS_AS(delta_quotients(per, phi(), 2, 2), DomainError);
  CHECK_THROWS_AS(delta_quotients(per, phi(), 0, 3), DomainError);
  CHECK_THROWS_AS(delta_quotients(per, phi(), 2, 3, BigReal(0)), DomainError);
}

TEST_CASE("estimator recovers the analytic derivative of the square") {
  SeqFn per = periodize(int_pow(X(), 2), phi());
  DGammaEstimate est = d_gamma_estimate(per, phi(), 2, 35);
  REQUIRE(est.kind == DGammaEstimate::Kind::Finite);
  CHECK(abs(est.value - 2 * rm(phi(), 2)) < BigReal("1e-6"));
  CHECK(est.error_bar < BigReal("1e-6"));
  CHECK(abs(est.value - bigreal_from_decimal("0.7639320")) < BigReal("1e-6"));
}

TEST_CASE("estimator matches the catalog derivative with tight witnesses") {
  Expr f = add(exp_of(X()), add(int_pow(X(), 3), cos_of(mul(constant(2), X()))));
  Expr fp = differentiate(f);
  SeqFn per = periodize(f, phi());
  for (long n : {2, 5, 13}) {
    DGammaEstimate est = d_gamma_estimate(per, phi(), n, 12, BigReal("1e-7"));
    REQUIRE(est.kind == DGammaEstimate::Kind::Finite);
    CHECK(abs(est.value - eval_expr(fp, rm(phi(), n))) < BigReal("1e-6"));
  }
}

TEST_CASE("estimator flags one-sided blowup and sign flips") {
  Expr cusp = testing::cusp_outer(phi(), 2);
  SeqFn up = periodize(cusp, phi());
  CHECK(up(2) == 0);
  CHECK(d_gamma_estimate(up, phi(), 2, 30).kind ==
        DGammaEstimate::Kind::PlusInfinite);

  SeqFn down = periodize(mul(constant(-1), cusp), phi());
  CHECK(d_gamma_estimate(down, phi(), 2, 30).kind ==
        DGammaEstimate::Kind::MinusInfinite);

  // quotients of the raw identity sequence alternate sign and explode
  SeqFn raw = SeqFn::sequence(X());
  CHECK(d_gamma_estimate(raw, phi(), 2, 12).kind ==
        DGammaEstimate::Kind::NoLimit);

  CHECK_THROWS_AS(d_gamma_estimate(raw, phi(), 2, 4), DomainError);
}

TEST_CASE("flat counterexample: unbounded values, vanishing quotients") {
  SeqFn flat = build_flat_nonconstant(phi());
  long values[][2] = {{2, 2},  {13, 17}, {21, 29},
                      {34, 46}, {55, 76}, {89, 122}};
  for (auto [n, v] : values) CHECK(flat(n) == v);
  CHECK(flat(623) == flat(13));

  // strictly increasing and past 10^4 along deep convergent numerators
  ConvergentStream stream(phi());
  BigReal prev = flat(stream.at(5).p);
  for (std::size_t k = 6; k <= 20; ++k) {
    BigReal v = flat(stream.at(k).p);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(prev > 10000);

  // once the witness step is below the jump gap the quotient is exactly 0
  DeltaSample ds = delta_quotients(flat, phi(), 13, 14);
  CHECK(ds.rows[12].m == 610);
  CHECK(ds.rows[12].quotient == 0);

  DGammaEstimate est = d_gamma_estimate(flat, phi(), 13, 20);
  REQUIRE(est.kind == DGammaEstimate::Kind::Finite);
  CHECK(est.value == 0);
  CHECK(est.error_bar == 0);
}

TEST_CASE("constant sequences differentiate to zero on the nose") {
  for (SeqFn f : {SeqFn::sequence(constant(7)),
                  periodize(constant(1), phi())}) {
    DeltaSample ds = delta_quotients(f, phi(), 5, 5);
    for (const auto& row : ds.rows) CHECK(row.quotient == 0);
    DGammaEstimate est = d_gamma_estimate(f, phi(), 5, 6);
    REQUIRE(est.kind == DGammaEstimate::Kind::Finite);
    CHECK(est.value == 0);
  }
}

TEST_CASE("dimension check reproduces the derivative table") {
  Expr f = add(exp_of(X()), add(int_pow(X(), 3), cos_of(mul(constant(2), X()))));
  DimensionCheck rep = check_dimensions(f, phi(), {2, 5, 13}, 12);
  CHECK(rep.all_pass);
  REQUIRE(rep.rows.size() == 3);
  for (const auto& row : rep.rows) {
    CHECK(row.pass);
    CHECK(row.error < BigReal("1e-6"));
    CHECK(row.estimate.kind == DGammaEstimate::Kind::Finite);
  }

  DimensionCheck flat_rep = check_dimensions(constant(5), phi(), {2, 7}, 12);
  CHECK(flat_rep.all_pass);
  for (const auto& row : flat_rep.rows) {
    CHECK(row.expected == 0);
    CHECK(row.error == 0);
  }

  auto s2 = IrrationalSpec::parse("sqrt2");
  DimensionCheck sq = check_dimensions(int_pow(X(), 2), s2, {3}, 12);
  CHECK(sq.all_pass);
  CHECK(abs(sq.rows[0].estimate.value - bigreal_from_decimal("0.3431458")) <
        BigReal("1e-6"));
  CHECK(abs(sq.rows[0].expected - 2 * rm(s2, 3)) < BigReal("1e-50"));
}

TEST_CASE("dimension check surfaces bad input") {
  CHECK_THROWS_AS(check_dimensions(abs_of(X()), phi(), {2}, 12),
                  NonSmoothExpression);
  CHECK_THROWS_AS(check_dimensions(X(), phi(), {2}, 12, BigReal(0)),
                  DomainError);
  CHECK_THROWS_AS(check_dimensions(X(), phi(), {2}, 4), DomainError);
}

TEST_CASE("rewriting the outer function does not move the quotients") {
  // x^2 versus x^2 (sin^2 + cos^2): same function, different tree
  Expr plain = int_pow(X(), 2);
  Expr dressed = mul(int_pow(X(), 2),
                     add(int_pow(sin_of(X()), 2), int_pow(cos_of(X()), 2)));
  DeltaSample a = delta_quotients(periodize(plain, phi()), phi(), 2, 8);
  DeltaSample b = delta_quotients(periodize(dressed, phi()), phi(), 2, 8);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].m == b.rows[i].m);
    CHECK(abs(a.rows[i].quotient - b.rows[i].quotient) < BigReal("1e-40"));
  }

  // identical calls give identical digits
  DeltaSample c = delta_quotients(periodize(plain, phi()), phi(), 2, 8);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].quotient.str(50) == c.rows[i].quotient.str(50));
  }
}

}  // TEST_SUITE
