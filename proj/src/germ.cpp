#include "hypergerm/germ.hpp"

#include <atomic>

#include "hypergerm/errors.hpp"

namespace hypergerm {

struct HyperGerm::CacheSlot {
  struct Entry {
    unsigned precision;
    LaurentSeries series;
  };
  std::shared_ptr<const Entry> data;  // accessed via atomic_* only
};

HyperGerm::HyperGerm()
    : repr_(constant(Rational(0))), cache_(std::make_shared<CacheSlot>()) {}

HyperGerm::HyperGerm(Expr repr)
    : repr_(std::move(repr)), cache_(std::make_shared<CacheSlot>()) {}

std::shared_ptr<const LaurentSeries> HyperGerm::series(int order) const {
  // A cached expansion is reusable only when it was computed at the same
  // working precision and the exact order (a longer window would change the
  // reported order); single slot, last writer wins.
  unsigned prec = working_precision();
  auto cached = std::atomic_load(&cache_->data);
  if (cached && cached->series.order == order && cached->precision == prec) {
    return {cached, &cached->series};
  }
  auto fresh = std::make_shared<const CacheSlot::Entry>(
      CacheSlot::Entry{prec, expand_series(repr_, order)});
  std::atomic_store(&cache_->data, fresh);
  return {fresh, &fresh->series};
}

HyperGerm omega() { return HyperGerm(variable(0)); }

HyperGerm germ_add(const HyperGerm& a, const HyperGerm& b) {
  return HyperGerm(add(a.repr(), b.repr()));
}

HyperGerm germ_sub(const HyperGerm& a, const HyperGerm& b) {
  return HyperGerm(sub(a.repr(), b.repr()));
}

HyperGerm germ_mul(const HyperGerm& a, const HyperGerm& b) {
  return HyperGerm(mul(a.repr(), b.repr()));
}

HyperGerm germ_neg(const HyperGerm& a) { return HyperGerm(neg(a.repr())); }

HyperGerm germ_div(const HyperGerm& a, const HyperGerm& b) {
  if (germ_equal(b, HyperGerm(), kDefaultOrder)) {
    throw DivisionByZeroGerm("division by a germ equal to zero");
  }
  return HyperGerm(div(a.repr(), b.repr()));
}

namespace {

// Numeric crosscheck for a certified-zero difference: |d| at four probe
// points with guard digits. Probes where the representative is undefined
// (log of a nonpositive value and the like) are skipped.
std::vector<SamplePoint> probe_difference(const Expr& d) {
  std::vector<SamplePoint> out;
  PrecisionGuard guard(working_precision() + 40);
  for (int k : {3, 6, 9, 12}) {
    SamplePoint p;
    p.exponent = k;
    BigReal x = pow(BigReal(10), -k);
    try {
      p.magnitude = abs(eval_expr(d, x));
    } catch (const DomainError&) {
      p.skipped = true;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

EqualityReport germ_equal_report(const HyperGerm& a, const HyperGerm& b,
                                 int order) {
  EqualityReport r;
  r.order = order;
  Expr d = sub(a.repr(), b.repr());
  LaurentSeries s = expand_series(d, order);
  r.series_zero = s.zero;
  if (!s.zero) {
    r.first_difference = s.valuation;
    r.confidence = s.confidence;
    return r;  // conjunction already false; no sampling needed
  }
  r.confidence = s.confidence;
  r.samples = probe_difference(d);
  BigReal tol = sample_tolerance();
  bool ok = true;
  for (const auto& p : r.samples) {
    if (!p.skipped && p.magnitude >= tol) ok = false;
  }
  r.equal = ok;
  return r;
}

bool germ_equal(const HyperGerm& a, const HyperGerm& b, int order) {
  return germ_equal_report(a, b, order).equal;
}

Ordering germ_compare(const HyperGerm& a, const HyperGerm& b, int order) {
  EqualityReport r = germ_equal_report(a, b, order);
  if (r.equal) return Ordering::Equal;
  if (r.series_zero) {
    // The series arm certified zero but a probe disagreed: the two decision
    // procedures are out of step and no sign can be trusted.
    throw PrecisionExhausted(
        "series and sampling disagree; raise precision or order");
  }
  LaurentSeries s = expand_series(sub(a.repr(), b.repr()), order);
  return s.coeff(s.valuation) > 0 ? Ordering::Greater : Ordering::Less;
}

StdPart st(const HyperGerm& g, int order) {
  auto s = g.series(order);
  StdPart p;
  if (s->zero) {
    p.tag = StdPart::Tag::Finite;
    p.value = 0;
    return p;
  }
  if (s->valuation < 0) {
    p.tag = s->coeff(s->valuation) > 0 ? StdPart::Tag::PlusInfinite
                                       : StdPart::Tag::MinusInfinite;
    return p;
  }
  p.tag = StdPart::Tag::Finite;
  p.value = s->coeff(0);
  return p;
}

std::string to_string(const StdPart& p) {
  switch (p.tag) {
    case StdPart::Tag::PlusInfinite: return "+infinite";
    case StdPart::Tag::MinusInfinite: return "-infinite";
    case StdPart::Tag::Finite: return decimal_string(p.value);
  }
  return "";
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "";
}

}  // namespace hypergerm
