#include "hypergerm/rotation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hypergerm/errors.hpp"

namespace hypergerm {

namespace {

std::size_t digits10_of(const BigInt& n) {
  std::string s = n.str();
  return s.size() - (s.front() == '-' ? 1 : 0);
}

unsigned significant_digits(const std::string& literal) {
  unsigned count = 0;
  bool seen_nonzero = false;
  for (char c : literal) {
    if (!std::isdigit(static_cast<unsigned char>(c))) continue;
    if (c != '0') seen_nonzero = true;
    if (seen_nonzero) ++count;
  }
  return count;
}

}  // namespace

IrrationalSpec IrrationalSpec::parse(std::string_view text) {
  IrrationalSpec spec;
  if (text == "phi") {
    spec.kind = Kind::Phi;
    return spec;
  }
  if (text == "sqrt2") {
    spec.kind = Kind::Sqrt2;
    return spec;
  }
  if (text == "e") {
    spec.kind = Kind::E;
    return spec;
  }
  if (text.rfind("dec:", 0) == 0) {
    spec.kind = Kind::Decimal;
    spec.decimal_digits = std::string(text.substr(4));
    BigReal probe = bigreal_from_decimal(spec.decimal_digits);  // validates
    if (probe <= 0) throw DomainError("gamma must be positive");
    if (significant_digits(spec.decimal_digits) < 30) {
      throw DomainError(
          "decimal gamma needs at least 30 significant digits");
    }
    return spec;
  }
  if (text.rfind("cf:", 0) == 0) {
    spec.kind = Kind::CF;
    std::string rest(text.substr(3));
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        throw DomainError("cf: coefficients must be nonnegative integers");
      }
      spec.cf.emplace_back(tok);
    }
    if (spec.cf.size() < 2) {
      throw DomainError("cf: needs at least two coefficients");
    }
    for (std::size_t i = 1; i < spec.cf.size(); ++i) {
      if (spec.cf[i] < 1) {
        throw DomainError("cf: coefficients after the first must be >= 1");
      }
    }
    return spec;
  }
  throw DomainError("unrecognized gamma spec '" + std::string(text) +
                    "' (want phi, sqrt2, e, dec:<digits> or cf:a0,a1,...)");
}

std::string IrrationalSpec::to_string() const {
  switch (kind) {
    case Kind::Phi: return "phi";
    case Kind::Sqrt2: return "sqrt2";
    case Kind::E: return "e";
    case Kind::Decimal: return "dec:" + decimal_digits;
    case Kind::CF: {
      std::string out = "cf:";
      for (std::size_t i = 0; i < cf.size(); ++i) {
        if (i) out += ',';
        out += cf[i].str();
      }
      return out;
    }
  }
  return "";
}

unsigned IrrationalSpec::trusted_digits() const {
  switch (kind) {
    case Kind::Phi:
    case Kind::Sqrt2:
    case Kind::E:
      return 0;
    case Kind::Decimal:
      return significant_digits(decimal_digits);
    case Kind::CF: {
      // |gamma - p_n/q_n| < 1/q_n^2, so about twice the digits of the last
      // denominator are meaningful.
      BigInt q0(1), q1(cf.size() > 1 ? cf[1] : BigInt(1));
      for (std::size_t i = 2; i < cf.size(); ++i) {
        BigInt q2 = cf[i] * q1 + q0;
        q0 = q1;
        q1 = q2;
      }
      std::size_t len = digits10_of(q1);
      return len < 2 ? 1 : static_cast<unsigned>(2 * len - 2);
    }
  }
  return 0;
}

BigReal gamma_value(const IrrationalSpec& spec, unsigned digits) {
  if (digits == 0) digits = working_precision();
  unsigned base = digits;
  PrecisionGuard guard(digits + 10);
  BigReal v;
  switch (spec.kind) {
    case IrrationalSpec::Kind::Phi:
      v = (1 + sqrt(BigReal(5))) / 2;
      break;
    case IrrationalSpec::Kind::Sqrt2:
      v = sqrt(BigReal(2));
      break;
    case IrrationalSpec::Kind::E:
      v = exp(BigReal(1));
      break;
    case IrrationalSpec::Kind::Decimal:
      v = bigreal_from_decimal(spec.decimal_digits);
      break;
    case IrrationalSpec::Kind::CF: {
      BigInt p0(1), p1(spec.cf[0]), q0(0), q1(1);
      for (std::size_t i = 1; i < spec.cf.size(); ++i) {
        BigInt p2 = spec.cf[i] * p1 + p0;
        BigInt q2 = spec.cf[i] * q1 + q0;
        p0 = p1;
        p1 = p2;
        q0 = q1;
        q1 = q2;
      }
      v = BigReal(p1) / BigReal(q1);
      break;
    }
  }
  v.precision(base);
  return v;
}

ConvergentStream::ConvergentStream(IrrationalSpec spec) : spec_(std::move(spec)) {}

BigInt ConvergentStream::coefficient(std::size_t k) {
  switch (spec_.kind) {
    case IrrationalSpec::Kind::Phi:
      return 1;
    case IrrationalSpec::Kind::Sqrt2:
      return k == 0 ? 1 : 2;
    case IrrationalSpec::Kind::E:
      if (k == 0) return 2;
      return k % 3 == 2 ? BigInt(2 * (k + 1) / 3) : BigInt(1);
    case IrrationalSpec::Kind::CF:
      if (k < spec_.cf.size()) return spec_.cf[k];
      throw PrecisionExhausted(
          "cf: gamma has only " + std::to_string(spec_.cf.size()) +
          " coefficients; deeper convergents are not determined");
    case IrrationalSpec::Kind::Decimal: {
      if (!decimal_done_) {
        // One-shot extraction of every coefficient the stated digits can
        // certify: stop once the denominator squared outruns them.
        unsigned trusted = spec_.trusted_digits();
        PrecisionGuard guard(trusted + 20);
        BigReal x = bigreal_from_decimal(spec_.decimal_digits);
        BigReal tiny = pow(BigReal(10), -static_cast<long>(trusted));
        BigInt q0(0), q1(1);
        while (true) {
          BigReal fl = floor(x);
          BigInt a = fl.convert_to<BigInt>();
          BigReal frac = x - fl;
          BigInt qnext = decimal_cf_.empty() ? BigInt(1) : a * q1 + q0;
          if (!decimal_cf_.empty() &&
              2 * digits10_of(qnext) + 10 > trusted) {
            break;
          }
          decimal_cf_.push_back(a);
          q0 = q1;
          q1 = qnext;
          if (frac < tiny) break;  // looks rational at this precision
          x = 1 / frac;
        }
        decimal_done_ = true;
      }
      if (k < decimal_cf_.size()) return decimal_cf_[k];
      throw PrecisionExhausted(
          "dec: gamma digits certify only " +
          std::to_string(decimal_cf_.size()) +
          " continued fraction coefficients");
    }
  }
  throw DomainError("unreachable gamma kind");
}

const ConvergentStream::Convergent& ConvergentStream::at(std::size_t k) {
  while (conv_.size() <= k) {
    std::size_t i = conv_.size();
    BigInt a = coefficient(i);
    if (i == 0) {
      conv_.push_back({a, BigInt(1)});
    } else if (i == 1) {
      conv_.push_back({a * conv_[0].p + 1, a});
    } else {
      conv_.push_back({a * conv_[i - 1].p + conv_[i - 2].p,
                       a * conv_[i - 1].q + conv_[i - 2].q});
    }
  }
  return conv_[k];
}

BigReal rm(const IrrationalSpec& spec, const BigInt& n) {
  if (n < 1) throw DomainError("rm is defined for positive integers");
  unsigned base = working_precision();
  unsigned p_dyn =
      base + static_cast<unsigned>(2 * digits10_of(n)) + 10;
  PrecisionGuard guard(p_dyn);
  BigReal g = gamma_value(spec, p_dyn);
  BigReal ratio = BigReal(n) / g;
  BigInt k = BigReal(round(ratio)).convert_to<BigInt>();
  BigReal r = BigReal(n) - BigReal(k) * g;

  unsigned trusted = spec.trusted_digits();
  if (trusted != 0) {
    // The spec's digits bound the error in gamma; n scales it. Refuse to
    // hand out values the digits cannot back.
    BigReal err = BigReal(n) * pow(BigReal(10), -static_cast<long>(trusted));
    if (err * pow(BigReal(10), 10) >= abs(r)) {
      throw PrecisionExhausted(
          "gamma spec carries too few digits for rm at n = " + n.str());
    }
  }
  r.precision(base);
  return r;
}

std::vector<BigInt> small_rm_witnesses(const IrrationalSpec& spec,
                                       const BigReal& eps, int count) {
  if (!(eps > 0)) throw DomainError("witness bound eps must be positive");
  if (count < 0) throw DomainError("witness count must be nonnegative");
  std::vector<BigInt> out;
  ConvergentStream stream(spec);
  for (std::size_t k = 1; static_cast<int>(out.size()) < count; ++k) {
    const auto& c = stream.at(k);
    if (abs(rm(spec, c.p)) < eps) out.push_back(c.p);
  }
  return out;
}

}  // namespace hypergerm
