#include "hypergerm/wire.hpp"

#include "hypergerm/errors.hpp"

namespace hypergerm {

namespace {

std::string dec(const BigReal& v) { return v.str(); }

}  // namespace

Json to_wire(const LaurentSeries& s) {
  Json j;
  j["order"] = s.order;
  j["zero"] = s.zero;
  j["confidence"] = s.confidence;
  if (!s.zero) {
    j["valuation"] = s.valuation;
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < s.coefficients.size(); ++i) {
      if (s.coefficients[i] == 0) continue;
      coeffs.push_back(Json{{"power", s.valuation + static_cast<long>(i)},
                            {"value", dec(s.coefficients[i])}});
    }
    j["coefficients"] = std::move(coeffs);
  }
  return j;
}

Json to_wire(const StdPart& p) {
  Json j;
  switch (p.tag) {
    case StdPart::Tag::Finite:
      j["kind"] = "finite";
      j["value"] = dec(p.value);
      break;
    case StdPart::Tag::PlusInfinite:
      j["kind"] = "+infinite";
      break;
    case StdPart::Tag::MinusInfinite:
      j["kind"] = "-infinite";
      break;
  }
  return j;
}

Json to_wire(const EqualityReport& r) {
  Json j;
  j["equal"] = r.equal;
  j["series_zero"] = r.series_zero;
  j["confidence"] = r.confidence;
  j["order"] = r.order;
  if (!r.series_zero) j["first_difference"] = r.first_difference;
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json e{{"exponent", s.exponent}, {"skipped", s.skipped}};
    if (!s.skipped) e["magnitude"] = dec(s.magnitude);
    samples.push_back(std::move(e));
  }
  j["samples"] = std::move(samples);
  return j;
}

Json to_wire(const ChainRuleReport& r) {
  return Json{{"holds", r.holds},
              {"lhs", r.lhs.to_string()},
              {"rhs", r.rhs.to_string()}};
}

Json to_wire(const SecantResult& r) {
  Json trace = Json::array();
  for (const auto& step : r.trace) {
    trace.push_back(Json{{"index", step.index},
                         {"candidate", print_expr(step.candidate)},
                         {"residual", print_expr(step.residual)},
                         {"residual_zero", step.residual_zero}});
  }
  return Json{{"converged", r.converged},
              {"iterations", r.iterations},
              {"result", r.result.to_string()},
              {"trace", std::move(trace)}};
}

Json to_wire(const DeltaSample& s) {
  Json rows = Json::array();
  for (const auto& row : s.rows) {
    rows.push_back(Json{{"m", row.m.str()},
                        {"rm", dec(row.rm_m)},
                        {"quotient", dec(row.quotient)}});
  }
  return Json{{"n", s.n.str()}, {"depth", s.depth}, {"rows", std::move(rows)}};
}

Json to_wire(const DGammaEstimate& e) {
  Json j;
  j["kind"] = to_string(e.kind);
  if (e.kind == DGammaEstimate::Kind::Finite) {
    j["value"] = dec(e.value);
    j["error_bar"] = dec(e.error_bar);
  }
  return j;
}

Json to_wire(const DimensionCheck& c) {
  Json rows = Json::array();
  for (const auto& row : c.rows) {
    rows.push_back(Json{{"n", row.n.str()},
                        {"rm", dec(row.rm_n)},
                        {"estimate", to_wire(row.estimate)},
                        {"expected", dec(row.expected)},
                        {"error", dec(row.error)},
                        {"pass", row.pass}});
  }
  return Json{{"all_pass", c.all_pass},
              {"tolerance", dec(c.tolerance)},
              {"rows", std::move(rows)}};
}

Json to_wire(const HindmanCertificate& cert) {
  Json sums = Json::array();
  for (const auto& s : cert.sums) {
    sums.push_back(
        Json{{"subset", s.subset}, {"sum", s.sum}, {"color", s.color}});
  }
  return Json{
      {"color", cert.color}, {"set", cert.set}, {"sums", std::move(sums)}};
}

HindmanCertificate certificate_from_wire(const Json& j) {
  try {
    HindmanCertificate cert;
    cert.color = j.at("color").get<std::string>();
    cert.set = j.at("set").get<std::vector<long>>();
    for (const auto& s : j.at("sums")) {
      SubsetSum entry;
      entry.subset = s.at("subset").get<std::vector<long>>();
      entry.sum = s.at("sum").get<long>();
      entry.color = s.at("color").get<std::string>();
      cert.sums.push_back(std::move(entry));
    }
    return cert;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace hypergerm
