// Python extension. The surface deliberately mirrors the command line:
// expressions travel as grammar strings, numbers as decimal strings, and
// structured results as the same JSON documents the CLI emits, so nothing
// multiprecision ever crosses the boundary lossily. The python package
// wraps these into dicts.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypergerm/calculus.hpp"
#include "hypergerm/errors.hpp"
#include "hypergerm/finitecalc.hpp"
#include "hypergerm/hindman.hpp"
#include "hypergerm/rotation.hpp"
#include "hypergerm/secant.hpp"
#include "hypergerm/wire.hpp"

namespace py = pybind11;
using namespace hypergerm;

namespace {

HyperGerm germ(const std::string& text) { return HyperGerm{parse_expr(text)}; }

std::optional<BigReal> opt_decimal(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return bigreal_from_decimal(text);
}

std::vector<BigInt> int_list(const std::vector<std::string>& texts) {
  std::vector<BigInt> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.emplace_back(t);
  return out;
}

}  // namespace

PYBIND11_MODULE(_hypergerm, m) {
  m.doc() = "symbolic-numeric calculus on germs at 0+ and on integer "
            "sequences sampled along irrational rotations";

  // One python-side exception for the whole engine error family; the
  // stable error code rides in front of the message.
  static py::exception<EngineError> engine_error(m, "EngineError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const EngineError& e) {
      std::string msg = std::string(e.code()) + ": " + e.what();
      PyErr_SetString(engine_error.ptr(), msg.c_str());
    }
  });

  m.def("set_precision", &set_working_precision, py::arg("digits"),
        "working decimal digits for this thread");

  // ---- germs ----
  m.def(
      "derive", [](const std::string& e) {
        return hyper_derivative(germ(e)).to_string();
      },
      py::arg("expr"));
  m.def(
      "standard_part",
      [](const std::string& e, int order) {
        return to_string(st(germ(e), order));
      },
      py::arg("expr"), py::arg("order") = kDefaultOrder,
      "finite value as a decimal string, or '+infinite'/'-infinite'");
  m.def(
      "germ_equal",
      [](const std::string& a, const std::string& b, int order) {
        return germ_equal(germ(a), germ(b), order);
      },
      py::arg("lhs"), py::arg("rhs"), py::arg("order") = kDefaultOrder);
  m.def(
      "equality_report",
      [](const std::string& a, const std::string& b, int order) {
        return to_wire(germ_equal_report(germ(a), germ(b), order)).dump();
      },
      py::arg("lhs"), py::arg("rhs"), py::arg("order") = kDefaultOrder);
  m.def(
      "compose",
      [](const std::string& outer, const std::string& inner) {
        return hyper_compose(germ(outer), germ(inner)).to_string();
      },
      py::arg("outer"), py::arg("inner"));
  m.def(
      "chain_rule_holds",
      [](const std::string& outer, const std::string& inner) {
        return check_chain_rule(germ(outer), germ(inner)).holds;
      },
      py::arg("outer"), py::arg("inner"));
  m.def(
      "lift_point",
      [](const std::string& x0, const std::string& y0) {
        return lift_point(bigreal_from_decimal(x0), bigreal_from_decimal(y0))
            .to_string();
      },
      py::arg("x0"), py::arg("y0"));

  // ---- secant ----
  m.def(
      "solve_ode",
      [](const std::string& residual, const std::string& g0,
         const std::string& g1, int max_iter) {
        SecantResult r = secant_solve(ResidualSpec::parse(residual), germ(g0),
                                      germ(g1), max_iter);
        return to_wire(r).dump();
      },
      py::arg("residual"), py::arg("g0"), py::arg("g1"),
      py::arg("max_iter") = 25);

  // ---- rotation / finite calculus ----
  m.def(
      "gamma_value",
      [](const std::string& gamma) {
        return gamma_value(IrrationalSpec::parse(gamma)).str();
      },
      py::arg("gamma"));
  m.def(
      "rm",
      [](const std::string& gamma, const std::string& n) {
        return rm(IrrationalSpec::parse(gamma), BigInt(n)).str();
      },
      py::arg("gamma"), py::arg("n"));
  m.def(
      "witnesses",
      [](const std::string& gamma, const std::string& eps, int count) {
        std::vector<std::string> out;
        for (const BigInt& n : small_rm_witnesses(
                 IrrationalSpec::parse(gamma), bigreal_from_decimal(eps),
                 count)) {
          out.push_back(n.str());
        }
        return out;
      },
      py::arg("gamma"), py::arg("eps"), py::arg("count"));
  m.def(
      "delta_quotients",
      [](const std::string& gamma, const std::string& fn, const std::string& n,
         int depth, const std::string& eps) {
        IrrationalSpec spec = IrrationalSpec::parse(gamma);
        return to_wire(delta_quotients(parse_seqfn(fn, spec), spec, BigInt(n),
                                       depth, opt_decimal(eps)))
            .dump();
      },
      py::arg("gamma"), py::arg("fn"), py::arg("n"), py::arg("depth") = 12,
      py::arg("eps") = "");
  m.def(
      "d_gamma",
      [](const std::string& gamma, const std::string& fn, const std::string& n,
         int depth, const std::string& eps) {
        IrrationalSpec spec = IrrationalSpec::parse(gamma);
        return to_wire(d_gamma_estimate(parse_seqfn(fn, spec), spec, BigInt(n),
                                        depth, opt_decimal(eps)))
            .dump();
      },
      py::arg("gamma"), py::arg("fn"), py::arg("n"), py::arg("depth") = 12,
      py::arg("eps") = "");
  m.def(
      "check_dimensions",
      [](const std::string& gamma, const std::string& outer,
         const std::vector<std::string>& ns, int depth,
         const std::string& tolerance) {
        return to_wire(check_dimensions(parse_expr(outer),
                                        IrrationalSpec::parse(gamma),
                                        int_list(ns), depth,
                                        bigreal_from_decimal(tolerance)))
            .dump();
      },
      py::arg("gamma"), py::arg("outer"), py::arg("ns"),
      py::arg("depth") = 12, py::arg("tolerance") = "1e-6");

  // ---- subset sums ----
  m.def(
      "hindman_search",
      [](const std::string& coloring, int k, long window) -> py::object {
        auto cert =
            search_monochromatic(Coloring::parse(coloring), k, window);
        if (!cert) return py::none();
        return py::str(to_wire(*cert).dump());
      },
      py::arg("coloring"), py::arg("k"), py::arg("window"),
      "certificate JSON, or None when no set exists in the window");
  m.def(
      "hindman_verify",
      [](const std::string& coloring, const std::string& cert_json) {
        Json j;
        try {
          j = Json::parse(cert_json);
        } catch (const Json::exception& e) {
          throw DomainError(std::string("certificate is not JSON: ") +
                            e.what());
        }
        return verify_certificate(Coloring::parse(coloring),
                                  certificate_from_wire(j));
      },
      py::arg("coloring"), py::arg("certificate"));
}
