// Command line front end. Every subcommand prints either plain text (the
// default, expression outputs re-parse under the same grammar) or a JSON
// envelope {schema, command, result, diagnostics} with sorted keys. Engine
// errors exit 1 with the stable error code; usage problems exit 2.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypergerm/errors.hpp"
#include "hypergerm/wire.hpp"

namespace {

using namespace hypergerm;

constexpr const char* kSchema = "hypergerm/1";

struct Options {
  unsigned precision = kDefaultPrecision;
  int order = kDefaultOrder;
  bool json = false;
};

// Every subcommand callback starts here: global flags are parsed before
// callbacks run, so this is the earliest safe point.
void apply_globals(const Options& opt) {
  if (opt.precision < kMinPrecision) {
    throw DomainError("precision below the " + std::to_string(kMinPrecision) +
                      " digit floor");
  }
  if (opt.order < 1) throw DomainError("order must be at least 1");
  set_working_precision(opt.precision);
}

void emit(const Options& opt, const std::string& command, Json result,
          const std::string& text) {
  if (opt.json) {
    Json envelope{{"schema", kSchema},
                  {"command", command},
                  {"result", std::move(result)},
                  {"diagnostics",
                   Json{{"precision", opt.precision}, {"order", opt.order}}}};
    std::cout << envelope.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

IrrationalSpec gamma_arg(const std::string& text) {
  return IrrationalSpec::parse(text);
}

BigInt int_arg(const std::string& text) {
  try {
    return BigInt(text);
  } catch (const std::exception&) {
    throw DomainError("'" + text + "' is not an integer");
  }
}

std::string yesno(bool b) { return b ? "true" : "false"; }

int run(int argc, char** argv) {
  CLI::App app{"symbolic-numeric calculus on germs at 0+ and on integer "
               "sequences sampled along irrational rotations"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--precision", opt.precision,
                 "working decimal digits (minimum 30)")
      ->capture_default_str();
  app.add_option("--order", opt.order, "truncation order for germ equality")
      ->capture_default_str();
  auto* json_flag = app.add_flag("--json", opt.json, "emit a JSON envelope");
  app.add_flag("--text", "plain text output (the default)")
      ->excludes(json_flag);

  // ---- germ commands ----
  std::string expr_a, expr_b;

  auto* derive = app.add_subcommand("derive", "differentiate a germ");
  derive->add_option("expr", expr_a)->required();
  derive->callback([&] {
    apply_globals(opt);
    HyperGerm g{parse_expr(expr_a)};
    HyperGerm d = hyper_derivative(g);
    emit(opt, "derive",
         Json{{"input", g.to_string()}, {"derivative", d.to_string()}},
         d.to_string());
  });

  auto* st_cmd = app.add_subcommand("st", "standard part of a germ");
  st_cmd->add_option("expr", expr_a)->required();
  st_cmd->callback([&] {
    apply_globals(opt);
    HyperGerm g{parse_expr(expr_a)};
    StdPart p = st(g, opt.order);
    emit(opt, "st", Json{{"input", g.to_string()}, {"st", to_wire(p)}},
         to_string(p));
  });

  auto* eq = app.add_subcommand("germ-eq", "decide germ equality");
  eq->add_option("lhs", expr_a)->required();
  eq->add_option("rhs", expr_b)->required();
  eq->callback([&] {
    apply_globals(opt);
    HyperGerm a{parse_expr(expr_a)}, b{parse_expr(expr_b)};
    EqualityReport r = germ_equal_report(a, b, opt.order);
    emit(opt, "germ-eq",
         Json{{"lhs", a.to_string()},
              {"rhs", b.to_string()},
              {"equal", r.equal},
              {"report", to_wire(r)}},
         yesno(r.equal));
  });

  auto* compose = app.add_subcommand("compose", "compose two entire germs");
  compose->add_option("outer", expr_a)->required();
  compose->add_option("inner", expr_b)->required();
  compose->callback([&] {
    apply_globals(opt);
    HyperGerm f{parse_expr(expr_a)}, g{parse_expr(expr_b)};
    HyperGerm fg = hyper_compose(f, g);
    emit(opt, "compose",
         Json{{"outer", f.to_string()},
              {"inner", g.to_string()},
              {"composition", fg.to_string()}},
         fg.to_string());
  });

  auto* chain = app.add_subcommand("chain-check", "verify the chain rule");
  chain->add_option("outer", expr_a)->required();
  chain->add_option("inner", expr_b)->required();
  chain->callback([&] {
    apply_globals(opt);
    HyperGerm f{parse_expr(expr_a)}, g{parse_expr(expr_b)};
    ChainRuleReport r = check_chain_rule(f, g);
    Json result = to_wire(r);
    result["outer"] = f.to_string();
    result["inner"] = g.to_string();
    emit(opt, "chain-check", std::move(result), yesno(r.holds));
  });

  // ---- secant ----
  std::string residual_text, g0_text, g1_text;
  int max_iter = 25;

  auto* solve = app.add_subcommand("solve-ode", "secant iteration on a residual");
  solve->add_option("--residual", residual_text, "template over Y, X, F")
      ->required();
  solve->add_option("--g0", g0_text, "first seed germ")->required();
  solve->add_option("--g1", g1_text, "second seed germ")->required();
  solve->add_option("--max-iter", max_iter)->capture_default_str();
  solve->callback([&] {
    apply_globals(opt);
    ResidualSpec spec = ResidualSpec::parse(residual_text);
    SecantResult r = secant_solve(spec, HyperGerm{parse_expr(g0_text)},
                                  HyperGerm{parse_expr(g1_text)}, max_iter);
    Json result = to_wire(r);
    result["residual_spec"] = spec.to_string();
    emit(opt, "solve-ode", std::move(result), r.result.to_string());
  });

  // ---- rotation / finite calculus ----
  std::string gamma_text, n_text, eps_text, fn_text, outer_text, ns_text;
  std::string tolerance_text = "1e-6";
  int count = 1, depth = 12;

  auto* rm_cmd = app.add_subcommand("rm", "remainder to the nearest multiple");
  rm_cmd->add_option("--gamma", gamma_text)->required();
  rm_cmd->add_option("--n", n_text)->required();
  rm_cmd->callback([&] {
    apply_globals(opt);
    auto gamma = gamma_arg(gamma_text);
    BigInt n = int_arg(n_text);
    BigReal r = rm(gamma, n);
    emit(opt, "rm",
         Json{{"gamma", gamma.to_string()}, {"n", n.str()}, {"rm", r.str()}},
         r.str());
  });

  auto* wit = app.add_subcommand("witnesses",
                                 "integers with remainder below a bound");
  wit->add_option("--gamma", gamma_text)->required();
  wit->add_option("--eps", eps_text)->required();
  wit->add_option("--count", count)->capture_default_str();
  wit->callback([&] {
    apply_globals(opt);
    auto gamma = gamma_arg(gamma_text);
    auto ns = small_rm_witnesses(gamma, bigreal_from_decimal(eps_text), count);
    Json list = Json::array();
    std::string line;
    for (const BigInt& n : ns) {
      list.push_back(n.str());
      if (!line.empty()) line += ' ';
      line += n.str();
    }
    emit(opt, "witnesses",
         Json{{"gamma", gamma.to_string()},
              {"eps", eps_text},
              {"count", count},
              {"witnesses", std::move(list)}},
         line);
  });

  auto* dg = app.add_subcommand("dgamma",
                                "difference-quotient derivative estimate");
  dg->add_option("--gamma", gamma_text)->required();
  dg->add_option("--fn", fn_text, "seq:<expr>, periodized:<expr> or flat")
      ->required();
  dg->add_option("--n", n_text)->required();
  dg->add_option("--depth", depth)->capture_default_str();
  dg->add_option("--eps", eps_text, "witness bound (default half period)");
  dg->callback([&] {
    apply_globals(opt);
    auto gamma = gamma_arg(gamma_text);
    SeqFn f = parse_seqfn(fn_text, gamma);
    BigInt n = int_arg(n_text);
    std::optional<BigReal> eps;
    if (!eps_text.empty()) eps = bigreal_from_decimal(eps_text);
    DGammaEstimate est = d_gamma_estimate(f, gamma, n, depth, eps);
    DeltaSample sample = delta_quotients(f, gamma, n, depth, eps);
    std::string text = to_string(est.kind);
    if (est.kind == DGammaEstimate::Kind::Finite) text += " " + est.value.str();
    emit(opt, "dgamma",
         Json{{"gamma", gamma.to_string()},
              {"fn", f.to_string()},
              {"n", n.str()},
              {"depth", depth},
              {"estimate", to_wire(est)},
              {"sample", to_wire(sample)}},
         text);
  });

  auto* dims = app.add_subcommand(
      "check-dimensions", "derivative of a periodization vs the outer derivative");
  dims->add_option("--gamma", gamma_text)->required();
  dims->add_option("--outer", outer_text, "smooth expression in x")->required();
  dims->add_option("--ns", ns_text, "comma separated base points")->required();
  dims->add_option("--depth", depth)->capture_default_str();
  dims->add_option("--tolerance", tolerance_text)->capture_default_str();
  dims->callback([&] {
    apply_globals(opt);
    auto gamma = gamma_arg(gamma_text);
    Expr outer = parse_expr(outer_text);
    std::vector<BigInt> ns;
    std::istringstream in(ns_text);
    std::string tok;
    while (std::getline(in, tok, ',')) ns.push_back(int_arg(tok));
    if (ns.empty()) throw DomainError("--ns needs at least one base point");
    DimensionCheck report = check_dimensions(
        outer, gamma, ns, depth, bigreal_from_decimal(tolerance_text));
    std::string text;
    for (const auto& row : report.rows) {
      text += "n=" + row.n.str() + " error=" + row.error.str(6) +
              " pass=" + yesno(row.pass) + "\n";
    }
    text += "all: " + yesno(report.all_pass);
    Json result = to_wire(report);
    result["gamma"] = gamma.to_string();
    result["outer"] = print_expr(outer);
    result["depth"] = depth;
    emit(opt, "check-dimensions", std::move(result), text);
  });

  auto* flat = app.add_subcommand(
      "flat-demo", "flat-but-nonconstant sequence along small remainders");
  flat->add_option("--gamma", gamma_text)->required();
  flat->callback([&] {
    apply_globals(opt);
    auto gamma = gamma_arg(gamma_text);
    SeqFn f = build_flat_nonconstant(gamma);
    BigReal eps = gamma_value(gamma) / 8;
    auto ns = small_rm_witnesses(gamma, eps, 6);
    Json values = Json::array();
    std::string text;
    for (const BigInt& n : ns) {
      BigReal v = f(n);
      values.push_back(Json{{"n", n.str()}, {"value", v.str()}});
      text += "f(" + n.str() + ") = " + v.str() + "\n";
    }
    const BigInt& base = ns[2];
    DGammaEstimate est = d_gamma_estimate(f, gamma, base, 20);
    text += "estimate at " + base.str() + ": " + to_string(est.kind);
    if (est.kind == DGammaEstimate::Kind::Finite) text += " " + est.value.str();
    emit(opt, "flat-demo",
         Json{{"gamma", gamma.to_string()},
              {"values", std::move(values)},
              {"estimate_at", base.str()},
              {"estimate", to_wire(est)}},
         text);
  });

  // ---- subset sums ----
  std::string coloring_text, cert_path;
  int k = 1;
  long window = 1;

  auto* hind = app.add_subcommand("hindman",
                                  "search for a monochromatic sum set");
  hind->add_option("--coloring", coloring_text,
                   "mod:<m>, table:<path> or expr:<expr in n>")
      ->required();
  hind->add_option("--k", k, "set size")->required();
  hind->add_option("--window", window, "search window 1..N")->required();
  hind->callback([&] {
    apply_globals(opt);
    Coloring coloring = Coloring::parse(coloring_text);
    auto cert = search_monochromatic(coloring, k, window);
    Json result{{"coloring", coloring.to_string()},
                {"k", k},
                {"window", window},
                {"found", cert.has_value()}};
    std::string text = "not found";
    if (cert) {
      result["certificate"] = to_wire(*cert);
      text = "S={";
      for (std::size_t i = 0; i < cert->set.size(); ++i) {
        if (i) text += ',';
        text += std::to_string(cert->set[i]);
      }
      text += "} color=" + cert->color;
    }
    emit(opt, "hindman", std::move(result), text);
  });

  auto* verify = app.add_subcommand("verify-hindman",
                                    "check a certificate against a coloring");
  verify->add_option("--coloring", coloring_text)->required();
  verify->add_option("--cert", cert_path, "path to a certificate JSON file")
      ->required();
  verify->callback([&] {
    apply_globals(opt);
    Coloring coloring = Coloring::parse(coloring_text);
    std::ifstream in(cert_path);
    if (!in) throw DomainError("cannot read certificate '" + cert_path + "'");
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw DomainError(std::string("certificate is not JSON: ") + e.what());
    }
    HindmanCertificate cert = certificate_from_wire(j);
    bool valid = verify_certificate(coloring, cert);
    emit(opt, "verify-hindman",
         Json{{"coloring", coloring.to_string()}, {"valid", valid}},
         yesno(valid));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const EngineError& e) {
    bool json = false;
    for (int i = 1; i < argc; ++i) {
      if (std::string(argv[i]) == "--json") json = true;
    }
    if (json) {
      std::cerr << Json{{"code", e.code()}, {"message", e.what()}}.dump()
                << "\n";
    } else {
      std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 3;
  }
}
