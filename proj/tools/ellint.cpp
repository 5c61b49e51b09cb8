// Command-line front-end: point evaluation, envelope bound tables, the full
// verification sweep, and sharpness demonstrations, with plain, CSV or JSON
// output.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellint/bounds.hpp"
#include "ellint/config.hpp"
#include "ellint/elliptic.hpp"
#include "ellint/ramanujan.hpp"
#include "ellint/verify.hpp"

namespace {

using json = nlohmann::json;

// shortest round-trip decimal representation
std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ellint::EvalConfig<> config_from_env() {
  ellint::EvalConfig<> cfg;
  if (const char * s = std::getenv("ELLINT_REL_TOL")) {
    cfg.rel_tol = std::strtod(s, nullptr);
  }
  if (const char * s = std::getenv("ELLINT_MAX_TERMS")) {
    cfg.max_terms = static_cast<int>(std::strtol(s, nullptr, 10));
  }
  cfg.validate();
  return cfg;
}

int run_eval(const std::string & fn, const std::vector<double> & args,
             const std::string & format, const ellint::EvalConfig<> & cfg) {
  using namespace ellint;
  double value = 0;
  const bool one_arg = fn == "ramanujan" || fn == "xi" || fn == "eta";
  if (args.size() != (one_arg ? 1u : 2u)) {
    std::cerr << "eval " << fn << " expects " << (one_arg ? 1 : 2)
              << " numeric argument(s)\n";
    return 1;
  }
  if (one_arg) {
    const RArgument<double> x{args[0]};
    value = fn == "ramanujan" ? r_def(x) : fn == "xi" ? xi(x) : eta(x);
  } else {
    const Param<double> a{args[0]};
    const auto p = ModulusPoint<double>::from_r(args[1]);
    value = fn == "ellk"   ? ellk_gen(a, p, cfg)
            : fn == "elle" ? elle_gen(a, p, cfg)
            : fn == "rho"  ? ratio_rho(a, p, cfg)
                           : throw domain_error("unknown function: " + fn);
  }
  if (format == "json") {
    json j{{"fn", fn}, {"value", value}};
    if (one_arg) {
      j["x"] = args[0];
    } else {
      j["a"] = args[0];
      j["r"] = args[1];
    }
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "fn,arg1,arg2,value\n"
              << fn << "," << fmt(args[0]) << ","
              << (one_arg ? "" : fmt(args[1])) << "," << fmt(value) << "\n";
  } else {
    std::cout << fmt(value) << "\n";
  }
  return 0;
}

int run_bounds(double a, double r_min, double r_max, int n,
               const std::string & format, const ellint::EvalConfig<> & cfg) {
  using namespace ellint;
  if (!(r_min > 0 && r_min <= r_max && r_max < 1) || n < 1) {
    throw domain_error("bounds: need 0 < r_min <= r_max < 1 and n >= 1");
  }
  const Param<double> pa{a};
  std::vector<EnvelopeReport<double>> rows;
  for (int i = 0; i < n; ++i) {
    const double r =
        n == 1 ? r_min : r_min + (r_max - r_min) * i / (n - 1.0);
    rows.push_back(envelope(pa, ModulusPoint<double>::from_r(r), cfg));
  }
  double min_lo = rows[0].lower_margin, min_up = rows[0].upper_margin;
  for (const auto & rep : rows) {
    min_lo = std::min(min_lo, rep.lower_margin);
    min_up = std::min(min_up, rep.upper_margin);
  }
  if (format == "json") {
    json out;
    out["rows"] = json::array();
    for (const auto & rep : rows) {
      out["rows"].push_back({{"a", rep.a},
                             {"r", rep.r},
                             {"lower", rep.lower},
                             {"value", rep.value},
                             {"upper", rep.upper},
                             {"lower_margin", rep.lower_margin},
                             {"upper_margin", rep.upper_margin}});
    }
    out["min_lower_margin"] = min_lo;
    out["min_upper_margin"] = min_up;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "a,r,lower,value,upper,lower_margin,upper_margin\n";
    for (const auto & rep : rows) {
      std::cout << fmt(rep.a) << "," << fmt(rep.r) << "," << fmt(rep.lower)
                << "," << fmt(rep.value) << "," << fmt(rep.upper) << ","
                << fmt(rep.lower_margin) << "," << fmt(rep.upper_margin)
                << "\n";
    }
    std::cout << "# min_lower_margin=" << fmt(min_lo)
              << " min_upper_margin=" << fmt(min_up) << "\n";
  }
  return 0;
}

int run_verify(const std::string & level, const std::string & format,
               const ellint::EvalConfig<> & cfg) {
  using namespace ellint;
  const auto results = run_all_checks(
      level == "quick" ? VerifyLevel::quick : VerifyLevel::full, cfg);
  bool all_pass = true;
  if (format == "json") {
    json out = json::array();
    for (const auto & res : results) {
      out.push_back(
          {{"name", res.name}, {"pass", res.pass}, {"detail", res.detail}});
      all_pass = all_pass && res.pass;
    }
    std::cout << out.dump() << "\n";
  } else {
    for (const auto & res : results) {
      std::cout << (res.pass ? "PASS " : "FAIL ") << res.name << ": "
                << res.detail << "\n";
      all_pass = all_pass && res.pass;
    }
  }
  return all_pass ? 0 : 1;
}

int run_sharpness(double a, double epsilon, const std::string & format,
                  const ellint::EvalConfig<> & cfg) {
  using namespace ellint;
  const Param<double> pa{a};
  const auto c = sharp_constants(pa);
  if (!(epsilon > 0 && epsilon < c.beta0 - c.alpha0)) {
    throw domain_error("sharpness: epsilon must lie in (0, beta0 - alpha0 = " +
                       fmt(c.beta0 - c.alpha0) + ")");
  }
  const auto lo = sharpness_scan(pa, c.alpha0 + epsilon, Side::lower, cfg);
  const auto up = sharpness_scan(pa, c.beta0 - epsilon, Side::upper, cfg);
  auto side_name = [](Side s) {
    return s == Side::lower ? "lower" : "upper";
  };
  if (format == "json") {
    json out = json::array();
    for (const auto & w : {lo, up}) {
      out.push_back({{"a", w.a},
                     {"lambda", w.lambda},
                     {"side", side_name(w.side)},
                     {"r", w.r},
                     {"rp2", w.rp2},
                     {"gap", w.gap}});
    }
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "a,lambda,side,r,rp2,gap\n";
    for (const auto & w : {lo, up}) {
      std::cout << fmt(w.a) << "," << fmt(w.lambda) << "," << side_name(w.side)
                << "," << fmt(w.r) << "," << fmt(w.rp2) << "," << fmt(w.gap)
                << "\n";
    }
  } else {
    for (const auto & w : {lo, up}) {
      std::cout << side_name(w.side) << " side: lambda=" << fmt(w.lambda)
                << " violated at r=" << fmt(w.r) << ", r'^2=" << fmt(w.rp2)
                << " (gap " << fmt(w.gap) << ")\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char ** argv) {
  CLI::App app{"Generalized elliptic integrals, the Ramanujan constant "
               "function, and sharp logarithmic bounds for K_a"};
  app.require_subcommand(1);

  std::string format = "plain";

  auto * eval = app.add_subcommand("eval", "Evaluate a single function");
  std::string fn;
  std::vector<double> eval_args;
  eval->add_option("fn", fn, "one of ellk|elle|rho|ramanujan|xi|eta")
      ->required();
  eval->add_option("args", eval_args, "a r (ellk/elle/rho) or x (others)")
      ->expected(1, 2);
  eval->add_option("--format", format, "plain|csv|json");

  auto * bounds = app.add_subcommand("bounds", "Envelope bound table");
  double b_a = 0, b_rmin = 0, b_rmax = 0;
  int b_n = 0;
  bounds->add_option("a", b_a)->required();
  bounds->add_option("r_min", b_rmin)->required();
  bounds->add_option("r_max", b_rmax)->required();
  bounds->add_option("n", b_n)->required();
  bounds->add_option("--format", format, "plain|csv|json");

  auto * verify = app.add_subcommand("verify", "Run the verification sweep");
  std::string level = "full";
  verify->add_option("--level", level, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--format", format, "plain|json");

  auto * sharp =
      app.add_subcommand("sharpness", "Violation witnesses for perturbed "
                                      "constants");
  double s_a = 0, s_eps = 0;
  sharp->add_option("a", s_a)->required();
  sharp->add_option("epsilon", s_eps)->required();
  sharp->add_option("--format", format, "plain|csv|json");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto cfg = config_from_env();
    if (eval->parsed()) {
      return run_eval(fn, eval_args, format, cfg);
    }
    if (bounds->parsed()) {
      return run_bounds(b_a, b_rmin, b_rmax, b_n, format, cfg);
    }
    if (verify->parsed()) {
      return run_verify(level, format, cfg);
    }
    if (sharp->parsed()) {
      return run_sharpness(s_a, s_eps, format, cfg);
    }
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
