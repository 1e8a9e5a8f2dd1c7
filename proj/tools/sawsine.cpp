// Command-line front end: construct coefficient vectors and extremal
// measures, verify the inequalities (exactly or on certified grids), solve
// the discretized LPs, and emit figure data.
//
// Exit codes: 0 success, 1 verification/assertion failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sawsine/sawsine.hpp"

namespace {

using sawsine::Family;
using sawsine::Rational;
using sawsine::json;

struct Options {
  std::string family;
  int m = 0;
  bool exact = false;
  long grid_size = 1000000;
  long samples = 0;
  long lp_grid = 16384;
  std::string format = "json";
  std::string output;
  bool asymptotic = false;
  bool two_pi = false;
};

void emit(const json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write to '" + path + "'");
  out << doc.dump(2) << "\n";
}

int cmd_coeffs(const Options& opt) {
  const Family family = sawsine::parse_family(opt.family);
  json parameters{{"family", opt.family}, {"m", opt.m}, {"format", opt.format}};

  json payload;
  std::vector<std::string> coeff_strings;
  std::string sum_str, closed_name, closed_str, bound_str;
  if (family == Family::sawtooth) {
    const auto b = sawsine::coefficients(opt.m);
    Rational sum = 0;
    for (const auto& c : b.coeffs) {
      sum += c;
      coeff_strings.push_back(sawsine::to_string(c));
    }
    sum_str = sawsine::to_string(sum);
    closed_name = "closed_form_sum";
    closed_str = sawsine::to_string(sawsine::coefficient_sum(opt.m));
    bound_str = sawsine::to_string(sawsine::bound(opt.m));
    payload = json{{"coefficients", sawsine::to_json(b)},
                   {"sum", sum_str},
                   {"closed_form_sum", closed_str},
                   {"bound", bound_str}};
  } else {
    const auto a = sawsine::sine_coefficients(opt.m);
    double sum = 0;
    for (double c : a.coeffs) {
      sum += c;
      coeff_strings.push_back(sawsine::format_real(c));
    }
    const double c = sawsine::cm(opt.m);
    sum_str = sawsine::format_real(sum);
    closed_name = "cm";
    closed_str = sawsine::format_real(c);
    bound_str = sawsine::format_real(1.0 / c);
    payload = json{{"coefficients", sawsine::to_json(a)},
                   {"sum", sum_str},
                   {"cm", closed_str},
                   {"bound", bound_str}};
  }

  if (opt.format == "json") {
    emit(sawsine::make_envelope("coeffs", parameters, payload), opt.output);
  } else if (opt.format == "csv") {
    std::string text = "k,coefficient\n";
    for (std::size_t k = 0; k < coeff_strings.size(); ++k)
      text += std::to_string(k + 1) + "," + coeff_strings[k] + "\n";
    text += "sum," + sum_str + "\n";
    text += (family == Family::sawtooth ? "bound," + bound_str : "cm," + closed_str) + "\n";
    if (opt.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(opt.output, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot write to '" + opt.output + "'");
      out << text;
    }
  } else {  // text
    const char* letter = family == Family::sawtooth ? "b" : "a";
    std::cout << "family: " << opt.family << "\nm: " << opt.m << "\n";
    for (std::size_t k = 0; k < coeff_strings.size(); ++k)
      std::cout << letter << "[" << (k + 1) << "] = " << coeff_strings[k] << "\n";
    std::cout << "sum = " << sum_str << "\n" << closed_name << " = " << closed_str << "\n";
    if (family == Family::sawtooth) std::cout << "bound = " << bound_str << "\n";
  }
  return 0;
}

int cmd_verify(const Options& opt, bool grid_size_given) {
  const Family family = sawsine::parse_family(opt.family);
  if (family == Family::sawtooth) {
    if (grid_size_given)
      throw std::invalid_argument("--grid-size applies to the sine family only (sawtooth is exact)");
    const auto cert = sawsine::verify_exact(sawsine::coefficients(opt.m));
    json parameters{{"family", opt.family}, {"m", opt.m}, {"exact", true}};
    emit(sawsine::make_envelope("verify", parameters, sawsine::to_json(cert)), "");
    return cert.passed ? 0 : 1;
  }
  if (opt.exact) throw std::invalid_argument("--exact applies to the sawtooth family only");
  const auto cert = sawsine::verify_sine(opt.m, opt.grid_size);
  json parameters{{"family", opt.family}, {"m", opt.m}, {"grid_size", opt.grid_size}};
  emit(sawsine::make_envelope("verify", parameters, sawsine::to_json(cert)), "");
  return cert.passed ? 0 : 1;
}

int cmd_measure(const Options& opt) {
  const Family family = sawsine::parse_family(opt.family);
  json parameters{{"family", opt.family}, {"m", opt.m}};
  json payload;
  if (family == Family::sawtooth) {
    const auto mu = sawsine::extremal_measure(opt.m);
    json exps = json::array();
    for (int k = 1; k <= opt.m; ++k)
      exps.push_back(json{{"k", k}, {"value", sawsine::to_string(sawsine::expectation(mu, k))}});
    payload = json{{"measure", sawsine::to_json(mu)},
                   {"expectations", std::move(exps)},
                   {"bound", sawsine::to_string(sawsine::bound(opt.m))}};
  } else {
    const auto mu = sawsine::sine_extremal_measure(opt.m);
    json exps = json::array();
    for (int k = 1; k <= opt.m; ++k)
      exps.push_back(json{{"k", k}, {"value", sawsine::format_real(sawsine::sine_expectation(mu, k))}});
    payload = json{{"measure", sawsine::to_json(mu)},
                   {"expectations", std::move(exps)},
                   {"bound", sawsine::format_real(1.0 / sawsine::cm(opt.m))}};
  }
  emit(sawsine::make_envelope("measure", parameters, payload), "");
  return 0;
}

int cmd_cm(const Options& opt) {
  const double c = sawsine::cm(opt.m);
  json parameters{{"m", opt.m}, {"asymptotic", opt.asymptotic}};
  json payload{{"cm", sawsine::format_real(c)}, {"inverse", sawsine::format_real(1.0 / c)}};
  if (opt.asymptotic) {
    const double a = sawsine::cm_asymptotic(opt.m);
    payload["asymptotic"] = sawsine::format_real(a);
    payload["residual"] = sawsine::format_real(c - a);
  }
  emit(sawsine::make_envelope("cm", parameters, payload), "");
  return 0;
}

int cmd_lp_check(const Options& opt) {
  const Family family = sawsine::parse_family(opt.family);
  if (family == Family::sawtooth) {
    const auto rep = sawsine::duality_cross_check_sawtooth(opt.m);
    json parameters{{"family", opt.family}, {"m", opt.m}};
    emit(sawsine::make_envelope("lp-check", parameters, sawsine::to_json(rep)), "");
    return rep.passed() ? 0 : 1;
  }
  const auto rep = sawsine::duality_cross_check_sine(opt.m, opt.lp_grid);
  json parameters{{"family", opt.family}, {"m", opt.m}, {"grid", opt.lp_grid}};
  emit(sawsine::make_envelope("lp-check", parameters, sawsine::to_json(rep)), "");
  return rep.passed() ? 0 : 1;
}

int cmd_plot(const Options& opt) {
  const Family family = sawsine::parse_family(opt.family);
  if (opt.samples < 2) throw std::invalid_argument("plot requires --samples >= 2");
  if (opt.two_pi && family != Family::sawtooth)
    throw std::invalid_argument("--two-pi applies to the sawtooth family only");

  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write to '" + opt.output + "'");
  out << "x,f\n";

  long rows = 0;
  std::string max_str;
  if (family == Family::sawtooth) {
    const auto b = sawsine::coefficients(opt.m);
    const double xscale = opt.two_pi ? 2 * sawsine::detail::pi : 1.0;
    // sample points and jump points, merged in exact ascending order
    std::set<Rational> xs;
    for (long i = 0; i < opt.samples; ++i) xs.insert(sawsine::make_rational(i, opt.samples));
    std::set<Rational> jumps;
    for (const auto& x : sawsine::breakpoints(opt.m)) {
      xs.insert(x);
      jumps.insert(x);
    }
    Rational max_f;
    bool first = true;
    for (const auto& x : xs) {
      const Rational left = sawsine::evaluate(b, x);
      if (first || left > max_f) max_f = left;
      first = false;
      const double xd = sawsine::to_double(x) * xscale;
      out << sawsine::format_real(xd) << "," << sawsine::format_real(sawsine::to_double(left)) << "\n";
      ++rows;
      if (jumps.count(x)) {  // emit the right-hand limit as a second row
        Rational drop = 0;
        for (std::size_t k = 1; k <= b.coeffs.size(); ++k)
          if (sawsine::sawtooth_exact(Rational(static_cast<int>(k)) * x) == sawsine::make_rational(1, 2))
            drop += b.coeffs[k - 1];
        out << sawsine::format_real(xd) << ","
            << sawsine::format_real(sawsine::to_double(left - drop)) << "\n";
        ++rows;
      }
    }
    max_str = sawsine::to_string(max_f);
  } else {
    const auto a = sawsine::sine_coefficients(opt.m);
    double max_f = -1e300;
    for (long i = 0; i < opt.samples; ++i) {
      const double x = 2 * sawsine::detail::pi * static_cast<double>(i) / static_cast<double>(opt.samples);
      const double f = sawsine::evaluate_trig(a, x);
      if (f > max_f) max_f = f;
      out << sawsine::format_real(x) << "," << sawsine::format_real(f) << "\n";
      ++rows;
    }
    max_str = sawsine::format_real(max_f);
  }
  out.close();

  json parameters{{"family", opt.family}, {"m", opt.m}, {"samples", opt.samples}, {"two_pi", opt.two_pi}};
  json payload{{"output", opt.output}, {"rows", rows}, {"max_f", max_str}};
  emit(sawsine::make_envelope("plot", parameters, payload), "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal dilated sawtooth/sine combinations: construction and verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", opt.family, "sine or sawtooth")
        ->required()
        ->check(CLI::IsMember({"sine", "sawtooth"}));
  };
  auto add_m = [&](CLI::App* sub) {
    sub->add_option("-m", opt.m, "number of dilations")->required()->check(CLI::PositiveNumber);
  };

  CLI::App* coeffs = app.add_subcommand("coeffs", "emit the optimal coefficient vector");
  add_family(coeffs);
  add_m(coeffs);
  coeffs->add_option("--format", opt.format, "json, csv, or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  coeffs->add_option("-o", opt.output, "write to file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "check the inequality (exact or certified grid)");
  add_family(verify);
  add_m(verify);
  verify->add_flag("--exact", opt.exact, "exact breakpoint scan (sawtooth only; the default)");
  CLI::Option* gs = verify->add_option("--grid-size", opt.grid_size, "grid points (sine only, >= 1000)");

  CLI::App* measure = app.add_subcommand("measure", "emit the extremal measure and its expectations");
  add_family(measure);
  add_m(measure);

  CLI::App* cmcmd = app.add_subcommand("cm", "emit the sharp sine constant");
  cmcmd->add_option("-m", opt.m, "number of dilations")->required()->check(CLI::PositiveNumber);
  cmcmd->add_flag("--asymptotic", opt.asymptotic, "include the logarithmic asymptotic and residual");

  CLI::App* lp = app.add_subcommand("lp-check", "confirm optimality by primal/dual LPs");
  add_family(lp);
  add_m(lp);
  lp->add_option("--grid", opt.lp_grid, "finest sine grid (default 16384)");

  CLI::App* plot = app.add_subcommand("plot", "emit one period of f as CSV");
  add_family(plot);
  add_m(plot);
  plot->add_option("--samples", opt.samples, "sample count (>= 2)")->required();
  plot->add_option("-o", opt.output, "output CSV path")->required();
  plot->add_flag("--two-pi", opt.two_pi, "rescale sawtooth x by 2*pi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly; any parse error is usage
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(opt);
    if (verify->parsed()) return cmd_verify(opt, gs->count() > 0);
    if (measure->parsed()) return cmd_measure(opt);
    if (cmcmd->parsed()) return cmd_cm(opt);
    if (lp->parsed()) return cmd_lp_check(opt);
    if (plot->parsed()) return cmd_plot(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
