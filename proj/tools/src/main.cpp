#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using powertower::cli::CommandResult;
using powertower::cli::Format;

// Shared --format/--output state for one subcommand.
struct OutputOpts {
  std::string format = "text";
  std::string output;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json", "latex"}))
        ->capture_default_str();
    cmd->add_option("--output", output, "Write output to this file instead of stdout");
  }

  Format parsed() const { return powertower::cli::parse_format(format); }
};

// Renders the result to the chosen sink. A failed file write is a
// usage-level problem (exit 2), never a mathematical failure.
int deliver(const CommandResult& result, const std::string& output_path) {
  if (!result.err.empty()) std::cerr << result.err;
  if (result.exit_code == 2) return 2;
  if (output_path.empty()) {
    std::cout << result.out;
    return result.exit_code;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << output_path << " for writing\n";
    return 2;
  }
  out << result.out;
  out.flush();
  if (!out) {
    std::cerr << "error: short write to " << output_path << "\n";
    return 2;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact derivatives, polynomial families, and Taylor expansions of x^x"};
  app.require_subcommand(1);

  // omega
  int omega_max_a = 9;
  OutputOpts omega_opts;
  CLI::App* omega = app.add_subcommand("omega", "Print the omega-number triangle");
  omega->add_option("--max-a", omega_max_a, "Last row of the triangle")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  omega_opts.attach(omega);

  // sums
  int sums_i = 0;
  int sums_n_max = 20;
  OutputOpts sums_opts;
  CLI::App* sums = app.add_subcommand("sums", "Print partial sums S_i(n) of an omega column");
  sums->add_option("--i", sums_i, "Column index i")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sums->add_option("--n-max", sums_n_max, "Largest n")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sums_opts.attach(sums);

  // rencontres
  int ren_max_n = 9;
  OutputOpts ren_opts;
  CLI::App* ren = app.add_subcommand("rencontres", "Print the rencontres-number triangle");
  ren->add_option("--max-n", ren_max_n, "Last row of the triangle")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  ren_opts.attach(ren);

  // poly
  std::string poly_family = "P";
  int poly_n = 1;
  OutputOpts poly_opts;
  CLI::App* poly = app.add_subcommand("poly", "Print one polynomial of the P or Q family");
  poly->add_option("--family", poly_family, "Family (P or Q)")
      ->check(CLI::IsMember({"P", "Q"}))
      ->capture_default_str();
  poly->add_option("--n", poly_n, "Index within the family")
      ->check(CLI::NonNegativeNumber)
      ->required();
  poly_opts.attach(poly);

  // derivative
  int der_n = 1;
  double der_x = 0.0;
  bool der_symbolic = false;
  OutputOpts der_opts;
  CLI::App* der = app.add_subcommand("derivative", "n-th derivative of x^x, symbolic or at a point");
  der->add_option("--n", der_n, "Derivative order")
      ->check(CLI::NonNegativeNumber)
      ->required();
  CLI::Option* der_x_opt = der->add_option("--x", der_x, "Evaluation point (> 0)");
  der->add_flag("--symbolic", der_symbolic, "Print the symbolic form instead of evaluating");
  der_opts.attach(der);

  // series
  std::string ser_anchor = "1";
  int ser_order = 10;
  std::vector<double> ser_eval;
  std::vector<int> ser_checkpoints;
  OutputOpts ser_opts;
  CLI::App* ser = app.add_subcommand("series", "Taylor expansion of x^x about an anchor");
  ser->add_option("--anchor", ser_anchor, "Expansion point; the literal 1 is exact")
      ->capture_default_str();
  ser->add_option("--order", ser_order, "Truncation order")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  ser->add_option("--eval", ser_eval, "Points to evaluate the partial sums at");
  ser->add_option("--checkpoints", ser_checkpoints, "Partial-sum orders to report");
  ser_opts.attach(ser);

  // verify
  std::string verify_suite = "all";
  OutputOpts verify_opts;
  CLI::App* ver = app.add_subcommand("verify", "Run the identity suites");
  ver->add_option("suite", verify_suite, "all or one of omega, sums, rencontres, poly, delta, derivative, series")
      ->check(CLI::IsMember(
          {"all", "omega", "sums", "rencontres", "poly", "delta", "derivative", "series"}))
      ->capture_default_str();
  verify_opts.attach(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // every parse problem is a usage error
  }

  try {
    if (omega->parsed()) {
      return deliver(powertower::cli::cmd_omega(omega_max_a, omega_opts.parsed()),
                     omega_opts.output);
    }
    if (sums->parsed()) {
      return deliver(powertower::cli::cmd_sums(sums_i, sums_n_max, sums_opts.parsed()),
                     sums_opts.output);
    }
    if (ren->parsed()) {
      return deliver(powertower::cli::cmd_rencontres(ren_max_n, ren_opts.parsed()),
                     ren_opts.output);
    }
    if (poly->parsed()) {
      return deliver(powertower::cli::cmd_poly(poly_family[0], poly_n, poly_opts.parsed()),
                     poly_opts.output);
    }
    if (der->parsed()) {
      if (!der_symbolic && der_x_opt->count() == 0) {
        std::cerr << "error: derivative needs --x or --symbolic\n";
        return 2;
      }
      return deliver(
          powertower::cli::cmd_derivative(der_n, der_x, der_symbolic, der_opts.parsed()),
          der_opts.output);
    }
    if (ser->parsed()) {
      return deliver(powertower::cli::cmd_series(ser_anchor, ser_order, ser_eval,
                                                 ser_checkpoints, ser_opts.parsed()),
                     ser_opts.output);
    }
    if (ver->parsed()) {
      return deliver(powertower::cli::cmd_verify(verify_suite, verify_opts.parsed()),
                     verify_opts.output);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
