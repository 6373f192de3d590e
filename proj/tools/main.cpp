#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "drk/errors.hpp"

namespace {

constexpr int kParseExit = 2;
constexpr int kMathExit = 3;

void emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw drk::cli::ParseError("cannot write " + out_path);
  out << body;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace drk::cli;
  CLI::App app{"drk: Cowen-Douglas tools for backward shifts on de Branges-Rovnyak spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string symbol_a, symbol_b, which = "X", trunc, point, out_path;
  bool pair_flag = false;

  app.add_option("--symbol", symbol_a, "symbol spec: inline JSON or file path");
  app.add_option("--symbol-b", symbol_b, "second symbol spec");
  app.add_option("--grid-radii", cfg.grid.radii)->check(CLI::PositiveNumber);
  app.add_option("--grid-angles", cfg.grid.angles)->check(CLI::PositiveNumber);
  app.add_option("--random-points", cfg.grid.random_points)->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.grid.seed);
  app.add_option("--tol", cfg.tol_equiv, "equivalence tolerance")->check(CLI::PositiveNumber);
  app.add_option("--eps-sup", cfg.eps_sup)->check(CLI::PositiveNumber);
  app.add_option("--tau", cfg.tau, "pseudo-inverse threshold relative to ||D||")->check(CLI::PositiveNumber);
  app.add_option("--trunc", trunc, "truncation orders N[,N...]");
  app.add_option("--point", point, "base point re[,im] for verify");
  app.add_option("--out", out_path, "output path");
  auto* format = app.add_option("--format", cfg.format, "json, or csv for curvature (its default)")
                     ->check(CLI::IsMember({"json", "csv"}));

  auto* extreme = app.add_subcommand("extreme", "extreme-point test");
  auto* mate = app.add_subcommand("mate", "Pythagorean mate");
  auto* curvature = app.add_subcommand("curvature", "closed-form vs finite-difference curvature grid");
  curvature->add_option("--which", which)->check(CLI::IsMember({"X", "S"}));
  auto* equiv = app.add_subcommand("equiv", "unitary equivalence decision");
  equiv->add_option("--which", which)->check(CLI::IsMember({"X", "S"}));
  auto* adc = app.add_subcommand("adc", "angular derivative contact points");
  adc->add_flag("--pair", pair_flag, "compare with --symbol-b");
  auto* verify = app.add_subcommand("verify", "finite-section residual table");
  auto* example5 = app.add_subcommand("example5", "the (1+z)/2 vs (1-z)/2 example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseExit;
  }

  try {
    if (!trunc.empty()) cfg.trunc = parse_orders(trunc);
    if (!point.empty()) cfg.point = parse_point(point);
    const auto need = [](const std::string& text, const char* flag) {
      if (text.empty()) throw ParseError(std::string(flag) + " is required");
      return parse_symbol_spec(text);
    };
    const char w = which[0];
    drk::Json report;
    if (extreme->parsed()) {
      report = cmd_extreme(need(symbol_a, "--symbol"), cfg);
    } else if (mate->parsed()) {
      report = cmd_mate(need(symbol_a, "--symbol"), cfg);
    } else if (curvature->parsed()) {
      const auto table = cmd_curvature(need(symbol_a, "--symbol"), w, cfg);
      if (format->count() == 0) cfg.format = "csv";
      if (cfg.format == "csv") {
        emit(to_csv(table), out_path);
        return 0;
      }
      report = to_json(table, w, cfg);
    } else if (equiv->parsed()) {
      report = cmd_equiv(need(symbol_a, "--symbol"), need(symbol_b, "--symbol-b"), w, cfg);
    } else if (adc->parsed()) {
      std::optional<SymbolSpec> other;
      if (pair_flag) other = need(symbol_b, "--symbol-b");
      report = cmd_adc(need(symbol_a, "--symbol"), other, cfg);
    } else if (verify->parsed()) {
      report = cmd_verify(need(symbol_a, "--symbol"), cfg);
    } else if (example5->parsed()) {
      report = cmd_example5(cfg);
    }
    emit(report.dump(2) + "\n", out_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseExit;
  } catch (const drk::MathError& e) {
    std::cerr << "math error [" << drk::to_string(e.code()) << "]: " << e.what() << "\n";
    return kMathExit;
  }
  return 0;
}
