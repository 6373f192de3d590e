#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "drk/serialize.hpp"

namespace drk::cli {

/// Malformed input: bad JSON, missing fields, unreadable files. Exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double eps_sup = 1e-10;
  double eps_root = 1e-8;
  double tol_equiv = kDefaultEquivalenceTolerance;
  double tau = 1e-10;
  EquivalenceGrid grid;
  std::vector<int> trunc{32, 64, 128};
  std::string format = "json";
  Complex point{0.5, 0.0};

  Tolerances tolerances() const;
  Json to_json() const;
};

struct SymbolSpec {
  std::string label;
  std::variant<RationalFunction, SampledSymbol> symbol;
  Json source;
};

/// Text is either inline JSON or a path to a JSON file.
SymbolSpec parse_symbol_spec(const std::string& text);
RationalSymbol rational_symbol(const SymbolSpec& spec, const RunConfig& cfg);
std::vector<int> parse_orders(const std::string& text);
Complex parse_point(const std::string& text);

Json cmd_extreme(const SymbolSpec& spec, const RunConfig& cfg);
Json cmd_mate(const SymbolSpec& spec, const RunConfig& cfg);
Json cmd_equiv(const SymbolSpec& a, const SymbolSpec& b, char which, const RunConfig& cfg);
Json cmd_adc(const SymbolSpec& spec, const std::optional<SymbolSpec>& pair, const RunConfig& cfg);
Json cmd_verify(const SymbolSpec& spec, const RunConfig& cfg);
Json cmd_example5(const RunConfig& cfg);

struct CurvatureRow {
  Complex w;
  double closed_form;
  double finite_difference;
  double abs_err;
};
struct CurvatureTable {
  std::vector<CurvatureRow> rows;
  int skipped = 0;
};
CurvatureTable cmd_curvature(const SymbolSpec& spec, char which, const RunConfig& cfg);
std::string to_csv(const CurvatureTable& t);
Json to_json(const CurvatureTable& t, char which, const RunConfig& cfg);

}  // namespace drk::cli
