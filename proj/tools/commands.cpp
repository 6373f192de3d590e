#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "drk/errors.hpp"
#include "drk/kernels.hpp"

namespace drk::cli {

Tolerances RunConfig::tolerances() const {
  Tolerances t = default_tolerances();
  t.sup = eps_sup;
  t.root = eps_root;
  return t;
}

Json RunConfig::to_json() const {
  return {{"tolerances", {{"eps_sup", eps_sup}, {"eps_root", eps_root}, {"tol_equiv", tol_equiv}, {"tau", tau}}},
          {"grid",
           {{"radii", grid.radii},
            {"angles", grid.angles},
            {"random_points", grid.random_points},
            {"seed", grid.seed},
            {"max_radius", grid.max_radius}}},
          {"trunc", trunc},
          {"format", format},
          {"point", drk::to_json(point)}};
}

namespace {

Json read_json_text(const std::string& text) {
  std::string body = text;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty symbol spec");
  if (text[first] != '{' && text[first] != '[') {
    std::ifstream in(text);
    if (!in) throw ParseError("cannot open " + text);
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<Complex> read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open samples file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string body = ss.str();
  std::vector<Complex> out;
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && body[first] == '[') {
    try {
      for (const auto& e : Json::parse(body)) out.push_back(complex_from_json(e));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("invalid samples file: ") + e.what());
    } catch (const MathError& e) {
      throw ParseError(e.what());
    }
    return out;
  }
  std::istringstream lines(body);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    double re = 0.0, im = 0.0;
    if (!(ls >> re)) throw ParseError("bad sample line: " + line);
    ls >> im;
    out.emplace_back(re, im);
  }
  return out;
}

double coeff_distance(const Poly& a, const Poly& b) {
  const int n = std::max(a.degree(), b.degree());
  double d = 0.0;
  for (int k = 0; k <= n; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

double rational_distance(const RationalFunction& f, const Poly& num, const Poly& den) {
  return std::max(coeff_distance(f.num(), num), coeff_distance(f.den(), den));
}

Json check(const std::string& name, bool passed, Json detail) {
  return {{"name", name}, {"passed", passed}, {"detail", std::move(detail)}};
}

Json envelope(const std::string& command, const RunConfig& cfg) {
  return {{"command", command}, {"config", cfg.to_json()}};
}

}  // namespace

SymbolSpec parse_symbol_spec(const std::string& text) {
  const Json j = read_json_text(text);
  SymbolSpec spec;
  spec.source = j;
  if (!j.is_object()) throw ParseError("symbol spec must be a JSON object");
  spec.label = j.value("label", std::string{});
  try {
    if (j.contains("num")) {
      spec.symbol = rational_from_json(j);
    } else if (j.contains("samples_file")) {
      auto values = read_samples(j.at("samples_file").get<std::string>());
      if (j.contains("M") && j.at("M").get<std::size_t>() != values.size())
        throw ParseError("samples file length does not match M");
      spec.symbol = SampledSymbol::from_values(std::move(values));
    } else {
      throw ParseError("symbol spec needs num/den or samples_file");
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad symbol spec: ") + e.what());
  } catch (const MathError& e) {
    throw ParseError(std::string("bad symbol spec: ") + e.what());
  }
  if (spec.label.empty()) spec.label = j.dump();
  return spec;
}

RationalSymbol rational_symbol(const SymbolSpec& spec, const RunConfig& cfg) {
  const auto* f = std::get_if<RationalFunction>(&spec.symbol);
  if (!f) throw ParseError("this command needs a rational symbol {num, den}");
  return RationalSymbol::make(*f, cfg.tolerances());
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(item, &used);
      if (used != item.size() || n < 2) throw std::invalid_argument(item);
      out.push_back(n);
    } catch (const std::exception&) {
      throw ParseError("bad truncation order: " + item);
    }
  }
  if (out.empty()) throw ParseError("empty truncation list");
  return out;
}

Complex parse_point(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw ParseError("bad point: " + text);
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw ParseError("bad point: " + text);
  }
  return {re, im};
}

Json cmd_extreme(const SymbolSpec& spec, const RunConfig& cfg) {
  Json out = envelope("extreme", cfg);
  out["symbol"] = spec.source;
  ExtremeVerdict v;
  if (const auto* s = std::get_if<SampledSymbol>(&spec.symbol))
    v = extreme_test(*s, cfg.tolerances());
  else
    v = extreme_test(rational_symbol(spec, cfg), cfg.tolerances());
  out.update(to_json(v));
  return out;
}

Json cmd_mate(const SymbolSpec& spec, const RunConfig& cfg) {
  Json out = envelope("mate", cfg);
  out.update(to_json(mate(rational_symbol(spec, cfg), cfg.tolerances())));
  return out;
}

Json cmd_equiv(const SymbolSpec& a, const SymbolSpec& b, char which, const RunConfig& cfg) {
  const auto tol = cfg.tolerances();
  const RationalSymbol b1 = rational_symbol(a, cfg);
  const RationalSymbol b2 = rational_symbol(b, cfg);
  EquivalenceReport r = which == 'X' ? decide_equiv_X(mate(b1, tol), mate(b2, tol), cfg.grid, cfg.tol_equiv)
                                     : decide_equiv_S(b1, b2, cfg.grid, cfg.tol_equiv);
  r.first = a.label;
  r.second = b.label;
  Json out = envelope("equiv", cfg);
  out["which"] = std::string(1, which);
  out["first"] = a.source;
  out["second"] = b.source;
  out.update(to_json(r));
  return out;
}

Json cmd_adc(const SymbolSpec& spec, const std::optional<SymbolSpec>& pair, const RunConfig& cfg) {
  const auto tol = cfg.tolerances();
  const RationalSymbol b = rational_symbol(spec, cfg);
  Json out = envelope("adc", cfg);
  out["points"] = to_json(adc_points(b, tol));
  if (pair) {
    const RationalSymbol b2 = rational_symbol(*pair, cfg);
    out["points_b"] = to_json(adc_points(b2, tol));
    out["same_adc"] = same_adc(b, b2, tol);
  }
  return out;
}

Json cmd_verify(const SymbolSpec& spec, const RunConfig& cfg) {
  const RationalSymbol b = rational_symbol(spec, cfg);
  const DiskPoint w(cfg.point);
  const auto table = residual_table(b, cfg.trunc, w, 10, cfg.grid.seed);
  const DefectModel top = DefectModel::build(b, cfg.trunc.back(), cfg.tau);
  Json out = envelope("verify", cfg);
  out["symbol"] = spec.source;
  out["model"] = model_summary(top, table);
  std::vector<double> rep, adj, orth, rec;
  for (const auto& r : table) {
    rep.push_back(r.reproducing);
    adj.push_back(r.adjoint);
    orth.push_back(r.range_orthogonality);
    rec.push_back(r.range_reconstruction);
  }
  out["non_increasing"] = {{"reproducing", non_increasing(rep)},
                           {"adjoint", non_increasing(adj)},
                           {"range_orthogonality", non_increasing(orth)},
                           {"range_reconstruction", non_increasing(rec)}};
  out["norm_kb_sq"] = norm_kb_sq(b, w);
  return out;
}

CurvatureTable cmd_curvature(const SymbolSpec& spec, char which, const RunConfig& cfg) {
  const RationalSymbol b = rational_symbol(spec, cfg);
  std::optional<PythagoreanPair> pair;
  if (which == 'X') pair = mate(b, cfg.tolerances());
  CurvatureTable t;
  for (Complex w : cfg.grid.points()) {
    try {
      const DiskPoint p(w);
      double closed = 0.0, fd = 0.0;
      if (pair) {
        closed = curv_X(*pair, p);
        fd = fd_curvature([&](Complex z) { return std::log(norm_cauchy_sq(*pair, DiskPoint(z))); }, p);
      } else {
        closed = curv_S(b, p);
        fd = fd_curvature([&](Complex z) { return std::log(norm_kb_sq(b, DiskPoint(z))); }, p);
      }
      t.rows.push_back({w, closed, fd, std::abs(closed - fd)});
    } catch (const MathError&) {
      ++t.skipped;
    }
  }
  return t;
}

std::string to_csv(const CurvatureTable& t) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "re,im,closed_form,finite_difference,abs_err\r\n";
  for (const auto& r : t.rows)
    out << r.w.real() << ',' << r.w.imag() << ',' << r.closed_form << ',' << r.finite_difference << ','
        << r.abs_err << "\r\n";
  return out.str();
}

Json to_json(const CurvatureTable& t, char which, const RunConfig& cfg) {
  Json out = envelope("curvature", cfg);
  out["which"] = std::string(1, which);
  out["skipped"] = t.skipped;
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"w", drk::to_json(r.w)},
                    {"closed_form", r.closed_form},
                    {"finite_difference", r.finite_difference},
                    {"abs_err", r.abs_err}});
  out["rows"] = rows;
  return out;
}

Json cmd_example5(const RunConfig& cfg) {
  const auto tol = cfg.tolerances();
  const RationalSymbol b1 = RationalSymbol::make(Poly{0.5, 0.5}, Poly{1.0}, tol);
  const RationalSymbol b2 = RationalSymbol::make(Poly{0.5, -0.5}, Poly{1.0}, tol);
  const PythagoreanPair p1 = mate(b1, tol);
  const PythagoreanPair p2 = mate(b2, tol);

  Json checks = Json::array();
  const double e1 = coeff_distance(p1.a.num(), Poly{0.5, -0.5}) + coeff_distance(p1.a.den(), Poly{1.0});
  const double e2 = coeff_distance(p2.a.num(), Poly{0.5, 0.5}) + coeff_distance(p2.a.den(), Poly{1.0});
  checks.push_back(check("mate_b1", e1 <= 1e-10, {{"coefficient_error", e1}}));
  checks.push_back(check("mate_b2", e2 <= 1e-10, {{"coefficient_error", e2}}));
  const double f1 = rational_distance(p1.phi, Poly{1.0, 1.0}, Poly{1.0, -1.0});
  const double f2 = rational_distance(p2.phi, Poly{1.0, -1.0}, Poly{1.0, 1.0});
  checks.push_back(check("phi_b1", f1 <= 1e-10, {{"coefficient_error", f1}}));
  checks.push_back(check("phi_b2", f2 <= 1e-10, {{"coefficient_error", f2}}));

  double inv_err = 0.0;
  for (Complex w : cfg.grid.points()) {
    const double expect = 1.0 / (1.0 + std::norm(w));
    inv_err = std::max({inv_err, std::abs(inv_X(p1, DiskPoint(w)) - expect),
                        std::abs(inv_X(p2, DiskPoint(w)) - expect)});
  }
  checks.push_back(check("inv_X_identity", inv_err <= 1e-12, {{"max_error", inv_err}}));

  const EquivalenceReport rx = decide_equiv_X(p1, p2, cfg.grid, cfg.tol_equiv);
  const EquivalenceReport rs = decide_equiv_S(b1, b2, cfg.grid, cfg.tol_equiv);
  checks.push_back(check("equiv_X", rx.verdict == Verdict::Equivalent, to_json(rx)));
  checks.push_back(check("equiv_S", rs.verdict == Verdict::NotEquivalent && rs.max_discrepancy >= 0.3,
                         to_json(rs)));
  const double s1 = inv_S(b1, DiskPoint(0.5));
  const double s2 = inv_S(b2, DiskPoint(0.5));
  checks.push_back(check("inv_S_at_half", std::abs(s1 - 8.0 / 7.0) <= 1e-12 && std::abs(s2 - 8.0 / 15.0) <= 1e-12,
                         {{"b1", s1}, {"b2", s2}}));

  const SpaceEqualityVerdict sv = space_equality_necessary(b1, b2, tol);
  checks.push_back(check("space_equal", !sv.may_be_equal, {{"a1_over_a2", to_json(sv.a1_over_a2)}}));

  const auto adc1 = adc_points(b1, tol);
  const auto adc2 = adc_points(b2, tol);
  const auto single = [](const std::vector<AdcPoint>& v, Complex zeta) {
    return v.size() == 1 && std::abs(v[0].zeta - zeta) <= 1e-8 && std::abs(v[0].c - 0.5) <= 1e-8;
  };
  checks.push_back(check("adc", single(adc1, 1.0) && single(adc2, -1.0),
                         {{"b1", to_json(adc1)}, {"b2", to_json(adc2)}}));

  bool all = true;
  for (const auto& c : checks) all = all && c.at("passed").get<bool>();
  Json out = envelope("example5", cfg);
  out["equiv_X"] = to_string(rx.verdict);
  out["equiv_S"] = to_string(rs.verdict);
  out["space_equal"] = sv.may_be_equal ? "may_be_equal" : "not_equal";
  out["adc"] = {{"b1", to_json(adc1)}, {"b2", to_json(adc2)}};
  out["checks"] = checks;
  out["all_passed"] = all;
  return out;
}

}  // namespace drk::cli
