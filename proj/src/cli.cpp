#include "quasidim/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "quasidim/ehrhart.hpp"
#include "quasidim/errors.hpp"
#include "quasidim/json_io.hpp"
#include "quasidim/kolchin.hpp"
#include "quasidim/sigma.hpp"

namespace quasidim::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw InvalidInput(std::string("cannot parse ") + what + " '" + text + "'");
    out.push_back(v);
  }
  return out;
}

WeightVector parse_weights(const std::string& text) {
  if (trim(text).empty()) throw InvalidInput("--weights is required");
  return WeightVector(parse_int_list(text, "weights"));
}

PointSet parse_points(const std::string& text, std::size_t m) {
  std::vector<Point> points;
  std::stringstream ss(text);
  std::string tuple;
  while (std::getline(ss, tuple, ';')) {
    if (trim(tuple).empty()) continue;
    points.push_back(parse_int_list(tuple, "point"));
  }
  return PointSet(m, std::move(points));
}

Json read_json_file(const std::string& path) {
  if (path.empty()) throw InvalidInput("--file is required");
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput("invalid JSON in '" + path + "': " + e.what());
  }
}

std::string with_threshold(const QuasiPolynomialQ& f, std::int64_t threshold) {
  return format(f) + " (valid for t >= " + std::to_string(threshold) + ")";
}

void emit(std::ostream& out, OutputMode mode, const Json& json, const std::string& text) {
  if (mode == OutputMode::Json)
    out << json.dump(2) << '\n';
  else
    out << text;
}

int ehrhart_simplex(const RunConfig& c, std::ostream& out) {
  const WeightVector w = parse_weights(c.weights);
  const QuasiPolynomialQ lambda = lambda_w(w);
  std::ostringstream text;
  text << format(lambda) << '\n' << "period: " << lambda.period() << '\n';
  emit(out, c.output, Json{{"weights", w.values()}, {"quasi_polynomial", to_json(lambda)}, {"pretty", format(lambda)}},
       text.str());
  return kExitOk;
}

int ehrhart_polytope_cmd(const RunConfig& c, std::ostream& out) {
  const HPolytope p = polytope_from_json(read_json_file(c.file));
  const VertexSet v = vertices(p);
  const QuasiPolynomialQ ehrhart = quasidim::ehrhart_polytope(p, c.cap);
  const Rational vol = volume(p, v);

  std::ostringstream text;
  Json verts = Json::array();
  text << format(ehrhart) << '\n' << "vertices:";
  for (const auto& x : v.vertices) {
    text << ' ' << to_string(x);
    Json coords = Json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i) coords.push_back(x(i).str());
    verts.push_back(coords);
  }
  text << '\n'
       << "denominator: " << lattice_denominator(v) << '\n'
       << "period: " << ehrhart.period() << '\n';
  if (v.full_dimensional)
    text << "volume: " << vol << '\n';
  else
    text << "note: polytope is not full-dimensional\n";
  emit(out, c.output,
       Json{{"quasi_polynomial", to_json(ehrhart)},
            {"vertices", verts},
            {"denominator", lattice_denominator(v)},
            {"full_dimensional", v.full_dimensional},
            {"volume", vol.str()},
            {"pretty", format(ehrhart)}},
       text.str());
  return kExitOk;
}

int dimset(const RunConfig& c, std::ostream& out) {
  const WeightVector w = parse_weights(c.weights);
  const PointSet a = parse_points(c.points, w.size());
  const DimensionResult res = dimension_quasipoly(a, w);
  std::ostringstream text;
  text << with_threshold(res.chi, res.threshold) << '\n' << "antichain: " << to_string(res.antichain) << '\n';
  emit(out, c.output,
       Json{{"chi", to_json(res.chi)},
            {"threshold", res.threshold},
            {"antichain", to_json(res.antichain)},
            {"pretty", format(res.chi)}},
       text.str());
  return kExitOk;
}

int system(const RunConfig& c, std::ostream& out) {
  const SystemInput in = system_from_json(read_json_file(c.file));
  const Ranking rk(in.weights, in.indeterminates);
  std::ostringstream text;
  Json json;
  std::vector<PointSet> leaders;
  if (in.leaders) {
    leaders = *in.leaders;
  } else {
    const CharacteristicSet cs = characteristic_set(in.polynomials, rk);
    leaders = cs.leader_sets;
    Json elements = Json::array();
    text << "characteristic set:\n";
    for (const auto& g : cs.elements) {
      text << "  " << to_string(g, rk) << '\n';
      elements.push_back(to_json(g));
    }
    json["characteristic_set"] = elements;
  }
  Json sets = Json::array();
  for (std::size_t j = 0; j < leaders.size(); ++j) {
    text << "E_" << (j + 1) << ": " << to_string(leaders[j]) << '\n';
    sets.push_back(to_json(leaders[j]));
  }
  const QuasiPolynomialQ phi = dimension_quasipoly_system(leaders, in.weights);
  const std::int64_t threshold = system_threshold(leaders, in.weights);
  const std::int64_t trdeg = sigma_trdeg(phi, in.weights);
  text << "Phi: " << with_threshold(phi, threshold) << '\n'
       << "degree: " << phi.degree() << '\n'
       << "leading coefficient: " << to_string(phi.leading_coefficient()) << '\n'
       << "sigma-trdeg: " << trdeg << '\n';
  json["leader_sets"] = sets;
  json["phi"] = to_json(phi);
  json["threshold"] = threshold;
  json["degree"] = phi.degree();
  json["leading_coefficient"] = to_json(phi.leading_coefficient());
  json["sigma_trdeg"] = trdeg;
  json["pretty"] = format(phi);
  emit(out, c.output, json, text.str());
  return kExitOk;
}

int count(const RunConfig& c, std::ostream& out) {
  std::int64_t n = 0;
  const char* kind = "";
  switch (c.count_kind) {
    case CountKind::Simplex:
      kind = "simplex";
      n = count_simplex(parse_weights(c.weights), c.r);
      break;
    case CountKind::Polytope:
      kind = "polytope";
      n = count_polytope(polytope_from_json(read_json_file(c.file)), c.r, c.cap);
      break;
    case CountKind::VA: {
      kind = "va";
      const WeightVector w = parse_weights(c.weights);
      n = count_va(parse_points(c.points, w.size()), w, c.r, c.cap);
      break;
    }
    case CountKind::VARecursive: {
      kind = "va-recursive";
      const WeightVector w = parse_weights(c.weights);
      n = count_va_recursive(parse_points(c.points, w.size()), w, c.r);
      break;
    }
    case CountKind::Exact: {
      kind = "exact";
      const WeightVector w = parse_weights(c.weights);
      n = exact_count_eval(dimension_quasipoly(parse_points(c.points, w.size()), w), w, c.r);
      break;
    }
  }
  emit(out, c.output, Json{{"kind", kind}, {"r", c.r}, {"count", n}}, std::to_string(n) + "\n");
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.cap < 1) throw InvalidInput("--cap must be >= 1");
    switch (config.command) {
      case Command::EhrhartSimplex:
        return ehrhart_simplex(config, out);
      case Command::EhrhartPolytope:
        return ehrhart_polytope_cmd(config, out);
      case Command::Dimset:
        return dimset(config, out);
      case Command::System:
        return system(config, out);
      case Command::Count:
        return count(config, out);
    }
  } catch (const GuardRailExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuardRail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weighted Ehrhart and dimension quasi-polynomials", "quasidim"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--cap", config.cap, "Maximum number of lattice points a brute-force scan may visit");

  auto* simplex = app.add_subcommand("ehrhart-simplex", "Ehrhart quasi-polynomial of {x >= 0, w.x <= t}");
  simplex->add_option("--weights", config.weights, "Comma-separated positive weights")->required();

  auto* polytope = app.add_subcommand("ehrhart-polytope", "Ehrhart quasi-polynomial L(P, t) of an H-polytope");
  polytope->add_option("--file", config.file, "Polytope JSON {\"A\": [[...]], \"b\": [...]}")->required();

  auto* dim = app.add_subcommand("dimset", "Dimension quasi-polynomial of a subset of N^m");
  dim->add_option("--weights", config.weights, "Comma-separated positive weights")->required();
  dim->add_option("--points", config.points, "Semicolon-separated points, e.g. \"2,1;0,3\"");

  auto* sys = app.add_subcommand("system", "Difference dimension quasi-polynomial of a linear system");
  sys->add_option("--file", config.file, "System JSON")->required();

  auto* cnt = app.add_subcommand("count", "Brute-force counting oracles");
  cnt->require_subcommand(1);
  struct CountSpec {
    const char* name;
    const char* help;
    CountKind kind;
  };
  const CountSpec specs[] = {
      {"simplex", "Card{x in N^m : w.x <= r}", CountKind::Simplex},
      {"polytope", "Card(rP cap Z^d)", CountKind::Polytope},
      {"va", "Card V_A^(w)(r) by enumeration", CountKind::VA},
      {"va-recursive", "Card V_A^(w)(r) by the last-coordinate recursion", CountKind::VARecursive},
      {"exact", "Card V_A^(w)(r) by truncated inclusion-exclusion", CountKind::Exact},
  };
  std::vector<std::pair<CLI::App*, CountKind>> count_subs;
  for (const auto& s : specs) {
    auto* sub = cnt->add_subcommand(s.name, s.help);
    sub->add_option("--r", config.r, "Dilation / order bound")->required();
    if (s.kind == CountKind::Polytope) {
      sub->add_option("--file", config.file, "Polytope JSON")->required();
    } else {
      sub->add_option("--weights", config.weights, "Comma-separated positive weights")->required();
      if (s.kind != CountKind::Simplex) sub->add_option("--points", config.points, "Semicolon-separated points");
    }
    count_subs.emplace_back(sub, s.kind);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  config.output = json ? OutputMode::Json : OutputMode::Text;
  if (simplex->parsed()) config.command = Command::EhrhartSimplex;
  if (polytope->parsed()) config.command = Command::EhrhartPolytope;
  if (dim->parsed()) config.command = Command::Dimset;
  if (sys->parsed()) config.command = Command::System;
  if (cnt->parsed()) {
    config.command = Command::Count;
    for (const auto& [sub, kind] : count_subs)
      if (sub->parsed()) config.count_kind = kind;
  }
  return run(config, out, err);
}

}  // namespace quasidim::cli
