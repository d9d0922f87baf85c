// vcell command-line tool. Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "verify.hpp"
#include "vcell/bijections.hpp"
#include "vcell/enumerate_oracle.hpp"
#include "vcell/errors.hpp"
#include "vcell/map_io.hpp"
#include "vcell/voronoi_law.hpp"

using json = nlohmann::ordered_json;
using namespace vcell;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kFailed = 1, kInputError = 2 };

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string exact_or_float(const Rational& x) { return x.str(); }
std::string exact_or_float(double x) { return num(x); }

struct Output {
  std::string path;
  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    out << text;
  }
};

void require_exact(const std::string& backend, const std::string& command) {
  if (backend != "exact") throw ConfigError(command + " requires the exact backend");
}

void check_format(const std::string& format) {
  if (format != "csv" && format != "json") throw ConfigError("unknown format '" + format + "'");
}

// ---------------------------------------------------------------- law

struct LawArgs {
  int N = 10;
  int degree = 0;  // 0: 2N
  std::string variant = "all";
  std::string backend = "exact";
  std::string format = "csv";
};

template <Coefficient C>
std::string law_report(const LawArgs& a) {
  if (a.N < 1) throw ConfigError("--n must be at least 1");
  const Variant variant = parse_variant(a.variant);
  const int degree = a.degree > 0 ? a.degree : 2 * a.N;
  auto law = law_table(F_series<C>(degree, variant), a.N);
  auto probs = law.probabilities_double();
  auto report = uniformity_report(probs);
  const int N = a.N;

  if (a.format == "json") {
    json rows = json::array();
    for (int p = 0; p <= 2 * N; ++p) {
      rows.push_back({{"p", p},
                      {"n", p / 2.0},
                      {"weight", exact_or_float(law.weights[p])},
                      {"probability", probs[p]},
                      {"scaled_deviation", report.deviation[p]}});
    }
    json doc = {{"schema_version", kSchemaVersion},
                {"command", "law"},
                {"N", N},
                {"variant", a.variant},
                {"backend", a.backend},
                {"normalization", exact_or_float(law.normalization)},
                {"rows", rows},
                {"summary",
                 {{"window", {report.window_lo, report.window_hi}},
                  {"window_size", report.window_size},
                  {"max_deviation", report.max_deviation},
                  {"mean_deviation", report.mean_deviation}}}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# vcell law\n# schema_version=" << kSchemaVersion << "\n# N=" << N << ",variant=" << a.variant
     << ",backend=" << a.backend << ",normalization=" << exact_or_float(law.normalization) << "\n";
  os << "p,n,weight,probability,scaled_deviation\n";
  for (int p = 0; p <= 2 * N; ++p) {
    os << p << ',' << num(p / 2.0) << ',' << exact_or_float(law.weights[p]) << ',' << num(probs[p]) << ','
       << num(report.deviation[p]) << '\n';
  }
  os << "# summary: window=" << num(report.window_lo) << ":" << num(report.window_hi)
     << ",window_size=" << report.window_size << ",max_deviation=" << num(report.max_deviation)
     << ",mean_deviation=" << num(report.mean_deviation) << "\n";
  return os.str();
}

std::string run_law(const LawArgs& a) {
  check_format(a.format);
  if (a.backend == "exact") return law_report<Rational>(a);
  if (a.backend == "float") return law_report<double>(a);
  throw ConfigError("unknown backend '" + a.backend + "'");
}

// ---------------------------------------------------------------- mgf

struct MgfArgs {
  int N = 10;
  std::vector<double> mu{0.0, 1.0};
  std::string variant = "all";
  std::string backend = "exact";
  std::string format = "csv";
};

template <Coefficient C>
std::string mgf_report(const MgfArgs& a) {
  if (a.N < 1) throw ConfigError("--n must be at least 1");
  auto law = law_table(F_series<C>(2 * a.N, parse_variant(a.variant)), a.N);
  json rows = json::array();
  std::ostringstream os;
  os << "# vcell mgf\n# schema_version=" << kSchemaVersion << "\n# N=" << a.N << ",variant=" << a.variant
     << ",backend=" << a.backend << "\nmu,E_N,limit,relative_gap\n";
  for (double mu : a.mu) {
    if (!std::isfinite(mu)) throw ConfigError("mu values must be finite");
    const double e = mgf(law, mu), lim = mgf_limit(mu), gap = std::abs(e - lim) / lim;
    rows.push_back({{"mu", mu}, {"E_N", e}, {"limit", lim}, {"relative_gap", gap}});
    os << num(mu) << ',' << num(e) << ',' << num(lim) << ',' << num(gap) << '\n';
  }
  if (a.format == "csv") return os.str();
  json doc = {{"schema_version", kSchemaVersion}, {"command", "mgf"},      {"N", a.N},
              {"variant", a.variant},             {"backend", a.backend}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

std::string run_mgf(const MgfArgs& a) {
  check_format(a.format);
  if (a.backend == "exact") return mgf_report<Rational>(a);
  if (a.backend == "float") return mgf_report<double>(a);
  throw ConfigError("unknown backend '" + a.backend + "'");
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  int edges = 4;
  std::string backend = "exact";
  std::string format = "csv";
};

std::string run_oracle(const OracleArgs& a) {
  require_exact(a.backend, "oracle");
  check_format(a.format);
  if (a.edges < 1 || a.edges > kMaxOracleEdges) {
    throw ConfigError("--edges must be between 1 and " + std::to_string(kMaxOracleEdges));
  }
  std::vector<long> objects(a.edges + 1, 0);
  for (int E = 1; E <= a.edges; ++E) for_each_rooted_iltfm(E, [&](const RootedIltFM&) { ++objects[E]; });
  auto f = oracle_F(a.edges);

  if (a.format == "json") {
    json strata = json::array();
    for (const auto& t : f.terms()) {
      strata.push_back({{"u_power", t.i}, {"v_power", t.j}, {"area", (t.i + t.j) / 2}, {"weight", t.c.str()}});
    }
    json doc = {{"schema_version", kSchemaVersion}, {"command", "oracle"}, {"edges", a.edges},
                {"rooted_objects", json(std::vector<long>(objects.begin() + 1, objects.end()))},
                {"coefficients", strata}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# vcell oracle\n# schema_version=" << kSchemaVersion << "\n# edges=" << a.edges << "\n";
  for (int E = 1; E <= a.edges; ++E) os << "# rooted_objects[" << E << "]=" << objects[E] << "\n";
  os << "u_power,v_power,area,weight\n";
  for (const auto& t : f.terms()) os << t.i << ',' << t.j << ',' << (t.i + t.j) / 2 << ',' << t.c.str() << '\n';
  return os.str();
}

// ---------------------------------------------------------------- bijection

struct BijectionArgs {
  std::string demo;
  std::string input;
  bool round_trip = false;
};

class InvalidMap : public std::runtime_error {
 public:
  explicit InvalidMap(std::vector<std::string> issues)
      : std::runtime_error("invalid map"), issues(std::move(issues)) {}
  std::vector<std::string> issues;
};

json doc_json(const MapDocument& d) { return json::parse(serialize_map(d)); }

std::string run_bijection(const BijectionArgs& a) {
  if (a.demo.empty() == a.input.empty()) throw ConfigError("give exactly one of --demo or --input");
  BipointedQuad quad;
  std::string source;
  bool from_quad = true;
  std::optional<IltFM> given;
  if (!a.demo.empty()) {
    if (a.demo != "path3") throw ConfigError("unknown demo '" + a.demo + "'");
    quad = demo_path3();
    source = "demo:path3";
  } else {
    std::ifstream in(a.input, std::ios::binary);
    if (!in) throw ConfigError("cannot read '" + a.input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    auto doc = parse_map(buf.str());
    source = a.input;
    if (doc.kind == "quad") {
      quad = quad_from_document(doc);
    } else if (doc.kind == "iltfm") {
      from_quad = false;
      given = iltfm_from_document(doc);
    } else {
      throw FormatError("bijection input must be of kind quad or iltfm, got '" + doc.kind + "'");
    }
  }

  IltFM iltfm;
  if (from_quad) {
    if (auto issues = validate(quad); !issues.empty()) throw InvalidMap(issues);
    quad = label_bipointed(quad);
    iltfm = miermont_forward(quad);
  } else {
    if (auto issues = validate(*given); !issues.empty()) throw InvalidMap(issues);
    iltfm = *given;
    quad = miermont_inverse(iltfm);
  }
  auto ab = ambjorn_budd(quad);
  auto areas = voronoi_areas(iltfm);
  auto parity = parity_classify(iltfm);
  auto d1 = distances(ab.map, ab.v1);

  json doc = {{"schema_version", kSchemaVersion},
              {"command", "bijection"},
              {"source", source},
              {"quad", doc_json(to_document(quad))},
              {"iltfm", doc_json(to_document(iltfm))},
              {"ab_image", doc_json(to_document(ab))},
              {"labels", quad.map.labels()},
              {"areas", {{"area1", areas.area1.str()}, {"area2", areas.area2.str()}}},
              {"parity", {{"odd", parity.odd}, {"s", parity.s}, {"ab_distance", d1[ab.v2]}}}};
  if (a.round_trip) {
    const bool identity = from_quad ? canonical_code(miermont_inverse(iltfm)) == canonical_code(quad)
                                    : canonical_code(miermont_forward(quad)) == canonical_code(iltfm);
    doc["round_trip"] = {{"direction", from_quad ? "quad->iltfm->quad" : "iltfm->quad->iltfm"},
                         {"identity", identity}};
    if (!identity) {
      std::cout << doc.dump(2) << "\n";
      throw InvariantViolation("round trip is not the identity");
    }
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  cli::VerifyParams params;
  std::string backend = "exact";
};

int run_verify(const std::string& target, const VerifyArgs& a, const Output& out) {
  require_exact(a.backend, "verify");
  const auto& p = a.params;
  if (p.edges < 1 || p.edges > kMaxOracleEdges) {
    throw ConfigError("--edges must be between 1 and " + std::to_string(kMaxOracleEdges));
  }
  json report;
  if (target == "recursions") report = cli::verify_recursions(p);
  else if (target == "closed-forms") report = cli::verify_closed_forms(p);
  else if (target == "oracle") report = cli::verify_oracle(p);
  else if (target == "parity") report = cli::verify_parity(p);
  else if (target == "bijections") report = cli::verify_bijections(p);
  else report = cli::verify_scaling(p);
  json doc = {{"schema_version", kSchemaVersion}, {"command", "verify"}};
  doc.update(report);
  out.write(doc.dump(2) + "\n");
  return doc["pass"].get<bool>() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vcell: Voronoi cell laws of bi-pointed planar quadrangulations"};
  app.require_subcommand(1);
  Output out;

  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", out.path, "Output file (default stdout)"); };

  LawArgs law;
  auto* law_cmd = app.add_subcommand("law", "Law of the second cell area at fixed N");
  law_cmd->add_option("--n", law.N, "Total area N")->required();
  law_cmd->add_option("--degree", law.degree, "Truncation degree of F (default 2N)");
  law_cmd->add_option("--variant", law.variant, "all, even or odd");
  law_cmd->add_option("--backend", law.backend, "exact or float");
  law_cmd->add_option("--format", law.format, "csv or json");
  add_output(law_cmd);

  MgfArgs mg;
  auto* mgf_cmd = app.add_subcommand("mgf", "Moment generating function against its limit");
  mgf_cmd->add_option("--n", mg.N, "Total area N")->required();
  mgf_cmd->add_option("--mu", mg.mu, "Comma-separated list of mu values")->delimiter(',');
  mgf_cmd->add_option("--variant", mg.variant, "all, even or odd");
  mgf_cmd->add_option("--backend", mg.backend, "exact or float");
  mgf_cmd->add_option("--format", mg.format, "csv or json");
  add_output(mgf_cmd);

  OracleArgs orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force enumeration of rooted maps");
  oracle_cmd->add_option("--edges", orc.edges, "Largest number of edges");
  oracle_cmd->add_option("--backend", orc.backend, "must be exact");
  oracle_cmd->add_option("--format", orc.format, "csv or json");
  add_output(oracle_cmd);

  BijectionArgs bij;
  auto* bij_cmd = app.add_subcommand("bijection", "Run the bijections on one map");
  bij_cmd->add_option("--demo", bij.demo, "Built-in example: path3");
  bij_cmd->add_option("--input", bij.input, "Map file (quad or iltfm)");
  bij_cmd->add_flag("--round-trip", bij.round_trip, "Check that the inverse bijection restores the input");
  add_output(bij_cmd);

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant checks and emit a JSON report");
  verify_cmd->require_subcommand(1);
  verify_cmd->add_option("--backend", ver.backend, "must be exact");
  add_output(verify_cmd);
  std::string target;
  auto& vp = ver.params;
  auto target_cmd = [&](const char* name, const char* help) {
    auto* c = verify_cmd->add_subcommand(name, help);
    c->callback([&target, name] { target = name; });
    c->add_option("--backend", ver.backend, "must be exact");
    add_output(c);
    return c;
  };
  auto* v_rec = target_cmd("recursions", "R and X recursions");
  v_rec->add_option("--order", vp.order, "Truncation order K");
  v_rec->add_option("--smax", vp.s_max, "Label levels (must exceed the order)");
  auto* v_cf = target_cmd("closed-forms", "Closed forms of R and X at g=h");
  v_cf->add_option("--r-order", vp.r_order, "Order for R");
  v_cf->add_option("--x-order", vp.x_order, "Order for X");
  v_cf->add_option("--srange", vp.s_range, "Largest label compared");
  auto* v_or = target_cmd("oracle", "Oracle against the series");
  v_or->add_option("--edges", vp.edges, "Largest number of edges");
  auto* v_par = target_cmd("parity", "Parity split");
  v_par->add_option("--degree", vp.degree, "Total degree of the sum check");
  v_par->add_option("--edges", vp.edges, "Largest number of edges for the oracle split");
  auto* v_bij = target_cmd("bijections", "Bijection round trips");
  v_bij->add_option("--edges", vp.edges, "Largest number of edges");
  auto* v_sc = target_cmd("scaling", "Scaling-function suite");
  v_sc->add_option("--grid", vp.grid, "Grid name (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*law_cmd) out.write(run_law(law));
    else if (*mgf_cmd) out.write(run_mgf(mg));
    else if (*oracle_cmd) out.write(run_oracle(orc));
    else if (*bij_cmd) out.write(run_bijection(bij));
    else if (*verify_cmd) return run_verify(target, ver, out);
    return kOk;
  } catch (const InvalidMap& e) {
    std::cerr << "error: invalid map\n";
    for (const auto& issue : e.issues) std::cerr << "  " << issue << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
