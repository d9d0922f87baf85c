#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vcell/bijections.hpp"
#include "vcell/enumerate_oracle.hpp"
#include "vcell/errors.hpp"
#include "vcell/map_io.hpp"
#include "vcell/recursions.hpp"
#include "vcell/scaling.hpp"
#include "vcell/voronoi_law.hpp"

namespace py = pybind11;
using namespace vcell;

namespace {

// Exact rationals cross the boundary as "p/q" strings; the Python side makes Fractions.
std::vector<std::string> uni_strings(const UniSeries& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coefficients()) out.push_back(c.str());
  return out;
}

std::map<std::pair<int, int>, std::string> bi_strings(const BiSeries& f) {
  std::map<std::pair<int, int>, std::string> out;
  for (const auto& t : f.terms()) out[{t.i, t.j}] = t.c.str();
  return out;
}

py::dict law_dict(int N, const std::string& variant, const std::string& backend) {
  const Variant v = parse_variant(variant);
  py::dict d;
  d["N"] = N;
  d["variant"] = variant;
  if (backend == "exact") {
    auto law = law_table(F_series<Rational>(2 * N, v), N);
    std::vector<std::string> w;
    for (const auto& x : law.weights) w.push_back(x.str());
    d["weights"] = w;
    d["normalization"] = law.normalization.str();
    d["probabilities"] = law.probabilities_double();
  } else if (backend == "float") {
    auto law = law_table(F_series<double>(2 * N, v), N);
    d["weights"] = law.weights;
    d["normalization"] = law.normalization;
    d["probabilities"] = law.probabilities_double();
  } else {
    throw ConfigError("unknown backend '" + backend + "'");
  }
  return d;
}

py::dict bijection_dict(const std::string& text) {
  auto doc = parse_map(text);
  BipointedQuad quad;
  IltFM iltfm;
  std::vector<std::string> issues;
  if (doc.kind == "quad") {
    quad = quad_from_document(doc);
    issues = validate(quad);
    if (issues.empty()) {
      quad = label_bipointed(quad);
      iltfm = miermont_forward(quad);
    }
  } else if (doc.kind == "iltfm") {
    iltfm = iltfm_from_document(doc);
    issues = validate(iltfm);
    if (issues.empty()) quad = miermont_inverse(iltfm);
  } else {
    throw FormatError("expected a map of kind quad or iltfm, got '" + doc.kind + "'");
  }
  py::dict d;
  d["issues"] = issues;
  if (!issues.empty()) return d;
  auto areas = voronoi_areas(iltfm);
  auto parity = parity_classify(iltfm);
  d["quad"] = serialize_map(to_document(quad));
  d["iltfm"] = serialize_map(to_document(iltfm));
  d["ab_image"] = serialize_map(to_document(ambjorn_budd(quad)));
  d["areas"] = std::make_pair(areas.area1.str(), areas.area2.str());
  d["odd"] = parity.odd;
  d["s"] = parity.s;
  d["identity"] = canonical_code(miermont_inverse(iltfm)) == canonical_code(quad);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact generating functions, laws and bijections for Voronoi cells of bi-pointed quadrangulations";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("r_series", [](int s, int order) { return uni_strings(solve_R<Rational>(default_s_max(order), order).at(s)); },
        py::arg("s"), py::arg("order"));
  m.def("closed_r", [](int s, int order) { return uni_strings(closed_R(s, order)); }, py::arg("s"),
        py::arg("order"));
  m.def("f_coefficients",
        [](int max_degree, const std::string& variant) {
          return bi_strings(F_series<Rational>(max_degree, parse_variant(variant)).series);
        },
        py::arg("max_degree"), py::arg("variant") = "all");
  m.def("oracle_f", [](int edges) { return bi_strings(oracle_F(edges)); }, py::arg("edges"));

  m.def("law", &law_dict, py::arg("N"), py::arg("variant") = "all", py::arg("backend") = "exact");
  m.def("mgf",
        [](int N, double mu, const std::string& variant) {
          return mgf(law_table(F_series<Rational>(2 * N, parse_variant(variant)), N), mu);
        },
        py::arg("N"), py::arg("mu"), py::arg("variant") = "all");
  m.def("mgf_limit", &mgf_limit, py::arg("mu"));
  m.def("asym_ratio", [](int N) { return asym_ratio(N); }, py::arg("N"));
  m.def("uniformity_max_deviation",
        [](const std::vector<double>& probs) { return uniformity_report(probs).max_deviation; },
        py::arg("probabilities"));

  m.def("demo_path3", [] { return serialize_map(to_document(demo_path3())); });
  m.def("validate_map", [](const std::string& text) { return validate(parse_map(text).map); }, py::arg("text"));
  m.def("bijection", &bijection_dict, py::arg("text"));

  m.def("r_fn", &r_fn, py::arg("S"), py::arg("a"));
  m.def("x_fn", py::overload_cast<double, double, double, double>(&x_fn), py::arg("S"), py::arg("T"),
        py::arg("a"), py::arg("b"));
  m.def("x_fn_equal", &x_fn_equal, py::arg("S"), py::arg("T"), py::arg("a"));
  m.def("pde_residual", py::overload_cast<double, double, double, double>(&pde_residual), py::arg("S"),
        py::arg("T"), py::arg("a"), py::arg("b"));
  m.def("contour_total", [](double mu) { return contour_value(mu).total; }, py::arg("mu"));
  m.def("bridge_error", [](double S, double eps, double a) { return bridge_point(S, eps, a).error; },
        py::arg("S"), py::arg("eps"), py::arg("a"));
}
