#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "vcell/bijections.hpp"
#include "vcell/enumerate_oracle.hpp"
#include "vcell/errors.hpp"
#include "vcell/map_io.hpp"
#include "vcell/recursions.hpp"
#include "vcell/scaling.hpp"
#include "vcell/voronoi_law.hpp"

namespace vcell::cli {

using json = nlohmann::ordered_json;

namespace {

class Report {
 public:
  explicit Report(std::string target) { doc_ = {{"target", std::move(target)}, {"checks", json::array()}}; }

  void param(const std::string& key, json value) { doc_["params"][key] = std::move(value); }

  // Records a check; the first failing check's counterexample is kept.
  void check(const std::string& name, bool pass, double residual, double tolerance,
             const json& counterexample = nullptr) {
    json c = {{"name", name}, {"pass", pass}, {"residual", residual}, {"tolerance", tolerance}};
    doc_["checks"].push_back(std::move(c));
    if (!pass && !doc_.contains("counterexample")) {
      json cx = counterexample.is_null() ? json::object() : counterexample;
      cx["check"] = name;
      doc_["counterexample"] = std::move(cx);
    }
  }

  json finish() {
    bool all = true;
    for (const auto& c : doc_["checks"]) all = all && c["pass"].get<bool>();
    doc_["pass"] = all;
    return doc_;
  }

 private:
  json doc_;
};

// First coefficient where two bivariate series differ.
std::optional<json> first_difference(const BiSeries& expected, const BiSeries& actual) {
  if (expected == actual) return std::nullopt;
  const int D = std::min(expected.max_degree(), actual.max_degree());
  for (int d = 0; d <= D; ++d) {
    for (int i = 0; i <= d; ++i) {
      const Rational e = expected.coeff(i, d - i), a = actual.coeff(i, d - i);
      if (!(e == a)) return json{{"u_power", i}, {"v_power", d - i}, {"expected", e.str()}, {"actual", a.str()}};
    }
  }
  return json{{"detail", "truncation degrees differ"}};
}

std::optional<json> first_difference(const UniSeries& expected, const UniSeries& actual) {
  const int K = std::min(expected.order(), actual.order());
  for (int k = 0; k <= K; ++k) {
    if (!(expected[k] == actual[k])) return json{{"power", k}, {"expected", expected[k].str()}, {"actual", actual[k].str()}};
  }
  if (expected.order() != actual.order()) return json{{"detail", "truncation orders differ"}};
  return std::nullopt;
}

}  // namespace

json verify_recursions(const VerifyParams& p) {
  Report rep("recursions");
  rep.param("order", p.order);
  rep.param("smax", p.s_max);
  const int K = p.order;
  auto r = solve_R<Rational>(p.s_max, K);
  const auto g = UniSeries::variable(K);
  const auto one = UniSeries::one(K);

  // R_s = 1 + g R_s (R_{s-1} + R_s + R_{s+1}) for every tabulated level.
  std::optional<json> bad_r;
  int r_fail = 0;
  for (int s = 1; s <= p.s_max; ++s) {
    const auto rhs = one + g * r.at(s) * (r.at(s - 1) + r.at(s) + r.at(s + 1));
    if (auto d = first_difference(rhs, r.at(s))) {
      ++r_fail;
      if (!bad_r) bad_r = json{{"s", s}, {"coefficient", *d}};
    }
  }
  rep.check("R recursion", r_fail == 0, r_fail, 0, bad_r.value_or(nullptr));

  // Stabilized tree series is 3^n Catalan(n).
  std::optional<json> bad_stab;
  {
    Rational c(1), pow3(1);
    for (int n = 0; n <= K; ++n) {
      if (!(r.stabilized[n] == c * pow3) && !bad_stab) {
        bad_stab = json{{"power", n}, {"expected", (c * pow3).str()}, {"actual", r.stabilized[n].str()}};
      }
      c = c * Rational(2 * (2 * n + 1)) / Rational(n + 2);
      pow3 = pow3 * Rational(3);
    }
  }
  rep.check("stabilized R is 3^n Catalan(n)", !bad_stab, bad_stab ? 1 : 0, 0, bad_stab.value_or(nullptr));

  // X_{s,t} = 1 + uv R_s R_t X_{s,t} (1 + uv R_{s+1} R_{t+1} X_{s+1,t+1}) and the u <-> v symmetry.
  auto x = solve_X(r);
  const int D = x.max_degree();
  const auto unit = BiSeries::one(D);
  std::optional<json> bad_x, bad_sym;
  int x_fail = 0, sym_fail = 0;
  for (int s = 0; s < p.s_max; ++s) {
    for (int off = -1; off <= 1; ++off) {
      const int t = s + off;
      if (t < 0 || t >= p.s_max) continue;
      const auto a = BiSeries::outer(1, r.at(s), r.at(t), D);
      const auto a1 = BiSeries::outer(1, r.at(s + 1), r.at(t + 1), D);
      const auto rhs = unit + a * x.at(s, t) * (unit + a1 * x.at(s + 1, t + 1));
      if (auto d = first_difference(rhs, x.at(s, t))) {
        ++x_fail;
        if (!bad_x) bad_x = json{{"s", s}, {"t", t}, {"coefficient", *d}};
      }
      if (auto d = first_difference(x.at(t, s).swapped(), x.at(s, t))) {
        ++sym_fail;
        if (!bad_sym) bad_sym = json{{"s", s}, {"t", t}, {"coefficient", *d}};
      }
    }
  }
  rep.check("X recursion", x_fail == 0, x_fail, 0, bad_x.value_or(nullptr));
  rep.check("X symmetry", sym_fail == 0, sym_fail, 0, bad_sym.value_or(nullptr));
  return rep.finish();
}

json verify_closed_forms(const VerifyParams& p) {
  Report rep("closed-forms");
  rep.param("r_order", p.r_order);
  rep.param("x_order", p.x_order);
  rep.param("s_range", p.s_range);

  auto r = solve_R<Rational>(std::max(default_s_max(p.r_order), p.s_range + 1), p.r_order);
  std::optional<json> bad_r;
  int r_fail = 0;
  for (int s = 1; s <= p.s_range; ++s) {
    if (auto d = first_difference(closed_R(s, p.r_order), r.at(s))) {
      ++r_fail;
      if (!bad_r) bad_r = json{{"s", s}, {"coefficient", *d}};
    }
  }
  rep.check("R closed form", r_fail == 0, r_fail, 0, bad_r.value_or(nullptr));

  auto x = solve_X<Rational>(std::max(default_s_max(p.x_order), p.s_range + 2), p.x_order);
  std::optional<json> bad_x;
  int x_fail = 0;
  const int top = std::min(p.s_range, 6);
  for (int s = 0; s <= top; ++s) {
    for (int t = std::max(0, s - 1); t <= std::min(top, s + 1); ++t) {
      if (auto d = first_difference(closed_X_diag(s, t, p.x_order), diagonal(x.at(s, t)))) {
        ++x_fail;
        if (!bad_x) bad_x = json{{"s", s}, {"t", t}, {"coefficient", *d}};
      }
    }
  }
  rep.check("X closed form at g=h", x_fail == 0, x_fail, 0, bad_x.value_or(nullptr));

  auto f = F_series<Rational>(2 * p.x_order, Variant::all);
  auto bad_f = first_difference(F_diag_closed(p.x_order), diagonal(f.series));
  rep.check("F closed form at g=h", !bad_f, bad_f ? 1 : 0, 0, bad_f.value_or(nullptr));
  return rep.finish();
}

json verify_oracle(const VerifyParams& p) {
  Report rep("oracle");
  rep.param("edges", p.edges);
  auto oracle = oracle_F(p.edges);
  auto f = F_series<Rational>(2 * p.edges, Variant::all).series;
  for (int d = 2; d <= 2 * p.edges; d += 2) {
    auto diff = first_difference(oracle.homogeneous(d), f.homogeneous(d));
    json cx = nullptr;
    if (diff) cx = json{{"area", d / 2}, {"coefficient", *diff}};
    rep.check("stratum area " + std::to_string(d / 2), !diff, diff ? 1 : 0, 0, cx);
  }
  return rep.finish();
}

json verify_parity(const VerifyParams& p) {
  Report rep("parity");
  rep.param("degree", p.degree);
  rep.param("edges", p.edges);
  auto all = F_series<Rational>(p.degree, Variant::all).series;
  auto even = F_series<Rational>(p.degree, Variant::even).series;
  auto odd = F_series<Rational>(p.degree, Variant::odd).series;
  auto sum = first_difference(all, even + odd);
  rep.check("even + odd = all", !sum, sum ? 1 : 0, 0, sum.value_or(nullptr));

  auto [oe, oo] = oracle_parity_split(p.edges);
  const int D = 2 * p.edges;
  auto de = first_difference(oe, even.truncated(D));
  rep.check("oracle even part", !de, de ? 1 : 0, 0, de.value_or(nullptr));
  auto dodd = first_difference(oo, odd.truncated(D));
  rep.check("oracle odd part", !dodd, dodd ? 1 : 0, 0, dodd.value_or(nullptr));
  return rep.finish();
}

json verify_bijections(const VerifyParams& p) {
  Report rep("bijections");
  rep.param("edges", p.edges);
  long objects = 0, rt = 0, dist = 0, labels = 0, parity = 0, rebound = 0;
  json cx_rt, cx_dist, cx_labels, cx_parity, cx_rebound;
  auto witness = [](const IltFM& m) { return json::parse(serialize_map(to_document(m))); };
  for (int E = 1; E <= p.edges; ++E) {
    for_each_rooted_iltfm(E, [&](const RootedIltFM& r) {
      ++objects;
      auto q = miermont_inverse(r.iltfm);
      if (canonical_code(miermont_forward(q)) != canonical_code(r.iltfm) && rt++ == 0) cx_rt = {{"iltfm", witness(r.iltfm)}};
      const int s = *std::min_element(r.loop_labels.begin(), r.loop_labels.end());
      const int d12 = distances(q.map, q.v1)[q.v2];
      if (d12 != 2 * s && dist++ == 0) cx_dist = {{"iltfm", witness(r.iltfm)}, {"distance", d12}, {"min_loop_label", s}};
      auto g = ambjorn_budd(q);
      auto d1 = distances(g.map, g.v1), d2 = distances(g.map, g.v2);
      for (int v = 0; v < g.map.num_vertices(); ++v) {
        if (g.map.label(v) != std::min(d1[v], d2[v])) {
          if (labels++ == 0) cx_labels = {{"iltfm", witness(r.iltfm)}, {"vertex", v}};
          break;
        }
      }
      if (parity_classify(r.iltfm).odd != (d1[g.v2] % 2 == 1) && parity++ == 0) cx_parity = {{"iltfm", witness(r.iltfm)}};
      if (!check_rebound(q).empty() && rebound++ == 0) cx_rebound = {{"iltfm", witness(r.iltfm)}};
    });
  }
  rep.param("objects", objects);
  rep.check("Miermont round trip", rt == 0, static_cast<double>(rt), 0, cx_rt);
  rep.check("d(v1,v2) = 2 min loop label", dist == 0, static_cast<double>(dist), 0, cx_dist);
  rep.check("AB labels are distances", labels == 0, static_cast<double>(labels), 0, cx_labels);
  rep.check("parity matches d(v1,v2)", parity == 0, static_cast<double>(parity), 0, cx_parity);
  rep.check("AB rebound rule", rebound == 0, static_cast<double>(rebound), 0, cx_rebound);
  return rep.finish();
}

json verify_scaling(const VerifyParams& p) {
  if (p.grid != "default") throw ConfigError("verify scaling: unknown grid '" + p.grid + "'");
  Report rep("scaling");
  rep.param("grid", p.grid);
  const GridSpec spec;
  auto grid = pde_grid(spec);
  rep.check("PDE residual a != b", grid.max_residual < 1e-8, grid.max_residual, 1e-8);
  rep.check("PDE residual a = b", grid.max_equal_residual < 1e-8, grid.max_equal_residual, 1e-8);

  double prim = 0, k0 = 0, ident = 0, from_k = 0, integral = 0;
  for (double a : spec.ab) {
    for (double b : spec.ab) {
      integral = std::max(integral, first_integral_check(1e-3, a, b).relative_difference);
      if (a == b) continue;
      auto c = coeff_tables(a, b);
      for (int k = 1; k <= 9; ++k) {
        const double s = 0.1 * k, h = 1e-5;
        const double fd = (K_fn(s + h, c) - K_fn(s - h, c)) / (2 * h);
        prim = std::max(prim, std::abs(fd - K_integrand(s, c)) / std::abs(fd));
      }
      k0 = std::max(k0, std::abs(K_fn(0.0, c)));
      ident = std::max(ident, std::abs(K_expansion_constant(a, b) - singularity_coefficient(a, b)));
      from_k = std::max(from_k, std::abs(K_expansion_constant_numeric(a, b) - singularity_coefficient(a, b)));
    }
  }
  rep.check("K is a primitive", prim < 1e-5, prim, 1e-5);
  rep.check("K(0) = 0", k0 == 0, k0, 0);
  rep.check("K expansion constant", ident < 1e-12, ident, 1e-12);
  rep.check("K expansion constant read off K", from_k < 1e-7, from_k, 1e-7);
  rep.check("first integral quadrature", integral < 1e-6, integral, 1e-6);

  double contour = 0;
  for (double mu : {0.1, 1.0, 4.0}) {
    auto c = contour_value(mu);
    contour = std::max(contour, std::abs(c.total - c.closed_form) / c.closed_form);
  }
  rep.check("contour total", contour < 1e-8, contour, 1e-8);

  // The bridge gap must shrink linearly: error/eps agrees across eps within 10%.
  double drift = 0;
  for (double S : {1.0, 2.0}) {
    auto coarse = bridge_point(S, 0.02, 1.0), fine = bridge_point(S, 0.01, 1.0);
    const double c1 = coarse.error / coarse.eps, c2 = fine.error / fine.eps;
    drift = std::max(drift, std::abs(c1 - c2) / c2);
  }
  rep.check("bridge gap is O(eps)", drift < 0.1, drift, 0.1);
  return rep.finish();
}

}  // namespace vcell::cli
