#include "vcell/bijections.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "vcell/errors.hpp"

namespace vcell {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
  return out;
}

// Map made of one chord per quadrangle face, each drawn between the two
// corners picked by `select(label, label of the next corner clockwise)`.
struct ChordMap {
  PlanarMap map;
  std::vector<int> chord_at_corner;  // quad dart y -> chord dart in corner(y), or -1
  std::vector<int> vertex_of_quad;   // quad vertex -> chord-map vertex, or -1 if dropped
};

ChordMap draw_chords(const PlanarMap& q, const std::function<bool(int, int)>& select) {
  const int nq = q.num_darts();
  ChordMap out;
  out.chord_at_corner.assign(static_cast<std::size_t>(nq), -1);
  std::vector<int> alpha;
  for (int f = 0; f < q.num_faces(); ++f) {
    const auto& ys = q.face_darts(f);
    std::vector<int> picked;
    for (int y : ys) {
      if (select(q.dart_label(y), q.dart_label(q.phi(y)))) picked.push_back(y);
    }
    if (picked.size() != 2) {
      throw DomainError("chord rule picked " + std::to_string(picked.size()) +
                        " corners in face " + std::to_string(f) + " (labels are not a distance labelling)");
    }
    const int a = static_cast<int>(alpha.size());
    out.chord_at_corner[picked[0]] = a;
    out.chord_at_corner[picked[1]] = a + 1;
    alpha.push_back(a + 1);
    alpha.push_back(a);
  }
  std::vector<int> sigma(alpha.size(), -1);
  std::vector<int> first_chord(static_cast<std::size_t>(q.num_vertices()), -1);
  for (int w = 0; w < q.num_vertices(); ++w) {
    std::vector<int> cyc;
    for (int y : q.vertex_darts(w)) {
      if (out.chord_at_corner[y] >= 0) cyc.push_back(out.chord_at_corner[y]);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) sigma[cyc[k]] = cyc[(k + 1) % cyc.size()];
    if (!cyc.empty()) first_chord[w] = cyc.front();
  }
  out.map = PlanarMap(std::move(alpha), std::move(sigma));
  if (!out.map.well_formed()) throw InvariantViolation("draw_chords: chord map is malformed");
  out.vertex_of_quad.assign(static_cast<std::size_t>(q.num_vertices()), -1);
  std::vector<int> labels(static_cast<std::size_t>(out.map.num_vertices()), 0);
  for (int w = 0; w < q.num_vertices(); ++w) {
    if (first_chord[w] < 0) continue;
    const int v = out.map.vertex(first_chord[w]);
    out.vertex_of_quad[w] = v;
    labels[v] = q.label(w);
  }
  out.map.set_labels(std::move(labels));
  return out;
}

// Face of the chord map containing the sector of quad vertex w just
// counterclockwise of the quad dart `from` (which leaves w): the face of the
// first chord met turning counterclockwise from `from`.
int chord_face_after(const PlanarMap& q, const ChordMap& c, int from) {
  int z = q.sigma(from);
  for (int step = 0; step <= q.degree(q.vertex(from)); ++step, z = q.sigma(z)) {
    if (c.chord_at_corner[z] >= 0) return c.map.face(c.chord_at_corner[z]);
  }
  throw InvariantViolation("chord_face_after: vertex carries no chord");
}

// Face of the chord map containing a quad vertex that the chords avoid.
int chord_face_of_vertex(const PlanarMap& q, const ChordMap& c, int v) {
  const int y = q.vertex_darts(v).front();
  return chord_face_after(q, c, q.alpha(y));
}

BipointedQuad labelled(const BipointedQuad& q) { return label_bipointed(q); }

}  // namespace

std::vector<std::string> validate(const BipointedQuad& q) {
  auto issues = validate(q.map);
  if (!issues.empty()) return issues;
  for (int f = 0; f < q.map.num_faces(); ++f) {
    if (q.map.face_degree(f) != 4) {
      issues.push_back("face " + std::to_string(f) + " has degree " +
                       std::to_string(q.map.face_degree(f)) + ", not 4");
    }
  }
  const int nv = q.map.num_vertices();
  if (q.v1 < 0 || q.v1 >= nv || q.v2 < 0 || q.v2 >= nv) {
    issues.emplace_back("marked vertex out of range");
  } else if (q.v1 == q.v2) {
    issues.emplace_back("marked vertices coincide");
  }
  return issues;
}

std::vector<std::string> validate(const IltFM& m) {
  auto issues = validate(m.map);
  if (!issues.empty()) return issues;
  const auto& g = m.map;
  if (g.num_faces() != 2) {
    issues.push_back("expected 2 faces, found " + std::to_string(g.num_faces()));
    return issues;
  }
  if (!((m.f1 == 0 && m.f2 == 1) || (m.f1 == 1 && m.f2 == 0))) {
    issues.emplace_back("f1, f2 must name the two faces");
    return issues;
  }
  if (!g.has_labels()) {
    issues.emplace_back("labels missing");
    return issues;
  }
  for (int d = 0; d < g.num_darts(); ++d) {
    if (std::abs(g.dart_label(d) - g.dart_label(g.alpha(d))) > 1) {
      issues.push_back("labels differ by more than 1 along dart " + std::to_string(d));
      break;
    }
  }
  for (int f : {m.f1, m.f2}) {
    int lo = std::numeric_limits<int>::max();
    for (int d : g.face_darts(f)) lo = std::min(lo, g.dart_label(d));
    if (lo != 1) {
      issues.push_back("minimum label around " + std::string(f == m.f1 ? "f1" : "f2") + " is " +
                       std::to_string(lo) + ", not 1");
    }
  }
  return issues;
}

BipointedQuad label_bipointed(BipointedQuad q) {
  const auto issues = validate(q);
  if (!issues.empty()) throw DomainError("label_bipointed: " + join(issues));
  const auto d1 = distances(q.map, q.v1);
  const auto d2 = distances(q.map, q.v2);
  if (d1[q.v2] % 2 != 0) {
    throw DomainError("label_bipointed: d(v1,v2) = " + std::to_string(d1[q.v2]) +
                      " is odd; only the even-distance case is supported");
  }
  std::vector<int> labels(d1.size());
  for (std::size_t v = 0; v < d1.size(); ++v) labels[v] = std::min(d1[v], d2[v]);
  q.map.set_labels(std::move(labels));
  return q;
}

IltFM miermont_forward(const BipointedQuad& input) {
  const auto q = labelled(input);
  const auto chords = draw_chords(q.map, [](int l, int next) { return next < l; });
  IltFM out;
  out.map = chords.map;
  out.f1 = chord_face_of_vertex(q.map, chords, q.v1);
  out.f2 = chord_face_of_vertex(q.map, chords, q.v2);
  if (out.map.num_faces() != 2 || out.f1 == out.f2) {
    throw InvariantViolation("miermont_forward: result does not separate v1 from v2 by two faces");
  }
  return out;
}

BipointedQuad miermont_inverse(const IltFM& m) {
  const auto issues = validate(m);
  if (!issues.empty()) throw DomainError("miermont_inverse: " + join(issues));
  const PlanarMap& g = m.map;
  const int n = g.num_darts();
  // One arc per corner y of g: dart 2y leaves origin(y) inside corner(y),
  // dart 2y+1 is its far end (at the successor corner or at the face center).
  auto out_dart = [](int y) { return 2 * y; };
  auto in_dart = [](int y) { return 2 * y + 1; };

  std::vector<std::vector<int>> corner_content(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> centers;
  for (int f : {m.f1, m.f2}) {
    const auto& ys = g.face_darts(f);  // clockwise
    const int len = static_cast<int>(ys.size());
    std::vector<std::vector<std::pair<int, int>>> incoming(static_cast<std::size_t>(len));
    std::vector<int> center;
    for (int k = 0; k < len; ++k) {
      const int l = g.dart_label(ys[k]);
      if (l == 1) continue;
      int j = -1;
      for (int step = 1; step < len; ++step) {
        const int cand = (k - step + len) % len;  // counterclockwise
        if (g.dart_label(ys[cand]) == l - 1) {
          j = cand;
          break;
        }
      }
      if (j < 0) throw InvariantViolation("miermont_inverse: corner without successor");
      incoming[j].emplace_back((k - j + len) % len, ys[k]);
    }
    // Successors are searched counterclockwise around the face (against
    // phi). Inside a corner, counterclockwise order is then: the corner's own
    // arc, followed by arriving arcs from the farthest to the nearest source.
    for (int k = 0; k < len; ++k) {
      auto& in = incoming[k];
      std::sort(in.rbegin(), in.rend());
      auto& content = corner_content[ys[k]];
      content.push_back(out_dart(ys[k]));
      for (const auto& [dist, y] : in) content.push_back(in_dart(y));
    }
    for (int k = len - 1; k >= 0; --k) {
      if (g.dart_label(ys[k]) == 1) center.push_back(in_dart(ys[k]));
    }
    if (center.empty()) throw InvariantViolation("miermont_inverse: face without label-1 corner");
    centers.push_back(std::move(center));
  }

  std::vector<std::vector<int>> cycles;
  for (int w = 0; w < g.num_vertices(); ++w) {
    std::vector<int> cyc;
    for (int y : g.vertex_darts(w)) {
      const auto& c = corner_content[y];
      cyc.insert(cyc.end(), c.begin(), c.end());
    }
    cycles.push_back(std::move(cyc));
  }
  for (auto& c : centers) cycles.push_back(c);
  std::vector<std::pair<int, int>> edges;
  for (int y = 0; y < n; ++y) edges.emplace_back(out_dart(y), in_dart(y));

  BipointedQuad q;
  q.map = PlanarMap::from_cycles(cycles, edges);
  q.v1 = q.map.vertex(centers[0].front());
  q.v2 = q.map.vertex(centers[1].front());
  std::vector<int> labels(static_cast<std::size_t>(q.map.num_vertices()), 0);
  for (int w = 0; w < g.num_vertices(); ++w) labels[q.map.vertex(cycles[w].front())] = g.label(w);
  q.map.set_labels(std::move(labels));

  const auto q_issues = validate(q);
  if (!q_issues.empty()) throw InvariantViolation("miermont_inverse: " + join(q_issues));
  return q;
}

GeneralBipointedMap ambjorn_budd(const BipointedQuad& input) {
  const auto q = labelled(input);
  const auto chords = draw_chords(q.map, [](int l, int next) { return next > l; });
  GeneralBipointedMap out;
  out.map = chords.map;
  out.v1 = chords.vertex_of_quad[q.v1];
  out.v2 = chords.vertex_of_quad[q.v2];
  if (out.v1 < 0 || out.v2 < 0) throw InvariantViolation("ambjorn_budd: a marked vertex was dropped");
  return out;
}

std::vector<int> loop_darts(const IltFM& m) {
  std::vector<int> out;
  for (int d = 0; d < m.map.num_darts(); ++d) {
    if (m.map.face(d) == m.f2 && m.map.face(m.map.alpha(d)) == m.f1) out.push_back(d);
  }
  return out;
}

VoronoiAreas voronoi_areas(const IltFM& m) {
  VoronoiAreas a{Rational(0), Rational(0)};
  const Rational half(1, 2);
  for (int d = 0; d < m.map.num_darts(); ++d) {
    const int e = m.map.alpha(d);
    if (d > e) continue;
    const int fd = m.map.face(d), fe = m.map.face(e);
    if (fd != fe) {
      a.area1 += half;
      a.area2 += half;
    } else if (fd == m.f1) {
      a.area1 += Rational(1);
    } else {
      a.area2 += Rational(1);
    }
  }
  return a;
}

Parity parity_classify(const IltFM& m) {
  const auto loop = loop_darts(m);
  if (loop.empty()) throw DomainError("parity_classify: map has no loop");
  Parity p;
  p.s = std::numeric_limits<int>::max();
  for (int d : loop) p.s = std::min(p.s, m.map.dart_label(d));
  for (int d : loop) {
    if (m.map.dart_label(d) == p.s && m.map.dart_label(m.map.alpha(d)) == p.s) p.odd = true;
  }
  return p;
}

std::vector<std::string> check_rebound(const BipointedQuad& input) {
  const auto q = labelled(input);
  const auto mier = draw_chords(q.map, [](int l, int next) { return next < l; });
  const auto ab = draw_chords(q.map, [](int l, int next) { return next > l; });
  const int f1 = chord_face_of_vertex(q.map, mier, q.v1);
  const int g1 = ab.vertex_of_quad[q.v1];
  const int g2 = ab.vertex_of_quad[q.v2];
  const auto delta1 = distances(ab.map, g1);
  const auto delta2 = distances(ab.map, g2);

  std::vector<std::string> issues;
  auto require = [&](bool ok, int w, const std::string& what) {
    if (!ok) {
      issues.push_back("vertex " + std::to_string(w) + " (label " + std::to_string(q.map.label(w)) +
                       "): " + what);
    }
  };
  for (int w = 0; w < q.map.num_vertices(); ++w) {
    const int gw = ab.vertex_of_quad[w];
    if (gw < 0 || w == q.v1 || w == q.v2) continue;
    const int d1 = delta1[gw], d2 = delta2[gw];
    // Sides of f1/f2 touched by the general-map edges at w.
    bool side1 = false, side2 = false;
    for (int y : q.map.vertex_darts(w)) {
      if (ab.chord_at_corner[y] < 0) continue;
      const int face = chord_face_after(q.map, mier, q.map.sigma_inv(y));
      (face == f1 ? side1 : side2) = true;
    }
    // Faces of the two-face map around w.
    const int mw = mier.vertex_of_quad[w];
    bool in1 = false, in2 = false;
    for (int d : mier.map.vertex_darts(mw)) (mier.map.face(d) == f1 ? in1 : in2) = true;
    if (in1 && !in2) require(d1 <= d2, w, "strictly inside f1 but closer to v2");
    if (in2 && !in1) require(d2 <= d1, w, "strictly inside f2 but closer to v1");
    if (side1) require(d1 <= d2, w, "carries an edge in f1 but is closer to v2");
    if (side2) require(d2 <= d1, w, "carries an edge in f2 but is closer to v1");
  }
  return issues;
}

DartTags quad_tags(const BipointedQuad& q) {
  DartTags t(static_cast<std::size_t>(q.map.num_darts()), 0);
  for (int d = 0; d < q.map.num_darts(); ++d) {
    if (q.map.vertex(d) == q.v1) t[d] = 1;
    if (q.map.vertex(d) == q.v2) t[d] = 2;
  }
  return t;
}

DartTags iltfm_tags(const IltFM& m) {
  DartTags t(static_cast<std::size_t>(m.map.num_darts()), 0);
  for (int d = 0; d < m.map.num_darts(); ++d) t[d] = m.map.face(d) == m.f1 ? 1 : 2;
  return t;
}

std::vector<int> canonical_code(const BipointedQuad& q) { return canonical_code(q.map, quad_tags(q)); }
std::vector<int> canonical_code(const IltFM& m) { return canonical_code(m.map, iltfm_tags(m)); }

BipointedQuad demo_path3() {
  BipointedQuad q;
  q.map = PlanarMap::from_cycles({{0}, {1, 2}, {3}}, {{0, 1}, {2, 3}});
  q.v1 = q.map.vertex(0);
  q.v2 = q.map.vertex(3);
  return label_bipointed(std::move(q));
}

}  // namespace vcell
