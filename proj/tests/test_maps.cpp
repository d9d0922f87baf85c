#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "vcell/bijections.hpp"
#include "vcell/enumerate_oracle.hpp"
#include "vcell/errors.hpp"

using namespace vcell;

namespace {

bool contains(const std::vector<std::string>& issues, const std::string& needle) {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

// Relabels darts by a permutation: same map, different names.
PlanarMap relabel(const PlanarMap& m, const std::vector<int>& perm) {
  const int n = m.num_darts();
  std::vector<int> alpha(n), sigma(n);
  for (int d = 0; d < n; ++d) {
    alpha[perm[d]] = perm[m.alpha(d)];
    sigma[perm[d]] = perm[m.sigma(d)];
  }
  PlanarMap out(alpha, sigma);
  if (m.has_labels()) {
    std::vector<int> labels(out.num_vertices());
    for (int d = 0; d < n; ++d) labels[out.vertex(perm[d])] = m.dart_label(d);
    out.set_labels(labels);
  }
  return out;
}

// Two loop vertices joined by a double edge, labels (l0, l1).
IltFM double_edge(int l0, int l1) {
  IltFM m;
  m.map = PlanarMap::from_cycles({{0, 1}, {2, 3}}, {{0, 3}, {1, 2}});
  std::vector<int> labels(2);
  labels[m.map.vertex(0)] = l0;
  labels[m.map.vertex(2)] = l1;
  m.map.set_labels(labels);
  m.f1 = m.map.face(0);
  m.f2 = 1 - m.f1;
  return m;
}

IltFM self_loop() {
  IltFM m;
  m.map = PlanarMap::from_cycles({{0, 1}}, {{0, 1}});
  m.map.set_labels({1});
  m.f1 = m.map.face(1);
  m.f2 = m.map.face(0);
  return m;
}

}  // namespace

TEST(PlanarMap, SelfLoop) {
  auto m = PlanarMap::from_cycles({{0, 1}}, {{0, 1}});
  EXPECT_TRUE(validate(m).empty());
  EXPECT_EQ(m.num_vertices(), 1);
  EXPECT_EQ(m.num_edges(), 1);
  EXPECT_EQ(m.num_faces(), 2);
}

TEST(PlanarMap, Path) {
  auto m = demo_path3().map;
  EXPECT_TRUE(validate(m).empty());
  EXPECT_EQ(m.num_vertices(), 3);
  EXPECT_EQ(m.num_edges(), 2);
  EXPECT_EQ(m.num_faces(), 1);
}

TEST(PlanarMap, FixedPointOfAlphaIsReported) {
  PlanarMap m({0, 1}, {1, 0});
  EXPECT_TRUE(contains(validate(m), "involution violation"));
}

TEST(PlanarMap, TorusIsReported) {
  // One vertex, two edges interleaved: genus one.
  auto m = PlanarMap::from_cycles({{0, 1, 2, 3}}, {{0, 2}, {1, 3}});
  EXPECT_TRUE(contains(validate(m), "Euler violation"));
}

TEST(PlanarMap, DisconnectedIsReported) {
  auto m = PlanarMap::from_cycles({{0}, {1}, {2}, {3}}, {{0, 1}, {2, 3}});
  EXPECT_TRUE(contains(validate(m), "connectivity violation"));
}

TEST(PlanarMap, Distances) {
  auto q = demo_path3();
  EXPECT_EQ(distances(q.map, q.v1), (std::vector<int>{0, 1, 2}));
  auto tri = PlanarMap::from_cycles({{0, 5}, {1, 2}, {3, 4}}, {{0, 1}, {2, 3}, {4, 5}});
  ASSERT_TRUE(validate(tri).empty());
  for (int v = 0; v < 3; ++v) {
    auto d = distances(tri, v);
    std::sort(d.begin(), d.end());
    EXPECT_EQ(d, (std::vector<int>{0, 1, 1}));
  }
}

TEST(PlanarMap, CanonicalCodeIgnoresDartNames) {
  std::mt19937 rng(2024);
  auto maps = enum_rooted_iltfm(4);
  for (std::size_t k = 0; k < maps.size(); k += 37) {
    const auto& m = maps[k].iltfm.map;
    std::vector<int> perm(m.num_darts());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(m), canonical_code(relabel(m, perm)));
  }
}

TEST(Labels, PathIsZeroOneZero) {
  auto q = demo_path3();
  EXPECT_EQ(q.map.label(q.v1), 0);
  EXPECT_EQ(q.map.label(q.v2), 0);
  EXPECT_EQ(q.map.label(q.map.vertex(1)), 1);
}

TEST(Labels, OddDistanceRejected) {
  BipointedQuad q;
  q.map = PlanarMap::from_cycles({{0}, {1, 2}, {3}}, {{0, 1}, {2, 3}});
  q.v1 = q.map.vertex(0);
  q.v2 = q.map.vertex(1);
  EXPECT_THROW(label_bipointed(q), DomainError);
}

TEST(Miermont, PathGivesSelfLoop) {
  auto m = miermont_forward(demo_path3());
  EXPECT_TRUE(validate(m).empty());
  EXPECT_EQ(m.map.num_vertices(), 1);
  EXPECT_EQ(m.map.num_edges(), 1);
  EXPECT_EQ(m.map.num_faces(), 2);
  EXPECT_EQ(m.map.label(0), 1);
}

TEST(Miermont, SelfLoopGivesPath) {
  auto q = miermont_inverse(self_loop());
  EXPECT_TRUE(validate(q).empty());
  EXPECT_EQ(canonical_code(q), canonical_code(demo_path3()));
  EXPECT_EQ(distances(q.map, q.v1)[q.v2], 2);
}

TEST(Miermont, RoundTripsOnSmallMaps) {
  for (int E = 1; E <= 4; ++E) {
    for_each_rooted_iltfm(E, [&](const RootedIltFM& r) {
      auto q = miermont_inverse(r.iltfm);
      ASSERT_TRUE(validate(q).empty());
      EXPECT_EQ(q.map.num_faces(), E);
      auto back = miermont_forward(q);
      EXPECT_EQ(canonical_code(back), canonical_code(r.iltfm));
      const int s = *std::min_element(r.loop_labels.begin(), r.loop_labels.end());
      EXPECT_EQ(distances(q.map, q.v1)[q.v2], 2 * s);
    });
  }
}

TEST(AmbjornBudd, PathGivesSingleEdge) {
  auto g = ambjorn_budd(demo_path3());
  EXPECT_EQ(g.map.num_edges(), 1);
  EXPECT_EQ(g.map.num_vertices(), 2);
  EXPECT_EQ(distances(g.map, g.v1)[g.v2], 1);
}

TEST(AmbjornBudd, LabelsAreDistancesAndParityMatches) {
  for (int E = 1; E <= 4; ++E) {
    for_each_rooted_iltfm(E, [&](const RootedIltFM& r) {
      auto q = miermont_inverse(r.iltfm);
      auto g = ambjorn_budd(q);
      ASSERT_TRUE(validate(g.map).empty());
      EXPECT_EQ(g.map.num_edges(), E);
      auto d1 = distances(g.map, g.v1), d2 = distances(g.map, g.v2);
      for (int v = 0; v < g.map.num_vertices(); ++v) EXPECT_EQ(g.map.label(v), std::min(d1[v], d2[v]));
      EXPECT_EQ(parity_classify(r.iltfm).odd, d1[g.v2] % 2 == 1);
      EXPECT_TRUE(check_rebound(q).empty());
    });
  }
}

TEST(Areas, SelfLoopSplitsEvenly) {
  auto a = voronoi_areas(self_loop());
  EXPECT_EQ(a.area1, Rational(1, 2));
  EXPECT_EQ(a.area2, Rational(1, 2));
}

TEST(Areas, PendantEdgeCountsForItsFace) {
  IltFM m;
  m.map = PlanarMap::from_cycles({{0, 2, 1}, {3}}, {{0, 1}, {2, 3}});
  m.map.set_labels({1, 2});
  m.f1 = m.map.face(1);
  m.f2 = m.map.face(0);
  ASSERT_TRUE(validate(m).empty());
  auto a = voronoi_areas(m);
  // Whichever side holds the pendant edge gets 3/2.
  const bool in_f1 = m.map.face(2) == m.f1;
  EXPECT_EQ(in_f1 ? a.area1 : a.area2, Rational(3, 2));
  EXPECT_EQ(in_f1 ? a.area2 : a.area1, Rational(1, 2));
}

TEST(Areas, ConservedOnSmallMaps) {
  for_each_rooted_iltfm(4, [&](const RootedIltFM& r) {
    auto a = voronoi_areas(r.iltfm);
    EXPECT_EQ(a.area1 + a.area2, Rational(4));
    EXPECT_EQ(a.area1, Rational(2 * r.edges_f1 + r.loop_length, 2));
  });
}

TEST(Parity, Examples) {
  auto even = parity_classify(double_edge(1, 2));
  EXPECT_FALSE(even.odd);
  EXPECT_EQ(even.s, 1);
  auto odd = parity_classify(double_edge(1, 1));
  EXPECT_TRUE(odd.odd);
  EXPECT_EQ(odd.s, 1);
  EXPECT_TRUE(parity_classify(self_loop()).odd);
}

TEST(Validation, IltfmLabelRules) {
  EXPECT_TRUE(validate(double_edge(1, 2)).empty());
  EXPECT_FALSE(validate(double_edge(1, 3)).empty());
  EXPECT_FALSE(validate(double_edge(2, 2)).empty());
}
