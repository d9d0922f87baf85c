#include <gtest/gtest.h>

#include <set>

#include "vcell/enumerate_oracle.hpp"
#include "vcell/errors.hpp"
#include "vcell/voronoi_law.hpp"

using namespace vcell;

namespace {

// Counts labelled plane trees from Dyck words and increment vectors.
long brute_tree_count(int edges, int root_label, int min_label) {
  long count = 0;
  const int len = 2 * edges;
  for (unsigned word = 0; word < (1u << len); ++word) {
    int h = 0;
    bool ok = true;
    for (int k = 0; k < len && ok; ++k) {
      h += (word >> k & 1u) ? 1 : -1;
      ok = h >= 0;
    }
    if (!ok || h != 0) continue;
    int pow3 = 1;
    for (int k = 0; k < edges; ++k) pow3 *= 3;
    for (int code = 0; code < pow3; ++code) {
      std::vector<int> stack{root_label};
      int c = code;
      bool fine = root_label >= min_label;
      for (int k = 0; k < len && fine; ++k) {
        if (word >> k & 1u) {
          const int lab = stack.back() + (c % 3) - 1;
          c /= 3;
          fine = lab >= min_label;
          stack.push_back(lab);
        } else {
          stack.pop_back();
        }
      }
      if (fine) ++count;
    }
  }
  return count;
}

}  // namespace

TEST(Trees, CountsMatchBruteForce) {
  for (int edges = 0; edges <= 5; ++edges) {
    for (int root = 1; root <= 3; ++root) {
      EXPECT_EQ(static_cast<long>(enum_labelled_trees(edges, root, 1).size()), brute_tree_count(edges, root, 1))
          << edges << " " << root;
    }
  }
}

TEST(Trees, UnconstrainedCountIsThreeColouredCatalan) {
  EXPECT_EQ(enum_labelled_trees(3, 0, -10).size(), 135u);
  EXPECT_EQ(enum_labelled_trees(1, 1, 1).size(), 2u);
  EXPECT_EQ(enum_labelled_trees(2, 1, 1).size(), 9u);
}

TEST(Trees, RespectInvariants) {
  for (const auto& t : enum_labelled_trees(4, 2, 1)) {
    EXPECT_EQ(t.edges(), 4);
    EXPECT_EQ(t.label[0], 2);
    for (std::size_t k = 1; k < t.parent.size(); ++k) {
      EXPECT_LT(t.parent[k], static_cast<int>(k));
      EXPECT_LE(std::abs(t.label[k] - t.label[t.parent[k]]), 1);
      EXPECT_GE(t.label[k], 1);
    }
  }
  EXPECT_THROW(enum_labelled_trees(-1, 1, 1), DomainError);
}

TEST(Oracle, RejectsOutOfRangeSizes) {
  EXPECT_THROW(enum_rooted_iltfm(0), ConfigError);
  EXPECT_THROW(enum_rooted_iltfm(kMaxOracleEdges + 1), ConfigError);
}

TEST(Oracle, GeneratedObjectsAreValidAndDistinct) {
  for (int E = 1; E <= 4; ++E) {
    std::set<std::vector<int>> codes;
    for (const auto& r : enum_rooted_iltfm(E)) {
      EXPECT_TRUE(validate(r.iltfm).empty());
      EXPECT_EQ(r.iltfm.map.num_edges(), E);
      EXPECT_EQ(r.edges_f1 + r.edges_f2 + r.loop_length, E);
      EXPECT_TRUE(codes.insert(rooted_code(r.iltfm.map, r.root, iltfm_tags(r.iltfm))).second);
    }
  }
}

TEST(Oracle, SingleEdgeObjects) {
  // A self-loop at label 1 is the only one-edge object.
  auto all = enum_rooted_iltfm(1);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].loop_length, 1);
  EXPECT_EQ(all[0].loop_labels, (std::vector<int>{1}));
}

TEST(Oracle, AreaTwoStratumByHand) {
  auto f = oracle_F(2);
  EXPECT_EQ(f.coeff(3, 1), Rational(2));
  EXPECT_EQ(f.coeff(2, 2), Rational(3, 2));
  EXPECT_EQ(f.coeff(1, 3), Rational(2));
}

TEST(Oracle, MatchesRecursionSeries) {
  const int E = 5;
  EXPECT_EQ(oracle_F(E), F_series<Rational>(2 * E, Variant::all).series);
}

TEST(Oracle, ParitySplitMatchesRecursionSeries) {
  const int E = 4;
  auto [even, odd] = oracle_parity_split(E);
  EXPECT_EQ(even, F_series<Rational>(2 * E, Variant::even).series);
  EXPECT_EQ(odd, F_series<Rational>(2 * E, Variant::odd).series);
}

TEST(Oracle, WeightDenominatorsDivideLoopLength) {
  // Total weight per loop length L is an integer multiple of 1/L.
  for_each_rooted_iltfm(3, [](const RootedIltFM& r) {
    EXPECT_GE(r.loop_length, 1);
    EXPECT_EQ(static_cast<int>(r.loop_labels.size()), r.loop_length);
  });
}
