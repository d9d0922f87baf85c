#pragma once

// Brute-force generation of labelled plane trees and rooted iso-labelled
// two-face maps: an oracle independent of the recursions.

#include <functional>
#include <utility>
#include <vector>

#include "vcell/bijections.hpp"
#include "vcell/series.hpp"

namespace vcell {

/// Plane tree in preorder: vertex 0 is the root, parent[k] < k, and children
/// of a vertex appear in their left-to-right order.
struct LabelledTree {
  std::vector<int> parent;
  std::vector<int> label;

  int edges() const { return static_cast<int>(parent.size()) - 1; }
  int min_label() const;
};

/// Every plane tree with exactly `edges` edges, root labelled root_label,
/// label increments in {-1, 0, 1} along edges and all labels >= min_label.
std::vector<LabelledTree> enum_labelled_trees(int edges, int root_label, int min_label);

/// Iso-labelled two-face map rooted at a loop dart with f1 on its left.
struct RootedIltFM {
  IltFM iltfm;
  int root = -1;
  int loop_length = 0;
  int edges_f1 = 0;  // edges strictly inside f1
  int edges_f2 = 0;
  std::vector<int> loop_labels;  // starting at the root's origin, following the loop
};

/// Largest edge count accepted by the enumerators.
inline constexpr int kMaxOracleEdges = 7;

/// Calls `visit` once per rooted iso-labelled two-face map with exactly E
/// edges. Throws InvariantViolation if two generated objects coincide.
void for_each_rooted_iltfm(int E, const std::function<void(const RootedIltFM&)>& visit);
std::vector<RootedIltFM> enum_rooted_iltfm(int E);

/// sum over rooted objects with at most E_max edges of u^{2a+L} v^{2b+L} / L,
/// with a, b the strict edge counts in f1, f2 and L the loop length.
BiSeries oracle_F(int E_max);

/// oracle_F split by the parity classification of each object: (even, odd).
std::pair<BiSeries, BiSeries> oracle_parity_split(int E_max);

}  // namespace vcell
