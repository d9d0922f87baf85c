#pragma once

// Planar maps as rotation systems on darts (half-edges).
//
// Conventions used throughout the library:
//   alpha(d)  the other half of d's edge
//   sigma(d)  the next dart counterclockwise around the origin of d
//   phi(d) = sigma(alpha(d)), whose orbits are the faces.
// The face of d is the one on the right of d when walking along it, and
// following phi visits the corners of a face clockwise. The corner of d is the
// sector at origin(d) swept counterclockwise from sigma^{-1}(d) to d; it lies
// in the face of d.

#include <optional>
#include <string>
#include <vector>

namespace vcell {

class PlanarMap {
 public:
  PlanarMap() = default;
  /// Stores the permutations as given; structural queries need well_formed().
  PlanarMap(std::vector<int> alpha, std::vector<int> sigma);

  /// Builds sigma from vertex cycles (each listing darts counterclockwise) and
  /// alpha from edge pairs.
  static PlanarMap from_cycles(const std::vector<std::vector<int>>& vertex_cycles,
                               const std::vector<std::pair<int, int>>& edges);

  /// True when alpha and sigma are permutations of the same dart set, so that
  /// vertices and faces are defined. Use validate() for the full check.
  bool well_formed() const { return well_formed_; }

  int num_darts() const { return static_cast<int>(alpha_.size()); }
  int num_edges() const { return num_darts() / 2; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  int alpha(int d) const { return alpha_[d]; }
  int sigma(int d) const { return sigma_[d]; }
  int sigma_inv(int d) const { return sigma_inv_[d]; }
  int phi(int d) const { return sigma_[alpha_[d]]; }
  const std::vector<int>& alpha_array() const { return alpha_; }
  const std::vector<int>& sigma_array() const { return sigma_; }

  /// Vertex at the origin of d. Vertices are numbered in order of their smallest dart.
  int vertex(int d) const { return vertex_of_[d]; }
  /// Face on the right of d. Faces are numbered in order of their smallest dart.
  int face(int d) const { return face_of_[d]; }
  /// Darts leaving v, counterclockwise, starting from the smallest.
  const std::vector<int>& vertex_darts(int v) const { return vertices_[v]; }
  /// Darts of face f in phi order, starting from the smallest.
  const std::vector<int>& face_darts(int f) const { return faces_[f]; }
  int degree(int v) const { return static_cast<int>(vertices_[v].size()); }
  int face_degree(int f) const { return static_cast<int>(faces_[f].size()); }
  /// Other endpoint of d.
  int head(int d) const { return vertex_of_[alpha_[d]]; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<int>& labels() const { return labels_; }
  int label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  /// Label of the vertex at the origin of d.
  int dart_label(int d) const { return label(vertex(d)); }
  /// Sets one label per vertex (size must equal num_vertices()).
  void set_labels(std::vector<int> labels);
  void clear_labels() { labels_.clear(); }

  friend bool operator==(const PlanarMap& a, const PlanarMap& b) {
    return a.alpha_ == b.alpha_ && a.sigma_ == b.sigma_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<int> alpha_, sigma_, sigma_inv_;
  std::vector<int> vertex_of_, face_of_;
  std::vector<std::vector<int>> vertices_, faces_;
  std::vector<int> labels_;
  bool well_formed_ = false;
};

/// Human-readable violations (involution, permutation, connectivity, Euler);
/// empty iff the map is a valid connected planar map.
std::vector<std::string> validate(const PlanarMap& m);

/// BFS graph distances from vertex `source`; unreachable vertices get -1.
std::vector<int> distances(const PlanarMap& m, int source);

/// Per-dart tags folded into canonical codes (marks, face roles, ...).
using DartTags = std::vector<int>;

/// Code of the map rooted at dart `root`: darts renumbered in BFS order from
/// the root, then (alpha, sigma, label, tag) listed per renumbered dart.
/// Two rooted maps are isomorphic (orientation preserving, labels and tags
/// respected) iff their codes are equal.
std::vector<int> rooted_code(const PlanarMap& m, int root, const DartTags& tags = {});
/// Minimum of rooted_code over all roots: a complete invariant of the unrooted map.
std::vector<int> canonical_code(const PlanarMap& m, const DartTags& tags = {});

}  // namespace vcell
