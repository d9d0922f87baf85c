#pragma once

// Bi-pointed quadrangulations, iso-labelled two-face maps, and the two
// corner-local bijections between them and general maps.

#include <string>
#include <vector>

#include "vcell/planar_map.hpp"
#include "vcell/rational.hpp"

namespace vcell {

/// Quadrangulation with marked vertices v1 != v2. Labels, when present, are
/// min(d(v, v1), d(v, v2)).
struct BipointedQuad {
  PlanarMap map;
  int v1 = -1;
  int v2 = -1;
};

/// Map with exactly two faces f1, f2 and integer vertex labels.
struct IltFM {
  PlanarMap map;
  int f1 = -1;
  int f2 = -1;
};

/// Map with arbitrary face degrees and marked vertices v1 != v2, labelled by
/// min(delta(v, v1), delta(v, v2)).
struct GeneralBipointedMap {
  PlanarMap map;
  int v1 = -1;
  int v2 = -1;
};

/// Structural problems of a bi-pointed quadrangulation (empty iff valid).
std::vector<std::string> validate(const BipointedQuad& q);
/// Structural and labelling problems of an IltFM (empty iff valid).
std::vector<std::string> validate(const IltFM& m);

/// Attaches labels min(d(v,v1), d(v,v2)). Throws DomainError when the input is
/// not a valid bi-pointed quadrangulation or d(v1,v2) is odd.
BipointedQuad label_bipointed(BipointedQuad q);

/// Chord in every face between the two corners followed clockwise by a smaller
/// label, original edges removed. Labels are recomputed from distances.
IltFM miermont_forward(const BipointedQuad& q);

/// Inverse construction: a new vertex v_i in each face f_i, every corner of
/// label l in f_i joined to the next corner of label l-1 met counterclockwise
/// around f_i, or to v_i when l = 1.
BipointedQuad miermont_inverse(const IltFM& m);

/// Chord in every face between the two corners followed clockwise by a larger
/// label; vertices left without chords are dropped.
GeneralBipointedMap ambjorn_budd(const BipointedQuad& q);

struct VoronoiAreas {
  Rational area1;
  Rational area2;
};

/// Edges strictly inside f_i count 1 toward cell i, loop edges 1/2 toward each.
VoronoiAreas voronoi_areas(const IltFM& m);

struct Parity {
  bool odd = false;
  int s = 0;  // minimum label on the loop
};

/// Odd iff some loop edge joins two vertices of the minimal loop label s.
Parity parity_classify(const IltFM& m);

/// Loop edges: edges whose two sides lie in different faces (one dart each).
std::vector<int> loop_darts(const IltFM& m);

/// Checks the Voronoi property of the general-map cells on a concrete
/// instance: vertices strictly inside f_i are weakly closer to v_i, and loop
/// vertices carrying general-map edges on both sides are equidistant.
std::vector<std::string> check_rebound(const BipointedQuad& q);

/// Per-dart tags for canonical codes: 1/2 on darts leaving v1/v2.
DartTags quad_tags(const BipointedQuad& q);
/// Per-dart tags for canonical codes: 1/2 for darts in f1/f2.
DartTags iltfm_tags(const IltFM& m);

/// Unrooted isomorphism invariants respecting labels and marks.
std::vector<int> canonical_code(const BipointedQuad& q);
std::vector<int> canonical_code(const IltFM& m);

/// The path a - b - c seen as a quadrangulation with one face, marked (a, c).
BipointedQuad demo_path3();

}  // namespace vcell
