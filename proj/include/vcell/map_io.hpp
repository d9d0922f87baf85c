#pragma once

// Text exchange format for maps, bi-pointed quadrangulations and IltFMs.
//
//   {
//     "format": "vcell-map",
//     "version": 1,
//     "kind": "map" | "quad" | "iltfm" | "general",
//     "darts": 6,
//     "alpha": [[0, 3], [1, 4], [2, 5]],
//     "vertices": [{"cycle": [0, 1]}, {"cycle": [3], "label": 1}, ...],
//     "marks": {"v1": 0, "v2": 2}     (vertex indices into "vertices")
//           or {"f1": 4, "f2": 0}     (any dart of the face)
//   }
//
// Each cycle lists the darts around a vertex in sigma order. Labels are
// either present on every vertex or on none.

#include <string>

#include "vcell/bijections.hpp"
#include "vcell/planar_map.hpp"

namespace vcell {

inline constexpr int kMapFormatVersion = 1;

struct MapDocument {
  std::string kind = "map";
  PlanarMap map;
  int v1 = -1;  // vertex ids of `map`
  int v2 = -1;
  int f1 = -1;  // face ids of `map`
  int f2 = -1;
};

/// Deterministic rendering; parse_map(serialize_map(d)) re-serializes to the
/// same bytes. Throws DomainError on maps whose permutations are malformed.
std::string serialize_map(const MapDocument& doc);

/// Throws FormatError on syntax errors, missing or mistyped fields and darts
/// out of range. Structural problems (fixed points of alpha, genus) are left
/// to validate().
MapDocument parse_map(const std::string& text);

MapDocument to_document(const PlanarMap& m);
MapDocument to_document(const BipointedQuad& q);
MapDocument to_document(const IltFM& m);
MapDocument to_document(const GeneralBipointedMap& g);

/// Throw FormatError when the document lacks the matching marks.
BipointedQuad quad_from_document(const MapDocument& doc);
IltFM iltfm_from_document(const MapDocument& doc);

}  // namespace vcell
