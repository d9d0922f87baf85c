#include "vcell/map_io.hpp"

#include <json.hpp>
#include <sstream>

#include "vcell/errors.hpp"

namespace vcell {

namespace {

using nlohmann::json;

constexpr const char* kFormatName = "vcell-map";

bool known_kind(const std::string& k) {
  return k == "map" || k == "quad" || k == "iltfm" || k == "general";
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("map document: missing field '") + key + "'");
  return *it;
}

int as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw FormatError("map document: " + what + " must be an integer");
  return v.get<int>();
}

int face_representative(const PlanarMap& m, int f) { return m.face_darts(f).front(); }

}  // namespace

std::string serialize_map(const MapDocument& doc) {
  const PlanarMap& m = doc.map;
  if (!m.well_formed()) throw DomainError("serialize_map: alpha and sigma must be permutations");
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"" << kFormatName << "\",\n";
  out << "  \"version\": " << kMapFormatVersion << ",\n";
  out << "  \"kind\": " << json(doc.kind).dump() << ",\n";
  out << "  \"darts\": " << m.num_darts() << ",\n";
  out << "  \"alpha\": [";
  bool first = true;
  for (int d = 0; d < m.num_darts(); ++d) {
    if (m.alpha(d) < d) continue;
    out << (first ? "" : ", ") << "[" << d << ", " << m.alpha(d) << "]";
    first = false;
  }
  out << "],\n";
  out << "  \"vertices\": [\n";
  for (int v = 0; v < m.num_vertices(); ++v) {
    out << "    {\"cycle\": [";
    const auto& darts = m.vertex_darts(v);
    for (std::size_t k = 0; k < darts.size(); ++k) out << (k ? ", " : "") << darts[k];
    out << "]";
    if (m.has_labels()) out << ", \"label\": " << m.label(v);
    out << "}" << (v + 1 < m.num_vertices() ? "," : "") << "\n";
  }
  out << "  ]";
  if (doc.v1 >= 0 || doc.v2 >= 0) {
    out << ",\n  \"marks\": {\"v1\": " << doc.v1 << ", \"v2\": " << doc.v2 << "}";
  } else if (doc.f1 >= 0 || doc.f2 >= 0) {
    out << ",\n  \"marks\": {\"f1\": " << face_representative(m, doc.f1)
        << ", \"f2\": " << face_representative(m, doc.f2) << "}";
  }
  out << "\n}\n";
  return out.str();
}

MapDocument parse_map(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("map document: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("map document: top level must be an object");
  const json& fmt = field(j, "format");
  if (!fmt.is_string() || fmt.get<std::string>() != kFormatName) {
    throw FormatError(std::string("map document: format must be \"") + kFormatName + "\"");
  }
  if (as_int(field(j, "version"), "version") != kMapFormatVersion) {
    throw FormatError("map document: unsupported version");
  }
  MapDocument doc;
  if (auto it = j.find("kind"); it != j.end()) {
    if (!it->is_string() || !known_kind(it->get<std::string>())) {
      throw FormatError("map document: kind must be one of map, quad, iltfm, general");
    }
    doc.kind = it->get<std::string>();
  }
  const int n = as_int(field(j, "darts"), "darts");
  if (n <= 0) throw FormatError("map document: darts must be positive");

  auto check_dart = [n](const json& v, const std::string& what) {
    const int d = as_int(v, what);
    if (d < 0 || d >= n) throw FormatError("map document: " + what + " out of range");
    return d;
  };

  std::vector<std::pair<int, int>> edges;
  const json& alpha = field(j, "alpha");
  if (!alpha.is_array()) throw FormatError("map document: alpha must be an array of pairs");
  for (const json& pr : alpha) {
    if (!pr.is_array() || pr.size() != 2) throw FormatError("map document: alpha entries must be pairs");
    edges.emplace_back(check_dart(pr[0], "alpha dart"), check_dart(pr[1], "alpha dart"));
  }

  std::vector<std::vector<int>> cycles;
  std::vector<int> cycle_labels;
  int labelled = 0;
  const json& verts = field(j, "vertices");
  if (!verts.is_array() || verts.empty()) throw FormatError("map document: vertices must be a non-empty array");
  for (const json& v : verts) {
    if (!v.is_object()) throw FormatError("map document: vertex entries must be objects");
    const json& cyc = field(v, "cycle");
    if (!cyc.is_array() || cyc.empty()) throw FormatError("map document: cycle must be a non-empty array");
    std::vector<int> c;
    for (const json& d : cyc) c.push_back(check_dart(d, "cycle dart"));
    cycles.push_back(std::move(c));
    if (auto it = v.find("label"); it != v.end()) {
      cycle_labels.push_back(as_int(*it, "label"));
      ++labelled;
    } else {
      cycle_labels.push_back(0);
    }
  }
  if (labelled != 0 && labelled != static_cast<int>(cycles.size())) {
    throw FormatError("map document: labels must be given on all vertices or none");
  }
  std::size_t total = 0;
  for (const auto& c : cycles) total += c.size();
  if (total != static_cast<std::size_t>(n)) {
    throw FormatError("map document: vertex cycles cover " + std::to_string(total) + " darts, expected " +
                      std::to_string(n));
  }

  doc.map = PlanarMap::from_cycles(cycles, edges);
  const bool usable = doc.map.well_formed() && doc.map.num_vertices() == static_cast<int>(cycles.size());
  if (usable && labelled) {
    std::vector<int> labels(cycles.size());
    for (std::size_t c = 0; c < cycles.size(); ++c) labels[doc.map.vertex(cycles[c].front())] = cycle_labels[c];
    doc.map.set_labels(std::move(labels));
  }

  if (auto it = j.find("marks"); it != j.end()) {
    if (!it->is_object()) throw FormatError("map document: marks must be an object");
    const bool has_v = it->contains("v1") || it->contains("v2");
    const bool has_f = it->contains("f1") || it->contains("f2");
    if (has_v && has_f) throw FormatError("map document: marks mix vertices and faces");
    if (has_v) {
      const int nv = static_cast<int>(cycles.size());
      for (const char* key : {"v1", "v2"}) {
        const int idx = as_int(field(*it, key), key);
        if (idx < 0 || idx >= nv) throw FormatError(std::string("map document: ") + key + " out of range");
        (key[1] == '1' ? doc.v1 : doc.v2) = usable ? doc.map.vertex(cycles[idx].front()) : idx;
      }
    }
    if (has_f) {
      for (const char* key : {"f1", "f2"}) {
        const int d = check_dart(field(*it, key), key);
        (key[1] == '1' ? doc.f1 : doc.f2) = usable ? doc.map.face(d) : -1;
      }
    }
  }
  return doc;
}

MapDocument to_document(const PlanarMap& m) {
  MapDocument doc;
  doc.map = m;
  return doc;
}

MapDocument to_document(const BipointedQuad& q) {
  MapDocument doc{"quad", q.map, q.v1, q.v2, -1, -1};
  return doc;
}

MapDocument to_document(const IltFM& m) {
  MapDocument doc{"iltfm", m.map, -1, -1, m.f1, m.f2};
  return doc;
}

MapDocument to_document(const GeneralBipointedMap& g) {
  MapDocument doc{"general", g.map, g.v1, g.v2, -1, -1};
  return doc;
}

BipointedQuad quad_from_document(const MapDocument& doc) {
  if (doc.v1 < 0 || doc.v2 < 0) throw FormatError("map document: quad needs marks v1, v2");
  return BipointedQuad{doc.map, doc.v1, doc.v2};
}

IltFM iltfm_from_document(const MapDocument& doc) {
  if (doc.f1 < 0 || doc.f2 < 0) throw FormatError("map document: iltfm needs marks f1, f2");
  return IltFM{doc.map, doc.f1, doc.f2};
}

}  // namespace vcell
