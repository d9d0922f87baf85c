#include <gtest/gtest.h>

#include "vcell/enumerate_oracle.hpp"
#include "vcell/errors.hpp"
#include "vcell/map_io.hpp"

using namespace vcell;

TEST(MapIo, QuadRoundTripIsBitExact) {
  auto doc = to_document(demo_path3());
  const std::string text = serialize_map(doc);
  auto back = parse_map(text);
  EXPECT_EQ(serialize_map(back), text);
  EXPECT_EQ(back.kind, "quad");
  auto q = quad_from_document(back);
  EXPECT_TRUE(validate(q).empty());
  EXPECT_EQ(canonical_code(q), canonical_code(demo_path3()));
}

TEST(MapIo, IltfmRoundTripsOverEnumeration) {
  for (int E = 1; E <= 3; ++E) {
    for (const auto& r : enum_rooted_iltfm(E)) {
      const std::string text = serialize_map(to_document(r.iltfm));
      auto back = parse_map(text);
      EXPECT_EQ(serialize_map(back), text);
      auto m = iltfm_from_document(back);
      EXPECT_EQ(m.map, r.iltfm.map);
      EXPECT_EQ(m.f1, r.iltfm.f1);
      EXPECT_EQ(m.f2, r.iltfm.f2);
    }
  }
}

TEST(MapIo, ReordersForeignVertexListing) {
  const std::string text = R"({"format": "vcell-map", "version": 1, "kind": "quad", "darts": 4,
    "alpha": [[0, 1], [2, 3]],
    "vertices": [{"cycle": [3], "label": 0}, {"cycle": [2, 1], "label": 1}, {"cycle": [0], "label": 0}],
    "marks": {"v1": 2, "v2": 0}})";
  auto q = quad_from_document(parse_map(text));
  EXPECT_EQ(q.v1, q.map.vertex(0));
  EXPECT_EQ(q.v2, q.map.vertex(3));
  EXPECT_EQ(q.map.label(q.map.vertex(1)), 1);
}

TEST(MapIo, FixedPointSurvivesParsingForDiagnostics) {
  const std::string text = R"({"format": "vcell-map", "version": 1, "darts": 2,
    "alpha": [[0, 0], [1, 1]], "vertices": [{"cycle": [0, 1]}]})";
  auto doc = parse_map(text);
  auto issues = validate(doc.map);
  ASSERT_FALSE(issues.empty());
  EXPECT_NE(issues.front().find("involution violation"), std::string::npos);
}

TEST(MapIo, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_map("{"), FormatError);
  EXPECT_THROW(parse_map("[]"), FormatError);
  EXPECT_THROW(parse_map(R"({"format": "other", "version": 1})"), FormatError);
  EXPECT_THROW(parse_map(R"({"format": "vcell-map", "version": 2})"), FormatError);
  EXPECT_THROW(parse_map(R"({"format": "vcell-map", "version": 1, "darts": 2,
    "alpha": [[0, 5]], "vertices": [{"cycle": [0, 1]}]})"),
               FormatError);
  EXPECT_THROW(parse_map(R"({"format": "vcell-map", "version": 1, "darts": 3,
    "alpha": [[0, 1]], "vertices": [{"cycle": [0, 1]}]})"),
               FormatError);
  EXPECT_THROW(parse_map(R"({"format": "vcell-map", "version": 1, "darts": 4,
    "alpha": [[0, 1], [2, 3]], "vertices": [{"cycle": [0], "label": 0}, {"cycle": [1, 2]}, {"cycle": [3]}]})"),
               FormatError);
  EXPECT_THROW(quad_from_document(parse_map(R"({"format": "vcell-map", "version": 1, "darts": 2,
    "alpha": [[0, 1]], "vertices": [{"cycle": [0, 1]}]})")),
               FormatError);
}
