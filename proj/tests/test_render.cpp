#include <gtest/gtest.h>

#include "qblocks/render.hpp"
#include "test_util.hpp"

using namespace qblocks;
using qblocks::testing::P;

TEST(Render, PathsJson) {
  const auto j = paths_to_json(enumerate_paths(3));
  ASSERT_EQ(j.size(), 5u);
  EXPECT_EQ(j[0], "UDUDUD");
  EXPECT_EQ(j[4], "UUUDDD");
}

TEST(Render, PathsText) {
  EXPECT_EQ(paths_to_text(enumerate_paths(2)), "UDUD  (0,1,0,1,0)\nUUDD  (0,1,2,1,0)\n");
}

TEST(Render, TilingJsonRoundTrip) {
  for (int n = 0; n <= 4; ++n) {
    const auto paths = enumerate_paths(n);
    for (const auto& a : paths) {
      for (const auto& b : paths) {
        for (const auto& t : enumerate_cover_inclusive(a, b)) {
          const auto text = tiling_to_json(t).dump();
          const Tiling back = tiling_from_json(json::parse(text));
          EXPECT_EQ(back.low, t.low);
          EXPECT_EQ(back.high, t.high);
          EXPECT_EQ(back.tiles, t.tiles);
          EXPECT_EQ(tiling_to_json(back).dump(), text);
        }
      }
    }
  }
}

TEST(Render, TilingJsonSchema) {
  const auto t = *nested_tiling(P("UDUD"), P("UUDD"));
  const auto j = tiling_to_json(t);
  EXPECT_EQ(j.at("low"), "UDUD");
  EXPECT_EQ(j.at("high"), "UUDD");
  ASSERT_EQ(j.at("tiles").size(), 1u);
  EXPECT_EQ(j.at("tiles")[0].at("x"), 2);
  EXPECT_EQ(j.at("tiles")[0].at("xp"), 2);
  EXPECT_EQ(j.at("tiles")[0].at("h"), 1);
}

TEST(Render, TilingJsonRejectsInconsistentHeight) {
  auto j = tiling_to_json(*nested_tiling(P("UDUD"), P("UUDD")));
  j["tiles"][0]["h"] = 3;
  EXPECT_THROW(tiling_from_json(j), std::invalid_argument);
}

TEST(Render, TilingAscii) {
  const auto t = *nested_tiling(P("UDUD"), P("UUDD"));
  EXPECT_EQ(tiling_to_ascii(t), "2 |     o\n1 |   * a *\n0 | *   *   *\n");
}

TEST(Render, MatrixJsonRoundTrip) {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& m : {build_M(n), build_Minv_tilings(n)}) {
      const auto text = matrix_to_json(m).dump();
      const auto back = matrix_from_json(json::parse(text));
      EXPECT_EQ(back, m);
      EXPECT_EQ(matrix_to_json(back).dump(), text);
    }
  }
}

TEST(Render, MatrixJsonRejectsBadShape) {
  auto j = matrix_to_json(build_M(2));
  j["entries"].erase(1);
  EXPECT_THROW(matrix_from_json(j), std::invalid_argument);
}

TEST(Render, MatrixLatex) {
  const auto tex = matrix_to_latex(build_Minv_tilings(2));
  EXPECT_NE(tex.find("1 & \\frac{1}{[2]}"), std::string::npos);
  EXPECT_NE(tex.find("\\begin{pmatrix}"), std::string::npos);
}

TEST(Render, MatrixCsv) {
  const auto csv = matrix_to_csv(build_M(2), 4.0 / 1.3);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "path,UDUD,UUDD");
  EXPECT_NE(csv.find("UUDD,0,1"), std::string::npos);
}

TEST(Render, TensorJsonRoundTrip) {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& p : enumerate_paths(n)) {
      const auto b = build_u(p);
      const auto text = tensor_to_json(b.vec).dump();
      EXPECT_EQ(tensor_from_json(json::parse(text)), b.vec);
      EXPECT_EQ(tensor_to_json(tensor_from_json(json::parse(text))).dump(), text);
    }
  }
}

TEST(Render, TensorLegend) {
  const auto j = block_to_json(build_u(P("UD")));
  EXPECT_EQ(j.at("path"), "UD");
  EXPECT_EQ(j.at("vector").at("factor_order"), kFactorLegend);
  EXPECT_NE(block_to_text(build_u(P("UD"))).find("factor 1 = rightmost"), std::string::npos);
}

TEST(Render, TensorJsonRejectsWrongLength) {
  const json j = {{"n", 2}, {"terms", {{{"bits", "010"}, {"coeff", {{"num", {{0, "1/1"}}}, {"den", {{0, "1/1"}}}}}}}}};
  EXPECT_THROW(tensor_from_json(j), std::invalid_argument);
}
