#include "divatlas/report.hpp"

#include <gtest/gtest.h>

using namespace divatlas;

namespace {

AtlasParams params(int g, int d, int k, TensorKind kind = TensorKind::skew)
{
  AtlasParams p;
  p.g = g;
  p.d = d;
  p.k = k;
  p.kind = kind;
  return p;
}

bool has_note(const AtlasReport& r, const std::string& prefix)
{
  for (const auto& n : r.notes)
    if (n.rfind(prefix, 0) == 0) return true;
  return false;
}

} // namespace

TEST(AtlasReport, JsonRoundTrip)
{
  std::vector<AtlasParams> cases = {params(37, 36, 2), params(37, 36, 3), params(4, 6, 2), params(5, 8, 2, TensorKind::sym),
                                    params(4, 3, 2), params(9, 11, 4, TensorKind::sym)};
  AtlasParams canon = params(6, 10, 3);
  canon.canonical = true;
  cases.push_back(canon);
  AtlasParams compat = params(7, 12, 2, TensorKind::sym);
  compat.compat_paper_sym = true;
  compat.compat_paper_secdim = true;
  cases.push_back(compat);

  for (const auto& p : cases) {
    AtlasReport report = build_atlas_report(p);
    std::string text = to_json(report).dump();
    AtlasReport back = atlas_report_from_json(Json::parse(text));
    EXPECT_EQ(back, report) << text;
    EXPECT_EQ(to_json(back).dump(), text);
  }
}

TEST(AtlasReport, Schema)
{
  Json j = to_json(build_atlas_report(params(37, 36, 2)));
  for (const char* key : {"params", "components", "intersections", "counts", "notes"}) EXPECT_TRUE(j.contains(key));
  EXPECT_FALSE(j.contains("canonical"));
  EXPECT_EQ(j["params"]["class"], "n");
  ASSERT_EQ(j["components"].size(), 3u);
  EXPECT_EQ(j["components"][0]["support"], "W^1_36");
  EXPECT_EQ(j["components"][2]["total_dim"], 15);
  EXPECT_EQ(j["intersections"][0]["image"], "W^3_36");
  EXPECT_EQ(j["intersections"][0]["fiber"]["kind"], "skew");
  EXPECT_EQ(j["counts"]["enumerated"], 3);
}

TEST(AtlasReport, RejectsMalformedJson)
{
  Json j = to_json(build_atlas_report(params(37, 36, 2)));
  Json bad = j;
  bad["components"][0]["support"] = "W^2_36";
  EXPECT_THROW(atlas_report_from_json(bad), std::invalid_argument);
  bad = j;
  bad["params"]["class"] = "q";
  EXPECT_THROW(atlas_report_from_json(bad), std::invalid_argument);
  bad = j;
  bad.erase("counts");
  EXPECT_ANY_THROW(atlas_report_from_json(bad));
}

TEST(AtlasReport, DiscrepancyNotes)
{
  AtlasReport g37 = build_atlas_report(params(37, 36, 2));
  EXPECT_TRUE(has_note(g37, "component count"));
  EXPECT_TRUE(has_note(g37, "sec-dim"));

  AtlasReport agree = build_atlas_report(params(4, 6, 2));
  EXPECT_FALSE(has_note(agree, "component count"));

  AtlasReport k3 = build_atlas_report(params(37, 36, 3));
  EXPECT_FALSE(has_note(k3, "sec-dim"));

  AtlasReport quad = build_atlas_report(params(5, 8, 2, TensorKind::sym));
  EXPECT_TRUE(has_note(quad, "symmetric parity"));

  AtlasParams canon = params(6, 10, 4);
  canon.canonical = true;
  EXPECT_TRUE(has_note(build_atlas_report(canon), "canonical locus codimension"));
}

TEST(AtlasReport, CountGridNotes)
{
  for (int g = 2; g <= 20; ++g)
    for (int d = 1; d <= 2 * g; ++d)
      for (int k = 2; k <= 3; ++k) {
        AtlasReport r = build_atlas_report(params(g, d, k));
        EXPECT_TRUE(r.counts.agrees || has_note(r, "component count"));
      }
}

TEST(AtlasReport, PrintedSecDimMode)
{
  AtlasParams p = params(37, 36, 2);
  p.compat_paper_secdim = true;
  AtlasReport r = build_atlas_report(p);
  ASSERT_EQ(r.intersections.size(), 3u);
  EXPECT_EQ(r.intersections[2].fiber_dim, 10);
  EXPECT_EQ(build_atlas_report(params(37, 36, 2)).intersections[2].fiber_dim, 13);
}

TEST(AtlasReport, InvalidParameters)
{
  EXPECT_THROW(build_atlas_report(params(1, 3, 2)), std::invalid_argument);
  EXPECT_THROW(build_atlas_report(params(5, 0, 2)), std::invalid_argument);
  AtlasParams canon = params(5, 7, 2);
  canon.canonical = true;
  EXPECT_THROW(build_atlas_report(canon), std::invalid_argument);
  EXPECT_THROW(parse_class_name("x"), std::invalid_argument);
}

TEST(AtlasReport, TextTable)
{
  std::string text = render_text(build_atlas_report(params(37, 36, 2)));
  EXPECT_NE(text.find("W^5_36"), std::string::npos);
  EXPECT_NE(text.find("P^14"), std::string::npos);
  EXPECT_NE(text.find("resolution"), std::string::npos);
}

TEST(TensorJson, RoundTrip)
{
  std::vector<Tensor> tensors = {random_tensor(5, 3, TensorKind::skew, 3), random_tensor(3, 3, TensorKind::sym, 4),
                                 SkewTensor(4, 2), SymTensor(2, 0)};
  SkewTensor frac(4, 2);
  frac.set({0, 3}, Rational(-5, 3));
  tensors.push_back(frac);
  for (const auto& t : tensors) EXPECT_EQ(tensor_from_json(Json::parse(tensor_to_json(t).dump())), t);
  EXPECT_EQ(tensor_to_json(frac)["terms"][0]["coeff"], "-5/3");
}

TEST(TensorJson, Parsing)
{
  Json j = Json::parse(R"({"n": 4, "k": 2, "kind": "skew",
    "terms": [{"index": [0, 1], "coeff": "1"}, {"index": [2, 3], "coeff": 1}]})");
  EXPECT_EQ(enc(tensor_from_json(j)), 4);
  Json cube = Json::parse(R"({"n": 2, "k": 3, "kind": "sym", "terms": [{"index": [3, 0], "coeff": "1"}]})");
  EXPECT_EQ(enc(tensor_from_json(cube)), 1);
}

TEST(TensorJson, Rejects)
{
  const char* bad[] = {
    R"([1, 2])",
    R"({"n": 4, "k": 2, "kind": "alt", "terms": []})",
    R"({"n": 4, "k": 2, "kind": "skew", "terms": [{"index": [1, 0], "coeff": "1"}]})",
    R"({"n": 4, "k": 2, "kind": "skew", "terms": [{"index": [0, 1], "coeff": "1/0"}]})",
    R"({"n": 4, "k": 2, "kind": "skew", "terms": [{"index": [0, 1], "coeff": 0.5}]})",
    R"({"n": 4, "k": 2, "kind": "skew", "terms": [{"index": [0, 1], "coeff": "1"}, {"index": [0, 1], "coeff": "2"}]})",
    R"({"n": 2, "k": 3, "kind": "sym", "terms": [{"index": [2, 0], "coeff": "1"}]})",
    R"({"n": -1, "k": 2, "kind": "skew", "terms": []})",
    R"({"n": 4, "kind": "skew", "terms": []})",
  };
  for (const char* text : bad) EXPECT_ANY_THROW(tensor_from_json(Json::parse(text))) << text;
}

TEST(EncReport, Membership)
{
  Json j = Json::parse(R"({"n": 4, "k": 2, "kind": "skew", "terms": [{"index": [0, 1], "coeff": "2/3"}]})");
  EncReport r = build_enc_report(tensor_from_json(j), 2);
  EXPECT_EQ(r.enc, 2);
  ASSERT_TRUE(r.member.has_value());
  EXPECT_TRUE(*r.member);
  EXPECT_FALSE(*build_enc_report(tensor_from_json(j), 1).member);
  Json out = to_json(r);
  EXPECT_EQ(out["enc"], 2);
  EXPECT_EQ(out["member"], true);
  EXPECT_EQ(out["basis"].size(), 2u);
}
