#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace braidkit;

TEST(Json, WordRoundTrip) {
  const BraidWord w(4, {1, -3, 2});
  const json j = to_json(w);
  EXPECT_EQ(j, json::parse(R"({"n":4,"word":[1,-3,2]})"));
  EXPECT_EQ(word_from_json(j), w);
  EXPECT_THROW(word_from_json(json::parse(R"({"n":2,"word":[3]})")), std::invalid_argument);
}

TEST(Json, NormalFormRoundTrip) {
  Sampler rng(71);
  for (int k = 0; k < 50; ++k) {
    const NormalForm nf = normal_form(rng.word(rng.uniform(2, 6), 12));
    const json j = to_json(nf);
    EXPECT_EQ(j.at("n"), nf.strands);
    EXPECT_EQ(j.at("inf"), nf.inf);
    EXPECT_EQ(j.at("factors").size(), nf.factors.size());
    EXPECT_EQ(normal_form_from_json(j), nf);
  }
  EXPECT_EQ(to_json(normal_form(delta_word(3))).dump(), R"({"factors":[],"inf":1,"n":3})");
}

TEST(Json, PermutationIsItsImages) {
  EXPECT_EQ(to_json(induced_permutation(mu(3, 1))), json::parse("[1,4,2,3]"));
}

TEST(Json, FactoredRoundTrip) {
  Sampler rng(72);
  for (int k = 0; k < 30; ++k) {
    const FactoredBraid f = rng.factored(rng.composition(rng.uniform(2, 7)), 5);
    const FactoredBraid g = factored_from_json(to_json(f));
    EXPECT_EQ(g.source, f.source);
    EXPECT_EQ(g.exterior, f.exterior);
    EXPECT_EQ(g.interiors, f.interiors);
  }
  const json j = to_json(FactoredBraid(Composition{1, 2}, BraidWord(2, {1}), {BraidWord(1), BraidWord(2, {-1})}));
  EXPECT_EQ(j.at("source"), json::parse("[1,2]"));
  EXPECT_EQ(j.at("exterior"), json::parse(R"({"n":2,"word":[1]})"));
}

TEST(Json, CompositionAndMuSpec) {
  EXPECT_EQ(composition_from_json(to_json(Composition{2, 3, 1})), (Composition{2, 3, 1}));
  const MuSpec plain = std::pair<int, int>{3, 2};
  EXPECT_EQ(to_json(plain), json::parse(R"({"m":3,"d":2})"));
  EXPECT_EQ((std::get<std::pair<int, int>>(mu_spec_from_json(to_json(plain)))), (std::pair<int, int>{3, 2}));
  const MuSpec decorated = MuParameters{3, Composition{2, 2, 1}};
  EXPECT_EQ(to_json(decorated), json::parse(R"({"m":3,"dvec":[2,2,1]})"));
  const auto back = std::get<MuParameters>(mu_spec_from_json(to_json(decorated)));
  EXPECT_EQ(back.m, 3);
  EXPECT_EQ(back.dvec, (Composition{2, 2, 1}));
}

TEST(Json, GeneratorTableRoundTripAndRevalidation) {
  const auto tab = build_generator_table(3, 2);
  json j = to_json(tab);
  EXPECT_EQ(j.at("m"), 3);
  EXPECT_EQ(j.at("d"), 2);
  EXPECT_TRUE(j.at("images").contains("t"));
  EXPECT_TRUE(j.at("images").contains("s2"));
  const auto back = table_from_json(j);
  EXPECT_EQ(back.t, tab.t);
  EXPECT_EQ(back.s, tab.s);
  j["images"]["t"] = to_json(BraidWord(7, {1, 1}));
  EXPECT_THROW(table_from_json(j), std::invalid_argument);
}

TEST(Json, ScenarioReportSchema) {
  const auto r = repro::run_scenario("thm14", 0);
  const json j = repro::to_json(r);
  EXPECT_EQ(j.at("scenario"), "thm14");
  ASSERT_FALSE(j.at("checks").empty());
  for (const auto& c : j.at("checks")) {
    EXPECT_TRUE(c.contains("id"));
    EXPECT_TRUE(c.at("pass").is_boolean());
    EXPECT_TRUE(c.contains("expected"));
    EXPECT_TRUE(c.contains("actual"));
  }
  EXPECT_TRUE(j.at("duration_ms").is_number());
}
