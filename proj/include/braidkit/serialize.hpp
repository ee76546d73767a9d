#pragma once

// JSON schemas:
//   braid word      { "n": 4, "word": [1, 1, 2, 2, 2, 2] }
//   normal form     { "n": 4, "inf": 1, "factors": [[2, 1, 3, 4], ...] }
//   composition     [2, 3, 1]
//   factored braid  { "source": [...], "exterior": {word}, "interiors": [{word}, ...] }
//   mu parameters   { "m": 3, "d": 2 } or { "m": 3, "dvec": [2, 2, 1] }
//   table           { "m": 3, "d": 2, "images": { "t": {word}, "s2": {word}, ... } }
// Factor tables are the induced permutations, 1-based.

#include <string>
#include <variant>

#include "json.hpp"

#include "embeddings.hpp"
#include "garside.hpp"
#include "periodic.hpp"
#include "tube.hpp"
#include "word.hpp"

namespace braidkit {

using json = nlohmann::json;

inline json to_json(const BraidWord& w) { return json{{"n", w.strands()}, {"word", w.letters()}}; }

inline BraidWord word_from_json(const json& j) {
  return BraidWord(j.at("n").get<int>(), j.at("word").get<std::vector<int>>());
}

inline json to_json(const Permutation& p) { return p.images(); }

inline json to_json(const NormalForm& nf) {
  json factors = json::array();
  for (const auto& f : nf.factors) factors.push_back(f.images());
  return json{{"n", nf.strands}, {"inf", nf.inf}, {"factors", factors}};
}

inline NormalForm normal_form_from_json(const json& j) {
  NormalForm nf;
  nf.strands = j.at("n").get<int>();
  nf.inf = j.at("inf").get<long>();
  for (const auto& f : j.at("factors")) {
    nf.factors.push_back(Permutation::from_images(f.get<std::vector<int>>()));
    if (nf.factors.back().size() != nf.strands) throw std::invalid_argument("factor size mismatch");
  }
  return nf;
}

inline json to_json(const Composition& c) { return c.blocks(); }

inline Composition composition_from_json(const json& j) { return Composition(j.get<std::vector<int>>()); }

inline json to_json(const FactoredBraid& f) {
  json ints = json::array();
  for (const auto& w : f.interiors) ints.push_back(to_json(w));
  return json{{"source", to_json(f.source)}, {"exterior", to_json(f.exterior)}, {"interiors", ints}};
}

inline FactoredBraid factored_from_json(const json& j) {
  std::vector<BraidWord> ints;
  for (const auto& w : j.at("interiors")) ints.push_back(word_from_json(w));
  return FactoredBraid(composition_from_json(j.at("source")), word_from_json(j.at("exterior")),
                       std::move(ints));
}

/// Plain (m, d) or decorated (m, dvec).
using MuSpec = std::variant<std::pair<int, int>, MuParameters>;

inline json to_json(const MuSpec& spec) {
  if (const auto* plain = std::get_if<std::pair<int, int>>(&spec)) {
    return json{{"m", plain->first}, {"d", plain->second}};
  }
  const auto& dec = std::get<MuParameters>(spec);
  return json{{"m", dec.m}, {"dvec", dec.dvec.blocks()}};
}

inline MuSpec mu_spec_from_json(const json& j) {
  const int m = j.at("m").get<int>();
  if (j.contains("dvec")) return MuParameters{m, composition_from_json(j.at("dvec"))};
  return std::pair<int, int>{m, j.at("d").get<int>()};
}

inline json to_json(const GeneratorImageTable& tab) {
  json images;
  images["t"] = to_json(tab.t);
  for (int i = 2; i <= tab.d; ++i) images["s" + std::to_string(i)] = to_json(tab.image(i));
  return json{{"m", tab.m}, {"d", tab.d}, {"images", images}};
}

/// Loads a table and re-runs the constraint suite; throws if it fails.
inline GeneratorImageTable table_from_json(const json& j) {
  GeneratorImageTable tab;
  tab.m = j.at("m").get<int>();
  tab.d = j.at("d").get<int>();
  const auto& images = j.at("images");
  tab.t = word_from_json(images.at("t"));
  for (int i = 2; i <= tab.d; ++i) tab.s.push_back(word_from_json(images.at("s" + std::to_string(i))));
  for (const auto& c : validate_table(tab)) {
    if (!c.pass) throw std::invalid_argument("table failed validation: " + c.name);
  }
  return tab;
}

}  // namespace braidkit
