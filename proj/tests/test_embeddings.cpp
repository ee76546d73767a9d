#include <gtest/gtest.h>

#include <map>
#include <set>

#include "test_support.hpp"

using namespace braidkit;

TEST(TypeB, RewriteAndSpellOut) {
  const TypeBWord w = rewrite_type_b(BraidWord(3, {1, 1, 2, -1, -1}));
  EXPECT_EQ(w.d, 2);
  EXPECT_EQ(w.letters, (std::vector<int>{1, 2, -1}));
  EXPECT_EQ(w.to_braid(), BraidWord(3, {1, 1, 2, -1, -1}));
  EXPECT_EQ(rewrite_type_b(BraidWord(3, {1, 2, -2, 1})).letters, (std::vector<int>{1}));
  EXPECT_THROW(rewrite_type_b(BraidWord(3, {1, 2})), std::domain_error);
  EXPECT_EQ(type_b_rotation(3).letters, (std::vector<int>{3, 2, 1}));
  for (int d = 1; d <= 5; ++d) {
    EXPECT_TRUE(equals(type_b_full_twist(d).to_braid(), delta_word(d + 1).pow(2)));
  }
  EXPECT_THROW((TypeBWord{2, {}} * TypeBWord{3, {}}), std::invalid_argument);
}

TEST(GeneratorTable, SmallestCase) {
  const auto tab = build_generator_table(2, 1);
  EXPECT_EQ(tab.t, BraidWord(3, {2, 1, 1}));
  EXPECT_TRUE(tab.s.empty());
  EXPECT_TRUE(table_is_valid(tab));
}

TEST(GeneratorTable, PassesAllChecks) {
  for (const auto& [m, d] : std::vector<std::pair<int, int>>{{3, 2}, {2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    const auto tab = build_generator_table(m, d);
    EXPECT_EQ(tab.target_strands(), m * d + 1);
    for (const auto& c : validate_table(tab)) EXPECT_TRUE(c.pass) << m << "," << d << " " << c.name;
  }
  EXPECT_THROW(build_generator_table(1, 2), std::invalid_argument);
}

TEST(GeneratorTable, TamperedTableIsRejected) {
  auto tab = build_generator_table(3, 2);
  tab.t = BraidWord(7, {1, 1});
  EXPECT_FALSE(table_is_valid(tab));
  auto tab2 = build_generator_table(3, 2);
  tab2.s[0] = BraidWord(7, {4});
  EXPECT_FALSE(table_is_valid(tab2));
}

TEST(Psi4, IdentityAndFullTwist) {
  const auto tab = build_generator_table(3, 2);
  EXPECT_TRUE(psi4(BraidWord(3), tab).empty());
  EXPECT_TRUE(equals(psi4(type_b_full_twist(2), tab), mu(3, 2)));
  EXPECT_TRUE(equals(psi4(type_b_full_twist(2).to_braid(), tab), mu(3, 2)));
  EXPECT_THROW(psi4(BraidWord(3, {1}), tab), std::domain_error);
  EXPECT_THROW(psi4(BraidWord(4), tab), std::invalid_argument);
}

TEST(Psi4, EqualBraidsHaveEqualImages) {
  // Respelling an input with braid relations must not change the image.
  Sampler rng(61);
  const auto tab = build_generator_table(2, 3);
  for (int k = 0; k < 40; ++k) {
    const TypeBWord u = rng.type_b(3, 6), v = rng.type_b(3, 6);
    const BraidWord lhs = u.to_braid() * BraidWord(4, {2, 3, 2, -3, -2, -3}) * v.to_braid();
    const BraidWord rhs = u.to_braid() * v.to_braid();
    EXPECT_TRUE(equals(psi4(lhs, tab), psi4(rhs, tab)));
    const TypeBWord rel = TypeBWord{3, {1, 2, 1, 2, -1, -2, -1, -2}};
    EXPECT_TRUE(equals(psi4(u * rel * v, tab), psi4(u * v, tab)));
  }
}

TEST(Psi4, ImagesCentralizeTheRotationAndFixTheFirstStrand) {
  Sampler rng(62);
  for (const auto& [m, d] : repro::psi_parameters()) {
    const auto tab = build_generator_table(m, d);
    for (int k = 0; k < 25; ++k) {
      const BraidWord img = psi4(rng.type_b(d, 8), tab);
      EXPECT_TRUE(commutes(img, mu(m, d)));
      EXPECT_TRUE(is_pure_at(img, 1));
    }
  }
}

TEST(Psi4, InjectiveOnShortWords) {
  // All type-B words of length <= 4 for d = 2: images agree exactly when
  // the inputs are equal braids.
  const auto tab = build_generator_table(2, 2);
  std::vector<TypeBWord> words{TypeBWord{2, {}}};
  for (std::size_t head = 0; head < words.size(); ++head) {
    if (words[head].letters.size() == 4) continue;
    for (int l : {1, -1, 2, -2}) {
      TypeBWord next = words[head];
      next.letters.push_back(l);
      words.push_back(next);
    }
  }
  std::map<NormalForm, NormalForm> seen;
  for (const auto& w : words) {
    const NormalForm src = normal_form(w.to_braid());
    const NormalForm img = normal_form(psi4(w, tab));
    auto [it, fresh] = seen.emplace(src, img);
    if (!fresh) EXPECT_EQ(it->second, img);
  }
  std::set<NormalForm> images;
  for (const auto& [src, img] : seen) images.insert(img);
  EXPECT_EQ(images.size(), seen.size());
}

TEST(Psi5, DeletesTheFixedStrand) {
  Sampler rng(63);
  const auto tab = build_generator_table(3, 2);
  for (int k = 0; k < 30; ++k) {
    const BraidWord u = rng.type_b(2, 6).to_braid(), v = rng.type_b(2, 6).to_braid();
    const BraidWord pu = psi5(u, tab);
    EXPECT_EQ(pu.strands(), 6);
    EXPECT_TRUE(equals(psi5(u * v, tab), pu * psi5(v, tab)));
    EXPECT_TRUE(equals(psi6(u, tab), psi4(u, tab)));
  }
}

TEST(Psi, SuiteTalliesPass) {
  for (const auto& [m, d] : repro::psi_parameters()) {
    const auto r = repro::psi_suite_for(m, d, 64, 30);
    for (const auto& c : r.table) EXPECT_TRUE(c.pass) << c.name;
    EXPECT_TRUE(r.full_twist_maps_to_mu);
    for (const auto* t : {&r.deletion, &r.periodicity, &r.homomorphism, &r.centralizes, &r.purity}) {
      EXPECT_GT(t->total, 0);
      EXPECT_TRUE(t->ok()) << (t->failures.empty() ? "" : t->failures.front());
    }
  }
}

TEST(SubgroupInclusions, Guards) {
  EXPECT_THROW(psi1(BraidWord(3, {1})), std::domain_error);
  EXPECT_EQ(psi1(BraidWord(3, {1, 1})), BraidWord(3, {1, 1}));
  EXPECT_THROW(psi2(BraidWord(3, {1, 1})), std::domain_error);
  EXPECT_EQ(psi2(BraidWord(4, {3, 2})), BraidWord(4, {3, 2}));
  EXPECT_THROW(psi3(BraidWord(4, {3})), std::domain_error);
  EXPECT_EQ(psi3(BraidWord(4, {2})), BraidWord(4, {2}));
}
