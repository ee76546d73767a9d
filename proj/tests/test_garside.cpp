#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "test_support.hpp"

using namespace braidkit;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// a <= c in prefix order: c = a x with lengths adding up.
bool prefix_by_length(const Permutation& a, const Permutation& c) {
  return a.inversions() + (a.inverse() * c).inversions() == c.inversions();
}

// (a, b) is left-weighted iff no sigma_i that starts b can be absorbed into a.
bool left_weighted_by_length(const Permutation& a, const Permutation& b) {
  const int n = a.size();
  for (int i = 1; i < n; ++i) {
    const Permutation s = Permutation::adjacent(n, i);
    const bool starts_b = (s * b).inversions() == b.inversions() - 1;
    const bool a_absorbs = (a * s).inversions() == a.inversions() + 1;
    if (starts_b && a_absorbs) return false;
  }
  return true;
}

}  // namespace

TEST(DeltaWord, Literals) {
  EXPECT_EQ(delta_word(2), BraidWord(2, {1}));
  EXPECT_EQ(delta_word(3), BraidWord(3, {1, 2, 1}));
  EXPECT_EQ(delta_word(4), BraidWord(4, {1, 2, 1, 3, 2, 1}));
  EXPECT_EQ(delta_word(1).length(), 0u);
}

TEST(NormalForm, SmallExamples) {
  const NormalForm id = normal_form(BraidWord(3, {1, -1}));
  EXPECT_EQ(id.inf, 0);
  EXPECT_TRUE(id.factors.empty());
  const NormalForm d = normal_form(delta_word(4));
  EXPECT_EQ(d.inf, 1);
  EXPECT_TRUE(d.factors.empty());
  EXPECT_EQ(normal_form(delta_braid(3).pow(3)), normal_form(delta_word(3).pow(2)));
  EXPECT_EQ(normal_form(BraidWord(1)), (NormalForm{1, 0, {}}));
}

TEST(NormalForm, InverseCancelsOnRandomWords) {
  Sampler rng(21);
  for (int k = 0; k < 500; ++k) {
    const int n = rng.uniform(2, 8);
    const BraidWord w = rng.word(n, 20);
    EXPECT_TRUE(normal_form(w * w.inverse()).is_identity()) << format_word(w);
  }
}

TEST(NormalForm, FactorsAreProperAndLeftWeighted) {
  Sampler rng(22);
  for (int k = 0; k < 500; ++k) {
    const int n = rng.uniform(2, 8);
    const NormalForm nf = normal_form(rng.word(n, 20));
    for (const auto& f : nf.factors) {
      EXPECT_FALSE(f.is_identity());
      EXPECT_FALSE(simple::is_delta(f));
    }
    for (std::size_t i = 1; i < nf.factors.size(); ++i) {
      EXPECT_TRUE(left_weighted_by_length(nf.factors[i - 1], nf.factors[i]));
      EXPECT_TRUE(simple::is_left_weighted(nf.factors[i - 1], nf.factors[i]));
    }
  }
}

TEST(NormalForm, WordOfFormRoundTrips) {
  Sampler rng(23);
  for (int k = 0; k < 300; ++k) {
    const int n = rng.uniform(2, 7);
    const NormalForm nf = normal_form(rng.word(n, 16));
    EXPECT_EQ(normal_form(nf.to_word()), nf);
    EXPECT_EQ(inverse(nf), normal_form(nf.to_word().inverse()));
  }
}

TEST(NormalForm, AgreesWithTheFreeGroupAction) {
  Sampler rng(24);
  int equal_pairs = 0;
  for (int k = 0; k < 400; ++k) {
    const int n = rng.uniform(2, 5);
    const BraidWord u = rng.word(n, 8);
    // Half the time, build v equal to u by rewriting with relations.
    BraidWord v = rng.word(n, 8);
    if (k % 2 == 0) {
      v = u * BraidWord(n, {1, -1});
      if (n >= 3) v = BraidWord(n, {1, 2, 1, -2, -1, -2}) * v;
    }
    const bool garside = equals(u, v);
    EXPECT_EQ(garside, oracle::artin_equal(u, v)) << format_word(u) << " | " << format_word(v);
    equal_pairs += garside ? 1 : 0;
  }
  EXPECT_GT(equal_pairs, 150);
}

TEST(NormalForm, RelationInsertionLeavesItUnchanged) {
  Sampler rng(25);
  for (int k = 0; k < 400; ++k) {
    const int n = rng.uniform(3, 8);
    const BraidWord w = rng.word(n, 16);
    const int i = rng.uniform(1, n - 1);
    const int j = rng.uniform(1, n - 1);
    BraidWord rel(n);
    if (std::abs(i - j) == 1) {
      rel = BraidWord(n, {i, j, i, -j, -i, -j});
    } else if (i == j) {
      rel = BraidWord(n, {i, -i});
    } else {
      rel = BraidWord(n, {i, j, -i, -j});
    }
    const std::size_t cut = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(w.length())));
    std::vector<int> ls(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(cut));
    ls.insert(ls.end(), rel.letters().begin(), rel.letters().end());
    ls.insert(ls.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(cut), w.letters().end());
    EXPECT_EQ(normal_form(BraidWord(n, ls)), normal_form(w));
  }
}

TEST(Equality, PresentationRelations) {
  EXPECT_TRUE(equals(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  EXPECT_TRUE(equals(BraidWord(5, {1, 3}), BraidWord(5, {3, 1})));
  EXPECT_FALSE(equals(BraidWord(3, {1}), BraidWord(3, {2})));
  EXPECT_THROW(equals(BraidWord(3), BraidWord(4)), std::invalid_argument);
  EXPECT_TRUE(is_identity(BraidWord(4, {2, 3, -3, -2})));
}

TEST(Commutation, FullTwistIsCentral) {
  Sampler rng(26);
  for (int n = 2; n <= 6; ++n) {
    const BraidWord D2 = delta_word(n).pow(2);
    for (int k = 0; k < 20; ++k) EXPECT_TRUE(commutes(D2, rng.word(n, 12)));
    EXPECT_EQ(exponent_sum(D2), n * (n - 1));
  }
  EXPECT_FALSE(commutes(BraidWord(3, {1}), BraidWord(3, {2})));
}

TEST(Conjugation, PairOneIsConjugateByTheHalfTwistOfThree) {
  const BraidWord a(4, {1, 1, 2, 2, 2, 2}), b(4, {2, 2, 1, 1, 1, 1});
  EXPECT_TRUE(equals(conjugate_by(BraidWord(4, {1, 2, 1}), a), b));
}

TEST(PermutationBraid, CanonicalWords) {
  EXPECT_TRUE(permutation_braid_word(Permutation(4)).empty());
  const BraidWord d = permutation_braid_word(Permutation::reversal(4));
  EXPECT_EQ(d.length(), 6u);
  EXPECT_TRUE(equals(d, delta_word(4)));
  const Permutation t13 = Permutation::from_images({3, 2, 1});
  const BraidWord w = permutation_braid_word(t13);
  EXPECT_EQ(w.length(), 3u);
  EXPECT_EQ(induced_permutation(w), t13);
  for (const auto& p : all_permutations(5)) {
    const BraidWord pw = permutation_braid_word(p);
    EXPECT_EQ(static_cast<int>(pw.length()), p.inversions());
    EXPECT_EQ(induced_permutation(pw), p);
  }
}

TEST(Simple, JoinMatchesBruteForce) {
  const auto perms = all_permutations(4);
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      const Permutation* best = nullptr;
      for (const auto& c : perms) {
        if (prefix_by_length(a, c) && prefix_by_length(b, c) &&
            (!best || c.inversions() < best->inversions())) {
          best = &c;
        }
      }
      ASSERT_NE(best, nullptr);
      EXPECT_EQ(a * simple::join_complement(a, b), *best);
    }
  }
}

TEST(Simple, PrefixOrderAgreesWithLengths) {
  const auto perms = all_permutations(4);
  for (const auto& a : perms) {
    for (const auto& c : perms) EXPECT_EQ(simple::is_prefix(a, c), prefix_by_length(a, c));
  }
}

TEST(Periodicity, PowersOfTheRotations) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = -2 * n; k <= 2 * n; ++k) {
      const auto pd = is_periodic(delta_braid(n).pow(k));
      EXPECT_EQ(pd.kind, Periodicity::Kind::delta_type) << n << " " << k;
      EXPECT_EQ(pd.k, k);
      const auto pe = is_periodic(epsilon_braid(n).pow(k));
      if (k % (n - 1) == 0) {
        // epsilon^k is then a central power, reported as a delta power.
        EXPECT_EQ(pe.kind, Periodicity::Kind::delta_type);
        EXPECT_EQ(pe.k, static_cast<long>(k) * n / (n - 1));
      } else {
        EXPECT_EQ(pe.kind, Periodicity::Kind::epsilon_type) << n << " " << k;
        EXPECT_EQ(pe.k, k);
      }
    }
  }
}

TEST(Periodicity, Examples) {
  EXPECT_EQ(is_periodic(delta_braid(4).pow(3)), (Periodicity{Periodicity::Kind::delta_type, 3}));
  EXPECT_FALSE(is_periodic(BraidWord(3, {1})).periodic());
  const auto p = is_periodic(mu(3, 2));
  EXPECT_EQ(p.kind, Periodicity::Kind::epsilon_type);
  EXPECT_EQ(p.k, 2);
  EXPECT_TRUE(equals(mu(3, 2).pow(3), delta_word(7).pow(2)));
}

TEST(Periodicity, InvariantUnderConjugation) {
  Sampler rng(27);
  for (int k = 0; k < 150; ++k) {
    const int n = rng.uniform(2, 7);
    const int e = rng.uniform(-2 * n, 2 * n);
    const BraidWord base = rng.coin() ? delta_braid(n).pow(e) : epsilon_braid(n).pow(e);
    const BraidWord g = rng.word(n, 8);
    EXPECT_EQ(is_periodic(conjugate_by(g, base)), is_periodic(base));
  }
  for (int k = 0; k < 100; ++k) {
    const int n = rng.uniform(3, 6);
    const BraidWord w = rng.word(n, 10);
    EXPECT_EQ(is_periodic(conjugate_by(rng.word(n, 6), w)), is_periodic(w)) << format_word(w);
  }
}

TEST(RotationCentralizer, DependsOnlyOnTheGcd) {
  const auto [samples, mismatches] = repro::rotation_centralizer_sampling(0, 500);
  EXPECT_EQ(samples, 500);
  EXPECT_EQ(mismatches, 0);
}
