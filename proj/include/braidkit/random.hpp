#pragma once

// Seeded samplers for property suites and benchmarks.

#include <cstdint>
#include <random>
#include <vector>

#include "embeddings.hpp"
#include "tube.hpp"
#include "word.hpp"

namespace braidkit {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Exactly `length` random letters, adjacent cancellations allowed.
  BraidWord word_of_length(int n, int length) {
    if (n < 2) return BraidWord(n);
    std::vector<int> ls(static_cast<std::size_t>(length));
    for (auto& l : ls) l = uniform(1, n - 1) * (coin() ? 1 : -1);
    return BraidWord(n, std::move(ls));
  }

  BraidWord word(int n, int max_length) { return word_of_length(n, uniform(0, max_length)); }

  /// Random composition of n: each of the n-1 gaps is a cut with probability 1/2.
  Composition composition(int n) {
    std::vector<int> blocks{1};
    for (int i = 1; i < n; ++i) {
      if (coin()) {
        blocks.push_back(1);
      } else {
        ++blocks.back();
      }
    }
    return Composition(std::move(blocks));
  }

  /// Word over t = sigma_1^2, s_2, ..., s_d.
  TypeBWord type_b(int d, int max_length) {
    TypeBWord w{d, {}};
    const int len = uniform(0, max_length);
    for (int k = 0; k < len; ++k) w.letters.push_back(uniform(1, d) * (coin() ? 1 : -1));
    return w;
  }

  /// A random 1-pure braid in B_n, as a word over the type-B generators.
  BraidWord one_pure(int n, int max_length) {
    if (n < 2) return BraidWord(n);
    return type_b(n - 1, max_length).to_braid();
  }

  FactoredBraid factored(const Composition& c, int max_length) {
    std::vector<BraidWord> ints;
    for (int b : c.blocks()) ints.push_back(word(b, max_length));
    return FactoredBraid(c, word(c.size(), max_length), std::move(ints));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace braidkit
