#pragma once

// Oracles that do not go through the Garside machinery.

#include <vector>

#include "braidkit/braidkit.hpp"

namespace oracle {

using FreeWord = std::vector<int>;  // letters +-1..+-n, x_i^{-1} is -i

inline void push_reduced(FreeWord& w, int x) {
  if (!w.empty() && w.back() == -x) {
    w.pop_back();
  } else {
    w.push_back(x);
  }
}

/// Artin's faithful action of B_n on the free group F_n:
///   sigma_i : x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i.
/// Braids are compared through the images of the free generators. Letters
/// are substituted left to right, which gives an anti-homomorphism; it is
/// still injective, which is all equality testing needs.
class ArtinAction {
 public:
  explicit ArtinAction(int n) : images_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) images_[static_cast<std::size_t>(i)] = {i + 1};
  }

  /// Substitutes the letter's automorphism into the current images.
  void apply(int letter) {
    const int i = std::abs(letter);
    for (auto& img : images_) {
      FreeWord out;
      for (int x : img) {
        for (int y : letter_image(letter, i, x)) push_reduced(out, y);
      }
      img = std::move(out);
    }
  }

  const std::vector<FreeWord>& images() const { return images_; }

 private:
  static FreeWord letter_image(int letter, int i, int x) {
    const int a = std::abs(x);
    FreeWord base;
    if (a == i) {
      base = letter > 0 ? FreeWord{i, i + 1, -i} : FreeWord{i + 1};
    } else if (a == i + 1) {
      base = letter > 0 ? FreeWord{i} : FreeWord{-(i + 1), i, i + 1};
    } else {
      base = {a};
    }
    if (x > 0) return base;
    FreeWord inv(base.rbegin(), base.rend());
    for (int& y : inv) y = -y;
    return inv;
  }

  std::vector<FreeWord> images_;
};

inline std::vector<FreeWord> artin_images(const braidkit::BraidWord& w) {
  ArtinAction a(w.strands());
  for (int l : w.letters()) a.apply(l);
  return a.images();
}

inline bool artin_equal(const braidkit::BraidWord& u, const braidkit::BraidWord& v) {
  return artin_images(u) == artin_images(v);
}

/// Half the signed number of crossings that the strand at `s` takes part in,
/// via the exponent sum lost when the strand is deleted.
inline long lk_by_deletion(const braidkit::BraidWord& w, int s) {
  const long lost = w.exponent_sum() - braidkit::delete_strand(w, s).exponent_sum();
  return lost / 2;
}

/// Traces of M, M^2, ..., M^k for the Burau matrix M of w at t = -1. Each
/// is a conjugacy invariant, and at t = -1 every entry stays integral.
inline std::vector<long long> burau_traces(const braidkit::BraidWord& w, int k) {
  const int n = w.strands();
  using Matrix = std::vector<std::vector<long long>>;
  auto identity = [n] {
    Matrix m(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
  };
  auto mul = [n](const Matrix& a, const Matrix& b) {
    Matrix c(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t l = 0; l < a.size(); ++l)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
  };
  Matrix m = identity();
  for (int letter : w.letters()) {
    Matrix g = identity();
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    // Block [[1-t, t], [1, 0]] and its inverse [[0, 1], [1/t, 1-1/t]] at t = -1.
    if (letter > 0) {
      g[i][i] = 2, g[i][i + 1] = -1, g[i + 1][i] = 1, g[i + 1][i + 1] = 0;
    } else {
      g[i][i] = 0, g[i][i + 1] = 1, g[i + 1][i] = -1, g[i + 1][i + 1] = 2;
    }
    m = mul(m, g);
  }
  std::vector<long long> out;
  Matrix p = identity();
  for (int e = 1; e <= k; ++e) {
    p = mul(p, m);
    long long tr = 0;
    for (int i = 0; i < n; ++i) tr += p[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    out.push_back(tr);
  }
  return out;
}

}  // namespace oracle
