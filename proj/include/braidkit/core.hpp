#pragma once

// Strand bookkeeping for braid words.
//
// Convention: a word acts like a composition of maps, so its LAST letter acts
// first. The "source" end of a strand is therefore at the right of the word
// and a strand is named by its source position. The induced permutation sends
// a source position to the target position, giving pi(uv) = pi(u) * pi(v).
// With this convention mu_{m,d} induces (1)(x_{1,m} ... x_{1,1}) ... exactly.

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "word.hpp"

namespace braidkit {

inline Permutation induced_permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (int l : w.letters()) p.right_multiply_adjacent(std::abs(l));
  return p;
}

inline void check_position(const BraidWord& w, int i) {
  if (i < 1 || i > w.strands()) {
    throw std::out_of_range("position " + std::to_string(i) + " out of range for B_" +
                            std::to_string(w.strands()));
  }
}

inline bool is_pure_at(const BraidWord& w, int i) {
  check_position(w, i);
  return induced_permutation(w).fixes(i);
}

inline bool is_pure_on(const BraidWord& w, const std::set<int>& positions) {
  const Permutation p = induced_permutation(w);
  for (int i : positions) {
    check_position(w, i);
    if (!p.fixes(i)) return false;
  }
  return true;
}

/// Linking number of the strand with source position s against all others.
/// The strand must be pure; the signed crossing count is then even.
inline long linking_number_of(const BraidWord& w, int s) {
  check_position(w, s);
  if (!is_pure_at(w, s)) {
    throw std::domain_error("strand " + std::to_string(s) + " is not pure");
  }
  int pos = s;
  long signed_crossings = 0;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const int j = std::abs(*it);
    if (pos == j || pos == j + 1) {
      signed_crossings += *it > 0 ? 1 : -1;
      pos = pos == j ? j + 1 : j;
    }
  }
  if (signed_crossings % 2 != 0) {
    throw std::logic_error("odd crossing count on a pure strand");
  }
  return signed_crossings / 2;
}

/// lk on B_{n,1}: lk(sigma_1^2) = 1, lk(sigma_i) = 0 for i >= 2.
inline long linking_number_first(const BraidWord& w) { return linking_number_of(w, 1); }

/// lk' : the same construction for the strand at the last position.
inline long linking_number_last(const BraidWord& w) { return linking_number_of(w, w.strands()); }

inline bool is_1_unlinked(const BraidWord& w) {
  return is_pure_at(w, 1) && linking_number_first(w) == 0;
}

/// Keeps only the strands whose source positions are in `keep` and reindexes.
/// Any subset is allowed; the result lives in B_{|keep|}.
inline BraidWord restrict_to_strands(const BraidWord& w, const std::vector<int>& keep) {
  const int n = w.strands();
  std::vector<char> kept(static_cast<std::size_t>(n + 1), 0);
  for (int s : keep) {
    check_position(w, s);
    kept[static_cast<std::size_t>(s)] = 1;
  }
  const int k = static_cast<int>(std::count(kept.begin(), kept.end(), 1));
  if (k == 0) throw std::invalid_argument("cannot keep zero strands");

  // at[pos] = source label of the strand currently at pos (1-based).
  std::vector<int> at(static_cast<std::size_t>(n + 1));
  std::iota(at.begin(), at.end(), 0);
  std::vector<int> out;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const int j = std::abs(*it);
    const int a = at[static_cast<std::size_t>(j)];
    const int b = at[static_cast<std::size_t>(j + 1)];
    if (kept[static_cast<std::size_t>(a)] && kept[static_cast<std::size_t>(b)]) {
      int rank = 0;
      for (int p = 1; p < j; ++p) rank += kept[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])];
      out.push_back(*it > 0 ? rank + 1 : -(rank + 1));
    }
    std::swap(at[static_cast<std::size_t>(j)], at[static_cast<std::size_t>(j + 1)]);
  }
  std::reverse(out.begin(), out.end());
  return BraidWord(k, std::move(out));
}

/// Removes the strand with source position s. For s = 1 on 1-pure braids
/// this is the homomorphism nu: B_{n,1} -> B_{n-1}.
inline BraidWord delete_strand(const BraidWord& w, int s = 1) {
  if (w.strands() < 2) throw std::invalid_argument("delete_strand needs at least two strands");
  check_position(w, s);
  std::vector<int> keep;
  for (int i = 1; i <= w.strands(); ++i) {
    if (i != s) keep.push_back(i);
  }
  return restrict_to_strands(w, keep);
}

enum class Subgroup {
  type_b,    // A(B_n): 1-pure braids
  affine_a,  // A(~A_{n-1}): 1-unlinked braids
  affine_c,  // A(~C_{n-1}): {1, N}-pure braids
};

inline bool subgroup_membership(const BraidWord& w, Subgroup which) {
  switch (which) {
    case Subgroup::type_b:
      return is_pure_at(w, 1);
    case Subgroup::affine_a:
      return is_1_unlinked(w);
    case Subgroup::affine_c:
      return is_pure_on(w, {1, w.strands()});
  }
  return false;
}

inline Subgroup parse_subgroup(const std::string& name) {
  if (name == "typeB" || name == "type_b" || name == "B") return Subgroup::type_b;
  if (name == "affineA" || name == "affine_a") return Subgroup::affine_a;
  if (name == "affineC" || name == "affine_c") return Subgroup::affine_c;
  throw std::invalid_argument("unknown subgroup '" + name + "' (typeB, affineA, affineC)");
}

}  // namespace braidkit
