#pragma once

// Left normal form in B_n.
//
// A simple element (permutation braid) is stored as its induced permutation.
// For a simple A with permutation p:
//   i is in the finishing set  F(A)  iff  p(i) > p(i+1)       (A = A' sigma_i)
//   i is in the starting set   S(A)  iff  p^-1(i) > p^-1(i+1) (A = sigma_i A')
// A pair (A, B) is left-weighted when S(B) is a subset of F(A).

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "permutation.hpp"
#include "word.hpp"

namespace braidkit {

/// Half twist sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1).
inline BraidWord delta_word(int n) {
  if (n < 1) throw std::invalid_argument("delta_word needs n >= 1");
  std::vector<int> out;
  for (int top = 1; top <= n - 1; ++top) {
    for (int j = top; j >= 1; --j) out.push_back(j);
  }
  return BraidWord(n, std::move(out));
}

namespace simple {

inline bool in_finishing_set(const Permutation& p, int i) {
  return p.raw(static_cast<std::size_t>(i - 1)) > p.raw(static_cast<std::size_t>(i));
}

inline std::vector<int> finishing_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i) {
    if (in_finishing_set(p, i)) out.push_back(i);
  }
  return out;
}

inline std::vector<int> starting_set(const Permutation& p) { return finishing_set(p.inverse()); }

/// Conjugation by Delta: sigma_i -> sigma_{n-i}.
inline Permutation flip(const Permutation& p) {
  const int n = p.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = n + 1 - p(n + 1 - i);
  return Permutation::from_images(img);
}

inline Permutation flip_power(const Permutation& p, long k) { return (k % 2 != 0) ? flip(p) : p; }

inline bool is_delta(const Permutation& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    if (p.raw(static_cast<std::size_t>(i)) != n - 1 - i) return false;
  }
  return true;
}

/// Simple element Delta * a^{-1} (the right complement of a in Delta).
inline Permutation right_complement(const Permutation& a) {
  return Permutation::reversal(a.size()) * a.inverse();
}

/// Simple element a^{-1} * Delta (the left complement of a in Delta).
inline Permutation left_complement(const Permutation& a) {
  return a.inverse() * Permutation::reversal(a.size());
}

inline bool is_left_weighted(const Permutation& a, const Permutation& b) {
  const Permutation binv = b.inverse();
  for (int i = 1; i < b.size(); ++i) {
    if (in_finishing_set(binv, i) && !in_finishing_set(a, i)) return false;
  }
  return true;
}

/// Makes (a, b) left-weighted without changing the product a*b.
/// Returns true if anything moved.
inline bool left_weight(Permutation& a, Permutation& b) {
  const int n = a.size();
  bool changed = false;
  std::vector<int> binv(static_cast<std::size_t>(n));
  for (;;) {
    for (int i = 0; i < n; ++i) binv[static_cast<std::size_t>(b.raw(static_cast<std::size_t>(i)))] = i;
    int move = 0;
    for (int i = 1; i < n; ++i) {
      if (binv[static_cast<std::size_t>(i - 1)] > binv[static_cast<std::size_t>(i)] &&
          !in_finishing_set(a, i)) {
        move = i;
        break;
      }
    }
    if (move == 0) return changed;
    a.right_multiply_adjacent(move);
    b.left_multiply_adjacent(move);
    changed = true;
  }
}

/// Canonical reduced positive word of a permutation braid: repeatedly peel
/// the smallest index of the starting set.
inline BraidWord word_of(const Permutation& p) {
  Permutation rest = p;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.inversions()));
  for (;;) {
    const Permutation inv = rest.inverse();
    int i = 1;
    while (i < rest.size() && !in_finishing_set(inv, i)) ++i;
    if (i >= rest.size()) break;
    out.push_back(i);
    rest.left_multiply_adjacent(i);
  }
  return BraidWord(p.size(), std::move(out));
}

/// Lowest common multiple for prefix order: returns c with a * c = a v b.
/// Uses that the inversion set of a join in the weak order is the transitive
/// closure of the union.
inline Permutation join_complement(const Permutation& a, const Permutation& b) {
  const int n = a.size();
  // crosses[p][q], p < q target positions, true iff those strands cross.
  std::vector<std::vector<char>> crosses(static_cast<std::size_t>(n),
                                         std::vector<char>(static_cast<std::size_t>(n), 0));
  const Permutation ai = a.inverse();
  const Permutation bi = b.inverse();
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      crosses[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          ai.raw(static_cast<std::size_t>(p)) > ai.raw(static_cast<std::size_t>(q)) ||
          bi.raw(static_cast<std::size_t>(p)) > bi.raw(static_cast<std::size_t>(q));
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (!crosses[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]) continue;
        for (int r = q + 1; r < n; ++r) {
          if (crosses[static_cast<std::size_t>(q)][static_cast<std::size_t>(r)] &&
              !crosses[static_cast<std::size_t>(p)][static_cast<std::size_t>(r)]) {
            crosses[static_cast<std::size_t>(p)][static_cast<std::size_t>(r)] = 1;
            grew = true;
          }
        }
      }
    }
  }
  // Rebuild the join from its crossing set: the source of the strand ending
  // at p is p + (#later targets crossing it) - (#earlier targets crossing it).
  std::vector<int> source_of(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    int s = p;
    for (int q = 0; q < n; ++q) {
      if (q < p && crosses[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)]) --s;
      if (q > p && crosses[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]) ++s;
    }
    source_of[static_cast<std::size_t>(p)] = s + 1;
  }
  const Permutation join = Permutation::from_images(source_of).inverse();
  return a.inverse() * join;
}

/// a is a prefix of c (c = a * x with x positive) for simple a, c.
inline bool is_prefix(const Permutation& a, const Permutation& c) {
  const Permutation ai = a.inverse();
  const Permutation ci = c.inverse();
  const int n = a.size();
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (ai.raw(static_cast<std::size_t>(p)) > ai.raw(static_cast<std::size_t>(q)) &&
          !(ci.raw(static_cast<std::size_t>(p)) > ci.raw(static_cast<std::size_t>(q)))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace simple

/// Delta^inf * A_1 ... A_r with every A_i strictly between 1 and Delta and
/// every adjacent pair left-weighted. Unique per group element.
struct NormalForm {
  int strands = 1;
  long inf = 0;
  std::vector<Permutation> factors;

  long sup() const { return inf + static_cast<long>(factors.size()); }
  std::size_t canonical_length() const { return factors.size(); }
  bool is_identity() const { return inf == 0 && factors.empty(); }

  BraidWord to_word() const {
    BraidWord out(strands);
    out *= delta_word(strands).pow(inf);
    for (const auto& f : factors) out *= simple::word_of(f);
    return out;
  }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm& a, const NormalForm& b) {
    if (auto c = a.strands <=> b.strands; c != 0) return c;
    if (auto c = a.inf <=> b.inf; c != 0) return c;
    return a.factors <=> b.factors;
  }
};

/// Incremental left normal form under right multiplication by simples.
class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(int strands, long inf = 0) {
    nf_.strands = strands;
    nf_.inf = strands > 1 ? inf : 0;
  }

  void multiply_simple(Permutation x) {
    if (nf_.strands <= 1 || x.is_identity()) return;
    auto& f = nf_.factors;
    f.push_back(std::move(x));
    for (std::size_t k = f.size() - 1; k > 0; --k) {
      if (!simple::left_weight(f[k - 1], f[k])) break;
    }
    std::size_t lead = 0;
    while (lead < f.size() && simple::is_delta(f[lead])) ++lead;
    if (lead > 0) {
      nf_.inf += static_cast<long>(lead);
      f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
    }
    while (!f.empty() && f.back().is_identity()) f.pop_back();
  }

  void multiply_delta_power(long k) {
    if (nf_.strands <= 1 || k == 0) return;
    // X Delta^k = Delta^k flip^k(X)
    if (k % 2 != 0) {
      for (auto& x : nf_.factors) x = simple::flip(x);
    }
    nf_.inf += k;
  }

  void multiply_letter(int letter) {
    const int n = nf_.strands;
    if (letter > 0) {
      multiply_simple(Permutation::adjacent(n, letter));
    } else {
      // sigma^{-1} = Delta^{-1} (Delta sigma^{-1})
      multiply_delta_power(-1);
      Permutation x = Permutation::reversal(n);
      x.right_multiply_adjacent(-letter);
      multiply_simple(std::move(x));
    }
  }

  const NormalForm& result() const& { return nf_; }
  NormalForm result() && { return std::move(nf_); }

 private:
  NormalForm nf_;
};

inline NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  if (n <= 1) return NormalForm{n, 0, {}};
  // Collect every Delta^{-1} at the front: a letter is flipped once per
  // inverse letter standing to its right.
  const auto& ls = w.letters();
  std::vector<char> flips(ls.size(), 0);
  long negatives = 0;
  for (std::size_t k = ls.size(); k-- > 0;) {
    flips[k] = static_cast<char>(negatives % 2);
    if (ls[k] < 0) ++negatives;
  }
  NormalFormBuilder b(n, -negatives);
  const Permutation w0 = Permutation::reversal(n);
  for (std::size_t k = 0; k < ls.size(); ++k) {
    const int j = std::abs(ls[k]);
    Permutation x = ls[k] > 0 ? Permutation::adjacent(n, j) : w0;
    if (ls[k] < 0) x.right_multiply_adjacent(j);
    if (flips[k]) x = simple::flip(x);
    b.multiply_simple(std::move(x));
  }
  return std::move(b).result();
}

/// Normal form of Delta^inf * x_1 * ... * x_k for arbitrary simples x_i.
inline NormalForm normal_form(int strands, long inf, const std::vector<Permutation>& simples) {
  NormalFormBuilder b(strands, inf);
  for (const auto& x : simples) b.multiply_simple(x);
  return std::move(b).result();
}

inline NormalForm inverse(const NormalForm& x) {
  // (Delta^p A_1...A_r)^{-1} = A_r^{-1} ... A_1^{-1} Delta^{-p}
  //   and A^{-1} = (A^{-1} Delta) Delta^{-1}.
  const int n = x.strands;
  NormalFormBuilder b(n, 0);
  for (auto it = x.factors.rbegin(); it != x.factors.rend(); ++it) {
    b.multiply_simple(simple::left_complement(*it));
    b.multiply_delta_power(-1);
  }
  b.multiply_delta_power(-x.inf);
  return std::move(b).result();
}

inline NormalForm multiply(const NormalForm& x, const NormalForm& y) {
  NormalFormBuilder b(x.strands, x.inf);
  for (const auto& f : x.factors) b.multiply_simple(f);
  b.multiply_delta_power(y.inf);
  for (const auto& f : y.factors) b.multiply_simple(f);
  return std::move(b).result();
}

inline void require_same_strands(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw std::invalid_argument("strand count mismatch: B_" + std::to_string(u.strands()) +
                                " vs B_" + std::to_string(v.strands()));
  }
}

inline bool equals(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u, v);
  return normal_form(u) == normal_form(v);
}

inline bool is_identity(const BraidWord& w) { return normal_form(w).is_identity(); }

inline bool commutes(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u, v);
  return normal_form(u * v) == normal_form(v * u);
}

/// g a g^{-1}, as a word.
inline BraidWord conjugate_by(const BraidWord& g, const BraidWord& a) {
  require_same_strands(g, a);
  return g * a * g.inverse();
}

inline long exponent_sum(const BraidWord& w) { return w.exponent_sum(); }

/// Canonical positive word for the permutation braid of p.
inline BraidWord permutation_braid_word(const Permutation& p) { return simple::word_of(p); }

/// Delta^(2k) as a normal form.
inline NormalForm central_power(int n, long k) { return NormalForm{n, n > 1 ? 2 * k : 0, {}}; }

struct Periodicity {
  enum class Kind { delta_type, epsilon_type, not_periodic };
  Kind kind = Kind::not_periodic;
  long k = 0;

  bool periodic() const { return kind != Kind::not_periodic; }
  friend bool operator==(const Periodicity&, const Periodicity&) = default;
};

inline std::string to_string(Periodicity::Kind k) {
  switch (k) {
    case Periodicity::Kind::delta_type:
      return "delta_type";
    case Periodicity::Kind::epsilon_type:
      return "epsilon_type";
    case Periodicity::Kind::not_periodic:
      return "not_periodic";
  }
  return "?";
}

/// Decides whether w is conjugate to a power of delta or epsilon.
///
/// If w ~ delta^k then w^n = Delta^(2k) and the exponent sum is k(n-1); if
/// w ~ epsilon^k then w^(n-1) = Delta^(2k) and the exponent sum is kn. Roots
/// are unique up to conjugacy, so these power tests are also sufficient.
inline Periodicity is_periodic(const BraidWord& w) {
  const int n = w.strands();
  if (n < 2) throw std::invalid_argument("periodicity needs n >= 2");
  const long s = w.exponent_sum();
  if (s % (n - 1) == 0) {
    const long k = s / (n - 1);
    if (normal_form(w.pow(n)) == central_power(n, k)) return {Periodicity::Kind::delta_type, k};
  }
  if (s % n == 0) {
    const long k = s / n;
    if (normal_form(w.pow(n - 1)) == central_power(n, k)) {
      return {Periodicity::Kind::epsilon_type, k};
    }
  }
  return {};
}

}  // namespace braidkit
