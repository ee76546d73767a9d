#pragma once

// Compositions of n, tube braids <a>_c, direct sums (a_1 + ... + a_k)_c and
// their factored products.
//
// The source composition of a braid sits at its acting end (the right end of
// the word); the target is ext * source.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "garside.hpp"

namespace braidkit {

/// Ordered tuple of positive block sizes.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("a composition needs at least one block");
    for (int b : blocks_) {
      if (b < 1) throw std::invalid_argument("composition blocks must be positive");
    }
  }
  Composition(std::initializer_list<int> blocks) : Composition(std::vector<int>(blocks)) {}

  /// (m, m, ..., m) with k blocks.
  static Composition uniform(int m, int k) {
    return Composition(std::vector<int>(static_cast<std::size_t>(k), m));
  }

  const std::vector<int>& blocks() const { return blocks_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  int block(int i) const { return blocks_.at(static_cast<std::size_t>(i - 1)); }
  int total() const { return std::accumulate(blocks_.begin(), blocks_.end(), 0); }

  /// Number of strands before block i (1-based).
  int offset(int i) const {
    return std::accumulate(blocks_.begin(), blocks_.begin() + (i - 1), 0);
  }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> blocks_;
};

inline std::string to_string(const Composition& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.blocks().size(); ++i) {
    s += (i ? "," : "") + std::to_string(c.blocks()[i]);
  }
  return s + ")";
}

/// All compositions of n, in lexicographic order.
inline std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int b = 1; b <= left; ++b) {
      cur.push_back(b);
      self(self, left - b);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

/// w * (n_1..n_k) = (n_{theta^{-1}(1)}, ..., n_{theta^{-1}(k)}), theta = pi_w.
inline Composition act(const BraidWord& w, const Composition& c) {
  if (w.strands() != c.size()) throw std::invalid_argument("block count mismatch");
  const Permutation inv = induced_permutation(w).inverse();
  std::vector<int> out(c.blocks().size());
  for (int i = 1; i <= c.size(); ++i) out[static_cast<std::size_t>(i - 1)] = c.block(inv(i));
  return Composition(std::move(out));
}

namespace detail {

/// Positive braid carrying block j (size a) past block j+1 (size b),
/// no crossings inside a block.
inline BraidWord block_transposition(const Composition& c, int j) {
  const int n = c.total();
  const int o = c.offset(j);
  const int a = c.block(j);
  const int b = c.block(j + 1);
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  for (int t = 1; t <= a; ++t) img[static_cast<std::size_t>(o + t - 1)] = o + b + t;
  for (int t = 1; t <= b; ++t) img[static_cast<std::size_t>(o + a + t - 1)] = o + t;
  return permutation_braid_word(Permutation::from_images(img));
}

inline Composition swap_blocks(const Composition& c, int j) {
  std::vector<int> b = c.blocks();
  std::swap(b[static_cast<std::size_t>(j - 1)], b[static_cast<std::size_t>(j)]);
  return Composition(std::move(b));
}

}  // namespace detail

/// The tube braid <ext>_c: strand i of ext replaced by n_i parallel strands.
inline BraidWord cable(const BraidWord& ext, const Composition& c) {
  if (ext.strands() != c.size()) throw std::invalid_argument("block count mismatch");
  std::vector<BraidWord> pieces;
  Composition cur = c;
  const auto& ls = ext.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const int j = std::abs(*it);
    if (*it > 0) {
      pieces.push_back(detail::block_transposition(cur, j));
      cur = detail::swap_blocks(cur, j);
    } else {
      // <sigma_j^{-1}>_c = (<sigma_j>_{sigma_j^{-1} * c})^{-1}
      cur = detail::swap_blocks(cur, j);
      pieces.push_back(detail::block_transposition(cur, j).inverse());
    }
  }
  BraidWord out(c.total());
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) out *= *it;
  return out;
}

/// (p_1 + ... + p_k)_c: part i shifted onto block i.
inline BraidWord direct_sum(const std::vector<BraidWord>& parts, const Composition& c) {
  if (static_cast<int>(parts.size()) != c.size()) {
    throw std::invalid_argument("direct_sum: one part per block required");
  }
  const int n = c.total();
  BraidWord out(n);
  for (int i = 1; i <= c.size(); ++i) {
    const auto& p = parts[static_cast<std::size_t>(i - 1)];
    if (p.strands() != c.block(i)) {
      throw std::invalid_argument("direct_sum: part " + std::to_string(i) + " has " +
                                  std::to_string(p.strands()) + " strands, block has " +
                                  std::to_string(c.block(i)));
    }
    out *= p.shifted(c.offset(i), n);
  }
  return out;
}

/// <exterior>_source (interior_1 + ... + interior_k)_source.
struct FactoredBraid {
  Composition source;
  BraidWord exterior;
  std::vector<BraidWord> interiors;

  FactoredBraid() = default;
  FactoredBraid(Composition src, BraidWord ext, std::vector<BraidWord> ints)
      : source(std::move(src)), exterior(std::move(ext)), interiors(std::move(ints)) {
    if (exterior.strands() != source.size()) {
      throw std::invalid_argument("exterior must have one strand per block");
    }
    if (static_cast<int>(interiors.size()) != source.size()) {
      throw std::invalid_argument("one interior braid per block required");
    }
    for (int i = 1; i <= source.size(); ++i) {
      if (interiors[static_cast<std::size_t>(i - 1)].strands() != source.block(i)) {
        throw std::invalid_argument("interior " + std::to_string(i) + " has the wrong strand count");
      }
    }
  }

  Composition target() const { return act(exterior, source); }
  int strands() const { return source.total(); }
};

inline BraidWord flatten(const FactoredBraid& f) {
  return cable(f.exterior, f.source) * direct_sum(f.interiors, f.source);
}

/// Component-wise group equality.
inline bool factored_equals(const FactoredBraid& f, const FactoredBraid& g) {
  if (!(f.source == g.source) || !equals(f.exterior, g.exterior)) return false;
  for (std::size_t i = 0; i < f.interiors.size(); ++i) {
    if (!equals(f.interiors[i], g.interiors[i])) return false;
  }
  return true;
}

/// The exterior/interior factorization of w over c, when w carries the
/// standard curve system of c to a standard one. Candidates come from strand
/// deletion and are accepted only if they flatten back to w.
inline std::optional<FactoredBraid> decompose(const BraidWord& w, const Composition& c) {
  if (w.strands() != c.total()) throw std::invalid_argument("composition does not sum to strand count");
  std::vector<int> representatives;
  std::vector<BraidWord> interiors;
  for (int i = 1; i <= c.size(); ++i) {
    const int first = c.offset(i) + 1;
    representatives.push_back(first);
    std::vector<int> block;
    for (int s = first; s < first + c.block(i); ++s) block.push_back(s);
    interiors.push_back(restrict_to_strands(w, block).free_reduced());
  }
  FactoredBraid f(c, restrict_to_strands(w, representatives).free_reduced(), std::move(interiors));
  if (!equals(flatten(f), w)) return std::nullopt;
  return f;
}

/// Ext_c(w), when defined.
inline std::optional<BraidWord> exterior_braid(const BraidWord& w, const Composition& c) {
  auto f = decompose(w, c);
  if (!f) return std::nullopt;
  return f->exterior;
}

/// f * g, defined when source(f) = target(g).
inline FactoredBraid factored_multiply(const FactoredBraid& f, const FactoredBraid& g) {
  if (!(f.source == g.target())) {
    throw std::invalid_argument("non-composable factored braids: source " + to_string(f.source) +
                                " vs target " + to_string(g.target()));
  }
  // <F>(+f_i) <G>(+g_i) = <FG>(+ f_{theta(i)} g_i), theta = pi_G
  const Permutation theta = induced_permutation(g.exterior);
  std::vector<BraidWord> ints;
  for (int i = 1; i <= g.source.size(); ++i) {
    ints.push_back(f.interiors[static_cast<std::size_t>(theta(i) - 1)] *
                   g.interiors[static_cast<std::size_t>(i - 1)]);
  }
  return FactoredBraid(g.source, f.exterior * g.exterior, std::move(ints));
}

inline FactoredBraid factored_inverse(const FactoredBraid& f) {
  // (<F>(+f_i))^{-1} = <F^{-1}>_{F*n} (+h_k), h_k = f_{theta^{-1}(k)}^{-1}
  const Permutation inv = induced_permutation(f.exterior).inverse();
  std::vector<BraidWord> ints;
  for (int k = 1; k <= f.source.size(); ++k) {
    ints.push_back(f.interiors[static_cast<std::size_t>(inv(k) - 1)].inverse());
  }
  return FactoredBraid(f.target(), f.exterior.inverse(), std::move(ints));
}

/// Whether w fixes the standard curve system of c, i.e. w * C_c = C_c.
inline bool stabilizes(const BraidWord& w, const Composition& c) {
  auto f = decompose(w, c);
  return f && f->target() == c;
}

}  // namespace braidkit
