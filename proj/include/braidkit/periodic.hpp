#pragma once

// The rotation braids delta, epsilon and the periodic family mu_{m,d}.
//
// Positions for mu_{m,d}: x_0 = 1 and x_{i,j} = (i-1)m + j + 1, so the
// strands read x_0, x_{1,1..m}, ..., x_{d,1..m}. mu_{m,d} acts as the
// rotation x_{i,j} -> x_{i,j-1} (second index mod m) and fixes x_0.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "garside.hpp"
#include "tube.hpp"

namespace braidkit {

/// sigma_{n-1} ... sigma_1
inline BraidWord delta_braid(int n) {
  if (n < 1) throw std::invalid_argument("delta_braid needs n >= 1");
  std::vector<int> out;
  for (int j = n - 1; j >= 1; --j) out.push_back(j);
  return BraidWord(n, std::move(out));
}

/// delta * sigma_1
inline BraidWord epsilon_braid(int n) {
  if (n < 2) throw std::invalid_argument("epsilon_braid needs n >= 2");
  return delta_braid(n) * BraidWord(n, {1});
}

inline void check_mu_parameters(int m, int d) {
  if (m < 2) throw std::invalid_argument("mu needs m >= 2");
  if (d < 0) throw std::invalid_argument("mu needs d >= 0");
}

/// mu_{m,0} = 1 in B_1;
/// mu_{m,d} = mu_{m,d-1} (sigma_{dm} ... sigma_1)(sigma_1 ... sigma_{(d-1)m+1}).
inline BraidWord mu(int m, int d) {
  check_mu_parameters(m, d);
  std::vector<int> letters;
  for (int e = 1; e <= d; ++e) {
    for (int j = e * m; j >= 1; --j) letters.push_back(j);
    for (int j = 1; j <= (e - 1) * m + 1; ++j) letters.push_back(j);
  }
  return BraidWord(m * d + 1, std::move(letters));
}

/// x_0 = 1 for i = 0; x_{i,j} = (i-1)m + j + 1 otherwise.
inline int x_coordinate(int m, int d, int i, int j) {
  check_mu_parameters(m, d);
  if (i == 0) return 1;
  if (i < 1 || i > d || j < 1 || j > m) {
    throw std::out_of_range("x_{" + std::to_string(i) + "," + std::to_string(j) + "} out of range");
  }
  return (i - 1) * m + j + 1;
}

namespace detail {
inline int wrap_index(int j, int m) { return ((j - 1) % m + m) % m + 1; }
}  // namespace detail

/// (x_0)(x_{1,m} ... x_{1,1}) ... (x_{d,m} ... x_{d,1}).
inline Permutation mu_permutation(int m, int d) {
  check_mu_parameters(m, d);
  std::vector<int> img(static_cast<std::size_t>(m * d + 1));
  img[0] = 1;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= m; ++j) {
      img[static_cast<std::size_t>(x_coordinate(m, d, i, j) - 1)] =
          x_coordinate(m, d, i, detail::wrap_index(j - 1, m));
    }
  }
  return Permutation::from_images(img);
}

/// Decorated parameters: dvec = (d_0 + 1, d_1, ..., d_r), a composition of d + 1.
struct MuParameters {
  int m = 2;
  Composition dvec;

  int d() const { return dvec.total() - 1; }
  int d0() const { return dvec.block(1) - 1; }
  int r() const { return dvec.size() - 1; }
  int strands() const { return m * d() + 1; }
};

inline void check_decorated(int m, const Composition& dvec) {
  if (m < 2) throw std::invalid_argument("decorated mu needs m >= 2");
  if (dvec.blocks().empty()) throw std::invalid_argument("empty dvec");
}

/// L_m(dvec) = (m d_0 + 1, d_1 x m, ..., d_r x m).
inline Composition L_m(int m, const Composition& dvec) {
  check_decorated(m, dvec);
  std::vector<int> out{m * (dvec.block(1) - 1) + 1};
  for (int i = 2; i <= dvec.size(); ++i) {
    for (int t = 0; t < m; ++t) out.push_back(dvec.block(i));
  }
  return Composition(std::move(out));
}

/// <mu_{m,r}>_L (mu_{m,d_0} + (Delta^2_{(d_1)} + 1 + ... + 1) + ...)_L with L = L_m(dvec).
inline FactoredBraid mu_decorated(int m, const Composition& dvec) {
  check_decorated(m, dvec);
  const int r = dvec.size() - 1;
  const int d0 = dvec.block(1) - 1;
  std::vector<BraidWord> ints{mu(m, d0)};
  for (int i = 1; i <= r; ++i) {
    const int di = dvec.block(i + 1);
    ints.push_back(delta_word(di).pow(2));
    for (int t = 1; t < m; ++t) ints.push_back(BraidWord(di));
  }
  return FactoredBraid(L_m(m, dvec), mu(m, r), std::move(ints));
}

/// Block data (k_i, l_i) of a permutation commuting with mu_permutation(m, d):
/// theta(x_0) = x_0 and theta(x_{i,j}) = x_{k_i, j - l_i} with 0 <= l_i < m.
struct CentralizerBlocks {
  std::vector<int> k;  // k[i-1] = k_i
  std::vector<int> l;  // l[i-1] = l_i
  friend bool operator==(const CentralizerBlocks&, const CentralizerBlocks&) = default;
};

inline std::optional<CentralizerBlocks> is_centralizer_permutation(const Permutation& p, int m, int d) {
  check_mu_parameters(m, d);
  if (p.size() != m * d + 1) throw std::invalid_argument("permutation size must be md+1");
  if (p(1) != 1) return std::nullopt;
  CentralizerBlocks out;
  std::vector<bool> used(static_cast<std::size_t>(d + 1), false);
  for (int i = 1; i <= d; ++i) {
    const int image = p(x_coordinate(m, d, i, 1)) - 2;  // (k-1)m + (j'-1)
    const int k = image / m + 1;
    const int j1 = image % m + 1;
    const int l = detail::wrap_index(1 - j1 + 1, m) - 1;  // j1 = 1 - l mod m
    if (used[static_cast<std::size_t>(k)]) return std::nullopt;
    used[static_cast<std::size_t>(k)] = true;
    for (int j = 1; j <= m; ++j) {
      if (p(x_coordinate(m, d, i, j)) != x_coordinate(m, d, k, detail::wrap_index(j - l, m))) {
        return std::nullopt;
      }
    }
    out.k.push_back(k);
    out.l.push_back(l);
  }
  return out;
}

/// Structural membership of f in Z(mu_{m,dvec}) with source L_m(dvec):
/// the exterior centralizes mu_{m,r} with block data (k_i, l_i), d_{k_i} = d_i,
/// the core interior centralizes mu_{m,d_0}, and group i of interiors reads
/// (a_i Delta^2 x l_i, a_i x (m - l_i)).
inline bool centralizer_membership_structural(const FactoredBraid& f, int m, const Composition& dvec) {
  const Composition L = L_m(m, dvec);
  if (!(f.source == L)) throw std::invalid_argument("source must equal L_m(dvec)");
  const int r = dvec.size() - 1;
  const int d0 = dvec.block(1) - 1;
  if (!commutes(f.exterior, mu(m, r))) return false;
  if (!commutes(f.interiors[0], mu(m, d0))) return false;
  if (r == 0) return true;
  const auto blocks = is_centralizer_permutation(induced_permutation(f.exterior), m, r);
  if (!blocks) return false;
  for (int i = 1; i <= r; ++i) {
    const int di = dvec.block(i + 1);
    if (dvec.block(blocks->k[static_cast<std::size_t>(i - 1)] + 1) != di) return false;
    const int li = blocks->l[static_cast<std::size_t>(i - 1)];
    auto interior = [&](int j) -> const BraidWord& {
      return f.interiors[static_cast<std::size_t>(1 + (i - 1) * m + (j - 1))];
    };
    const BraidWord& base = interior(m);
    const BraidWord twisted = base * delta_word(di).pow(2);
    for (int j = 1; j <= m; ++j) {
      if (!equals(interior(j), j <= li ? twisted : base)) return false;
    }
  }
  return true;
}

}  // namespace braidkit
