#pragma once

// Monomorphisms between Artin groups realized on braid words.
//
// psi1..psi3 are subgroup inclusions inside B_{n+1}. psi4', psi5', psi6'
// send A(B_d) = B_{d+1,1} into the centralizer of mu_{m,d}. They are given
// by a generator table on {t = sigma_1^2, s_2, ..., s_d}:
//   t   -> mu_{m,1} on the first m+1 strands (the inner disk turned by 2pi/m)
//   s_i -> the m rotated copies  mu^j sigma_{(i-1)m+1} mu^{-j}, j = 0..m-1
// and every table is checked against the relations before use.

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "garside.hpp"
#include "periodic.hpp"

namespace braidkit {

inline BraidWord psi1(const BraidWord& w) {
  if (!subgroup_membership(w, Subgroup::type_b)) throw std::domain_error("psi1: braid is not 1-pure");
  return w;
}

inline BraidWord psi2(const BraidWord& w) {
  if (!subgroup_membership(w, Subgroup::affine_a)) throw std::domain_error("psi2: braid is not 1-unlinked");
  return w;
}

inline BraidWord psi3(const BraidWord& w) {
  if (!subgroup_membership(w, Subgroup::affine_c)) {
    throw std::domain_error("psi3: braid is not {1,n}-pure");
  }
  return w;
}

/// A word over the type-B generators: generator 1 is t = sigma_1^2,
/// generator i >= 2 is s_i = sigma_i. Signs carry the exponent.
struct TypeBWord {
  int d = 1;  // the word lives in B_{d+1,1}
  std::vector<int> letters;

  BraidWord to_braid() const {
    std::vector<int> out;
    for (int l : letters) {
      if (std::abs(l) == 1) {
        out.push_back(l);
        out.push_back(l);
      } else {
        out.push_back(l);
      }
    }
    return BraidWord(d + 1, std::move(out));
  }

  TypeBWord inverse() const {
    TypeBWord out{d, {letters.rbegin(), letters.rend()}};
    for (int& l : out.letters) l = -l;
    return out;
  }

  TypeBWord pow(int k) const {
    const TypeBWord base = k < 0 ? inverse() : *this;
    TypeBWord out{d, {}};
    for (int i = 0; i < std::abs(k); ++i) out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
    return out;
  }

  friend TypeBWord operator*(TypeBWord u, const TypeBWord& v) {
    if (u.d != v.d) throw std::invalid_argument("type-B words over different d");
    u.letters.insert(u.letters.end(), v.letters.begin(), v.letters.end());
    return u;
  }
};

/// s_d ... s_2 t, the image of epsilon_{(d+1)}.
inline TypeBWord type_b_rotation(int d) {
  TypeBWord out{d, {}};
  for (int i = d; i >= 2; --i) out.letters.push_back(i);
  out.letters.push_back(1);
  return out;
}

/// Rewrites a braid word over {sigma_1^2, sigma_2, ..., sigma_d}. Every
/// maximal run of sigma_1^{+-1} (after free reduction) must have even length.
inline TypeBWord rewrite_type_b(const BraidWord& w) {
  const BraidWord r = w.free_reduced();
  TypeBWord out{w.strands() - 1, {}};
  const auto& ls = r.letters();
  for (std::size_t k = 0; k < ls.size();) {
    if (std::abs(ls[k]) != 1) {
      out.letters.push_back(ls[k]);
      ++k;
      continue;
    }
    std::size_t run = k;
    while (run < ls.size() && ls[run] == ls[k]) ++run;
    if ((run - k) % 2 != 0) {
      throw std::domain_error("cannot rewrite over the type-B generators: odd run of sigma_1");
    }
    for (std::size_t t = 0; t < (run - k) / 2; ++t) out.letters.push_back(ls[k]);
    k = run;
  }
  return out;
}

/// Delta^2 of B_{d+1} spelled over the type-B generators: (s_d ... s_2 t)^d.
inline TypeBWord type_b_full_twist(int d) {
  if (d < 1) throw std::invalid_argument("type_b_full_twist needs d >= 1");
  return type_b_rotation(d).pow(d);
}

/// Images of t, s_2, ..., s_d in B_{md+1}.
struct GeneratorImageTable {
  int m = 2;
  int d = 1;
  BraidWord t;
  std::vector<BraidWord> s;  // s[i-2] is the image of s_i

  int target_strands() const { return m * d + 1; }
  const BraidWord& image(int generator) const {
    return generator == 1 ? t : s.at(static_cast<std::size_t>(generator - 2));
  }
};

struct TableCheck {
  std::string name;
  bool pass = false;
};

/// Constraint suite: (a) type-B relations, (b) images commute with mu_{m,d},
/// (c) Delta^2_{(d+1)} = (s_d ... s_2 t)^d maps to mu_{m,d}, (d) images are 1-pure.
inline std::vector<TableCheck> validate_table(const GeneratorImageTable& tab) {
  std::vector<TableCheck> out;
  const int n = tab.target_strands();
  const BraidWord M = mu(tab.m, tab.d);
  auto add = [&](std::string name, bool pass) { out.push_back({std::move(name), pass}); };
  auto gen = [&](int i) -> const BraidWord& { return tab.image(i); };

  // (a)
  if (tab.d >= 2) {
    add("a: t s2 t s2 = s2 t s2 t", equals(gen(1) * gen(2) * gen(1) * gen(2), gen(2) * gen(1) * gen(2) * gen(1)));
  }
  for (int j = 3; j <= tab.d; ++j) {
    add("a: t s" + std::to_string(j) + " = s" + std::to_string(j) + " t", commutes(gen(1), gen(j)));
  }
  for (int i = 2; i <= tab.d; ++i) {
    for (int j = i + 1; j <= tab.d; ++j) {
      const std::string si = "s" + std::to_string(i), sj = "s" + std::to_string(j);
      if (j == i + 1) {
        add("a: " + si + " " + sj + " " + si + " = " + sj + " " + si + " " + sj,
            equals(gen(i) * gen(j) * gen(i), gen(j) * gen(i) * gen(j)));
      } else {
        add("a: " + si + " " + sj + " = " + sj + " " + si, commutes(gen(i), gen(j)));
      }
    }
  }
  // (b), (d)
  for (int i = 1; i <= tab.d; ++i) {
    const std::string name = i == 1 ? "t" : "s" + std::to_string(i);
    if (gen(i).strands() != n) {
      add("image " + name + " has md+1 strands", false);
      continue;
    }
    add("b: " + name + " commutes with mu", commutes(gen(i), M));
    add("d: " + name + " is 1-pure", is_pure_at(gen(i), 1));
  }
  // (c)
  BraidWord eps(n);
  for (int i = tab.d; i >= 2; --i) eps *= gen(i);
  eps *= gen(1);
  add("c: Delta^2 maps to mu_{m,d}", equals(eps.pow(tab.d), M));
  return out;
}

inline bool table_is_valid(const GeneratorImageTable& tab) {
  for (const auto& c : validate_table(tab)) {
    if (!c.pass) return false;
  }
  return true;
}

inline GeneratorImageTable build_generator_table(int m, int d) {
  if (m < 2 || d < 1) throw std::invalid_argument("generator table needs m >= 2 and d >= 1");
  const int n = m * d + 1;
  const BraidWord M = mu(m, d);
  GeneratorImageTable tab{m, d, mu(m, 1).widened(n), {}};
  for (int i = 2; i <= d; ++i) {
    const BraidWord arc(n, {(i - 1) * m + 1});
    BraidWord image(n);
    for (int j = 0; j < m; ++j) image *= conjugate_by(M.pow(j), arc);
    tab.s.push_back(image.free_reduced());
  }
  for (const auto& c : validate_table(tab)) {
    if (!c.pass) throw std::logic_error("generator table failed validation: " + c.name);
  }
  return tab;
}

inline BraidWord psi4(const TypeBWord& w, const GeneratorImageTable& tab) {
  if (w.d != tab.d) throw std::invalid_argument("word and table disagree on d");
  BraidWord out(tab.target_strands());
  for (int l : w.letters) {
    const BraidWord& g = tab.image(std::abs(l));
    out *= l > 0 ? g : g.inverse();
  }
  return out;
}

inline BraidWord psi4(const BraidWord& w, const GeneratorImageTable& tab) {
  if (w.strands() != tab.d + 1) throw std::invalid_argument("psi4 expects a braid in B_{d+1}");
  if (!is_pure_at(w, 1)) throw std::domain_error("psi4: braid is not 1-pure");
  return psi4(rewrite_type_b(w), tab);
}

/// nu o psi4, landing in B_{md}.
inline BraidWord psi5(const BraidWord& w, const GeneratorImageTable& tab) {
  return delete_strand(psi4(w, tab), 1);
}

/// psi1 o psi4, landing in B_{md+1}.
inline BraidWord psi6(const BraidWord& w, const GeneratorImageTable& tab) { return psi1(psi4(w, tab)); }

}  // namespace braidkit
