#pragma once

// Conjugacy search: super summit sets plus a bounded breadth-first fallback.
//
// Conjugation here is right conjugation x^a = a^{-1} x a on normal forms; the
// public search returns g with g a g^{-1} = b.

#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "garside.hpp"

namespace braidkit {

namespace summit {

/// Normal form of a^{-1} x a for a simple a.
inline NormalForm conjugate_by_simple(const NormalForm& x, const Permutation& a) {
  // a^{-1} = Delta^{-1} R with R = Delta a^{-1}; R Delta^p = Delta^p flip^p(R).
  std::vector<Permutation> simples;
  simples.reserve(x.factors.size() + 2);
  simples.push_back(simple::flip_power(simple::right_complement(a), x.inf));
  simples.insert(simples.end(), x.factors.begin(), x.factors.end());
  simples.push_back(a);
  return normal_form(x.strands, x.inf - 1, simples);
}

/// Normal form of a x a^{-1} for a simple a.
inline NormalForm conjugate_by_simple_inverse(const NormalForm& x, const Permutation& a) {
  NormalFormBuilder b(x.strands, x.inf);
  b.multiply_simple(simple::flip_power(a, x.inf));
  for (const auto& f : x.factors) b.multiply_simple(f);
  b.multiply_simple(simple::left_complement(a));
  b.multiply_delta_power(-1);
  return std::move(b).result();
}

struct Conjugated {
  NormalForm form;
  BraidWord conjugator;  // form = conjugator^{-1} * original * conjugator
};

/// Repeated cycling and decycling until inf is maximal and sup minimal.
inline Conjugated to_super_summit(const NormalForm& start) {
  const int n = start.strands;
  const int rounds = n * (n - 1) / 2 + 1;
  Conjugated cur{start, BraidWord(n)};
  for (bool improved = true; improved;) {
    improved = false;
    Conjugated probe = cur;
    for (int k = 0; k < rounds && !probe.form.factors.empty(); ++k) {
      const Permutation a = simple::flip_power(probe.form.factors.front(), probe.form.inf);
      probe.form = conjugate_by_simple(probe.form, a);
      probe.conjugator *= simple::word_of(a);
      if (probe.form.inf > cur.form.inf) {
        cur = probe;
        improved = true;
        break;
      }
    }
    if (improved) continue;
    probe = cur;
    for (int k = 0; k < rounds && !probe.form.factors.empty(); ++k) {
      const Permutation last = probe.form.factors.back();
      probe.form = conjugate_by_simple_inverse(probe.form, last);
      probe.conjugator *= simple::word_of(last).inverse();
      if (probe.form.sup() < cur.form.sup()) {
        cur = probe;
        improved = true;
        break;
      }
    }
  }
  return cur;
}

/// Smallest rho with rho the least simple above rho satisfying
/// Delta^p <= rho^{-1} x rho, where x = Delta^p * positive.
inline Permutation raise_for_inf(const Permutation& rho, long p, const std::vector<Permutation>& positive) {
  // Need flip^p(rho) <= positive * rho. Any admissible rho* >= rho satisfies
  // rho* >= rho * ((positive*rho) \ flip^p(rho)).
  Permutation t = simple::flip_power(rho, p);
  for (const auto& f : positive) t = simple::join_complement(f, t);
  t = simple::join_complement(rho, t);
  Permutation raised = rho * t;
  if (raised.inversions() != rho.inversions() + t.inversions()) {
    throw std::logic_error("minimal conjugator left the simple elements");
  }
  return raised;
}

/// Minimal simple rho with s <= rho and x^rho in the super summit set of x.
inline Permutation minimal_summit_conjugator(const NormalForm& x, const NormalForm& x_inv,
                                             const Permutation& s) {
  Permutation rho = s;
  for (;;) {
    Permutation next = raise_for_inf(rho, x.inf, x.factors);
    next = raise_for_inf(next, x_inv.inf, x_inv.factors);
    if (next == rho) return rho;
    rho = std::move(next);
  }
}

struct SummitSet {
  struct Node {
    NormalForm form;
    std::size_t parent;
    Permutation via;  // form = via^{-1} * parent * via
  };
  std::vector<Node> nodes;
  std::map<NormalForm, std::size_t> index;
  bool complete = false;

  /// Conjugator h with nodes[i] = h^{-1} nodes[0] h.
  BraidWord path_to(std::size_t i) const {
    std::vector<Permutation> steps;
    while (i != 0) {
      steps.push_back(nodes[i].via);
      i = nodes[i].parent;
    }
    BraidWord h(nodes[0].form.strands);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) h *= simple::word_of(*it);
    return h;
  }
};

/// Enumerates the super summit set containing `root` (which must already be
/// a summit element), stopping early at `stop` or when `max_size` is reached.
inline SummitSet enumerate(const NormalForm& root, std::size_t max_size,
                           const std::optional<NormalForm>& stop = std::nullopt) {
  SummitSet set;
  set.nodes.push_back({root, 0, Permutation(root.strands)});
  set.index.emplace(root, 0);
  if (stop && *stop == root) return set;
  const int n = root.strands;
  for (std::size_t head = 0; head < set.nodes.size(); ++head) {
    const NormalForm x = set.nodes[head].form;
    const NormalForm x_inv = inverse(x);
    for (int i = 1; i < n; ++i) {
      const Permutation rho = minimal_summit_conjugator(x, x_inv, Permutation::adjacent(n, i));
      NormalForm z = conjugate_by_simple(x, rho);
      if (z.inf != x.inf || z.sup() != x.sup()) {
        throw std::logic_error("minimal conjugator left the super summit set");
      }
      if (set.index.count(z)) continue;
      if (set.nodes.size() >= max_size) return set;
      set.index.emplace(z, set.nodes.size());
      set.nodes.push_back({z, head, rho});
      if (stop && *stop == set.nodes.back().form) return set;
    }
  }
  set.complete = true;
  return set;
}

}  // namespace summit

enum class ConjugacyScope {
  full,       // conjugators in B_n
  one_pure,   // conjugators in B_{n,1}
  ends_pure,  // conjugators that are {1, n}-pure
};

struct ConjugacyOptions {
  ConjugacyScope scope = ConjugacyScope::full;
  /// Extra condition on the conjugator; forces the breadth-first route.
  std::function<bool(const BraidWord&)> filter;
  /// Largest super summit set explored before giving up.
  std::size_t max_summit_size = 50000;
  /// Breadth-first fallback: maximal conjugator word length and node cap.
  int bfs_depth = 6;
  std::size_t bfs_max_nodes = 200000;
};

struct ConjugacyResult {
  enum class Verdict { conjugate, not_conjugate, unknown };
  Verdict verdict = Verdict::unknown;
  std::optional<BraidWord> conjugator;  // g with g a g^{-1} = b
  std::string reason;
};

inline std::string to_string(ConjugacyResult::Verdict v) {
  switch (v) {
    case ConjugacyResult::Verdict::conjugate:
      return "conjugate";
    case ConjugacyResult::Verdict::not_conjugate:
      return "not_conjugate";
    case ConjugacyResult::Verdict::unknown:
      return "unknown";
  }
  return "?";
}

namespace detail {

inline std::vector<BraidWord> scope_generators(int n, ConjugacyScope scope) {
  std::vector<BraidWord> gens;
  auto add = [&](std::vector<int> letters) {
    BraidWord g(n, std::move(letters));
    gens.push_back(g);
    gens.push_back(g.inverse());
  };
  for (int i = 1; i < n; ++i) {
    const bool square = (i == 1 && scope != ConjugacyScope::full) ||
                        (i == n - 1 && scope == ConjugacyScope::ends_pure);
    if (square) {
      add({i, i});
    } else {
      add({i});
    }
  }
  return gens;
}

inline ConjugacyResult certified(ConjugacyResult::Verdict v, std::string reason,
                                 std::optional<BraidWord> g = std::nullopt) {
  return ConjugacyResult{v, std::move(g), std::move(reason)};
}

}  // namespace detail

/// Searches for g with g a g^{-1} = b.
///
/// Non-conjugacy is reported only when certified by an invariant (exponent
/// sum, permutation cycle type, linking numbers inside the restricted scope,
/// summit inf/sup, or a fully enumerated super summit set). Running out of
/// budget yields `unknown`.
inline ConjugacyResult conjugacy_search(const BraidWord& a, const BraidWord& b,
                                        const ConjugacyOptions& opts = {}) {
  using V = ConjugacyResult::Verdict;
  require_same_strands(a, b);
  const int n = a.strands();

  if (a.exponent_sum() != b.exponent_sum()) {
    return detail::certified(V::not_conjugate, "exponent sums differ");
  }
  if (induced_permutation(a).cycle_type() != induced_permutation(b).cycle_type()) {
    return detail::certified(V::not_conjugate, "permutation cycle types differ");
  }
  if (opts.scope != ConjugacyScope::full) {
    const std::set<int> need = opts.scope == ConjugacyScope::one_pure ? std::set<int>{1}
                                                                       : std::set<int>{1, n};
    if (!is_pure_on(a, need) || !is_pure_on(b, need)) {
      throw std::invalid_argument("braids are not in the subgroup of the requested scope");
    }
    if (linking_number_first(a) != linking_number_first(b)) {
      return detail::certified(V::not_conjugate, "lk differs inside B_{n,1}");
    }
    if (opts.scope == ConjugacyScope::ends_pure && linking_number_last(a) != linking_number_last(b)) {
      return detail::certified(V::not_conjugate, "lk' differs inside the {1,n}-pure subgroup");
    }
  }

  const NormalForm nb = normal_form(b);
  auto verify = [&](const BraidWord& g, std::string reason) {
    if (normal_form(conjugate_by(g, a)) != nb) {
      throw std::logic_error("conjugacy search produced an invalid conjugator");
    }
    return detail::certified(V::conjugate, std::move(reason), g.free_reduced());
  };

  std::string summit_note;
  if (opts.scope == ConjugacyScope::full && !opts.filter) {
    const auto sa = summit::to_super_summit(normal_form(a));
    const auto sb = summit::to_super_summit(nb);
    if (sa.form.inf != sb.form.inf || sa.form.sup() != sb.form.sup()) {
      return detail::certified(V::not_conjugate, "summit inf/sup differ");
    }
    const auto set = summit::enumerate(sa.form, opts.max_summit_size, sb.form);
    if (auto it = set.index.find(sb.form); it != set.index.end()) {
      const BraidWord h = set.path_to(it->second);
      // b_s = h^{-1} c_a^{-1} a c_a h and b = c_b b_s c_b^{-1}
      const BraidWord g = sb.conjugator * h.inverse() * sa.conjugator.inverse();
      return verify(g, "super summit set");
    }
    if (set.complete) {
      return detail::certified(V::not_conjugate, "super summit set enumerated without a match");
    }
    summit_note = "super summit budget exhausted; ";
  }

  // Breadth-first search over conjugators of bounded length in the scope.
  const auto gens = detail::scope_generators(n, opts.scope);
  std::map<NormalForm, char> seen;
  std::deque<std::pair<BraidWord, int>> queue;
  queue.emplace_back(BraidWord(n), 0);
  seen.emplace(normal_form(BraidWord(n)), 0);
  while (!queue.empty()) {
    auto [g, depth] = queue.front();
    queue.pop_front();
    if (normal_form(conjugate_by(g, a)) == nb && (!opts.filter || opts.filter(g))) {
      return verify(g, "breadth-first search");
    }
    if (depth >= opts.bfs_depth) continue;
    for (const auto& s : gens) {
      BraidWord next = g * s;
      if (!seen.emplace(normal_form(next), 0).second) continue;
      if (seen.size() > opts.bfs_max_nodes) {
        return detail::certified(V::unknown, summit_note + "breadth-first node budget exhausted");
      }
      queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return detail::certified(V::unknown, summit_note + "no conjugator within depth " +
                                           std::to_string(opts.bfs_depth));
}

}  // namespace braidkit
