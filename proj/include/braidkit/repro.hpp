#pragma once

// Reproduction scenarios and the normal-form benchmark.
//
// Every scenario is deterministic for a given seed. A check carries JSON
// values for what was expected and what was computed; a scenario passes iff
// every check passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "conjugacy.hpp"
#include "core.hpp"
#include "embeddings.hpp"
#include "garside.hpp"
#include "periodic.hpp"
#include "random.hpp"
#include "serialize.hpp"
#include "tube.hpp"

namespace braidkit::repro {

struct Check {
  std::string id;
  bool pass = false;
  json expected;
  json actual;
  bool budget_exhausted = false;  // search gave up; not evidence against the claim
};

struct ScenarioReport {
  std::string scenario;
  std::vector<Check> checks;
  double duration_ms = 0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  bool budget_exhausted() const {
    return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.budget_exhausted; });
  }

  void expect(std::string id, const json& expected, const json& actual) {
    checks.push_back({std::move(id), expected == actual, expected, actual, false});
  }
  void expect_true(std::string id, bool value) { expect(std::move(id), true, value); }
};

inline json to_json(const ScenarioReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"id", c.id}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}};
    if (c.budget_exhausted) j["budget_exhausted"] = true;
    checks.push_back(std::move(j));
  }
  return json{{"scenario", r.scenario}, {"checks", checks}, {"duration_ms", r.duration_ms}};
}

inline std::string to_text(const ScenarioReport& r) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    passed += c.pass ? 1 : 0;
    os << (c.pass ? "PASS " : (c.budget_exhausted ? "BUDGET " : "FAIL ")) << c.id;
    if (!c.pass) os << "  expected " << c.expected.dump() << " got " << c.actual.dump();
    os << "\n";
  }
  os << r.scenario << ": " << passed << "/" << r.checks.size() << " checks passed in "
     << static_cast<long>(r.duration_ms) << " ms\n";
  return os.str();
}

/// Counts instances of a randomized identity and keeps a few failing inputs.
struct Tally {
  int passed = 0;
  int total = 0;
  std::vector<std::string> failures;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++total;
    if (ok) {
      ++passed;
    } else if (failures.size() < 3) {
      failures.push_back(describe());
    }
  }
  bool ok() const { return passed == total; }
  json summary() const {
    json j{{"passed", passed}, {"total", total}};
    if (!failures.empty()) j["failures"] = failures;
    return j;
  }
};

inline void add_tally(ScenarioReport& r, const std::string& id, const Tally& t, int minimum) {
  Check c{id, t.ok() && t.total >= minimum, json{{"all_hold", true}, {"min_instances", minimum}},
          t.summary(), false};
  r.checks.push_back(std::move(c));
}

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string describe(const BraidWord& w) { return std::to_string(w.strands()) + ":[" + format_word(w) + "]"; }

inline std::string describe(const FactoredBraid& f) { return to_json(f).dump(); }

inline BraidWord up_run(int n, int from, int to) {
  std::vector<int> ls;
  for (int j = from; j <= to; ++j) ls.push_back(j);
  return BraidWord(n, std::move(ls));
}

inline BraidWord down_run(int n, int from, int to) {
  std::vector<int> ls;
  for (int j = from; j >= to; --j) ls.push_back(j);
  return BraidWord(n, std::move(ls));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Non-conjugacy examples in B_{n+1}

struct ThreePairs {
  BraidWord a1, b1, a2, b2, a3, b3, chi;
};

/// The three example pairs and the twist chi in B_{n+1}, n >= 3.
inline ThreePairs three_pairs(int n) {
  if (n < 3) throw std::invalid_argument("the example pairs need n >= 3");
  const int N = n + 1;
  ThreePairs p;
  p.a1 = BraidWord(N, {1, 1, 2, 2, 2, 2});
  p.b1 = BraidWord(N, {2, 2, 1, 1, 1, 1});
  p.a2 = BraidWord(N, {n, n, n - 1, n - 1, n - 1, n - 1});
  p.b2 = BraidWord(N, {n - 1, n - 1, n, n, n, n});
  p.a3 = detail::down_run(N, n, 2);
  p.b3 = BraidWord(N, {-1, -1}) * p.a3 * BraidWord(N, {1, 1});
  p.chi = detail::up_run(N, 1, n) * detail::down_run(N, n, 1);
  return p;
}

inline void thm14_checks(ScenarioReport& r, int n) {
  const auto p = three_pairs(n);
  const int N = n + 1;
  const std::string pre = "n" + std::to_string(n) + ".";
  const BraidWord g1(N, {1, 2, 1});
  const BraidWord g2(N, {n, n - 1, n});

  r.expect(pre + "pair1.lk_first(a)", 1, linking_number_first(p.a1));
  r.expect(pre + "pair1.lk_first(b)", 2, linking_number_first(p.b1));
  r.expect_true(pre + "pair1.b=(s1 s2 s1) a (s1 s2 s1)^-1", equals(conjugate_by(g1, p.a1), p.b1));
  r.expect(pre + "pair2.lk_last(a)", 1, linking_number_last(p.a2));
  r.expect(pre + "pair2.lk_last(b)", 2, linking_number_last(p.b2));
  r.expect_true(pre + "pair2.conjugator is 1-pure and conjugates",
                is_pure_at(g2, 1) && equals(conjugate_by(g2, p.a2), p.b2));
  r.expect_true(pre + "pair3.both 1-unlinked", is_1_unlinked(p.a3) && is_1_unlinked(p.b3));
  r.expect_true(pre + "pair3.b=s1^-2 a s1^2 with s1^2 1-pure",
                is_pure_at(BraidWord(N, {1, 1}), 1) &&
                    equals(conjugate_by(BraidWord(N, {-1, -1}), p.a3), p.b3));
  r.expect_true(pre + "twist commutes with pair3.a", commutes(p.chi, p.a3));
  r.expect(pre + "lk_first(twist)=n", n, linking_number_first(p.chi));
}

inline ScenarioReport thm14(std::uint64_t /*seed*/ = 0) {
  detail::Stopwatch sw;
  ScenarioReport r{"thm14", {}, 0};
  for (int n = 3; n <= 6; ++n) thm14_checks(r, n);
  r.duration_ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// Centralizer of the rotation-on-a-subdisk braid

inline ScenarioReport centralizer_claim(std::uint64_t seed = 0) {
  detail::Stopwatch sw;
  ScenarioReport r{"centralizer_claim", {}, 0};
  Sampler rng(seed);
  for (int n = 3; n <= 6; ++n) {
    const auto p = three_pairs(n);
    const int N = n + 1;
    const Composition c{1, n};
    const std::string pre = "n" + std::to_string(n) + ".";
    r.expect_true(pre + "cable(s1^2, (1,n)) = twist", equals(cable(BraidWord(2, {1, 1}), c), p.chi));
    r.expect_true(pre + "direct_sum(1, delta_n) = rotation", equals(direct_sum({BraidWord(1), delta_braid(n)}, c), p.a3));
    const auto f = decompose(p.a3, c);
    r.expect_true(pre + "rotation decomposes with trivial exterior",
                  f && is_identity(f->exterior) && equals(f->interiors[1], delta_braid(n)));
    r.expect_true(pre + "twist commutes with rotation", commutes(p.chi, p.a3));
    r.expect(pre + "lk_first(twist)", n, linking_number_first(p.chi));
    r.expect(pre + "lk_first(rotation)", 0, linking_number_first(p.a3));

    // Random products of the two generators stay 1-pure with lk divisible by n.
    Tally t;
    for (int k = 0; k < 20; ++k) {
      BraidWord g(N);
      const int len = rng.uniform(1, 6);
      for (int s = 0; s < len; ++s) {
        const BraidWord& gen = rng.coin() ? p.chi : p.a3;
        g *= rng.coin() ? gen : gen.inverse();
      }
      t.record(commutes(g, p.a3) && is_pure_at(g, 1) && linking_number_first(g) % n == 0,
               [&] { return detail::describe(g); });
    }
    add_tally(r, pre + "generated elements commute, are 1-pure, lk = 0 mod n", t, 20);

    // The same-pair obstruction: s1^2 g lies in the centralizer only if lk = 0 mod n.
    const ConjugacyOptions scoped{ConjugacyScope::one_pure, {}, 50000, 3, 20000};
    const auto res = conjugacy_search(p.a3, p.b3, scoped);
    r.expect(pre + "pair3 conjugate inside the 1-pure subgroup", "conjugate",
             to_string(res.verdict));
  }
  r.duration_ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// Four-strand example: conjugate elements of the centralizer of delta^2

struct ExampleFour {
  BraidWord omega{4, {3, 2, 1, 3, 2, 1}};
  BraidWord alpha{4, {2, 1, -2}};
  BraidWord beta{4, {3, 2, -3}};
};

inline ScenarioReport example4(std::uint64_t /*seed*/ = 0, const ConjugacyOptions& base = {}) {
  detail::Stopwatch sw;
  ScenarioReport r{"example4", {}, 0};
  const ExampleFour ex;
  r.expect_true("omega = delta_4^2", equals(ex.omega, delta_braid(4).pow(2)));
  r.expect("omega periodic", "delta_type k=2", [&] {
    const auto p = is_periodic(ex.omega);
    return to_string(p.kind) + " k=" + std::to_string(p.k);
  }());
  r.expect_true("alpha commutes with omega", commutes(ex.alpha, ex.omega));
  r.expect_true("beta commutes with omega", commutes(ex.beta, ex.omega));
  r.expect_true("alpha and beta are not periodic",
                !is_periodic(ex.alpha).periodic() && !is_periodic(ex.beta).periodic());

  auto search_check = [&](const std::string& id, const ConjugacyOptions& opts, bool need_commute) {
    const auto res = conjugacy_search(ex.alpha, ex.beta, opts);
    Check c{id, false, json{{"verdict", "conjugate"}}, json{{"verdict", to_string(res.verdict)}, {"reason", res.reason}}, false};
    if (res.conjugator) {
      c.actual["conjugator"] = format_word(*res.conjugator);
      const bool ok = equals(conjugate_by(*res.conjugator, ex.alpha), ex.beta) &&
                      (!need_commute || commutes(*res.conjugator, ex.omega));
      c.pass = ok && res.verdict == ConjugacyResult::Verdict::conjugate;
    }
    c.budget_exhausted = res.verdict == ConjugacyResult::Verdict::unknown;
    r.checks.push_back(std::move(c));
  };
  ConjugacyOptions full = base;
  full.scope = ConjugacyScope::full;
  full.filter = nullptr;
  search_check("conjugator in B_4", full, false);
  ConjugacyOptions inside = base;
  inside.scope = ConjugacyScope::full;
  inside.filter = [&](const BraidWord& g) { return commutes(g, ex.omega); };
  search_check("conjugator commuting with omega", inside, true);
  r.duration_ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// Cabling / direct-sum identity suite

struct DecompositionSuite {
  std::vector<std::pair<std::string, Tally>> items;
};

/// Randomized instances of the cabling identities, n <= 10 and word length
/// <= 12. Each item gets `instances` random cases; the half-twist item also
/// runs both directions for every composition of n <= 7.
inline DecompositionSuite decomposition_suite(std::uint64_t seed, int instances = 200) {
  Sampler rng(seed);
  constexpr int max_len = 12;
  DecompositionSuite out;
  auto random_setup = [&] {
    const int n = rng.uniform(2, 10);
    return rng.composition(n);
  };

  // (i) uniqueness
  {
    Tally t;
    for (int k = 0; k < instances; ++k) {
      const Composition c = random_setup();
      const FactoredBraid f = rng.factored(c, max_len);
      // Perturb one component by a generator.
      std::vector<int> changeable;
      if (c.size() >= 2) changeable.push_back(0);
      for (int i = 1; i <= c.size(); ++i) {
        if (c.block(i) >= 2) changeable.push_back(i);
      }
      FactoredBraid g = f;
      const int which = changeable[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(changeable.size()) - 1))];
      BraidWord& target = which == 0 ? g.exterior : g.interiors[static_cast<std::size_t>(which - 1)];
      target *= BraidWord(target.strands(), {rng.uniform(1, target.strands() - 1)});
      const auto back = decompose(flatten(f), c);
      t.record(back && factored_equals(*back, f) && !equals(flatten(f), flatten(g)),
               [&] { return detail::describe(f); });
    }
    out.items.emplace_back("(i) factorization is unique", t);
  }
  // (ii) standard image iff factorizable; image system is C_{ext * c}
  {
    Tally t;
    for (int k = 0; k < instances; ++k) {
      const Composition c = random_setup();
      const FactoredBraid f = rng.factored(c, max_len);
      const BraidWord w = flatten(f);
      const auto back = decompose(w, c);
      bool ok = back.has_value() && back->target() == act(f.exterior, c);
      // A half twist across a block wall of the image system with a block of
      // size >= 2 on one side breaks standardness.
      const Composition img = f.target();
      std::vector<int> walls;
      for (int i = 1; i < img.size(); ++i) {
        if (img.block(i) >= 2 || img.block(i + 1) >= 2) walls.push_back(img.offset(i + 1));
      }
      if (!walls.empty()) {
        const int j = walls[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(walls.size()) - 1))];
        const BraidWord broken = BraidWord(w.strands(), {rng.coin() ? j : -j}) * w;
        ok = ok && !decompose(broken, c).has_value();
      }
      t.record(ok, [&] { return detail::describe(f); });
    }
    out.items.emplace_back("(ii) standard image iff factorizable", t);
  }
  // (iii) interiors move past the exterior
  {
    Tally t;
    for (int k = 0; k < instances; ++k) {
      const Composition c = random_setup();
      const FactoredBraid f = rng.factored(c, max_len);
      const Permutation theta = induced_permutation(f.exterior);
      const Permutation theta_inv = theta.inverse();
      std::vector<BraidWord> moved;
      for (int i = 1; i <= c.size(); ++i) moved.push_back(f.interiors[static_cast<std::size_t>(theta_inv(i) - 1)]);
      const BraidWord lhs = cable(f.exterior, c) * direct_sum(f.interiors, c);
      const BraidWord rhs = direct_sum(moved, act(f.exterior, c)) * cable(f.exterior, c);
      t.record(equals(lhs, rhs), [&] { return detail::describe(f); });
    }
    out.items.emplace_back("(iii) interiors commute past the cable", t);
  }
  // (iv) cabling is functorial
  {
    Tally t;
    for (int k = 0; k < instances; ++k) {
      const Composition c = random_setup();
      const BraidWord u = rng.word(c.size(), max_len);
      const BraidWord v = rng.word(c.size(), max_len);
      t.record(equals(cable(u * v, c), cable(u, act(v, c)) * cable(v, c)),
               [&] { return to_string(c) + " " + detail::describe(u) + " " + detail::describe(v); });
    }
    out.items.emplace_back("(iv) cable of a product", t);
  }
  // (v) cable of an inverse
  {
    Tally t;
    for (int k = 0; k < instances; ++k) {
      const Composition c = random_setup();
      const BraidWord u = rng.word(c.size(), max_len);
      t.record(equals(cable(u, c).inverse(), cable(u.inverse(), act(u, c))),
               [&] { return to_string(c) + " " + detail::describe(u); });
    }
    out.items.emplace_back("(v) cable of an inverse", t);
  }
  // (vi) direct sums multiply componentwise
  {
    Tally t;
    for (int k = 0; k < instances; ++k) {
      const Composition c = random_setup();
      std::vector<BraidWord> a, b, ab;
      for (int blk : c.blocks()) {
        a.push_back(rng.word(blk, max_len));
        b.push_back(rng.word(blk, max_len));
        ab.push_back(a.back() * b.back());
      }
      t.record(equals(direct_sum(ab, c), direct_sum(a, c) * direct_sum(b, c)),
               [&] { return to_string(c); });
    }
    out.items.emplace_back("(vi) direct sum of products", t);
  }
  // (vii) direct sum of inverses
  {
    Tally t;
    for (int k = 0; k < instances; ++k) {
      const Composition c = random_setup();
      std::vector<BraidWord> a, inv;
      for (int blk : c.blocks()) {
        a.push_back(rng.word(blk, max_len));
        inv.push_back(a.back().inverse());
      }
      t.record(equals(direct_sum(a, c).inverse(), direct_sum(inv, c)), [&] { return to_string(c); });
    }
    out.items.emplace_back("(vii) direct sum of inverses", t);
  }
  // (viii) half twist factorization, both directions
  {
    Tally t;
    for (int n = 1; n <= 7; ++n) {
      for (const auto& c : compositions_of(n)) {
        std::vector<BraidWord> ints;
        for (int b : c.blocks()) ints.push_back(delta_word(b));
        const FactoredBraid f(c, delta_word(c.size()), ints);
        t.record(equals(flatten(f), delta_word(n)), [&] { return "forward " + to_string(c); });
        const auto back = decompose(delta_word(n), c);
        t.record(back && factored_equals(*back, f), [&] { return "backward " + to_string(c); });
      }
    }
    for (int k = 0; k < instances; ++k) {
      // Any other factorization is not the half twist.
      const Composition c = random_setup();
      std::vector<BraidWord> ints;
      for (int b : c.blocks()) ints.push_back(delta_word(b));
      FactoredBraid f(c, delta_word(c.size()), ints);
      FactoredBraid g = rng.factored(c, max_len);
      const bool same = factored_equals(f, g);
      t.record(equals(flatten(g), delta_word(c.total())) == same, [&] { return detail::describe(g); });
    }
    out.items.emplace_back("(viii) half twist factorization", t);
  }
  // Factored products and inverses agree with the flattened ones.
  {
    Tally prod, inv;
    for (int k = 0; k < instances; ++k) {
      const Composition c = random_setup();
      const FactoredBraid g = rng.factored(c, max_len);
      const FactoredBraid f = rng.factored(g.target(), max_len);
      prod.record(equals(flatten(factored_multiply(f, g)), flatten(f) * flatten(g)),
                  [&] { return detail::describe(f) + " * " + detail::describe(g); });
      inv.record(equals(flatten(factored_inverse(g)), flatten(g).inverse()),
                 [&] { return detail::describe(g); });
    }
    out.items.emplace_back("factored product flattens to the product", prod);
    out.items.emplace_back("factored inverse flattens to the inverse", inv);
  }
  // Exteriors multiply for braids fixing the standard system.
  {
    Tally t;
    auto fixing = [&](const Composition& c) {
      FactoredBraid f = rng.factored(c, max_len);
      // Make the exterior pure so that it fixes c.
      const Permutation p = induced_permutation(f.exterior);
      f.exterior *= permutation_braid_word(p.inverse());
      return f;
    };
    for (int k = 0; k < instances; ++k) {
      const Composition c = random_setup();
      const FactoredBraid fu = fixing(c), fv = fixing(c);
      const BraidWord u = flatten(fu), v = flatten(fv);
      const auto du = decompose(u, c), dv = decompose(v, c), duv = decompose(u * v, c);
      t.record(du && dv && duv && equals(duv->exterior, du->exterior * dv->exterior),
               [&] { return detail::describe(fu) + " ; " + detail::describe(fv); });
    }
    out.items.emplace_back("exterior is multiplicative", t);
  }
  return out;
}

/// decompose(flatten(F)) = F and flatten(decompose(w)) = w for w = flatten(F).
inline Tally round_trip_suite(std::uint64_t seed, int count = 100) {
  Sampler rng(seed);
  Tally t;
  for (int k = 0; k < count; ++k) {
    const Composition c = rng.composition(rng.uniform(2, 10));
    const FactoredBraid f = rng.factored(c, 12);
    const BraidWord w = flatten(f);
    const auto back = decompose(w, c);
    t.record(back && factored_equals(*back, f) && equals(flatten(*back), w),
             [&] { return detail::describe(f); });
  }
  return t;
}

inline ScenarioReport lemma_decom(std::uint64_t seed = 0) {
  detail::Stopwatch sw;
  ScenarioReport r{"lemma_decom", {}, 0};
  for (const auto& [name, tally] : decomposition_suite(seed).items) add_tally(r, name, tally, 200);
  add_tally(r, "round trip decompose/flatten", round_trip_suite(seed), 100);
  r.duration_ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// Periodic family

/// Brute force over S_{md+1}: commuting with the rotation permutation is
/// the same as having the block-rotation form. Returns the discrepancy count.
inline long centralizer_permutation_discrepancies(int m, int d) {
  const int n = m * d + 1;
  const Permutation rot = mu_permutation(m, d);
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  long bad = 0;
  do {
    const Permutation p = Permutation::from_images(img);
    const bool commute = p * rot == rot * p;
    if (commute != is_centralizer_permutation(p, m, d).has_value()) ++bad;
  } while (std::next_permutation(img.begin(), img.end()));
  return bad;
}

/// Parameters with md+1 <= 7.
inline std::vector<std::pair<int, int>> small_rotation_parameters() {
  std::vector<std::pair<int, int>> out;
  for (int m = 2; m <= 6; ++m) {
    for (int d = 1; m * d + 1 <= 7; ++d) out.emplace_back(m, d);
  }
  return out;
}

/// Samples commutes(w, r^a) == commutes(w, r^gcd(a, period)) for r = delta
/// (period n) and r = epsilon (period n-1). Returns (comparisons, discrepancies).
inline std::pair<int, int> rotation_centralizer_sampling(std::uint64_t seed, int samples = 500) {
  Sampler rng(seed);
  int mismatches = 0;
  for (int k = 0; k < samples; ++k) {
    const int n = rng.uniform(3, 6);
    const bool use_delta = k % 2 == 0;
    const BraidWord base = use_delta ? delta_braid(n) : epsilon_braid(n);
    const int period = use_delta ? n : n - 1;
    int a = rng.uniform(-12, 12);
    if (a == 0) a = 1;
    const int g = std::gcd(std::abs(a), period);
    // Mix in rotation powers and, on four strands, an element that commutes
    // with delta^2 but not with delta.
    BraidWord w = rng.word(n, 8);
    const int pick = rng.uniform(0, 3);
    if (pick == 0) w = base.pow(rng.uniform(-3, 3)) * BraidWord(n, {n - 1, -(n - 1)});
    if (pick == 1 && n == 4 && use_delta) w = BraidWord(4, {2, 1, -2}) * base.pow(2 * rng.uniform(-1, 1));
    if (commutes(w, base.pow(a)) != commutes(w, base.pow(g))) ++mismatches;
  }
  return {samples, mismatches};
}

struct CentralizerAgreement {
  int cases = 0;
  int agreements = 0;
  int in_centralizer = 0;
};

/// Structural membership against direct commutation on random factored braids.
inline CentralizerAgreement structural_agreement(std::uint64_t seed, int cases = 120) {
  Sampler rng(seed);
  const std::vector<std::pair<int, Composition>> params = {
      {2, Composition{1, 1}},    {2, Composition{2, 1}},    {3, Composition{1, 1}},
      {2, Composition{1, 1, 1}}, {2, Composition{1, 2}},    {2, Composition{2, 2}},
      {3, Composition{1, 2}},    {2, Composition{1, 1, 2}}, {2, Composition{2, 1, 1}},
      {3, Composition{2, 1}}};
  CentralizerAgreement out;
  for (int k = 0; k < cases; ++k) {
    const auto& [m, dvec] = params[static_cast<std::size_t>(k) % params.size()];
    const int r = dvec.size() - 1;
    const int d0 = dvec.block(1) - 1;
    const BraidWord mur = mu(m, r);
    // Exterior: product of centralizer elements of mu_{m,r}.
    BraidWord ext(mur.strands());
    if (r >= 1) {
      const auto tab = build_generator_table(m, r);
      ext = psi4(rng.type_b(r, 3), tab) * mur.pow(rng.uniform(-1, 1));
    }
    std::vector<BraidWord> ints{mu(m, d0).pow(rng.uniform(-1, 1))};
    const auto blocks = is_centralizer_permutation(induced_permutation(ext), m, r);
    for (int i = 1; i <= r; ++i) {
      const int di = dvec.block(i + 1);
      const int li = blocks ? blocks->l[static_cast<std::size_t>(i - 1)] : 0;
      const BraidWord base = rng.word(di, 4);
      for (int j = 1; j <= m; ++j) ints.push_back(j <= li ? base * delta_word(di).pow(2) : base);
    }
    FactoredBraid f(L_m(m, dvec), ext, ints);
    if (k % 3 == 2) {
      // Break the pattern in one place.
      const int slot = rng.uniform(0, static_cast<int>(f.interiors.size()));
      if (slot == static_cast<int>(f.interiors.size()) || f.interiors[static_cast<std::size_t>(slot)].strands() < 2) {
        if (f.exterior.strands() >= 2) f.exterior *= BraidWord(f.exterior.strands(), {1});
      } else {
        auto& w = f.interiors[static_cast<std::size_t>(slot)];
        w *= BraidWord(w.strands(), {rng.uniform(1, w.strands() - 1)});
      }
    }
    const bool structural = centralizer_membership_structural(f, m, dvec);
    const bool direct = commutes(flatten(f), flatten(mu_decorated(m, dvec)));
    ++out.cases;
    out.agreements += structural == direct ? 1 : 0;
    out.in_centralizer += direct ? 1 : 0;
  }
  return out;
}

inline void delta_epsilon_checks(ScenarioReport& r) {
  for (int n = 2; n <= 8; ++n) {
    const BraidWord D2 = delta_word(n).pow(2);
    r.expect_true("delta^n = Delta^2 = epsilon^(n-1), n=" + std::to_string(n),
                  equals(delta_braid(n).pow(n), D2) && equals(epsilon_braid(n).pow(n - 1), D2));
  }
}

inline std::vector<std::pair<int, int>> rotation_grid() {
  std::vector<std::pair<int, int>> out;
  for (int m = 2; m <= 4; ++m) {
    for (int d = 1; d <= 4 && m * d + 1 <= 13; ++d) out.emplace_back(m, d);
  }
  return out;
}

inline void rotation_grid_checks(ScenarioReport& r) {
  for (auto [m, d] : rotation_grid()) {
    const std::string tag = "m=" + std::to_string(m) + ",d=" + std::to_string(d);
    const BraidWord M = mu(m, d);
    r.expect_true("mu^m = Delta^2, " + tag, equals(M.pow(m), delta_word(m * d + 1).pow(2)));
    r.expect("permutation of mu, " + tag, mu_permutation(m, d).images(), induced_permutation(M).images());
  }
}

inline ScenarioReport mu_suite(std::uint64_t seed = 0) {
  detail::Stopwatch sw;
  ScenarioReport r{"mu_suite", {}, 0};
  delta_epsilon_checks(r);
  rotation_grid_checks(r);
  r.expect("mu(3,2) periodicity", "epsilon_type k=2", [] {
    const auto p = is_periodic(mu(3, 2));
    return to_string(p.kind) + " k=" + std::to_string(p.k);
  }());
  r.expect("x_{2,1} for m=3", 5, x_coordinate(3, 2, 2, 1));
  r.expect("L_3(2,2,1)", json::array({4, 2, 2, 2, 1, 1, 1}), L_m(3, {2, 2, 1}).blocks());
  r.expect("L_3(3,2,1)", json::array({7, 2, 2, 2, 1, 1, 1}), L_m(3, {3, 2, 1}).blocks());
  r.expect("L_2(1,1)", json::array({1, 1, 1}), L_m(2, {1, 1}).blocks());

  const std::vector<std::pair<int, Composition>> decorated = {
      {3, Composition{2, 2, 1}}, {2, Composition{1, 1}}, {2, Composition{2, 1, 1}},
      {3, Composition{1, 2}},    {2, Composition{1, 2, 1}}};
  for (const auto& [m, dvec] : decorated) {
    const std::string tag = "m=" + std::to_string(m) + ",dvec=" + to_string(dvec);
    const FactoredBraid f = mu_decorated(m, dvec);
    const BraidWord w = flatten(f);
    r.expect_true("decorated mu^m = Delta^2, " + tag, equals(w.pow(m), delta_word(w.strands()).pow(2)));
    const auto back = decompose(w, L_m(m, dvec));
    r.expect_true("decorated mu fixes its system with exterior mu_{m,r}, " + tag,
                  back && back->target() == L_m(m, dvec) && equals(back->exterior, mu(m, dvec.size() - 1)));
    r.expect_true("decorated mu is structurally self-centralizing, " + tag,
                  centralizer_membership_structural(f, m, dvec));
  }

  for (auto [m, d] : small_rotation_parameters()) {
    r.expect("centralizer permutation form, m=" + std::to_string(m) + ",d=" + std::to_string(d), 0,
             centralizer_permutation_discrepancies(m, d));
  }
  const auto agree = structural_agreement(seed);
  r.expect_true("structural centralizer test agrees with commutation",
                agree.agreements == agree.cases && agree.cases >= 100 && agree.in_centralizer > 0 &&
                    agree.in_centralizer < agree.cases);
  const auto [samples, mismatches] = rotation_centralizer_sampling(seed);
  r.expect("centralizer of a rotation power depends only on the gcd", json{{"samples", 500}, {"discrepancies", 0}},
           json{{"samples", samples}, {"discrepancies", mismatches}});
  r.duration_ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// Centralizer embeddings

struct PsiSuiteResult {
  std::vector<TableCheck> table;
  bool full_twist_maps_to_mu = false;
  Tally deletion, periodicity, homomorphism, centralizes, purity;
};

/// A random 1-pure braid of B_{d+1}; every other sample is a conjugate of
/// an epsilon power, so both periodicity verdicts are exercised.
inline TypeBWord psi_sample(Sampler& rng, int d, int k) {
  if (k % 2 == 0) return rng.type_b(d, 8);
  const TypeBWord g = rng.type_b(d, 3);
  return g * type_b_rotation(d).pow(rng.uniform(-2, 2)) * g.inverse();
}

inline PsiSuiteResult psi_suite_for(int m, int d, std::uint64_t seed, int samples = 50) {
  Sampler rng(seed);
  PsiSuiteResult out;
  const GeneratorImageTable tab = build_generator_table(m, d);
  out.table = validate_table(tab);
  const BraidWord M = mu(m, d);
  out.full_twist_maps_to_mu = equals(psi4(type_b_full_twist(d), tab), M) &&
                              equals(type_b_full_twist(d).to_braid(), delta_word(d + 1).pow(2));
  for (int k = 0; k < samples; ++k) {
    const TypeBWord w = psi_sample(rng, d, k);
    const BraidWord b = w.to_braid();
    const BraidWord img = psi4(w, tab);
    out.deletion.record(equals(psi5(b, tab), delete_strand(psi4(b, tab), 1)),
                        [&] { return detail::describe(b); });
    out.periodicity.record(is_periodic(b).periodic() == is_periodic(img).periodic(),
                           [&] { return detail::describe(b); });
    out.centralizes.record(commutes(img, M), [&] { return detail::describe(b); });
    out.purity.record(is_pure_at(img, 1), [&] { return detail::describe(b); });
    const TypeBWord v = rng.type_b(d, 6);
    TypeBWord wv{d, w.letters};
    wv.letters.insert(wv.letters.end(), v.letters.begin(), v.letters.end());
    out.homomorphism.record(equals(psi4(wv, tab), img * psi4(v, tab)), [&] { return detail::describe(b); });
  }
  return out;
}

inline std::vector<std::pair<int, int>> psi_parameters() { return {{2, 2}, {3, 2}, {2, 3}}; }

inline ScenarioReport psi_suite(std::uint64_t seed = 0) {
  detail::Stopwatch sw;
  ScenarioReport r{"psi_suite", {}, 0};
  {
    const ThreePairs p = three_pairs(4);
    r.expect_true("inclusion into the type-B subgroup accepts a 1-pure braid", equals(psi1(p.a1), p.a1));
    r.expect_true("inclusion of a 1-unlinked braid", equals(psi2(p.a3), p.a3));
    bool rejected = false;
    try {
      psi3(BraidWord(4, {1}));
    } catch (const std::domain_error&) {
      rejected = true;
    }
    r.expect_true("inclusion rejects a braid that is not {1,n}-pure", rejected);
  }
  r.expect_true("(2,1) table sends t to mu_{2,1}", equals(build_generator_table(2, 1).t, mu(2, 1)));
  for (auto [m, d] : psi_parameters()) {
    const std::string tag = "m=" + std::to_string(m) + ",d=" + std::to_string(d) + ": ";
    const auto res = psi_suite_for(m, d, seed);
    for (const auto& c : res.table) r.expect_true(tag + c.name, c.pass);
    r.expect_true(tag + "full twist maps to mu", res.full_twist_maps_to_mu);
    add_tally(r, tag + "psi5 = strand deletion after psi4", res.deletion, 50);
    add_tally(r, tag + "periodicity transfers", res.periodicity, 50);
    add_tally(r, tag + "homomorphism", res.homomorphism, 50);
    add_tally(r, tag + "image centralizes mu", res.centralizes, 50);
    add_tally(r, tag + "image is 1-pure", res.purity, 50);
  }
  r.duration_ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"thm14",     "centralizer_claim", "example4",
                                              "lemma_decom", "mu_suite",        "psi_suite"};
  return names;
}

inline ScenarioReport run_scenario(const std::string& name, std::uint64_t seed = 0,
                                   const ConjugacyOptions& search = {}) {
  if (name == "thm14") return thm14(seed);
  if (name == "centralizer_claim") return centralizer_claim(seed);
  if (name == "example4") return example4(seed, search);
  if (name == "lemma_decom") return lemma_decom(seed);
  if (name == "mu_suite") return mu_suite(seed);
  if (name == "psi_suite") return psi_suite(seed);
  if (name == "all") {
    detail::Stopwatch sw;
    ScenarioReport all{"all", {}, 0};
    for (const auto& sub : scenario_names()) {
      for (auto c : run_scenario(sub, seed, search).checks) {
        c.id = sub + "/" + c.id;
        all.checks.push_back(std::move(c));
      }
    }
    all.duration_ms = sw.ms();
    return all;
  }
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

// ---------------------------------------------------------------------------
// Benchmark

struct BenchSize {
  int strands = 10;
  int length = 1000;
};

struct BenchRow {
  BenchSize size;
  int repetitions = 0;
  double median_ms = 0, mean_ms = 0, stddev_ms = 0, min_ms = 0, max_ms = 0;
};

/// Normal-form timing on seeded random words; one fresh word per repetition.
inline std::vector<BenchRow> run_bench(const std::vector<BenchSize>& sizes, int repetitions = 10,
                                       std::uint64_t seed = 0) {
  std::vector<BenchRow> rows;
  Sampler rng(seed);
  for (const auto& s : sizes) {
    std::vector<double> times;
    for (int k = 0; k < repetitions; ++k) {
      const BraidWord w = rng.word_of_length(s.strands, s.length);
      detail::Stopwatch sw;
      const NormalForm nf = normal_form(w);
      times.push_back(sw.ms());
      if (nf.strands != s.strands) throw std::logic_error("benchmark result mismatch");
    }
    BenchRow row{s, repetitions};
    if (!times.empty()) {
      std::vector<double> sorted = times;
      std::sort(sorted.begin(), sorted.end());
      const std::size_t h = sorted.size() / 2;
      row.median_ms = sorted.size() % 2 ? sorted[h] : (sorted[h - 1] + sorted[h]) / 2;
      row.min_ms = sorted.front();
      row.max_ms = sorted.back();
      row.mean_ms = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
      double var = 0;
      for (double t : times) var += (t - row.mean_ms) * (t - row.mean_ms);
      row.stddev_ms = std::sqrt(var / static_cast<double>(times.size()));
    }
    rows.push_back(row);
  }
  return rows;
}

inline json bench_json(const std::vector<BenchRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.size.strands},
                   {"length", r.size.length},
                   {"repetitions", r.repetitions},
                   {"median_ms", r.median_ms},
                   {"mean_ms", r.mean_ms},
                   {"stddev_ms", r.stddev_ms},
                   {"min_ms", r.min_ms},
                   {"max_ms", r.max_ms}});
  }
  return out;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "n,length,repetitions,median_ms,mean_ms,stddev_ms,min_ms,max_ms\n";
  for (const auto& r : rows) {
    os << r.size.strands << ',' << r.size.length << ',' << r.repetitions << ',' << r.median_ms << ','
       << r.mean_ms << ',' << r.stddev_ms << ',' << r.min_ms << ',' << r.max_ms << '\n';
  }
  return os.str();
}

}  // namespace braidkit::repro
