// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "braidkit/braidkit.hpp"

using namespace braidkit;

namespace {

int failures = 0;

void criterion(int id, const std::string& what, double limit_ms, const std::function<bool(std::string&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::string timing = std::to_string(static_cast<long>(ms)) + " ms";
  if (limit_ms > 0) {
    timing += " / limit " + std::to_string(static_cast<long>(limit_ms)) + " ms";
    if (ms > limit_ms) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
  }
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s (%s)%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(), timing.c_str(),
              detail.empty() ? "" : " - ", detail.c_str());
  std::fflush(stdout);
}

bool tally_ok(const repro::Tally& t, int minimum, const std::string& name, std::string& detail) {
  if (t.total < minimum || !t.ok()) {
    detail += name + " " + std::to_string(t.passed) + "/" + std::to_string(t.total) + "; ";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "delta^n = Delta^2 = epsilon^(n-1) for n = 2..8", 1000, [](std::string& detail) {
    for (int n = 2; n <= 8; ++n) {
      const BraidWord full = delta_word(n).pow(2);
      if (!equals(delta_braid(n).pow(n), full) || !equals(epsilon_braid(n).pow(n - 1), full)) {
        detail = "n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion(2, "mu_{m,d}^m = Delta^2 and its permutation follows the grid formula", 10000, [](std::string& detail) {
    int cases = 0;
    for (int m = 2; m <= 4; ++m) {
      for (int d = 1; d <= 4 && m * d + 1 <= 13; ++d) {
        const BraidWord w = mu(m, d);
        const int n = m * d + 1;
        // x_{i,j} -> x_{i,j-1} cyclically, x_0 fixed.
        bool perm_ok = induced_permutation(w)(1) == 1;
        for (int i = 1; i <= d; ++i) {
          for (int j = 1; j <= m; ++j) {
            const int src = (i - 1) * m + j + 1;
            const int dst = (i - 1) * m + (j == 1 ? m : j - 1) + 1;
            perm_ok = perm_ok && induced_permutation(w)(src) == dst;
          }
        }
        if (!perm_ok || !equals(w.pow(m), delta_word(n).pow(2))) {
          detail = "m=" + std::to_string(m) + " d=" + std::to_string(d);
          return false;
        }
        ++cases;
      }
    }
    detail = std::to_string(cases) + " parameter pairs";
    return true;
  });

  criterion(3, "three conjugacy pairs and the rotation centralizer for n = 3..6", 30000, [](std::string& detail) {
    const auto r = repro::thm14();
    for (const auto& c : r.checks) {
      if (!c.pass) detail += c.id + "; ";
    }
    return r.passed() && !r.checks.empty();
  });

  criterion(4, "decomposition identities, >= 200 instances per item", 120000, [](std::string& detail) {
    const auto suite = repro::decomposition_suite(0, 200);
    bool ok = suite.items.size() >= 8;
    for (const auto& [name, tally] : suite.items) ok = tally_ok(tally, 200, name, detail) && ok;
    if (ok) detail = std::to_string(suite.items.size()) + " items";
    return ok;
  });

  criterion(5, "decompose and flatten are mutually inverse on 100 factored braids", 0, [](std::string& detail) {
    const auto t = repro::round_trip_suite(0, 100);
    detail = std::to_string(t.passed) + "/" + std::to_string(t.total);
    return t.total == 100 && t.ok();
  });

  criterion(6, "generator tables validate and the embeddings behave", 60000, [](std::string& detail) {
    bool ok = true;
    for (const auto& [m, d] : repro::psi_parameters()) {
      const auto r = repro::psi_suite_for(m, d, 0, 50);
      const std::string tag = "(" + std::to_string(m) + "," + std::to_string(d) + ") ";
      for (const auto& c : r.table) {
        if (!c.pass) {
          detail += tag + c.name + "; ";
          ok = false;
        }
      }
      if (!r.full_twist_maps_to_mu) {
        detail += tag + "full twist; ";
        ok = false;
      }
      ok = tally_ok(r.deletion, 50, tag + "deletion", detail) && ok;
      ok = tally_ok(r.periodicity, 50, tag + "periodicity", detail) && ok;
    }
    return ok;
  });

  criterion(7, "4-braid example: conjugate, and conjugate inside the centralizer", 60000, [](std::string& detail) {
    const auto r = repro::example4(0);
    for (const auto& c : r.checks) {
      if (!c.pass) detail += c.id + "; ";
    }
    return r.passed();
  });

  criterion(8, "centralizer permutations match brute force for md+1 <= 7", 30000, [](std::string& detail) {
    long bad = 0;
    std::size_t count = 0;
    for (const auto& [m, d] : repro::small_rotation_parameters()) {
      bad += repro::centralizer_permutation_discrepancies(m, d);
      ++count;
    }
    detail = std::to_string(count) + " parameter pairs, " + std::to_string(bad) + " discrepancies";
    return bad == 0 && count > 0;
  });

  criterion(9, "centralizers of rotation powers depend only on the gcd", 0, [](std::string& detail) {
    const auto [samples, mismatches] = repro::rotation_centralizer_sampling(0, 500);
    detail = std::to_string(samples) + " comparisons, " + std::to_string(mismatches) + " discrepancies";
    return samples == 500 && mismatches == 0;
  });

  criterion(10, "normal form of a 1000-letter word in B_10, median < 100 ms", 0, [](std::string& detail) {
    const auto rows = repro::run_bench({{10, 1000}}, 10, 0);
    detail = "median " + std::to_string(rows.at(0).median_ms) + " ms";
    return rows.at(0).median_ms < 100.0;
  });

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
