#pragma once

// Command-line front end. Each subcommand parses its arguments, makes one
// library call and prints the result.
//
// Exit codes: 0 success, 1 negative verdict, 2 usage error, 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidkit/braidkit.hpp"

namespace braidkit::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, budget = 3 };

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoi(token, &used));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed list entry '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed list entry '" + token + "'");
  }
  return out;
}

inline Composition parse_composition(const std::string& text) { return Composition(parse_int_list(text)); }

/// "10x1000,8x500" -> sizes; empty text -> no sizes.
inline std::vector<repro::BenchSize> parse_bench_sizes(const std::string& text) {
  std::vector<repro::BenchSize> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    if (token.empty()) continue;
    const auto x = token.find('x');
    if (x == std::string::npos) throw std::invalid_argument("bench size must look like NxLENGTH");
    out.push_back({std::stoi(token.substr(0, x)), std::stoi(token.substr(x + 1))});
  }
  return out;
}

inline json permutation_json(const Permutation& p) { return json{{"images", p.images()}, {"cycles", p.cycles()}}; }

inline std::string factored_text(const FactoredBraid& f) {
  std::ostringstream os;
  os << "source " << to_string(f.source) << "\nexterior " << format_word(f.exterior) << "\n";
  for (std::size_t i = 0; i < f.interiors.size(); ++i) {
    os << "interior " << i + 1 << " " << format_word(f.interiors[i]) << "\n";
  }
  return os.str();
}

inline std::string normal_form_text(const NormalForm& nf) {
  std::ostringstream os;
  os << "inf " << nf.inf << "\n";
  for (const auto& f : nf.factors) {
    os << "factor";
    for (int v : f.images()) os << " " << v;
    os << "\n";
  }
  return os.str();
}

/// Runs the CLI on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"braidkit: braid group computations"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t seed = 0;
  std::size_t budget = 200000;
  int depth = 6;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--seed", seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--budget", budget, "node budget for conjugacy search")->capture_default_str();

  int n = 0;
  std::vector<std::string> words;
  std::string comp_text, dvec_text, subgroup = "typeB", scope_text = "full", centralize_text;
  int strand = 1, m = 2, d = 1, which = 4;
  long power = 1;
  int code = ok;

  auto word_at = [&](std::size_t i) { return parse_word(words.at(i), n); };
  auto need_words = [&](std::size_t k) {
    if (words.size() != k) throw CLI::ValidationError("expected " + std::to_string(k) + " word argument(s)");
  };
  auto emit = [&](const json& j, const std::string& text) {
    if (as_json) {
      out << j.dump() << "\n";
    } else {
      out << text;
    }
  };
  auto with_word = [&](CLI::App* sc, std::size_t count = 1) {
    sc->add_option("--n", n, "strand count")->required();
    sc->add_option("words", words, "braid words, e.g. \"1 -2 1\"")->expected(static_cast<int>(count));
  };

  auto* nf = app.add_subcommand("nf", "left normal form");
  with_word(nf);
  nf->callback([&] {
    need_words(1);
    const auto f = normal_form(word_at(0));
    emit(to_json(f), normal_form_text(f));
  });

  auto* eq = app.add_subcommand("eq", "group equality");
  with_word(eq, 2);
  eq->callback([&] {
    need_words(2);
    const bool e = equals(word_at(0), word_at(1));
    emit(json{{"equal", e}}, e ? "equal\n" : "not equal\n");
    code = e ? ok : negative;
  });

  auto* perm = app.add_subcommand("perm", "induced permutation");
  with_word(perm);
  perm->callback([&] {
    need_words(1);
    const auto p = induced_permutation(word_at(0));
    std::ostringstream os;
    for (std::size_t i = 0; i < p.images().size(); ++i) os << (i ? " " : "") << p.images()[i];
    os << "\n" << p.to_string() << "\n";
    emit(permutation_json(p), os.str());
  });

  auto* lk = app.add_subcommand("lk", "linking number of the first strand");
  with_word(lk);
  lk->callback([&] {
    need_words(1);
    const long v = linking_number_first(word_at(0));
    emit(json{{"lk", v}}, std::to_string(v) + "\n");
  });

  auto* lkp = app.add_subcommand("lkp", "linking number of the last strand");
  with_word(lkp);
  lkp->callback([&] {
    need_words(1);
    const long v = linking_number_last(word_at(0));
    emit(json{{"lk_last", v}}, std::to_string(v) + "\n");
  });

  auto* nu = app.add_subcommand("nu", "delete a strand");
  with_word(nu);
  nu->add_option("--strand", strand, "start position of the deleted strand")->capture_default_str();
  nu->callback([&] {
    need_words(1);
    const auto w = delete_strand(word_at(0), strand);
    emit(to_json(w), format_word(w) + "\n");
  });

  auto* member = app.add_subcommand("member", "subgroup membership");
  with_word(member);
  member->add_option("--subgroup", subgroup, "typeB | affineA | affineC")->capture_default_str();
  member->callback([&] {
    need_words(1);
    const bool in = subgroup_membership(word_at(0), parse_subgroup(subgroup));
    emit(json{{"member", in}}, in ? "true\n" : "false\n");
    code = in ? ok : negative;
  });

  auto* cab = app.add_subcommand("cable", "tube braid of an exterior word");
  cab->add_option("--comp", comp_text, "composition, e.g. 2,3,1")->required();
  cab->add_option("words", words)->expected(1);
  cab->callback([&] {
    need_words(1);
    const Composition c = parse_composition(comp_text);
    const auto w = cable(parse_word(words[0], c.size()), c);
    emit(to_json(w), format_word(w) + "\n");
  });

  auto* sum = app.add_subcommand("sum", "direct sum over a composition");
  sum->add_option("--comp", comp_text, "composition, e.g. 2,3,1")->required();
  sum->add_option("words", words, "one word per block (\"\" for the identity)");
  sum->callback([&] {
    const Composition c = parse_composition(comp_text);
    if (static_cast<int>(words.size()) != c.size()) {
      throw CLI::ValidationError("sum needs one word per block");
    }
    std::vector<BraidWord> parts;
    for (int i = 1; i <= c.size(); ++i) parts.push_back(parse_word(words[static_cast<std::size_t>(i - 1)], c.block(i)));
    const auto w = direct_sum(parts, c);
    emit(to_json(w), format_word(w) + "\n");
  });

  auto* dec = app.add_subcommand("decompose", "exterior and interior braids");
  with_word(dec);
  dec->add_option("--comp", comp_text, "composition of n")->required();
  dec->callback([&] {
    need_words(1);
    const auto f = decompose(word_at(0), parse_composition(comp_text));
    if (!f) {
      emit(json{{"decomposable", false}}, "not decomposable\n");
      code = negative;
      return;
    }
    emit(to_json(*f), factored_text(*f));
  });

  auto* mu_cmd = app.add_subcommand("mu", "the periodic braid mu_{m,d}");
  mu_cmd->add_option("--m", m)->required();
  auto* d_opt = mu_cmd->add_option("--d", d);
  auto* dvec_opt = mu_cmd->add_option("--dvec", dvec_text, "decorated parameters, e.g. 2,2,1");
  d_opt->excludes(dvec_opt);
  mu_cmd->callback([&] {
    if (!dvec_text.empty()) {
      const auto f = mu_decorated(m, parse_composition(dvec_text));
      if (as_json) {
        out << to_json(f).dump() << "\n";
      } else {
        out << format_word(flatten(f)) << "\n";
      }
      return;
    }
    const auto w = mu(m, d);
    emit(to_json(w), format_word(w) + "\n");
  });

  auto* delta = app.add_subcommand("delta", "sigma_{n-1} ... sigma_1");
  delta->add_option("--n", n)->required();
  delta->add_option("--power", power)->capture_default_str();
  delta->callback([&] {
    const auto w = delta_braid(n).pow(power);
    emit(to_json(w), format_word(w) + "\n");
  });

  auto* eps = app.add_subcommand("epsilon", "delta * sigma_1");
  eps->add_option("--n", n)->required();
  eps->add_option("--power", power)->capture_default_str();
  eps->callback([&] {
    const auto w = epsilon_braid(n).pow(power);
    emit(to_json(w), format_word(w) + "\n");
  });

  auto* psi = app.add_subcommand("psi", "centralizer embeddings of a 1-pure braid in B_{d+1}");
  psi->add_option("--m", m)->required();
  psi->add_option("--d", d)->required();
  psi->add_option("--which", which, "4, 5 or 6; 0 prints the generator table")->capture_default_str();
  psi->add_option("words", words)->expected(0, 1);
  psi->callback([&] {
    const auto tab = build_generator_table(m, d);
    if (which == 0) {
      out << (as_json ? to_json(tab).dump() : to_json(tab).dump(2)) << "\n";
      return;
    }
    need_words(1);
    const BraidWord w = parse_word(words[0], d + 1);
    BraidWord img;
    switch (which) {
      case 4: img = psi4(w, tab); break;
      case 5: img = psi5(w, tab); break;
      case 6: img = psi6(w, tab); break;
      default: throw CLI::ValidationError("--which must be 0, 4, 5 or 6");
    }
    emit(to_json(img), format_word(img) + "\n");
  });

  auto* com = app.add_subcommand("commutes", "whether two braids commute");
  with_word(com, 2);
  com->callback([&] {
    need_words(2);
    const bool c = commutes(word_at(0), word_at(1));
    emit(json{{"commutes", c}}, c ? "commute\n" : "do not commute\n");
    code = c ? ok : negative;
  });

  auto* conj = app.add_subcommand("conj", "search g with g a g^-1 = b");
  with_word(conj, 2);
  conj->add_option("--scope", scope_text, "full | one_pure | ends_pure")->capture_default_str();
  conj->add_option("--commuting-with", centralize_text, "require g to commute with this word");
  conj->add_option("--depth", depth, "breadth-first depth limit")->capture_default_str();
  conj->callback([&] {
    need_words(2);
    ConjugacyOptions opts;
    if (scope_text == "full") {
      opts.scope = ConjugacyScope::full;
    } else if (scope_text == "one_pure") {
      opts.scope = ConjugacyScope::one_pure;
    } else if (scope_text == "ends_pure") {
      opts.scope = ConjugacyScope::ends_pure;
    } else {
      throw CLI::ValidationError("unknown scope '" + scope_text + "'");
    }
    if (!centralize_text.empty()) {
      const BraidWord z = parse_word(centralize_text, n);
      opts.filter = [z](const BraidWord& g) { return commutes(g, z); };
    }
    opts.max_summit_size = budget;
    opts.bfs_max_nodes = budget;
    opts.bfs_depth = depth;
    const auto res = conjugacy_search(word_at(0), word_at(1), opts);
    json j{{"verdict", to_string(res.verdict)}, {"reason", res.reason}};
    std::string text = to_string(res.verdict);
    if (res.conjugator) {
      j["conjugator"] = to_json(*res.conjugator);
      text += "\n" + format_word(*res.conjugator);
    }
    emit(j, text + "\n" + (as_json ? "" : "(" + res.reason + ")\n"));
    using V = ConjugacyResult::Verdict;
    code = res.verdict == V::conjugate ? ok : res.verdict == V::not_conjugate ? negative : ExitCode::budget;
  });

  auto* per = app.add_subcommand("periodic", "periodicity test");
  with_word(per);
  per->callback([&] {
    need_words(1);
    const auto p = is_periodic(word_at(0));
    json j{{"kind", to_string(p.kind)}};
    std::string text = to_string(p.kind);
    if (p.periodic()) {
      j["k"] = p.k;
      text += " k=" + std::to_string(p.k);
    }
    emit(j, text + "\n");
    code = p.periodic() ? ok : negative;
  });

  std::string scenario, out_file;
  auto* rep = app.add_subcommand("repro", "run a reproduction scenario");
  rep->add_option("scenario", scenario, "thm14 | centralizer_claim | example4 | lemma_decom | mu_suite | psi_suite | all")
      ->required();
  rep->add_option("--out", out_file, "also write the JSON report here");
  rep->add_option("--depth", depth, "breadth-first depth limit for searches")->capture_default_str();
  rep->callback([&] {
    ConjugacyOptions search;
    search.max_summit_size = budget;
    search.bfs_max_nodes = budget;
    search.bfs_depth = depth;
    const auto r = repro::run_scenario(scenario, seed, search);
    const json j = repro::to_json(r);
    if (!out_file.empty()) {
      std::ofstream f(out_file);
      if (!f) throw std::runtime_error("cannot write " + out_file);
      f << j.dump(2) << "\n";
    }
    emit(j, repro::to_text(r));
    code = r.passed() ? ok : r.budget_exhausted() ? ExitCode::budget : negative;
  });

  auto* self = app.add_subcommand("selftest", "quick consistency checks");
  self->callback([&] {
    repro::ScenarioReport r{"selftest", {}, 0};
    r.expect("convention: permutation of sigma_3 sigma_2 sigma_1 sigma_1",
             json::array({1, 4, 2, 3}), induced_permutation(mu(3, 1)).images());
    r.expect("lk(sigma_1^2 sigma_2^4)", 1, linking_number_first(BraidWord(4, {1, 1, 2, 2, 2, 2})));
    r.expect_true("braid relation", equals(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
    r.expect_true("delta^4 = Delta^2 in B_4", equals(delta_braid(4).pow(4), delta_word(4).pow(2)));
    r.expect_true("generator table (3,2) validates", table_is_valid(build_generator_table(3, 2)));
    emit(repro::to_json(r), repro::to_text(r));
    code = r.passed() ? ok : negative;
  });

  std::string sizes_text = "10x1000", format = "text";
  int reps = 10;
  auto* bench = app.add_subcommand("bench", "normal-form timing");
  bench->add_option("--sizes", sizes_text, "comma list of NxLENGTH; empty for none")->capture_default_str();
  bench->add_option("--reps", reps)->capture_default_str();
  bench->add_option("--format", format, "text | json | csv")->capture_default_str();
  bench->callback([&] {
    const auto rows = repro::run_bench(parse_bench_sizes(sizes_text), reps, seed);
    if (as_json || format == "json") {
      out << repro::bench_json(rows).dump() << "\n";
    } else if (format == "csv") {
      out << repro::bench_csv(rows);
    } else {
      for (const auto& r : rows) {
        out << "B_" << r.size.strands << " length " << r.size.length << ": median " << r.median_ms
            << " ms over " << r.repetitions << " runs (min " << r.min_ms << ", max " << r.max_ms << ")\n";
      }
    }
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return code;
}

}  // namespace braidkit::cli
