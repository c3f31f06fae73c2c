#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "teachkit/dfa_io.hpp"
#include "teachkit/dist_io.hpp"
#include "teachkit/elias.hpp"
#include "teachkit/enumeration.hpp"
#include "teachkit/equivalence.hpp"
#include "teachkit/example_set.hpp"
#include "teachkit/kt.hpp"
#include "teachkit/minimize.hpp"
#include "teachkit/sampling.hpp"
#include "teachkit/tabular.hpp"
#include "teachkit/teaching.hpp"
#include "teachkit/tiny_machine.hpp"

namespace teachkit::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kInputError = 2, kResourceLimit = 3, kNoResult = 4 };

/// Rows rendered as aligned text or CSV.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render(bool csv) const {
    std::ostringstream out;
    if (csv) {
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << '\n';
      };
      line(header_);
      for (const auto& r : rows_) line(r);
      return out.str();
    }
    std::vector<std::size_t> width(header_.size());
    for (std::size_t i = 0; i < header_.size(); ++i) width[i] = header_[i].size();
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      std::string text;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) text += "  ";
        text += std::string(width[i] - r[i].size(), ' ') + r[i];
      }
      out << text << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return out.str();
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

inline std::string fixed(double x, int digits = 6) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << x;
  return ss.str();
}

inline std::string sci(double x) {
  std::ostringstream ss;
  ss << std::setprecision(6) << x;
  return ss.str();
}

inline const char* help_footer() {
  return R"(File formats:

  DFA (.dfa)                      Example set
    dfa 1                           + 1
    states 2                        - 0
    start 0                         - eps
    accept 1
    t 0 1 0                       Tabular class
    t 1 1 1                         instances x1 x2 x3
                                    concept c1 010 0.6
  Batch export: DFA records         concept c2 110 0.3
  separated by "---" lines.         rest 0.1 1/2 1/3

  Distribution                    Tabular examples: "+ <name>" / "- <name>"
    dist geometric r=1
    dist geometric p=1/6          Tiny program: ASCII 0/1 literal, e.g.
    dist custom                     101011111110  (BR1 2; REJECT; ACCEPT)
    batch 1 1/13
    batch 2 8/13
    batch 3 3/13
    tail geometric 1/14 from 4

Exit status: 0 ok, 2 input error, 3 resource limit, 4 no witness / exhausted.)";
}

/// Parses argv, runs one subcommand and writes its report to `out`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"teachkit: teaching dimensions, witness sets and universal coding for binary automata"};
  app.footer(help_footer());
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  bool csv = false;
  std::string output_path;
  std::uint64_t seed = 0;
  app.add_flag("--csv", csv, "Emit tables as CSV");
  app.add_option("-o,--output", output_path, "Write the report to a file instead of stdout");
  app.add_option("--seed", seed, "Random seed (default 0)");

  // Shared option values.
  std::string dfa_a, dfa_b, examples_path, class_path, dist_path, target, out_file, profile = "pow4";
  int k = 1, k_max = 4, pool_max_len = -1, exact_k = 3, k_cap = 3, terms = 30, budget = 20, cap = kDefaultEnumerationCap;
  std::size_t size_cap = BtdOptions{}.size_cap, samples = 2000;
  std::uint64_t steps = 1000;
  bool trace = false;
  std::string which, program_bits, input_bits;
  std::vector<std::string> words;

  std::function<int(std::ostream&)> action;
  std::vector<std::pair<std::string, std::string>> config;
  std::string command;

  auto header = [&](std::ostream& o) {
    o << "# teachkit " << kVersion << "\n# command: " << command << "\n# config:";
    for (const auto& [key, value] : config) o << ' ' << key << '=' << value;
    o << " seed=" << seed << " csv=" << (csv ? "true" : "false") << '\n';
  };
  auto set = [&](const std::string& key, const std::string& value) { config.emplace_back(key, value); };
  auto btd_options = [&] {
    BtdOptions o;
    o.pool_max_len = pool_max_len;
    o.size_cap = size_cap;
    return o;
  };
  auto pool_text = [&] { return pool_max_len < 0 ? std::string("2k-2") : std::to_string(pool_max_len); };
  auto bound_profile = [&]() {
    if (profile == "pow4") return BtdBoundProfile{BtdBoundProfile::Kind::HalfPow4};
    if (profile == "square") return BtdBoundProfile{BtdBoundProfile::Kind::Square};
    throw InputError("unknown profile '" + profile + "' (expected pow4 or square)");
  };
  auto canonical_input = [](const std::string& path) {
    const Dfa raw = load_dfa(path);
    return minimize(raw);
  };

  // minimize
  auto* minimize_cmd = app.add_subcommand("minimize", "Canonical minimal form of a DFA");
  minimize_cmd->add_option("dfa", dfa_a, "DFA file")->required();
  minimize_cmd->callback([&] {
    command = "minimize";
    set("dfa", dfa_a);
    action = [&](std::ostream& o) {
      const Dfa d = load_dfa(dfa_a);
      header(o);
      o << "# states " << d.num_states() << " -> " << minimal_size(d) << '\n' << format_dfa(minimize(d));
      return kOk;
    };
  });

  // equiv
  auto* equiv_cmd = app.add_subcommand("equiv", "Language equivalence of two DFAs");
  equiv_cmd->add_option("a", dfa_a, "First DFA file")->required();
  equiv_cmd->add_option("b", dfa_b, "Second DFA file")->required();
  equiv_cmd->callback([&] {
    command = "equiv";
    set("a", dfa_a);
    set("b", dfa_b);
    action = [&](std::ostream& o) {
      const bool same = equivalent(load_dfa(dfa_a), load_dfa(dfa_b));
      header(o);
      o << (same ? "equivalent" : "different") << '\n';
      return kOk;
    };
  });

  // distinguish
  auto* dist_cmd = app.add_subcommand("distinguish", "Shortlex-least string separating two DFAs");
  dist_cmd->add_option("a", dfa_a, "First DFA file")->required();
  dist_cmd->add_option("b", dfa_b, "Second DFA file")->required();
  dist_cmd->callback([&] {
    command = "distinguish";
    set("a", dfa_a);
    set("b", dfa_b);
    action = [&](std::ostream& o) {
      const auto z = distinguishing_string(load_dfa(dfa_a), load_dfa(dfa_b));
      header(o);
      o << (z ? z->str() : std::string("none")) << '\n';
      return kOk;
    };
  });

  // tight-pair
  auto* tight_cmd = app.add_subcommand("tight-pair", "Write the k-state pair whose shortest separating string has length 2k-2");
  tight_cmd->add_option("--k", k, "States per machine (>= 2)")->required();
  tight_cmd->add_option("--out-dir", out_file, "Directory for k<k>_a.dfa and k<k>_b.dfa")->required();
  tight_cmd->callback([&] {
    command = "tight-pair";
    set("k", std::to_string(k));
    set("out-dir", out_file);
    action = [&](std::ostream& o) {
      const auto [a, b] = tight_pair(static_cast<std::size_t>(k));
      std::filesystem::create_directories(out_file);
      const auto base = std::filesystem::path(out_file) / ("k" + std::to_string(k));
      std::ofstream(base.string() + "_a.dfa") << format_dfa(a);
      std::ofstream(base.string() + "_b.dfa") << format_dfa(b);
      header(o);
      o << base.string() << "_a.dfa\n" << base.string() << "_b.dfa\n";
      return kOk;
    };
  });

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "Export batch C_k (canonical minimal DFAs with k states)");
  enum_cmd->add_option("--k", k, "Number of states")->required();
  enum_cmd->add_option("--cap", cap, "Enumeration cap");
  enum_cmd->callback([&] {
    command = "enumerate";
    set("k", std::to_string(k));
    set("cap", std::to_string(cap));
    action = [&](std::ostream& o) {
      const auto batch = enumerate_batch(k, cap);
      header(o);
      o << "# count " << batch.count() << '\n';
      for (std::size_t i = 0; i < batch.count(); ++i) o << (i ? "---\n" : "") << format_dfa(batch.concepts[i]);
      return kOk;
    };
  });

  // count
  auto* count_cmd = app.add_subcommand("count", "Batch sizes N_k for k = 1..k-max");
  count_cmd->add_option("--k-max", k_max, "Largest k")->required();
  count_cmd->add_option("--cap", cap, "Enumeration cap");
  count_cmd->callback([&] {
    command = "count";
    set("k-max", std::to_string(k_max));
    set("cap", std::to_string(cap));
    action = [&](std::ostream& o) {
      const BatchCatalog catalog(cap);
      std::vector<std::pair<int, std::size_t>> rows;
      for (int j = 1; j <= k_max; ++j) rows.emplace_back(j, catalog.batch(j).count());
      header(o);
      for (const auto& [j, n] : rows) o << (csv ? std::to_string(j) + "," : std::to_string(j) + " ") << n << '\n';
      return kOk;
    };
  });

  // btd / teach
  auto add_btd_flags = [&](CLI::App* sub) {
    sub->add_option("--dfa", dfa_a, "Target DFA file (minimized first)")->required();
    sub->add_option("--pool-max-len", pool_max_len, "Longest pool string (default 2k-2)");
    sub->add_option("--size-cap", size_cap, "Largest witness size searched exactly");
  };
  auto btd_report = [&](std::ostream& o, const Dfa& c, const TeachingResult& r) {
    o << "states " << c.num_states() << '\n'
      << "dimension " << r.dimension << '\n'
      << "exact " << (r.exact ? "yes" : "no (greedy upper bound)") << '\n'
      << "pool_max_len " << r.pool_max_len << '\n'
      << "witness\n"
      << format_examples(r.witness);
  };
  auto* btd_cmd = app.add_subcommand("btd", "Biased teaching dimension and witness of one concept");
  add_btd_flags(btd_cmd);
  btd_cmd->callback([&] {
    command = "btd";
    set("dfa", dfa_a);
    set("pool-max-len", pool_text());
    set("size-cap", std::to_string(size_cap));
    action = [&](std::ostream& o) {
      const Dfa c = canonical_input(dfa_a);
      const auto r = btd(c, btd_options());
      header(o);
      btd_report(o, c, r);
      return kOk;
    };
  });
  auto* teach_cmd = app.add_subcommand("teach", "Like btd, and write the witness as an example-set file");
  add_btd_flags(teach_cmd);
  teach_cmd->add_option("--out", out_file, "Witness example-set file")->required();
  teach_cmd->callback([&] {
    command = "teach";
    set("dfa", dfa_a);
    set("pool-max-len", pool_text());
    set("size-cap", std::to_string(size_cap));
    set("out", out_file);
    action = [&](std::ostream& o) {
      const Dfa c = canonical_input(dfa_a);
      const auto r = btd(c, btd_options());
      std::ofstream file(out_file);
      if (!file) throw InputError("cannot write '" + out_file + "'");
      file << format_examples(r.witness);
      header(o);
      btd_report(o, c, r);
      return kOk;
    };
  });

  // btd-batch
  auto* btd_batch_cmd = app.add_subcommand("btd-batch", "BTD of every concept in C_k");
  btd_batch_cmd->add_option("--k", k, "Batch")->required();
  btd_batch_cmd->add_option("--pool-max-len", pool_max_len, "Longest pool string (default 2k-2)");
  btd_batch_cmd->add_option("--size-cap", size_cap, "Largest witness size searched exactly");
  btd_batch_cmd->callback([&] {
    command = "btd-batch";
    set("k", std::to_string(k));
    set("pool-max-len", pool_text());
    set("size-cap", std::to_string(size_cap));
    action = [&](std::ostream& o) {
      const auto results = btd_batch(k, btd_options());
      const auto summary = summarize(k, results);
      std::vector<std::size_t> histogram(summary.max + 1, 0);
      for (const auto& r : results) ++histogram[r.dimension];
      Table t({"dimension", "concepts"});
      for (std::size_t d = 0; d < histogram.size(); ++d)
        if (histogram[d]) t.add({std::to_string(d), std::to_string(histogram[d])});
      header(o);
      o << t.render(csv);
      o << "count " << summary.count << "\nmean " << fixed(summary.mean()) << "\nmax " << summary.max
        << "\nD_k " << fixed(std::ldexp(1.0, 2 * k - 1), 0) << "\nall_exact " << (summary.all_exact ? "yes" : "no")
        << '\n';
      return kOk;
    };
  });

  // learn
  auto* learn_cmd = app.add_subcommand("learn", "Complexity-biased learner over batches 1..k-max");
  learn_cmd->add_option("--examples", examples_path, "Example-set file")->required();
  learn_cmd->add_option("--k-max", k_max, "Largest batch scanned");
  learn_cmd->callback([&] {
    command = "learn";
    set("examples", examples_path);
    set("k-max", std::to_string(k_max));
    action = [&](std::ostream& o) {
      const auto S = parse_examples(read_file(examples_path));
      const auto outcome = learn(S, k_max);
      header(o);
      o << to_string(outcome.tag) << '\n';
      if (outcome.concept_dfa) o << format_dfa(*outcome.concept_dfa);
      if (!outcome.candidates.empty()) {
        o << "# " << outcome.candidates.size() << " candidates at k=" << outcome.k << '\n';
        for (std::size_t i = 0; i < outcome.candidates.size(); ++i)
          o << (i ? "---\n" : "") << format_dfa(outcome.candidates[i]);
      }
      return kOk;
    };
  });

  // posterior
  auto* post_cmd = app.add_subcommand("posterior", "Posterior masses over a tabular class after each example");
  post_cmd->add_option("--class", class_path, "Tabular class file")->required();
  post_cmd->add_option("--examples", examples_path, "Named examples, applied in file order")->required();
  post_cmd->callback([&] {
    command = "posterior";
    set("class", class_path);
    set("examples", examples_path);
    action = [&](std::ostream& o) {
      const auto cls = parse_tabular_class(read_file(class_path));
      const auto S = parse_named_examples(read_file(examples_path));
      const auto trace = posterior_trace(cls, S);
      std::vector<std::string> head{"step", "example", "m_w"};
      for (const auto& c : cls.concepts) head.push_back("w(" + c.name + "|S)");
      head.push_back("w(rest|S)");
      Table t(head);
      for (std::size_t i = 0; i < trace.size(); ++i) {
        std::vector<std::string> row{std::to_string(i),
                                     i == 0 ? std::string("-")
                                            : std::string(S[i - 1].positive ? "+" : "-") + S[i - 1].instance,
                                     to_string(trace[i].normalizer)};
        for (std::size_t c = 0; c < cls.concepts.size(); ++c) row.push_back(fixed(to_double(trace[i].posterior(c)), 4));
        row.push_back(fixed(to_double(trace[i].rest_posterior()), 4));
        t.add(row);
      }
      header(o);
      o << t.render(csv);
      return kOk;
    };
  });

  // td-tabular / btd-tabular
  auto add_tabular = [&](const char* name, const char* description, bool biased) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("--class", class_path, "Tabular class file")->required();
    sub->add_option("--target", target, "Concept name (default: all listed concepts)");
    sub->callback([&, name, biased] {
      command = name;
      set("class", class_path);
      set("target", target.empty() ? std::string("all") : target);
      action = [&, biased](std::ostream& o) {
        const auto cls = parse_tabular_class(read_file(class_path));
        std::vector<std::string> names;
        if (target.empty())
          for (const auto& c : cls.concepts) names.push_back(c.name);
        else
          names.push_back(target);
        Table t({"concept", biased ? "BTD_w" : "TD", "witness"});
        bool missing = false;
        for (const auto& n : names) {
          try {
            const auto w = biased ? btd_tabular_witness(cls, n) : td_tabular_witness(cls, n);
            std::string text;
            for (auto x : w) text += (text.empty() ? "" : " ") + std::string(cls.concepts[cls.concept_index(n)].row[x] ? "+" : "-") + cls.instances[x];
            t.add({n, std::to_string(w.size()), text.empty() ? "{}" : text});
          } catch (const NoWitness&) {
            t.add({n, "NO_WITNESS", "-"});
            missing = true;
          }
        }
        header(o);
        o << t.render(csv);
        return missing ? kNoResult : kOk;
      };
    });
  };
  add_tabular("td-tabular", "Teaching dimension within the listed concepts", false);
  add_tabular("btd-tabular", "Biased teaching dimension within the listed concepts", true);

  // expected-btd
  auto* exp_cmd = app.add_subcommand("expected-btd", "Expected BTD: closed-form bound and enumerated value");
  exp_cmd->add_option("--dist", dist_path, "Distribution file")->required();
  exp_cmd->add_option("--exact-k", exact_k, "Enumerate batches 1..exact-k (0 disables)");
  exp_cmd->add_option("--profile", profile, "D_k profile: pow4 (2^(2k-1)) or square (k^2)");
  exp_cmd->add_option("--pool-max-len", pool_max_len, "Longest pool string (default 2k-2)");
  exp_cmd->add_option("--size-cap", size_cap, "Largest witness size searched exactly");
  exp_cmd->callback([&] {
    command = "expected-btd";
    set("dist", dist_path);
    set("exact-k", std::to_string(exact_k));
    set("profile", profile);
    set("pool-max-len", pool_text());
    set("size-cap", std::to_string(size_cap));
    action = [&](std::ostream& o) {
      const auto V = load_distribution(dist_path);
      const auto D = bound_profile();
      const auto bound = expected_btd_bound(V, D);
      header(o);
      o << "distribution " << V.describe() << "\nprofile D_k = " << D.name() << '\n';
      if (bound.diverges) {
        o << "bound DIVERGES\n";
      } else {
        o << "bound sum V_k*D_k = " << fixed(bound.value) << " (listed " << fixed(bound.head) << " + tail "
          << fixed(bound.tail) << ")";
        if (bound.exact) o << " = " << to_string(*bound.exact);
        o << '\n';
      }
      if (exact_k > 0) {
        const auto e = expected_btd_exact(V, exact_k, D, btd_options());
        Table t({"k", "V_k", "N_k", "mean_BTD", "D_k", "V_k*mean"});
        for (const auto& b : e.batches)
          t.add({std::to_string(b.k), sci(V.mass(b.k)), std::to_string(b.count), fixed(b.mean()),
                 fixed(D(b.k), 0), fixed(V.mass(b.k) * b.mean())});
        o << t.render(csv);
        o << "enumerated k<=" << exact_k << " = " << fixed(e.exact_part) << (e.exact ? "" : " (upper bound)") << '\n';
        if (e.tail_diverges)
          o << "tail bound DIVERGES\n";
        else
          o << "tail bound k>" << exact_k << " = " << fixed(e.tail_bound) << "\nenumerated + tail = "
            << fixed(e.total()) << '\n';
      }
      return kOk;
    };
  });

  // mc-expected-btd
  auto* mc_cmd = app.add_subcommand("mc-expected-btd", "Monte Carlo estimate of the expected BTD");
  mc_cmd->add_option("--dist", dist_path, "Distribution file")->required();
  mc_cmd->add_option("--samples", samples, "Number of draws");
  mc_cmd->add_option("--k-cap", k_cap, "Draws above this batch count as D_k");
  mc_cmd->add_option("--profile", profile, "D_k profile: pow4 or square");
  mc_cmd->add_option("--pool-max-len", pool_max_len, "Longest pool string (default 2k-2)");
  mc_cmd->add_option("--size-cap", size_cap, "Largest witness size searched exactly");
  mc_cmd->callback([&] {
    command = "mc-expected-btd";
    set("dist", dist_path);
    set("samples", std::to_string(samples));
    set("k-cap", std::to_string(k_cap));
    set("profile", profile);
    set("pool-max-len", pool_text());
    set("size-cap", std::to_string(size_cap));
    action = [&](std::ostream& o) {
      const auto V = load_distribution(dist_path);
      const auto est = expected_btd_mc(V, samples, seed, k_cap, bound_profile(), btd_options());
      header(o);
      Table t({"k", "draws"});
      for (const auto& [kk, n] : est.per_batch) t.add({std::to_string(kk), std::to_string(n)});
      o << t.render(csv);
      o << "estimate " << fixed(est.mean) << " +/- " << fixed(est.std_error) << " (standard error)\n"
        << "draws_counted_as_D_k " << est.bounded << "\ndraws_with_greedy_btd " << est.inexact << '\n';
      return kOk;
    };
  });

  // series
  auto* series_cmd = app.add_subcommand(
      "series", "Series tables: bound (V_k D_k of a distribution), square (geometric 1/6 against k^2), gamma (Elias-code series)");
  const std::map<std::string, std::string> series_aliases{{"eq5", "bound"}, {"fig12", "square"}, {"prop1", "gamma"}};
  series_cmd->add_option("--which", which, "bound, square or gamma (eq5, fig12, prop1 also accepted)")
      ->required()
      ->transform(CLI::Transformer(series_aliases))
      ->check(CLI::IsMember({"bound", "square", "gamma"}));
  series_cmd->add_option("--dist", dist_path, "Distribution file for bound (default the 1/13, 8/13, 3/13 custom)");
  series_cmd->add_option("--profile", profile, "D_k profile for bound: pow4 or square");
  series_cmd->add_option("--terms", terms, "Rows (k or i up to this value)");
  series_cmd->callback([&] {
    command = "series";
    set("which", which);
    if (which == "bound") {
      set("dist", dist_path.empty() ? std::string("builtin-three-batch") : dist_path);
      set("profile", profile);
    }
    set("terms", std::to_string(terms));
    action = [&](std::ostream& o) {
      header(o);
      if (which == "gamma") {
        Table t({"i", "codeword_len", "term_half", "majorant", "partial_half", "partial_full"});
        for (int i = 0; i <= terms; ++i)
          t.add({std::to_string(i), std::to_string(2 * i + 1),
                 sci(static_cast<double>(gamma_series_term(i, BatchSizeVariant::Half))),
                 sci(static_cast<double>(gamma_series_majorant(i))),
                 fixed(static_cast<double>(gamma_series_partial_sum(i, BatchSizeVariant::Half)), 12),
                 fixed(static_cast<double>(gamma_series_partial_sum(i, BatchSizeVariant::Full)), 12)});
        o << t.render(csv) << "limit 1+sqrt(2) = " << fixed(1 + std::sqrt(2.0), 12) << '\n';
        return kOk;
      }
      const bool square = which == "square";
      const auto V = square ? BatchDistribution::geometric_p(Rational(1, 6))
                         : (dist_path.empty() ? BatchDistribution::three_batch_custom() : load_distribution(dist_path));
      const auto D = square ? BtdBoundProfile{BtdBoundProfile::Kind::Square} : bound_profile();
      const auto counts = batch_counts(std::min(terms, 3));
      Table t({"k", "V_k", "N_k", "D_k", "V_k*D_k", "cumulative"});
      for (const auto& r : series_rows(V, D, terms, counts))
        t.add({std::to_string(r.k), sci(r.mass), r.count ? std::to_string(*r.count) : std::string("-"),
               fixed(r.bound, 0), sci(r.product), fixed(r.cumulative)});
      o << "distribution " << V.describe() << "\nprofile D_k = " << D.name() << '\n' << t.render(csv);
      const auto total = expected_btd_bound(V, D);
      if (total.diverges)
        o << "total DIVERGES\n";
      else
        o << "total (closed form) " << fixed(total.value) << (total.exact ? " = " + to_string(*total.exact) : "") << '\n';
      return kOk;
    };
  });

  // validate-dist
  auto* val_cmd = app.add_subcommand("validate-dist", "Check per-concept masses V_k/N_k are non-increasing");
  val_cmd->add_option("--dist", dist_path, "Distribution file")->required();
  val_cmd->add_option("--k-max", k_max, "Batches with enumerated N_k to check");
  val_cmd->callback([&] {
    command = "validate-dist";
    set("dist", dist_path);
    set("k-max", std::to_string(k_max));
    action = [&](std::ostream& o) {
      const auto V = load_distribution(dist_path);
      const auto counts = batch_counts(k_max);
      const auto report = validate_monotone(V, counts);
      header(o);
      Table t({"k", "V_k", "N_k", "v_k"});
      for (int j = 1; j <= k_max; ++j)
        t.add({std::to_string(j), sci(V.mass(j)), std::to_string(counts[j - 1]), sci(report.per_concept[j - 1])});
      o << t.render(csv) << "monotone " << (report.monotone ? "yes" : "no") << " (checked k<=" << report.checked_through
        << ")\n";
      if (report.first_violation)
        o << "violation (" << report.first_violation->k << "," << report.first_violation->k + 1 << ") "
          << sci(report.first_violation->v_k) << " < " << sci(report.first_violation->v_next) << '\n';
      return kOk;
    };
  });

  // elias
  auto* elias_cmd = app.add_subcommand("elias", "Elias gamma codec: elias encode <n>... | elias decode <bits>...");
  elias_cmd->add_option("mode", which, "encode or decode")->required()->check(CLI::IsMember({"encode", "decode"}));
  elias_cmd->add_option("values", words, "Integers to encode or bit strings to decode")->required();
  elias_cmd->callback([&] {
    command = "elias";
    set("mode", which);
    action = [&](std::ostream& o) {
      header(o);
      for (const auto& w : words) {
        if (which == "encode") {
          const auto n = parse_integer(w, "elias value");
          if (n < 1) throw InputError("Elias gamma encodes positive integers only");
          o << n << ' ' << elias_encode(static_cast<std::uint64_t>(n)) << '\n';
        } else {
          std::size_t pos = 0;
          while (pos < w.size()) {
            const auto d = elias_decode(w, pos);
            o << w.substr(pos, d.consumed) << ' ' << d.value << '\n';
            pos += d.consumed;
          }
        }
      }
      return kOk;
    };
  });

  // disasm / run-tiny
  auto* disasm_cmd = app.add_subcommand("disasm", "Disassemble a tiny-machine program literal");
  disasm_cmd->add_option("program", program_bits, "0/1 literal")->required();
  disasm_cmd->callback([&] {
    command = "disasm";
    set("program", program_bits);
    action = [&](std::ostream& o) {
      const auto p = TinyProgram::decode(program_bits);
      header(o);
      o << "# length " << p.length() << '\n' << p.disassemble();
      return kOk;
    };
  });
  auto* run_cmd = app.add_subcommand("run-tiny", "Run a tiny-machine program on one input");
  run_cmd->add_option("--program", program_bits, "0/1 literal")->required();
  run_cmd->add_option("--input", input_bits, "Input string (eps for empty)")->required();
  run_cmd->add_option("--steps", steps, "Step cap");
  run_cmd->add_flag("--trace", trace, "Print one line per executed step");
  run_cmd->callback([&] {
    command = "run-tiny";
    set("program", program_bits);
    set("input", input_bits);
    set("steps", std::to_string(steps));
    set("trace", trace ? "true" : "false");
    action = [&](std::ostream& o) {
      const auto p = TinyProgram::decode(program_bits);
      std::string log;
      const auto r = run_tiny(p, BinaryString::parse(input_bits), steps, trace ? &log : nullptr);
      header(o);
      o << log << to_string(r.halt) << " steps=" << r.steps << '\n';
      return kOk;
    };
  });

  // kt-learn
  auto* ktl_cmd = app.add_subcommand("kt-learn", "Dovetailing Kt learner over tiny-machine programs");
  ktl_cmd->add_option("--examples", examples_path, "Example-set file")->required();
  ktl_cmd->add_option("--budget", budget, "Largest budget B");
  ktl_cmd->callback([&] {
    command = "kt-learn";
    set("examples", examples_path);
    set("budget", std::to_string(budget));
    action = [&](std::ostream& o) {
      const auto S = parse_examples(read_file(examples_path));
      const auto r = kt_learn(S, budget);
      header(o);
      if (!r.found) {
        o << "EXHAUSTED budget=" << budget << " executed_steps=" << r.executed_steps << '\n';
        return kNoResult;
      }
      o << "FOUND " << r.program->bits() << "\nlength " << r.program->length() << "\nsteps " << r.total_steps
        << "\nkt " << fixed(r.kt) << "\nbudget " << r.budget << "\nexecuted_steps " << r.executed_steps << '\n'
        << r.program->disassemble();
      return kOk;
    };
  });

  // kt-teach
  auto* ktt_cmd = app.add_subcommand("kt-teach", "Bounded, uncertified teacher for the Kt learner");
  ktt_cmd->add_option("--dfa", dfa_a, "Oracle DFA file")->required();
  ktt_cmd->add_option("--pool-max-len", pool_max_len, "Longest pool string (default 2)");
  ktt_cmd->add_option("--budget", budget, "Learner budget");
  ktt_cmd->add_option("--size-cap", size_cap, "Largest example set tried");
  ktt_cmd->callback([&] {
    command = "kt-teach";
    if (pool_max_len < 0) pool_max_len = 2;
    set("dfa", dfa_a);
    set("pool-max-len", std::to_string(pool_max_len));
    set("budget", std::to_string(budget));
    set("size-cap", std::to_string(size_cap));
    action = [&](std::ostream& o) {
      const auto r = kt_teach(load_dfa(dfa_a), pool_max_len, budget, size_cap);
      header(o);
      if (!r.found) {
        o << "EXHAUSTED budget=" << budget << " size_cap=" << size_cap << '\n';
        return kNoResult;
      }
      o << "UNCERTIFIED (agreement checked on strings of length <= " << pool_max_len << ")\n"
        << "dimension " << r.teaching.dimension << "\nprogram " << r.program->bits() << "\nkt " << fixed(r.learner.kt)
        << "\nwitness\n"
        << format_examples(r.teaching.witness);
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (output_path.empty()) return action(out);
    std::ostringstream buffer;
    const int code = action(buffer);
    std::ofstream file(output_path);
    if (!file) throw InputError("cannot write '" + output_path + "'");
    file << buffer.str();
    return code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const NoWitness& e) {
    err << "NO_WITNESS: " << e.what() << '\n';
    return kNoResult;
  }
}

}  // namespace teachkit::cli
