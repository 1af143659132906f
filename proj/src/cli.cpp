#include "rankagg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "rankagg/cip.hpp"
#include "rankagg/copeland.hpp"
#include "rankagg/correlation.hpp"
#include "rankagg/io.hpp"
#include "rankagg/majority.hpp"
#include "rankagg/markovian.hpp"
#include "rankagg/metarank.hpp"
#include "rankagg/reproduce.hpp"
#include "rankagg/solutions.hpp"

namespace rankagg {

namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kMethods = {"copeland1", "copeland2", "copeland3", "uc-sort",
                                           "mes-sort",  "wtc-sort",  "markovian"};

std::string format_correlation(double v, Measure measure) {
  return measure == Measure::tau_b ? fmt::format("{:.3f}", v) : fmt::format("{:.2f}", v);
}

std::string format_probability(double p) { return fmt::format("{:.6g}", p); }

/// Writes through `body` to the file at `path`, or to `out` when empty.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError(fmt::format("cannot write '{}'", path));
  body(file);
}

io::WeightsConfig resolve_weights(const std::string& choice, const io::RanksTable& table) {
  if (choice.empty()) {
    std::vector<std::string> names;
    for (const auto& r : table.rankings) names.push_back(r.name);
    return io::unit_weights(names);
  }
  if (choice == "default") return io::default_weights();
  return io::load_weights(choice);
}

Profile load_profile(const std::string& ranks, const std::string& weights, std::ostream& err) {
  const auto table = io::load_ranks(ranks);
  for (const auto& a : table.advisories) err << "note: " << a << '\n';
  return io::make_profile(table, resolve_weights(weights, table));
}

Ranking rank_by(const MajorityStructure& ms, const std::string& method) {
  if (method == "copeland1") return copeland_ranking(ms, 1);
  if (method == "copeland2") return copeland_ranking(ms, 2);
  if (method == "copeland3") return copeland_ranking(ms, 3);
  if (method == "uc-sort") {
    return sort_by_solution(ms, SolutionKind::uncovered).to_ranking(ms.alternatives());
  }
  if (method == "mes-sort") {
    return sort_by_solution(ms, SolutionKind::mes).to_ranking(ms.alternatives());
  }
  if (method == "wtc-sort") {
    return sort_by_solution(ms, SolutionKind::weak_top_cycle).to_ranking(ms.alternatives());
  }
  return markovian_ranking(ms);
}

std::vector<NamedRanking> load_all(const std::vector<std::string>& paths, std::ostream& err) {
  std::vector<NamedRanking> out;
  for (const auto& p : paths) {
    auto table = io::load_ranks(p);
    for (const auto& a : table.advisories) err << "note: " << a << '\n';
    if (!out.empty() && !(out.front().ranking.alternatives() == table.alternatives)) {
      throw InputError(fmt::format("'{}' lists different alternatives than '{}'", p,
                                   paths.front()));
    }
    for (auto& r : table.rankings) {
      for (const auto& existing : out) {
        if (existing.name == r.name) {
          throw InputError(fmt::format("ranking '{}' appears twice", r.name));
        }
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

struct Options {
  std::string ranks;
  std::string weights;
  std::string method = "copeland2";
  std::string measure = "tau-b";
  std::string output;
  std::string scheme = "dense";
  bool probabilities = false;
  std::vector<std::string> inputs;
  std::vector<std::string> candidates;
  bool with_criteria = false;
  std::vector<std::string> methods;
  std::string dot;
  std::string fixtures = RANKAGG_DATA_DIR;
};

int cmd_rank(const Options& o, std::ostream& out, std::ostream& err) {
  const auto profile = load_profile(o.ranks, o.weights, err);
  const auto ms = build_majority(profile);
  const auto scheme = parse_rank_scheme(o.scheme);
  if (o.method == "markovian" && o.probabilities) {
    const auto result = markovian(ms);
    const auto ranking = result.ranking.renumbered(scheme);
    emit(o.output, out, [&](std::ostream& s) {
      csv::write_row(s, {"country", "rank", "league", "probability"});
      std::vector<std::size_t> league_of(ms.size());
      for (std::size_t l = 0; l < result.leagues.leagues.size(); ++l) {
        for (auto i : result.leagues.leagues[l]) league_of[i] = l + 1;
      }
      for (std::size_t i = 0; i < ms.size(); ++i) {
        csv::write_row(s, {ms.alternatives()[i], std::to_string(ranking.rank(i)),
                           std::to_string(league_of[i]),
                           format_probability(result.probability[i])});
      }
    });
    return kExitOk;
  }
  const auto ranking = rank_by(ms, o.method).renumbered(scheme);
  emit(o.output, out, [&](std::ostream& s) { io::write_ranking_csv(s, ranking); });
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const auto profile = load_profile(o.ranks, o.weights, err);
  const auto ms = build_majority(profile);
  const fs::path dir = o.output.empty() ? fs::path(".") : fs::path(o.output);
  fs::create_directories(dir);
  const auto& names = ms.alternatives().items();
  const auto bit = [](std::uint8_t v) { return std::to_string(v); };
  emit((dir / "M.csv").string(), out,
       [&](std::ostream& s) { io::write_matrix_csv(s, names, ms.majority_matrix(), bit); });
  emit((dir / "T.csv").string(), out,
       [&](std::ostream& s) { io::write_matrix_csv(s, names, ms.tie_matrix(), bit); });
  std::vector<std::int64_t> counts;
  for (int k = 3; k <= 5; ++k) counts.push_back(count_cycles(ms, k));
  emit((dir / "cycles.csv").string(), out, [&](std::ostream& s) {
    csv::write_row(s, {"k", "cycles"});
    for (int k = 3; k <= 5; ++k) {
      csv::write_row(s, {std::to_string(k), std::to_string(counts[static_cast<std::size_t>(k - 3)])});
    }
  });
  for (int k = 3; k <= 5; ++k) {
    out << fmt::format("{}-cycles: {}\n", k, counts[static_cast<std::size_t>(k - 3)]);
  }
  return kExitOk;
}

int cmd_correlate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto measure = parse_measure(o.measure);
  const auto rankings = load_all(o.inputs, err);
  const auto cm = correlation_matrix(rankings, measure);
  emit(o.output, out, [&](std::ostream& s) {
    io::write_matrix_csv(s, cm.labels, cm.values,
                         [&](double v) { return format_correlation(v, measure); }, "ranking");
  });
  return kExitOk;
}

int cmd_metarank(const Options& o, std::ostream& out, std::ostream& err) {
  const auto measure = parse_measure(o.measure);
  const auto profile = load_profile(o.ranks, o.weights, err);
  std::vector<NamedRanking> candidates;
  if (o.with_criteria) {
    for (const auto& c : profile.criteria()) candidates.push_back({c.name, c.ranking});
  }
  auto extra = load_all(o.candidates, err);
  if (!o.methods.empty()) {
    const auto ms = build_majority(profile);
    for (const auto& m : o.methods) extra.push_back({m, rank_by(ms, m)});
  }
  for (auto& c : extra) {
    if (!(c.ranking.alternatives() == profile.alternatives())) {
      throw InputError(fmt::format("candidate '{}' ranks different alternatives", c.name));
    }
    candidates.push_back(std::move(c));
  }
  if (candidates.size() < 2) throw InputError("metarank needs at least two candidate rankings");

  const auto mc = rankings_majority(candidates, profile.criteria(), measure);
  const auto order = closest_weak_order(mc);
  emit(o.output, out, [&](std::ostream& s) {
    const std::size_t n = mc.candidates.size();
    csv::Row header{"ranking"};
    header.insert(header.end(), mc.candidates.begin(), mc.candidates.end());
    csv::write_row(s, header);
    for (std::size_t a = 0; a < n; ++a) {
      csv::Row row{mc.candidates[a]};
      for (std::size_t b = 0; b < n; ++b) {
        row.push_back(fmt::format("{}({})", mc.majority(a, b), mc.wins(a, b)));
      }
      csv::write_row(s, row);
    }
    s << '\n';
    csv::write_row(s, {"ranking", "rank"});
    for (const auto& group : order.groups()) {
      for (auto i : group) csv::write_row(s, {mc.candidates[i], std::to_string(order.rank(i))});
    }
  });
  if (!o.dot.empty()) emit(o.dot, out, [&](std::ostream& s) { s << to_dot(mc); });
  return kExitOk;
}

int cmd_cip(const Options& o, std::ostream& out, std::ostream& err) {
  const auto records = io::load_indicators(o.ranks);
  for (const auto& r : records) {
    for (const auto& w : validate(r)) err << "warning: " << w << '\n';
  }
  const auto ranking = cip_ranking(records).renumbered(parse_rank_scheme(o.scheme));
  emit(o.output, out, [&](std::ostream& s) {
    csv::write_row(s, {"country", "rank", "cip"});
    for (std::size_t i = 0; i < records.size(); ++i) {
      csv::write_row(s, {records[i].country, std::to_string(ranking.rank(i)),
                         fmt::format("{:.6g}", cip_index(records[i]))});
    }
  });
  return kExitOk;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  const auto report = run_reproduce(o.fixtures);
  emit(o.output, out, [&](std::ostream& s) { s << report.render(); });
  if (!o.output.empty()) out << (report.passed() ? "OK\n" : "FAILED\n");
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordinal rank aggregation by majority-rule methods"};
  app.require_subcommand(1);
  Options o;

  const auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--weights", o.weights,
                    "Weights file ('name = votes' lines) or 'default'; unit weights if omitted");
  };
  const auto add_output = [&](CLI::App* sub, const char* what) {
    sub->add_option("--output,-o", o.output, what);
  };
  const auto add_measure = [&](CLI::App* sub) {
    sub->add_option("--measure", o.measure, "tau-b or coinciding")
        ->check(CLI::IsMember({"tau-b", "tau_b", "taub", "coinciding", "r", "coinciding_share"}));
  };
  const auto add_scheme = [&](CLI::App* sub) {
    sub->add_option("--scheme", o.scheme, "Rank numbering: dense or competition")
        ->check(CLI::IsMember({"dense", "competition"}));
  };

  auto* rank = app.add_subcommand("rank", "Aggregate criteria rankings into one ranking");
  rank->add_option("ranks", o.ranks, "Criteria ranks CSV")->required()->check(CLI::ExistingFile);
  add_weights(rank);
  rank->add_option("--method", o.method, "Aggregation method")->check(CLI::IsMember(kMethods));
  add_scheme(rank);
  rank->add_flag("--probabilities", o.probabilities,
                 "With --method markovian, add league and stationary probability columns");
  add_output(rank, "Output CSV (stdout if omitted)");

  auto* analyze = app.add_subcommand("analyze", "Majority and tie matrices plus cycle counts");
  analyze->add_option("ranks", o.ranks, "Criteria ranks CSV")->required()->check(CLI::ExistingFile);
  add_weights(analyze);
  add_output(analyze, "Directory for M.csv, T.csv and cycles.csv (default: current)");

  auto* correlate = app.add_subcommand("correlate", "Correlation matrix of ranking columns");
  correlate->add_option("inputs", o.inputs, "Ranks CSV files over the same alternatives")
      ->required()
      ->check(CLI::ExistingFile);
  add_measure(correlate);
  add_output(correlate, "Output CSV (stdout if omitted)");

  auto* meta = app.add_subcommand("metarank", "Rank candidate rankings by their correlations");
  meta->add_option("ranks", o.ranks, "Criteria ranks CSV")->required()->check(CLI::ExistingFile);
  add_weights(meta);
  meta->add_option("--candidates", o.candidates, "CSV files whose columns are candidates")
      ->check(CLI::ExistingFile);
  meta->add_option("--methods", o.methods, "Aggregation methods to add as candidates")
      ->check(CLI::IsMember(kMethods));
  meta->add_flag("--with-criteria", o.with_criteria, "Add the criteria themselves as candidates");
  add_measure(meta);
  meta->add_option("--emit-dot", o.dot, "Write the majority digraph in DOT format");
  add_output(meta, "Output CSV (stdout if omitted)");

  auto* cip = app.add_subcommand("cip", "Composite index ranking from raw indicators");
  cip->add_option("indicators", o.ranks, "Indicator CSV")->required()->check(CLI::ExistingFile);
  add_scheme(cip);
  add_output(cip, "Output CSV (stdout if omitted)");

  auto* repro = app.add_subcommand("reproduce", "Run the case study against bundled tables");
  repro->add_option("fixtures", o.fixtures, "Fixtures directory")->capture_default_str();
  add_output(repro, "Report file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kExitUsage;
  }

  try {
    if (rank->parsed()) return cmd_rank(o, out, err);
    if (analyze->parsed()) return cmd_analyze(o, out, err);
    if (correlate->parsed()) return cmd_correlate(o, out, err);
    if (meta->parsed()) return cmd_metarank(o, out, err);
    if (cip->parsed()) return cmd_cip(o, out, err);
    return cmd_reproduce(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeLimit& e) {
    err << "size limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const fs::filesystem_error& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace rankagg
