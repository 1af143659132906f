#include "rankagg/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include <fmt/format.h>

#include "rankagg/copeland.hpp"
#include "rankagg/csv.hpp"
#include "rankagg/io.hpp"
#include "rankagg/majority.hpp"
#include "rankagg/markovian.hpp"
#include "rankagg/solutions.hpp"

namespace rankagg {

namespace {

constexpr std::size_t kCriteria = 8;

std::vector<csv::Row> load_table(const std::filesystem::path& path) {
  auto rows = csv::parse(io::read_file(path), path.string());
  if (rows.size() < 2) throw InputError(fmt::format("{}: no data rows", path.string()));
  return rows;
}

double to_double(const std::string& text, const std::filesystem::path& path) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(fmt::format("{}: '{}' is not a number", path.string(), text));
}

/// Square labelled matrix file; `cell` parses one entry.
template <typename T, typename Parse>
std::pair<std::vector<std::string>, Matrix<T>> load_square(const std::filesystem::path& path,
                                                            Parse&& cell) {
  const auto rows = load_table(path);
  const std::vector<std::string> labels(rows.front().begin() + 1, rows.front().end());
  const std::size_t n = labels.size();
  if (rows.size() != n + 1) {
    throw InputError(fmt::format("{}: expected {} data rows, got {}", path.string(), n,
                                 rows.size() - 1));
  }
  Matrix<T> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i + 1].size() != n + 1 || rows[i + 1][0] != labels[i]) {
      throw InputError(fmt::format("{}: row {} does not match the header", path.string(), i + 2));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cell(rows[i + 1][j + 1]);
  }
  return {labels, std::move(m)};
}

int parse_wins_cell(const std::string& text, const std::filesystem::path& path) {
  static const std::regex pattern(R"(\s*[01]\s*\(\s*(\d+)\s*\)\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) {
    throw InputError(fmt::format("{}: cell '{}' is not of the form 'b(V)'", path.string(), text));
  }
  return std::stoi(match[1].str());
}

std::size_t index_in(const std::vector<std::string>& labels, const std::string& name) {
  const auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) throw InputError(fmt::format("unknown ranking label '{}'", name));
  return static_cast<std::size_t>(it - labels.begin());
}

Check exact_check(std::string name, long long expected, long long computed) {
  return {std::move(name), std::to_string(expected), std::to_string(computed),
          static_cast<double>(std::llabs(expected - computed)), expected == computed};
}

Check matrix_check(const std::string& name, const std::vector<std::string>& published_labels,
                   const Matrix<double>& published, const CorrelationMatrix& computed,
                   std::size_t block, double tolerance) {
  double worst = 0.0;
  std::string where = "-";
  for (std::size_t i = 0; i < block; ++i) {
    for (std::size_t j = 0; j < block; ++j) {
      const std::size_t ci = index_in(computed.labels, published_labels[i]);
      const std::size_t cj = index_in(computed.labels, published_labels[j]);
      const double d = std::abs(published(i, j) - computed.values(ci, cj));
      if (d > worst) {
        worst = d;
        where = fmt::format("{}/{}", published_labels[i], published_labels[j]);
      }
    }
  }
  return {name, fmt::format("{}x{} within {}", block, block, tolerance),
          fmt::format("max deviation at {}", where), worst, worst <= tolerance + 1e-12};
}

void permute_search(std::vector<std::size_t>& perm, std::vector<bool>& used, std::size_t depth,
                    const Matrix<int>& published, const Matrix<int>& computed,
                    std::vector<std::vector<std::size_t>>& out) {
  if (depth == kCriteria) {
    out.push_back(perm);
    return;
  }
  for (std::size_t c = 0; c < kCriteria; ++c) {
    if (used[c]) continue;
    perm[depth] = c;
    bool ok = true;
    for (std::size_t k = 0; k <= depth && ok; ++k) {
      ok = published(depth, k) == computed(c, perm[k]) &&
           published(k, depth) == computed(perm[k], c);
    }
    if (!ok) continue;
    used[c] = true;
    permute_search(perm, used, depth + 1, published, computed, out);
    used[c] = false;
  }
}

}  // namespace

bool ReproReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* ReproReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ReproReport::render() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << fmt::format("{} {}: expected {}; computed {}; deviation {:g}\n",
                       c.passed ? "PASS" : "FAIL", c.name, c.expected, c.computed, c.deviation);
  }
  const auto failed = std::count_if(checks.begin(), checks.end(),
                                    [](const Check& c) { return !c.passed; });
  out << fmt::format("{}: {} of {} checks passed\n", passed() ? "OK" : "FAILED",
                     checks.size() - static_cast<std::size_t>(failed), checks.size());
  return out.str();
}

std::vector<std::vector<std::size_t>> label_permutations(const Matrix<int>& published,
                                                         const Matrix<int>& computed) {
  if (published.size() < kCriteria || computed.size() < kCriteria) {
    throw InputError("wins matrices need at least the eight criteria");
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(kCriteria);
  std::vector<bool> used(kCriteria, false);
  permute_search(perm, used, 0, published, computed, out);
  return out;
}

StudyResults run_study(const std::filesystem::path& dir) {
  const auto criteria_table = io::load_ranks(dir / "criteria_ranks.csv");
  const auto weights = io::load_weights(dir / "weights.cfg");
  Profile profile = io::make_profile(criteria_table, weights);
  const auto published = io::load_ranks(dir / "aggregates.csv");
  if (!(published.alternatives == profile.alternatives())) {
    throw InputError("aggregates.csv lists different countries than criteria_ranks.csv");
  }

  const auto ms = build_majority(profile);
  std::vector<NamedRanking> aggregates;
  for (int v = 1; v <= 3; ++v) {
    aggregates.push_back({fmt::format("Copeland{}", v), copeland_ranking(ms, v)});
  }
  const auto alts = profile.alternatives();
  aggregates.push_back({"UC", sort_by_solution(ms, SolutionKind::uncovered).to_ranking(alts)});
  aggregates.push_back({"MES", sort_by_solution(ms, SolutionKind::mes).to_ranking(alts)});
  aggregates.push_back({"Markovian", markovian_ranking(ms)});

  std::vector<NamedRanking> fifteen;
  for (const auto& c : profile.criteria()) fifteen.push_back({c.name, c.ranking});
  fifteen.push_back(published.column("CIP"));
  fifteen.insert(fifteen.end(), aggregates.begin(), aggregates.end());

  auto tau = correlation_matrix(fifteen, Measure::tau_b);
  auto r = correlation_matrix(fifteen, Measure::coinciding_share);
  auto meta_tau = rankings_majority(fifteen, profile.criteria(), Measure::tau_b);
  auto meta_r = rankings_majority(fifteen, profile.criteria(), Measure::coinciding_share);
  return {std::move(profile), std::move(aggregates), std::move(fifteen), std::move(tau),
          std::move(r),       std::move(meta_tau),   std::move(meta_r)};
}

ReproReport run_reproduce(const std::filesystem::path& dir, const ReproTolerances& tol) {
  if (!std::filesystem::is_directory(dir)) {
    throw InputError(fmt::format("fixtures directory '{}' not found", dir.string()));
  }
  for (const char* name :
       {"criteria_ranks.csv", "aggregates.csv", "weights.cfg", "cycle_counts.csv",
        "correlations_taub.csv", "correlations_r.csv", "meta_wins_r.csv", "meta_rankings.csv",
        "criteria_label_fix.csv"}) {
    if (!std::filesystem::exists(dir / name)) {
      throw InputError(fmt::format("missing fixture '{}'", (dir / name).string()));
    }
  }

  ReproReport report;
  const StudyResults study = run_study(dir);
  const auto ms = build_majority(study.profile);

  // Cycle counts.
  for (const auto& row : load_table(dir / "cycle_counts.csv")) {
    if (row.size() != 2) throw InputError("cycle_counts.csv: expected k,cycles rows");
    if (row[0] == "k") continue;
    const int k = std::stoi(row[0]);
    report.checks.push_back(
        exact_check(fmt::format("cycles k={}", k), std::stoll(row[1]), count_cycles(ms, k)));
  }

  // Aggregate rankings against the published columns.
  const auto published = io::load_ranks(dir / "aggregates.csv");
  for (const auto& agg : study.aggregates) {
    const Ranking& pub = published.column(agg.name).ranking;
    const double tau = kendall_tau_b(agg.ranking, pub);
    report.checks.push_back({fmt::format("{} tau-b vs published", agg.name),
                             fmt::format(">= {}", tol.min_tau_b_vs_published),
                             fmt::format("{:.6f}", tau), 1.0 - tau,
                             tau >= tol.min_tau_b_vs_published});
    const long expected = static_cast<long>(pub.positions());
    const long got = static_cast<long>(agg.ranking.positions());
    report.checks.push_back({fmt::format("{} positions", agg.name),
                             fmt::format("{} +/- {}", expected, tol.position_slack),
                             std::to_string(got), static_cast<double>(std::labs(expected - got)),
                             std::labs(expected - got) <= tol.position_slack});
    report.checks.push_back(
        exact_check(fmt::format("{} rank of Japan", agg.name), 1, agg.ranking.rank("Japan")));
  }

  // Correlation tables.
  const auto as_double = [](const std::filesystem::path& p) {
    return [p](const std::string& s) { return to_double(s, p); };
  };
  const auto [tau_labels, tau_pub] =
      load_square<double>(dir / "correlations_taub.csv", as_double(dir / "correlations_taub.csv"));
  const auto [r_labels, r_pub] =
      load_square<double>(dir / "correlations_r.csv", as_double(dir / "correlations_r.csv"));
  report.checks.push_back(matrix_check("correlations tau-b criteria block", tau_labels, tau_pub,
                                       study.tau_b, kCriteria, tol.criteria_tau_b));
  report.checks.push_back(matrix_check("correlations r criteria block", r_labels, r_pub, study.r,
                                       kCriteria, tol.criteria_r));
  report.checks.push_back(matrix_check("correlations tau-b full", tau_labels, tau_pub,
                                       study.tau_b, tau_labels.size(), tol.full_tau_b));
  report.checks.push_back(matrix_check("correlations r full", r_labels, r_pub, study.r,
                                       r_labels.size(), tol.full_r));

  // Criterion labels of the published meta tables, recovered from the r wins.
  const std::filesystem::path t4 = dir / "meta_wins_r.csv";
  const auto [t4_labels, t4_wins] =
      load_square<int>(t4, [&](const std::string& s) { return parse_wins_cell(s, t4); });
  Matrix<int> computed_wins(t4_labels.size());
  for (std::size_t i = 0; i < t4_labels.size(); ++i) {
    for (std::size_t j = 0; j < t4_labels.size(); ++j) {
      computed_wins(i, j) = study.meta_r.wins(index_in(study.meta_r.candidates, t4_labels[i]),
                                              index_in(study.meta_r.candidates, t4_labels[j]));
    }
  }
  const auto perms = label_permutations(t4_wins, computed_wins);
  report.checks.push_back(exact_check("criteria label permutations matching r wins", 1,
                                      static_cast<long long>(perms.size())));

  std::map<std::string, std::string> fixture_map;
  for (const auto& row : load_table(dir / "criteria_label_fix.csv")) {
    if (row.size() != 2) throw InputError("criteria_label_fix.csv: expected published,actual");
    if (row[0] != "published") fixture_map[row[0]] = row[1];
  }
  std::map<std::string, std::string> label_map;
  for (std::size_t i = kCriteria; i < t4_labels.size(); ++i) label_map[t4_labels[i]] = t4_labels[i];
  bool map_ok = perms.size() == 1;
  std::string derived;
  if (!perms.empty()) {
    for (std::size_t i = 0; i < kCriteria; ++i) {
      const std::string& actual = t4_labels[perms.front()[i]];
      label_map[t4_labels[i]] = actual;
      derived += fmt::format("{}{}->{}", i ? " " : "", t4_labels[i], actual);
      const auto it = fixture_map.find(t4_labels[i]);
      map_ok = map_ok && it != fixture_map.end() && it->second == actual;
    }
  }
  map_ok = map_ok && fixture_map.size() == kCriteria;
  report.checks.push_back({"criteria label map equals fixture", "criteria_label_fix.csv",
                           derived.empty() ? "none" : derived, map_ok ? 0.0 : 1.0, map_ok});

  long mismatched = 0;
  for (std::size_t i = 0; i < t4_labels.size() && !perms.empty(); ++i) {
    for (std::size_t j = 0; j < t4_labels.size(); ++j) {
      const int got = study.meta_r.wins(index_in(study.meta_r.candidates, label_map[t4_labels[i]]),
                                        index_in(study.meta_r.candidates, label_map[t4_labels[j]]));
      mismatched += got != t4_wins(i, j);
    }
  }
  report.checks.push_back(
      exact_check("r meta wins all cells (mismatches)", 0, perms.empty() ? -1 : mismatched));

  // Meta-rankings.
  std::map<std::string, std::vector<std::pair<std::string, int>>> published_meta;
  for (const auto& row : load_table(dir / "meta_rankings.csv")) {
    if (row.size() != 3) throw InputError("meta_rankings.csv: expected measure,rank,ranking");
    if (row[0] == "measure") continue;
    published_meta[row[0]].emplace_back(row[2], std::stoi(row[1]));
  }
  const std::pair<const char*, const MetaComparison*> metas[] = {{"tau_b", &study.meta_tau_b},
                                                                 {"r", &study.meta_r}};
  for (const auto& [measure, mc] : metas) {
    const auto& expected = published_meta[measure];
    if (expected.size() != mc->candidates.size()) {
      throw InputError(fmt::format("meta_rankings.csv: {} rows for '{}', expected {}",
                                   expected.size(), measure, mc->candidates.size()));
    }
    const Ranking order = closest_weak_order(*mc);
    long wrong = 0;
    std::string first_wrong = "-";
    for (const auto& [published_label, rank] : expected) {
      const auto it = label_map.find(published_label);
      const std::string& actual = it == label_map.end() ? published_label : it->second;
      const int got = order.rank(index_in(mc->candidates, actual));
      if (got != rank) {
        if (wrong++ == 0) first_wrong = fmt::format("{} at {} (published {})", actual, got, rank);
      }
    }
    report.checks.push_back({fmt::format("meta-ranking {} vs published", measure),
                             "exact through label map",
                             wrong ? fmt::format("{} differ, first {}", wrong, first_wrong)
                                   : "identical",
                             static_cast<double>(wrong), wrong == 0});
  }
  report.checks.push_back(exact_check("closest linear orders tau_b", 1,
                                      static_cast<long long>(closest_linear_orders(study.meta_tau_b).count)));
  report.checks.push_back(exact_check("closest linear orders r", 6,
                                      static_cast<long long>(closest_linear_orders(study.meta_r).count)));
  return report;
}

}  // namespace rankagg
