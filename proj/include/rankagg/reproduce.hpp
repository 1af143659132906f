#pragma once

// End-to-end pipeline over the bundled CIP fixtures, diffed against the
// transcribed published tables.

#include <filesystem>
#include <string>
#include <vector>

#include "rankagg/core.hpp"
#include "rankagg/correlation.hpp"
#include "rankagg/metarank.hpp"

namespace rankagg {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  double deviation = 0.0;
  bool passed = false;
};

struct ReproReport {
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(std::string_view name) const;
  /// One line per check followed by an overall verdict.
  std::string render() const;
};

/// Tolerances used by run_reproduce.
struct ReproTolerances {
  double criteria_tau_b = 0.001;
  double criteria_r = 0.01;
  double full_tau_b = 0.005;
  double full_r = 0.05;
  double min_tau_b_vs_published = 0.99;
  int position_slack = 2;
};

/// Intermediate results, exposed for the acceptance suite and the CLI.
struct StudyResults {
  Profile profile;
  std::vector<NamedRanking> aggregates;  ///< Copeland1..3, UC, MES, Markovian
  std::vector<NamedRanking> fifteen;     ///< criteria, published CIP, aggregates
  CorrelationMatrix tau_b;
  CorrelationMatrix r;
  MetaComparison meta_tau_b;
  MetaComparison meta_r;
};

/// Criteria ranks with the bundled weights, computed aggregates and both
/// correlation and meta-comparison structures.
StudyResults run_study(const std::filesystem::path& fixtures_dir);

/// Throws InputError when a fixture is missing or malformed.
ReproReport run_reproduce(const std::filesystem::path& fixtures_dir,
                          const ReproTolerances& tolerances = {});

/// Published -> actual criterion labels recovered from a published wins
/// matrix (first eight rows/columns are criteria). Returns every criteria
/// permutation under which the published wins equal `computed` on the
/// criteria block.
std::vector<std::vector<std::size_t>> label_permutations(const Matrix<int>& published,
                                                         const Matrix<int>& computed);

}  // namespace rankagg
