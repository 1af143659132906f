#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankagg/cip.hpp"
#include "rankagg/core.hpp"
#include "rankagg/csv.hpp"
#include "rankagg/matrix.hpp"

namespace rankagg::io {

/// Country column plus one integer rank column per ranking.
struct RanksTable {
  AlternativeSet alternatives;
  std::vector<NamedRanking> rankings;
  /// Non-fatal findings, e.g. a column whose ranks are not dense.
  std::vector<std::string> advisories;

  const NamedRanking& column(std::string_view name) const;
};

/// Columns whose ranks are dense (or competition) get that scheme; anything
/// else is kept as given and reported in `advisories`. Missing cells,
/// non-integer or non-positive ranks, and duplicate countries throw
/// InputError naming the row (header is row 1) and column.
RanksTable parse_ranks(std::string_view text, std::string_view source = "<ranks>");
RanksTable load_ranks(const std::filesystem::path& path);

/// Criterion name -> votes, in canonical (file) order.
struct WeightsConfig {
  std::vector<std::pair<std::string, int>> weights;

  long total() const;
  /// Throws InputError for unknown criteria.
  int weight_of(std::string_view criterion) const;
};

/// `name = votes` lines; `#` starts a comment.
WeightsConfig parse_weights(std::string_view text, std::string_view source = "<weights>");
WeightsConfig load_weights(const std::filesystem::path& path);

/// MVApc, MXpc, ImWMVA, ImWMT get 2 votes; the four share indicators get 1.
WeightsConfig default_weights();
WeightsConfig unit_weights(const std::vector<std::string>& criteria);

/// Every ranks column becomes a criterion; each needs a weight and every
/// weight needs a column.
Profile make_profile(const RanksTable& table, const WeightsConfig& weights);

std::vector<IndicatorRecord> parse_indicators(std::string_view text,
                                              std::string_view source = "<indicators>");
std::vector<IndicatorRecord> load_indicators(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

void write_ranking_csv(std::ostream& out, const Ranking& ranking,
                       std::string_view key_header = "country");
void write_rankings_csv(std::ostream& out, const std::vector<NamedRanking>& rankings,
                        std::string_view key_header = "country");

/// `cell` renders one entry as text.
template <typename T, typename Format>
void write_matrix_csv(std::ostream& out, const std::vector<std::string>& labels,
                      const Matrix<T>& matrix, Format&& cell, std::string_view corner = "") {
  csv::Row row{std::string(corner)};
  row.insert(row.end(), labels.begin(), labels.end());
  csv::write_row(out, row);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    row.assign({labels[i]});
    for (std::size_t j = 0; j < labels.size(); ++j) row.push_back(cell(matrix(i, j)));
    csv::write_row(out, row);
  }
}

}  // namespace rankagg::io
