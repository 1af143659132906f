#include "rankagg/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include <fmt/format.h>

namespace rankagg::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view text, long& value) {
  text = trim(text);
  if (text.starts_with('+')) text.remove_prefix(1);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

bool parse_double(std::string_view text, double& value) {
  text = trim(text);
  if (text.empty()) return false;
  std::string owned(text);
  std::istringstream in(owned);
  in.imbue(std::locale::classic());
  in >> value;
  return in && in.peek() == std::char_traits<char>::eof();
}

}  // namespace

const NamedRanking& RanksTable::column(std::string_view name) const {
  for (const auto& r : rankings) {
    if (r.name == name) return r;
  }
  throw InputError(fmt::format("no ranking column '{}'", name));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RanksTable parse_ranks(std::string_view text, std::string_view source) {
  const auto rows = csv::parse(text, source);
  if (rows.empty()) throw InputError(fmt::format("{}: empty file", source));
  const auto& header = rows.front();
  if (header.size() < 2) {
    throw InputError(fmt::format("{}: need a country column and at least one ranking", source));
  }
  const std::size_t columns = header.size() - 1;
  std::vector<std::string> names;
  std::vector<std::vector<int>> ranks(columns);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::size_t row_no = r + 1;
    if (row.size() != header.size()) {
      throw InputError(fmt::format("{}: row {} has {} cells, expected {}", source, row_no,
                                   row.size(), header.size()));
    }
    names.emplace_back(trim(row[0]));
    if (names.back().empty()) {
      throw InputError(fmt::format("{}: row {}, column '{}': empty name", source, row_no,
                                   header[0]));
    }
    for (std::size_t c = 0; c < columns; ++c) {
      long value = 0;
      const std::string& cell = row[c + 1];
      if (trim(cell).empty()) {
        throw InputError(
            fmt::format("{}: row {}, column '{}': missing rank", source, row_no, header[c + 1]));
      }
      if (!parse_int(cell, value) || value < 1 || value > std::numeric_limits<int>::max()) {
        throw InputError(fmt::format("{}: row {}, column '{}': rank '{}' is not a positive integer",
                                     source, row_no, header[c + 1], cell));
      }
      ranks[c].push_back(static_cast<int>(value));
    }
  }
  if (names.empty()) throw InputError(fmt::format("{}: no data rows", source));

  RanksTable table;
  try {
    table.alternatives = AlternativeSet(names);
  } catch (const InputError&) {
    auto dup = std::find_if(names.begin(), names.end(), [&](const std::string& n) {
      return std::count(names.begin(), names.end(), n) > 1;
    });
    const auto second = std::find(std::next(std::find(names.begin(), names.end(), *dup)),
                                  names.end(), *dup);
    throw InputError(fmt::format("{}: row {}, column '{}': duplicate '{}'", source,
                                 (second - names.begin()) + 2, header[0], *dup));
  }
  for (std::size_t c = 0; c < columns; ++c) {
    const std::string name(trim(header[c + 1]));
    Ranking probe(table.alternatives, ranks[c], RankScheme::as_given);
    RankScheme scheme = RankScheme::as_given;
    if (probe.is_dense()) {
      scheme = RankScheme::dense;
    } else if (probe.renumbered(RankScheme::competition).ranks().size() == ranks[c].size() &&
               std::equal(ranks[c].begin(), ranks[c].end(),
                          probe.renumbered(RankScheme::competition).ranks().begin())) {
      scheme = RankScheme::competition;
    } else {
      table.advisories.push_back(fmt::format(
          "{}: column '{}' is neither dense nor competition-numbered; ranks kept as given",
          source, name));
    }
    table.rankings.push_back({name, Ranking(table.alternatives, ranks[c], scheme)});
  }
  return table;
}

RanksTable load_ranks(const std::filesystem::path& path) {
  return parse_ranks(read_file(path), path.string());
}

long WeightsConfig::total() const {
  long t = 0;
  for (const auto& [name, w] : weights) t += w;
  return t;
}

int WeightsConfig::weight_of(std::string_view criterion) const {
  for (const auto& [name, w] : weights) {
    if (name == criterion) return w;
  }
  throw InputError(fmt::format("no weight for criterion '{}'", criterion));
}

WeightsConfig parse_weights(std::string_view text, std::string_view source) {
  WeightsConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InputError(fmt::format("{}: line {}: expected 'name = votes'", source, line_no));
    }
    const std::string name(trim(line.substr(0, eq)));
    long votes = 0;
    if (name.empty()) throw InputError(fmt::format("{}: line {}: empty name", source, line_no));
    if (!parse_int(line.substr(eq + 1), votes)) {
      throw InputError(fmt::format("{}: line {}: weight of '{}' is not an integer", source,
                                   line_no, name));
    }
    if (votes < 1) {
      throw InputError(fmt::format("{}: line {}: weight of '{}' must be >= 1, got {}", source,
                                   line_no, name, votes));
    }
    for (const auto& [existing, w] : cfg.weights) {
      if (existing == name) {
        throw InputError(fmt::format("{}: line {}: '{}' given twice", source, line_no, name));
      }
    }
    cfg.weights.emplace_back(name, static_cast<int>(votes));
  }
  if (cfg.weights.empty()) throw InputError(fmt::format("{}: no weights", source));
  return cfg;
}

WeightsConfig load_weights(const std::filesystem::path& path) {
  return parse_weights(read_file(path), path.string());
}

WeightsConfig default_weights() {
  WeightsConfig cfg;
  const int votes[] = {2, 2, 1, 1, 1, 1, 2, 2};
  for (std::size_t i = 0; i < kIndicatorNames.size(); ++i) {
    cfg.weights.emplace_back(std::string(kIndicatorNames[i]), votes[i]);
  }
  return cfg;
}

WeightsConfig unit_weights(const std::vector<std::string>& criteria) {
  WeightsConfig cfg;
  for (const auto& c : criteria) cfg.weights.emplace_back(c, 1);
  return cfg;
}

Profile make_profile(const RanksTable& table, const WeightsConfig& weights) {
  std::vector<Criterion> criteria;
  for (const auto& r : table.rankings) {
    criteria.push_back({r.name, weights.weight_of(r.name), r.ranking});
  }
  for (const auto& [name, w] : weights.weights) {
    table.column(name);
  }
  return Profile(table.alternatives, std::move(criteria));
}

std::vector<IndicatorRecord> parse_indicators(std::string_view text, std::string_view source) {
  const auto rows = csv::parse(text, source);
  if (rows.empty()) throw InputError(fmt::format("{}: empty file", source));
  const auto& header = rows.front();
  std::vector<std::size_t> column(kIndicatorNames.size(), 0);
  for (std::size_t k = 0; k < kIndicatorNames.size(); ++k) {
    auto it = std::find_if(header.begin() + 1, header.end(),
                           [&](const std::string& h) { return trim(h) == kIndicatorNames[k]; });
    if (it == header.end()) {
      throw InputError(fmt::format("{}: missing column '{}'", source, kIndicatorNames[k]));
    }
    column[k] = static_cast<std::size_t>(it - header.begin());
  }
  std::vector<IndicatorRecord> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) {
      throw InputError(fmt::format("{}: row {} has {} cells, expected {}", source, r + 1,
                                   row.size(), header.size()));
    }
    std::array<double, 8> v{};
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!parse_double(row[column[k]], v[k])) {
        throw InputError(fmt::format("{}: row {}, column '{}': '{}' is not a number", source,
                                     r + 1, kIndicatorNames[k], row[column[k]]));
      }
    }
    out.push_back({std::string(trim(row[0])), v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
  }
  return out;
}

std::vector<IndicatorRecord> load_indicators(const std::filesystem::path& path) {
  return parse_indicators(read_file(path), path.string());
}

void write_ranking_csv(std::ostream& out, const Ranking& ranking, std::string_view key_header) {
  csv::write_row(out, {std::string(key_header), "rank"});
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    csv::write_row(out, {ranking.alternatives()[i], std::to_string(ranking.rank(i))});
  }
}

void write_rankings_csv(std::ostream& out, const std::vector<NamedRanking>& rankings,
                        std::string_view key_header) {
  if (rankings.empty()) return;
  csv::Row header{std::string(key_header)};
  for (const auto& r : rankings) header.push_back(r.name);
  csv::write_row(out, header);
  const auto& alts = rankings.front().ranking.alternatives();
  for (std::size_t i = 0; i < alts.size(); ++i) {
    csv::Row row{alts[i]};
    for (const auto& r : rankings) row.push_back(std::to_string(r.ranking.rank(i)));
    csv::write_row(out, row);
  }
}

}  // namespace rankagg::io
