#include "rankagg/cip.hpp"

#include <cmath>

#include <fmt/format.h>

namespace rankagg {

std::vector<std::string> validate(const IndicatorRecord& record) {
  if (record.country.empty()) throw InputError("indicator record without a country");
  std::vector<std::string> warnings;
  const auto values = record.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw InputError(fmt::format("{} of '{}' must be finite and non-negative, got {}",
                                   kIndicatorNames[i], record.country, values[i]));
    }
    const bool is_share = i >= 2 && i <= 5;
    if (is_share && values[i] > 1.0) {
      warnings.push_back(fmt::format("{} of '{}' is {} (shares are expected in [0, 1])",
                                     kIndicatorNames[i], record.country, values[i]));
    }
  }
  return warnings;
}

double cip_index(const IndicatorRecord& r) {
  validate(r);
  return r.mva_pc * r.mx_pc * ((r.mhva_share + r.mva_share) / 2.0) *
         ((r.mhx_share + r.mx_share) / 2.0) * r.im_wmva * r.im_wmt;
}

Ranking cip_ranking(const std::vector<IndicatorRecord>& records) {
  if (records.empty()) throw InputError("no indicator records");
  std::vector<std::string> names;
  std::vector<double> index;
  for (const auto& r : records) {
    names.push_back(r.country);
    index.push_back(cip_index(r));
  }
  return from_scores(AlternativeSet(std::move(names)), index);
}

}  // namespace rankagg
