#pragma once

// The cardinal composite index: a product of six factors, two of which are
// means of paired share indicators.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "rankagg/core.hpp"

namespace rankagg {

/// Canonical indicator order.
inline constexpr std::array<std::string_view, 8> kIndicatorNames = {
    "MVApc", "MXpc", "MHVAsh", "MVAsh", "MHXsh", "MXsh", "ImWMVA", "ImWMT"};

struct IndicatorRecord {
  std::string country;
  double mva_pc = 0;      // MVApc
  double mx_pc = 0;       // MXpc
  double mhva_share = 0;  // MHVAsh
  double mva_share = 0;   // MVAsh
  double mhx_share = 0;   // MHXsh
  double mx_share = 0;    // MXsh
  double im_wmva = 0;     // ImWMVA
  double im_wmt = 0;      // ImWMT

  std::array<double, 8> values() const {
    return {mva_pc, mx_pc, mhva_share, mva_share, mhx_share, mx_share, im_wmva, im_wmt};
  }
};

/// Throws InputError for missing, negative or non-finite values. Returns
/// warnings for shares outside [0, 1].
std::vector<std::string> validate(const IndicatorRecord& record);

double cip_index(const IndicatorRecord& record);

/// Dense ranking by decreasing index. Countries must be unique.
Ranking cip_ranking(const std::vector<IndicatorRecord>& records);

}  // namespace rankagg
