#pragma once

#include <string>
#include <vector>

#include "adtime/sweep.hpp"

namespace adtime {

/// Minimal line chart of mean revenue vs the sweep parameter, one polyline
/// per algorithm. Deterministic output.
std::string render_summary_svg(const std::vector<SummaryRow>& summary,
                               const std::string& title);

}  // namespace adtime
