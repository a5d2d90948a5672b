// report.hpp — CSV rendering of sweep results.
//
// One comment line echoing the resolved configuration, a mandatory header
// row, then one row per (axis value, scheme) in axis order with the
// proposed scheme before the baseline. '.' decimal separator throughout.
// Rendering is pure string work over already-aggregated numbers, so equal
// results give byte-identical files.

#pragma once

#include <string>

#include "d2dsim/sim.hpp"

namespace d2d {

std::string csv_header();

std::string render_csv(const SweepResult& result, const ScenarioConfig& cfg);

}  // namespace d2d
