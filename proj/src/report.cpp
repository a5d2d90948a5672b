#include "d2dsim/report.hpp"

#include <cstdio>
#include <sstream>

namespace d2d {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void append_row(std::ostringstream& out, double axis_value, const char* scheme,
                int realizations, const AggregateRow& agg) {
  const MetricColumns& m = agg.mean;
  const MetricColumns& s = agg.sd;
  out << num(axis_value) << ',' << scheme << ',' << realizations << ','
      << num(m.access_ratio) << ',' << num(m.admissible_ratio) << ','
      << num(m.power_inc_mw) << ',' << num(m.power_inc_pct) << ','
      << num(m.tput_inc_bps) << ',' << num(m.tput_inc_pct) << ','
      << num(m.ee_inc) << ',' << num(m.ee_inc_pct) << ','
      << num(s.access_ratio) << ',' << num(s.admissible_ratio) << ','
      << num(s.power_inc_mw) << ',' << num(s.power_inc_pct) << ','
      << num(s.tput_inc_bps) << ',' << num(s.tput_inc_pct) << ','
      << num(s.ee_inc) << ',' << num(s.ee_inc_pct) << '\n';
}

}  // namespace

std::string csv_header() {
  return "axis,scheme,realizations,access_ratio,admissible_ratio,"
         "power_inc_mw,power_inc_pct,tput_inc_bps,tput_inc_pct,ee_inc,ee_inc_pct,"
         "access_ratio_sd,admissible_ratio_sd,power_inc_mw_sd,power_inc_pct_sd,"
         "tput_inc_bps_sd,tput_inc_pct_sd,ee_inc_sd,ee_inc_pct_sd";
}

std::string render_csv(const SweepResult& result, const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "# axis=" << sweep_axis_name(result.axis) << ' '
      << render_config_echo(cfg) << '\n';
  out << csv_header() << '\n';
  for (const SweepRow& row : result.rows) {
    if (!row.ok) continue;  // error rows are reported on stderr by the caller
    append_row(out, row.axis_value, "proposed", row.mc.realizations, row.mc.proposed);
    if (row.mc.has_baseline) {
      append_row(out, row.axis_value, "baseline", row.mc.realizations, row.mc.baseline);
    }
  }
  return out.str();
}

}  // namespace d2d
