#include "invlearn/harness/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace invlearn {

std::string format_sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string render_summary_csv(const SimulationResult& result) {
  std::ostringstream os;
  os << "application,policy,T,replications,mean_rel_regret_pct,std_rel_regret_pct,"
        "mean_switches,mean_waiting_periods,wall_clock_s\n";
  for (const auto& run : result.runs) {
    os << result.application << ',' << run.policy << ',' << run.T << ','
       << run.replications << ',' << format_sig6(run.mean_rel_regret) << ','
       << format_sig6(run.std_rel_regret) << ',' << format_sig6(run.mean_switches) << ','
       << format_sig6(run.mean_waiting) << ',' << format_sig6(run.wall_clock_s) << '\n';
  }
  return os.str();
}

namespace {

std::string curve_path(const std::string& base, const PolicyRunStat& run) {
  const auto dotpos = base.rfind('.');
  const std::string stem = dotpos == std::string::npos ? base : base.substr(0, dotpos);
  const std::string ext = dotpos == std::string::npos ? ".csv" : base.substr(dotpos);
  return stem + "_curve_" + run.policy + "_T" + std::to_string(run.T) + ext;
}

}  // namespace

void emit_csv(const SimulationResult& result, const std::string& path) {
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
    out << render_summary_csv(result);
    if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
  }
  for (const auto& run : result.runs) {
    if (run.curve_mean.empty()) continue;
    const std::string cp = curve_path(path, run);
    std::ofstream out(cp, std::ios::binary);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + cp);
    out << "t,mean_rel_regret_pct,std_rel_regret_pct\n";
    for (std::size_t t = 0; t < run.curve_mean.size(); ++t)
      out << (t + 1) << ',' << format_sig6(run.curve_mean[t]) << ','
          << format_sig6(run.curve_std[t]) << '\n';
    if (!out) throw std::runtime_error("emit_csv: write failed for " + cp);
  }
}

}  // namespace invlearn
