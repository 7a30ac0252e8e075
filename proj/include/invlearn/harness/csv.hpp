#pragma once

#include <string>

#include "invlearn/harness/experiment.hpp"

namespace invlearn {

// 6-significant-digit formatting shared by all emitted values
std::string format_sig6(double v);

// Writes one row per (policy, T) with the header
// application,policy,T,replications,mean_rel_regret_pct,std_rel_regret_pct,
// mean_switches,mean_waiting_periods,wall_clock_s
// and, when curves were recorded, one companion file per run with rows
// t,mean_rel_regret_pct,std_rel_regret_pct.
void emit_csv(const SimulationResult& result, const std::string& path);

std::string render_summary_csv(const SimulationResult& result);

}  // namespace invlearn
