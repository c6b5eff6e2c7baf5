#pragma once

#include <string>

#include "bolab/diagnostics.hpp"
#include "bolab/extension.hpp"
#include "bolab/integrator.hpp"
#include "bolab/limit_study.hpp"
#include "bolab/run_config.hpp"

namespace bolab {

// Serializers used by the command-line driver. All return complete document
// text; the driver owns file placement.

// Header `t,mass,l2,hamiltonian,hs_half,tail_fraction,sup_norm`, one row per
// recorded snapshot, 17-significant-digit decimals, hamiltonian column left
// empty for models without one.
std::string diagnostics_csv(const Trajectory& traj);

std::string limit_report_json(const LimitStudyReport& rep);
std::string uc_report_json(const UCReport& rep);
std::string vanishing_report_json(const VanishingOrderReport& rep);

// Companion file written next to snapshots so `residual <dir>` can rebuild
// the equation: the config echoed through print_config, wrapped in JSON.
std::string manifest_json(const RunConfig& cfg);
RunConfig config_from_manifest(const std::string& json_text);

} // namespace bolab
