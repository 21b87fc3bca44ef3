#pragma once

#include <string>
#include <vector>

#include "fsolink/config.hpp"
#include "fsolink/monte_carlo.hpp"

namespace fsolink {

// One grid point of an outage sweep. NaN-valued optional fields serialize
// as empty CSV cells.
struct SweepRow {
    double axis_value = 0.0;
    std::string link_type;      // intra | inter | none
    std::string constellation;  // iridium | starlink | custom | none
    double distance_m = 0.0;
    double displacement_m = 0.0;
    double tau_s = 0.0;
    bool analytic_ok = true;  // false when the series failed to converge
    double outage_analytic = 0.0;
    int trunc_n = 0;
    bool mc_enabled = false;
    double outage_mc = 0.0;
    double mc_ci_low = 0.0;
    double mc_ci_high = 0.0;
    std::string config_hash;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool any_convergence_failure = false;
};

// Evaluates every grid point (rows run in parallel, output ordered by grid
// index; Monte Carlo row i uses stream_id = i). Series convergence failures
// are recorded in the row rather than thrown.
SweepResult run_outage_sweep(const ScenarioConfig& config);

struct DisplacementRow {
    std::string constellation;
    std::string link_type;
    double distance_m = 0.0;
    double displacement_m = 0.0;
    double tau_s = 0.0;
    std::string config_hash;
};

// Intra- and inter-plane rows for the configured constellation.
std::vector<DisplacementRow> run_displacement(const ScenarioConfig& config);

struct DesignRow {
    double target = 0.0;
    DesignResult result;
    std::string config_hash;
};

std::vector<DesignRow> run_design_search(const ScenarioConfig& config);

struct McEstimateRow {
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    bool analytic_ok = true;
    double outage_analytic = 0.0;
    int trunc_n = 0;
    OutageEstimate estimate;
    std::string config_hash;
};

McEstimateRow run_mc_estimate(const ScenarioConfig& config);

// CSV renderers. First line is a schema comment (# fsolink.<name>.v1), then
// the header row; probabilities print as %.9e, geometry as %.12g.
std::string sweep_csv(const SweepResult& result);
std::string displacement_csv(const std::vector<DisplacementRow>& rows);
std::string design_csv(const std::vector<DesignRow>& rows);
std::string mc_estimate_csv(const McEstimateRow& row);

}  // namespace fsolink
