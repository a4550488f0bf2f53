#pragma once

#include "hccasim/engine.hpp"
#include "hccasim/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hcca {

enum class CellStatus { Ok, Rejected };

struct SweepCell {
    SchedulerKind scheduler = SchedulerKind::Hcca;
    int station_count = 0;
    CellStatus status = CellStatus::Ok;
    std::string detail;  // rejection reason when status == Rejected
    MetricsLedger ledger;
};

struct SweepResult {
    std::string scenario_name;
    std::vector<SweepCell> cells;
};

// Builds one scenario per (station count, scheduler) by cycling the base
// config's station specs up to the requested count, runs each independently
// and returns the matrix. Admission failures are recorded per cell. Cell
// results depend only on (config, seed, cell identity), never on sweep order.
SweepResult run_sweep(const ScenarioConfig& base, const std::vector<int>& station_counts,
                      const std::vector<SchedulerKind>& schedulers);

ScenarioConfig make_cell_config(const ScenarioConfig& base, int station_count,
                                SchedulerKind scheduler);

// Writes per-cell metric CSVs plus the wide summary table under out_dir.
void write_sweep_outputs(const SweepResult& result, const std::string& out_dir);

// Long-format plot data, one file per metric: columns
// scenario,scheduler,station_count,metric,value ordered by scheduler then
// station count. Rejected cells are omitted.
void emit_plot_data(const SweepResult& result, const std::string& out_dir);

} // namespace hcca
