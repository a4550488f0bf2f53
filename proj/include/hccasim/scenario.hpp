#pragma once

#include "hccasim/qos.hpp"
#include "hccasim/scheduler.hpp"
#include "hccasim/time_util.hpp"
#include "hccasim/trace.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hcca {

struct SynthSpec {
    Usec mean_gap_us = 0;
    JitterSpec gap_jitter = JitterSpec::uniform(0.5);
    std::int64_t mean_size_bits = 0;
    JitterSpec size_jitter = JitterSpec::uniform(0.5);
    Usec duration_us = 0;
    Usec frame_period_us = us_from_ms(40);

    bool operator==(const SynthSpec&) const = default;
};

// One station = one uplink stream. The trace source is exactly one of a
// trace file or a synthesis spec.
struct StationSpec {
    TrafficSpec tspec;
    std::optional<std::string> trace_path;
    std::optional<SynthSpec> synth;
    Usec offset_us = 0;                     // added to the common traffic start
    std::vector<std::int64_t> drop_frames;  // trace indices to discard in flight

    bool operator==(const StationSpec&) const = default;
};

struct ScenarioConfig {
    std::string name = "scenario";
    PhyProfile phy;
    SchedulerKind scheduler = SchedulerKind::Hcca;
    Usec duration_us = us_from_s(500);
    Usec traffic_start_us = us_from_s(20);
    Usec poll_window_start_us = 0;  // reporting window for windowed poll counters
    std::uint64_t seed = 1;
    std::string out_dir;
    bool event_log = false;
    std::vector<StationSpec> stations;

    bool operator==(const ScenarioConfig&) const = default;
};

// Table 3 PHY profile and per-video TSPEC presets (Table 5), each paired
// with a synthetic-trace stand-in whose mean gap realizes the 16 kbit/s mean
// rate at the preset's nominal MSDU size.
PhyProfile default_phy();
bool apply_station_preset(const std::string& name, StationSpec& out);
std::vector<std::string> station_preset_names();

// Flat key-value config text, one station per [station] section. Unknown
// keys and invariant violations raise ParseError/ValidationError with the
// file path and line number.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig load_config_stream(std::istream& in, const std::string& source_name = "<config>");

// Canonical serialization; load(serialize(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

void validate_config(const ScenarioConfig& config);

// Deterministic per-station synthesis seed, independent of sweep order.
std::uint64_t station_seed(std::uint64_t base_seed, std::size_t station_index);

// Materializes the station's trace (parse file or synthesize).
VideoTrace build_station_trace(const StationSpec& spec, std::uint64_t base_seed,
                               std::size_t station_index);

} // namespace hcca
