#pragma once

#include "hccasim/frames.hpp"
#include "hccasim/metrics.hpp"
#include "hccasim/qos.hpp"
#include "hccasim/scenario.hpp"
#include "hccasim/scheduler.hpp"
#include "hccasim/time_util.hpp"
#include "hccasim/trace.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hcca {

// A frame sitting in a station's transmission queue.
struct QueuedFrame {
    Usec arrival_us = 0;  // absolute generation time G
    std::int64_t size_bits = 0;
    std::int64_t trace_index = 0;
};

// Station-side model: a cursor into the video trace plus the FIFO queue of
// generated frames. Frames become visible to polls at CAP boundaries.
class StationModel {
public:
    StationModel(int id, VideoTrace trace, Usec start_us);

    int id() const { return id_; }
    Usec start_us() const { return start_us_; }

    // Moves every frame with absolute arrival <= now into the queue.
    void sync_to(Usec now_us);

    // Absolute arrival of the next frame the station would transmit: the
    // queue head after skipping `after_queue_pos` entries, else the next
    // not-yet-generated trace record; nullopt once the trace is exhausted.
    std::optional<Usec> next_arrival_us(std::size_t after_queue_pos) const;

    std::optional<Usec> arrival_at(std::size_t trace_index) const;
    std::size_t trace_size() const { return trace_.records.size(); }
    std::size_t generated_count() const { return cursor_; }

    std::vector<QueuedFrame>& queue() { return queue_; }
    const std::vector<QueuedFrame>& queue() const { return queue_; }

private:
    int id_;
    VideoTrace trace_;
    Usec start_us_;
    std::size_t cursor_ = 0;      // trace records already generated
    std::vector<QueuedFrame> queue_;
};

// Injected channel loss: the listed (station, trace index) data frames are
// transmitted but never received. Empty by default (error-free channel).
class LossInjector {
public:
    LossInjector() = default;
    explicit LossInjector(const std::vector<StationSpec>& stations);

    void add(int station, std::int64_t trace_index);
    bool should_drop(int station, std::int64_t trace_index) const;
    std::size_t size() const;

private:
    std::vector<std::pair<int, std::int64_t>> drops_;
};

enum class EventKind {
    Beacon,
    CapStart,
    FrameGenerated,
    Tx,          // a frame on the channel, timestamp = transmission start
    Drop,        // an injected loss consuming its airtime
    PollTimeout  // QAP regaining the medium after a lost response
};

const char* event_kind_token(EventKind k);

struct EventRecord {
    Usec time_us = 0;
    EventKind kind = EventKind::Tx;
    int station = -1;  // -1 where not applicable
    FrameKind frame = FrameKind::QosData;
    bool has_frame = false;
    std::int64_t bits = 0;
    std::int64_t extra = -1;  // qs for data, grant for polls, trace index for GEN/DROP
};

struct SimResult {
    MetricsLedger ledger;
    std::vector<EventRecord> events;  // populated when event collection is on
    ScheduleState schedule;
};

// Event-log text format, one line per event:
//   <time_us> <kind> <station> <frame> <bits> [extra]
// kind in {BEACON, CAP_START, GEN, TX, DROP, TIMEOUT}; station and frame are
// "-" where not applicable. The format is stable; determinism tests hash it.
void write_event_log(const std::vector<EventRecord>& events, std::ostream& out);
std::string format_event_log(const std::vector<EventRecord>& events);

// Runs one scenario to completion. Performs admission (throws AdmissionError
// on rejection), executes beacons and CAPs on the fixed grid, and returns the
// populated ledger. Identical (scenario, seed) gives bit-identical results.
// `collect_events` forces event collection even when config.event_log is off.
SimResult run_scenario(const ScenarioConfig& config, bool collect_events = false);

// The station's response to one poll: data frames that fit the grant oldest
// first, or a single Null when its queue is empty. Data frames carry the QS
// feedback of the next arrival as of their own transmission instant.
std::vector<MacFrame> serve_poll(StationModel& station, Usec grant_us, Usec now_us,
                                 const PhyProfile& phy);

// Airtime needed to clear the station's current queue (used for EDD
// backlog feedback).
Usec queue_backlog_airtime_us(const StationModel& station, const PhyProfile& phy);

} // namespace hcca
