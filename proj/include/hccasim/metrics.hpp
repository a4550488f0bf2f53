#pragma once

#include "hccasim/time_util.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hcca {

// One delivered packet: generation at the station (G), MAC transmission
// start (S) and reception complete at the QAP (R).
struct PacketRecord {
    int stream = 0;
    std::int64_t seq = 0;  // index of the frame within its stream's trace
    Usec gen_us = 0;
    Usec send_us = 0;
    Usec recv_us = 0;
    std::int64_t size_bits = 0;
};

struct PollCounters {
    std::int64_t polls_sent = 0;
    std::int64_t nulls_received = 0;
    std::int64_t data_responses = 0;  // polls answered with at least one data frame
    // Same counters restricted to polls at or after the reporting window start.
    std::int64_t polls_sent_window = 0;
    std::int64_t nulls_received_window = 0;
    std::int64_t data_responses_window = 0;
};

struct MetricsLedger {
    std::vector<PacketRecord> packets;
    std::vector<PollCounters> per_station;
    Usec sim_duration_us = 0;
    Usec window_start_us = 0;  // reporting window for the *_window counters
    std::int64_t frames_generated = 0;
    std::int64_t frames_queued_at_end = 0;
    std::int64_t frames_dropped = 0;

    std::int64_t total_polls() const;
    std::int64_t total_nulls() const;
    std::int64_t total_polls_window() const;
    std::int64_t total_nulls_window() const;
    std::int64_t delivered_bits() const;
    std::int64_t delivered_bytes() const { return delivered_bits() / 8; }
};

// Mean of S - G over all delivered packets, microseconds. Throws
// ValidationError on an empty ledger.
double mean_access_delay_us(const MetricsLedger& ledger);

// Mean of R - G over all delivered packets, microseconds.
double mean_e2e_delay_us(const MetricsLedger& ledger);

// Null frames received / polls sent, in [0, 1]. Throws if no poll was sent.
double poll_overhead_ratio(const MetricsLedger& ledger);
double poll_overhead_ratio_window(const MetricsLedger& ledger);

// Delivered payload bits / simulation duration, bit/s.
double aggregate_throughput_bps(const MetricsLedger& ledger);

// Per-packet (generation time, end-to-end delay) pairs of one stream,
// ordered by generation time.
std::vector<std::pair<Usec, Usec>> e2e_delay_series(const MetricsLedger& ledger, int stream);

// CSV emission. Deterministic formatting: integers verbatim, reals with six
// fixed decimals. One file per concern.
void write_packets_csv(const MetricsLedger& ledger, std::ostream& out);
void write_polls_csv(const MetricsLedger& ledger, std::ostream& out);
void write_summary_csv(const MetricsLedger& ledger, std::ostream& out);

void write_metrics_files(const MetricsLedger& ledger, const std::string& directory);

} // namespace hcca
