#pragma once

#include "hccasim/time_util.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hcca {

// Negotiated TSPEC for one uplink traffic stream. Sizes are bytes, rates are
// bit/s, times are integer microseconds.
struct TrafficSpec {
    std::int64_t mean_data_rate_bps = 0;   // rho
    std::int64_t nominal_msdu_bytes = 0;   // L
    std::int64_t max_msdu_bytes = 0;       // M
    Usec delay_bound_us = 0;               // D
    Usec min_service_interval_us = 0;      // mSI
    Usec max_service_interval_us = 0;      // MSI
    std::int64_t min_phy_rate_bps = 0;     // R

    bool operator==(const TrafficSpec&) const = default;
};

// PHY/MAC timing profile plus the superframe split. The superframe duration T
// equals the beacon interval.
struct PhyProfile {
    Usec sifs_us = 10;
    Usec pifs_us = 30;
    Usec slot_us = 20;
    std::int64_t preamble_bits = 144;
    std::int64_t plcp_header_bits = 48;
    std::int64_t plcp_rate_bps = 1'000'000;
    std::int64_t mac_header_bytes = 36;
    std::int64_t data_rate_bps = 54'000'000;
    std::int64_t basic_rate_bps = 6'000'000;
    std::int64_t ack_bytes = 14;    // control frame body carried at basic rate
    std::int64_t poll_bytes = 36;   // QoS CF-Poll body carried at basic rate
    Usec beacon_interval_us = 200'000;
    Usec t_cp_us = 0;               // airtime reserved per superframe for contention

    Usec superframe_us() const { return beacon_interval_us; }

    bool operator==(const PhyProfile&) const = default;
};

void validate_spec(const TrafficSpec& spec);
void validate_phy(const PhyProfile& phy);

struct AdmittedStream {
    std::size_t stream_id = 0;
    TrafficSpec spec;
    std::int64_t packets_per_si = 0;  // N
    Usec txop_us = 0;
};

// Scheduler state at the QAP: the admitted set, the global service interval
// and how many CAPs tile one beacon interval. cap_count * si_us tiles the
// beacon interval to within cap_count microseconds.
struct ScheduleState {
    std::vector<AdmittedStream> admitted;
    Usec si_us = 0;
    std::int64_t cap_count = 0;
};

struct AdmitResult {
    bool accepted = false;
    double load_ratio = 0.0;    // sum TXOP_i / SI including the candidate
    double budget_ratio = 0.0;  // (T - T_CP) / T
};

// SI = BI / ceil(BI / min_i MSI_i), integer microseconds.
Usec compute_si(const std::vector<TrafficSpec>& specs, const PhyProfile& phy);

// N = ceil(SI * rho / (L * 8)).
std::int64_t compute_packet_count(Usec si_us, const TrafficSpec& spec);

// TXOP = max(N*L*8/R + O, M*8/R + O), each airtime term rounded up to a
// whole microsecond before the sum.
Usec compute_txop(std::int64_t n, const TrafficSpec& spec, Usec per_msdu_overhead_us);

// O = PLCP + MAC header time + SIFS + ACK + SIFS. The poll frame itself is
// charged once per poll by the engine, not per MSDU.
Usec per_msdu_overhead(const PhyProfile& phy);

// Recomputes SI, every stream's N and TXOP with the candidate included, and
// accepts iff sum TXOP_i/SI <= (T - T_CP)/T. On rejection `state` is left
// untouched.
AdmitResult admit(ScheduleState& state, std::size_t stream_id, const TrafficSpec& candidate,
                  const PhyProfile& phy);

// Per-stream adaptive state for the Enhanced EDD scheduler. txop_avg is a
// plain running mean over completed service intervals of the observed
// per-SI demand (time used plus time still backlogged).
struct EddStreamState {
    Usec txop_avg_us = 0;
    Usec td_backlog_us = 0;  // TD_i: airtime to clear the reported backlog
    Usec td_cur_us = 0;      // TD_cur in the backlogged branch
    Usec td_free_us = 0;     // unused part of the previous grant
    Usec msi_new_us = 0;     // next service interval after adjustment
    std::int64_t completed_si_count = 0;
    std::int64_t demand_sum_us = 0;
};

// One completed service round: `backlog_us` is the airtime still queued at
// the station, `used_us <= granted_us` the grant time actually consumed.
// Advances the service interval by TD_cur when backlogged, else by the
// unused grant time; msi_new is clamped to [0, msi].
EddStreamState edd_update(EddStreamState state, Usec backlog_us, Usec used_us,
                          Usec granted_us, Usec msi_us);

} // namespace hcca
