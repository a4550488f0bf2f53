#include "hccasim/qos.hpp"

#include "hccasim/errors.hpp"

#include <algorithm>
#include <cassert>

namespace hcca {

void validate_spec(const TrafficSpec& spec)
{
    if (spec.nominal_msdu_bytes <= 0 || spec.max_msdu_bytes < spec.nominal_msdu_bytes) {
        throw ValidationError("TSPEC needs M >= L > 0");
    }
    if (spec.mean_data_rate_bps <= 0 || spec.min_phy_rate_bps <= 0) {
        throw ValidationError("TSPEC rates must be positive");
    }
    if (spec.min_service_interval_us <= 0 ||
        spec.max_service_interval_us < spec.min_service_interval_us) {
        throw ValidationError("TSPEC needs MSI >= mSI > 0");
    }
    if (spec.delay_bound_us <= 0) {
        throw ValidationError("TSPEC delay bound must be positive");
    }
}

void validate_phy(const PhyProfile& phy)
{
    if (phy.sifs_us < 0 || phy.pifs_us < 0 || phy.slot_us <= 0) {
        throw ValidationError("PHY interframe spaces must be non-negative");
    }
    if (phy.preamble_bits <= 0 || phy.plcp_header_bits <= 0 || phy.plcp_rate_bps <= 0) {
        throw ValidationError("PLCP parameters must be positive");
    }
    if (phy.mac_header_bytes <= 0 || phy.ack_bytes <= 0 || phy.poll_bytes <= 0) {
        throw ValidationError("frame header sizes must be positive");
    }
    if (phy.data_rate_bps <= 0 || phy.basic_rate_bps <= 0) {
        throw ValidationError("PHY rates must be positive");
    }
    if (phy.beacon_interval_us <= 0) {
        throw ValidationError("beacon interval must be positive");
    }
    if (phy.t_cp_us < 0 || phy.t_cp_us >= phy.superframe_us()) {
        throw ValidationError("contention budget must satisfy 0 <= T_CP < T");
    }
}

Usec compute_si(const std::vector<TrafficSpec>& specs, const PhyProfile& phy)
{
    if (specs.empty()) {
        throw ValidationError("SI assignment needs at least one stream");
    }
    Usec msi_min = specs.front().max_service_interval_us;
    for (const auto& spec : specs) {
        msi_min = std::min(msi_min, spec.max_service_interval_us);
    }
    const std::int64_t k = ceil_div(phy.beacon_interval_us, msi_min);
    return phy.beacon_interval_us / k;
}

std::int64_t compute_packet_count(Usec si_us, const TrafficSpec& spec)
{
    if (si_us <= 0) {
        throw ValidationError("service interval must be positive");
    }
    // N = ceil(SI * rho / (L*8)) with SI in microseconds.
    return ceil_div(si_us * spec.mean_data_rate_bps, spec.nominal_msdu_bytes * 8 * kUsecPerSec);
}

Usec compute_txop(std::int64_t n, const TrafficSpec& spec, Usec per_msdu_overhead_us)
{
    assert(n >= 1);
    const Usec nominal_burst =
        tx_time_us(n * spec.nominal_msdu_bytes * 8, spec.min_phy_rate_bps) +
        per_msdu_overhead_us;
    const Usec one_max_msdu =
        tx_time_us(spec.max_msdu_bytes * 8, spec.min_phy_rate_bps) + per_msdu_overhead_us;
    return std::max(nominal_burst, one_max_msdu);
}

Usec per_msdu_overhead(const PhyProfile& phy)
{
    const Usec plcp = tx_time_us(phy.preamble_bits + phy.plcp_header_bits, phy.plcp_rate_bps);
    const Usec mac_header = tx_time_us(phy.mac_header_bytes * 8, phy.data_rate_bps);
    const Usec ack = plcp + tx_time_us(phy.ack_bytes * 8, phy.basic_rate_bps);
    return plcp + mac_header + phy.sifs_us + ack + phy.sifs_us;
}

AdmitResult admit(ScheduleState& state, std::size_t stream_id, const TrafficSpec& candidate,
                  const PhyProfile& phy)
{
    validate_spec(candidate);
    validate_phy(phy);

    std::vector<TrafficSpec> specs;
    specs.reserve(state.admitted.size() + 1);
    for (const auto& s : state.admitted) {
        specs.push_back(s.spec);
    }
    specs.push_back(candidate);

    const Usec si = compute_si(specs, phy);
    const std::int64_t cap_count = ceil_div(phy.beacon_interval_us, si);
    const Usec overhead = per_msdu_overhead(phy);

    // Every admitted stream is re-sized at the new SI before the budget test.
    std::vector<AdmittedStream> updated;
    updated.reserve(specs.size());
    Usec txop_sum = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        AdmittedStream entry;
        entry.stream_id = i < state.admitted.size() ? state.admitted[i].stream_id : stream_id;
        entry.spec = specs[i];
        entry.packets_per_si = compute_packet_count(si, specs[i]);
        entry.txop_us = compute_txop(entry.packets_per_si, specs[i], overhead);
        txop_sum += entry.txop_us;
        updated.push_back(entry);
    }

    const Usec t = phy.superframe_us();
    AdmitResult result;
    result.load_ratio = static_cast<double>(txop_sum) / static_cast<double>(si);
    result.budget_ratio = static_cast<double>(t - phy.t_cp_us) / static_cast<double>(t);
    // Integer form of sum TXOP_i/SI <= (T - T_CP)/T.
    result.accepted = txop_sum * t <= (t - phy.t_cp_us) * si;

    if (result.accepted) {
        state.admitted = std::move(updated);
        state.si_us = si;
        state.cap_count = cap_count;
        assert(state.si_us * state.cap_count <= phy.beacon_interval_us &&
               phy.beacon_interval_us - state.si_us * state.cap_count < state.cap_count);
    }
    return result;
}

EddStreamState edd_update(EddStreamState state, Usec backlog_us, Usec used_us, Usec granted_us,
                          Usec msi_us)
{
    if (used_us > granted_us) {
        throw ValidationError("used TXOP cannot exceed the grant");
    }
    if (backlog_us < 0 || used_us < 0 || msi_us <= 0) {
        throw ValidationError("EDD update needs non-negative durations");
    }

    state.td_backlog_us = backlog_us;
    state.td_cur_us = backlog_us;
    state.td_free_us = backlog_us == 0 ? granted_us - used_us : 0;

    Usec advance = 0;
    if (backlog_us > 0) {
        advance = state.td_cur_us;
    } else if (used_us < granted_us) {
        advance = state.td_free_us;
    }
    state.msi_new_us = std::clamp<Usec>(msi_us - advance, 0, msi_us);

    state.demand_sum_us += used_us + backlog_us;
    state.completed_si_count += 1;
    state.txop_avg_us = state.demand_sum_us / state.completed_si_count;
    return state;
}

} // namespace hcca
