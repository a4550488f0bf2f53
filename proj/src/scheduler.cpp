#include "hccasim/scheduler.hpp"

#include "hccasim/errors.hpp"

#include <algorithm>
#include <limits>

namespace hcca {

const char* scheduler_token(SchedulerKind k)
{
    switch (k) {
    case SchedulerKind::Hcca: return "hcca";
    case SchedulerKind::Edd: return "edd";
    case SchedulerKind::Fpoll: return "fpoll";
    }
    return "?";
}

std::optional<SchedulerKind> scheduler_from_token(const std::string& token)
{
    if (token == "hcca") return SchedulerKind::Hcca;
    if (token == "edd") return SchedulerKind::Edd;
    if (token == "fpoll") return SchedulerKind::Fpoll;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reference HCCA

HccaPolicy::HccaPolicy(const ScheduleState& state, const PhyProfile&)
{
    for (const auto& s : state.admitted) {
        grants_.push_back({static_cast<int>(s.stream_id), s.txop_us});
    }
}

std::vector<PollGrant> HccaPolicy::on_cap_start(Usec, Usec)
{
    return grants_;
}

// ---------------------------------------------------------------------------
// Enhanced EDD

EddPolicy::EddPolicy(const ScheduleState& state, const PhyProfile& phy) : phy_(phy)
{
    const Usec overhead = per_msdu_overhead(phy);
    for (const auto& s : state.admitted) {
        Entry e;
        e.station = static_cast<int>(s.stream_id);
        // One maximum MSDU is always grantable; smaller adaptive grants could
        // not carry any exchange at all.
        e.reference_txop_us =
            tx_time_us(s.spec.max_msdu_bytes * 8, s.spec.min_phy_rate_bps) + overhead;
        e.msi_us = s.spec.min_service_interval_us;
        e.next_service_us = std::numeric_limits<Usec>::min();
        e.state.txop_avg_us = s.txop_us;
        e.state.demand_sum_us = s.txop_us;
        e.state.completed_si_count = 1;
        entries_.push_back(e);
    }
}

EddPolicy::Entry& EddPolicy::entry(int station)
{
    for (auto& e : entries_) {
        if (e.station == station) return e;
    }
    throw ValidationError("unknown station in EDD policy");
}

const EddStreamState& EddPolicy::stream_state(int station) const
{
    for (const auto& e : entries_) {
        if (e.station == station) return e.state;
    }
    throw ValidationError("unknown station in EDD policy");
}

std::vector<PollGrant> EddPolicy::on_cap_start(Usec now_us, Usec budget_us)
{
    const Usec per_poll = poll_duration_us(phy_) + phy_.sifs_us;
    const Usec null_exchange = data_duration_us(0, phy_) + phy_.sifs_us + ack_duration_us(phy_);
    Usec remaining = budget_us;

    std::vector<PollGrant> grants;
    for (auto& e : entries_) {
        if (e.next_service_us > now_us) {
            continue;
        }
        Usec grant = std::max(e.state.txop_avg_us + e.state.td_backlog_us, e.reference_txop_us);
        // Cap to the CAP budget still available, worst case per exchange.
        const Usec fixed = per_poll + phy_.sifs_us;
        const Usec worst_floor = fixed + null_exchange;
        if (remaining < worst_floor) {
            continue;
        }
        grant = std::min(grant, remaining - fixed);
        remaining -= fixed + std::max(grant, null_exchange);
        e.granted_us = grant;
        e.cap_start_us = now_us;
        grants.push_back({e.station, grant});
    }
    return grants;
}

void EddPolicy::complete_round(Entry& e, Usec backlog_us, Usec used_us)
{
    e.state = edd_update(e.state, backlog_us, used_us, e.granted_us, e.msi_us);
    e.next_service_us = e.cap_start_us + e.state.msi_new_us;
}

void EddPolicy::on_data_received(int station, const ResponseFeedback& feedback, Usec used_us)
{
    complete_round(entry(station), feedback.backlog_us, used_us);
}

void EddPolicy::on_null_received(int station)
{
    complete_round(entry(station), 0, 0);
}

void EddPolicy::on_no_response(int station)
{
    complete_round(entry(station), 0, 0);
}

// ---------------------------------------------------------------------------
// F-Poll

FpollPolicy::FpollPolicy(const ScheduleState& state, const PhyProfile&)
{
    int max_station = -1;
    for (const auto& s : state.admitted) {
        FpollEntry e;
        e.station = static_cast<int>(s.stream_id);
        e.mode = FpollEntry::Mode::FirstCap;
        e.grant_us = s.txop_us;
        entries_.push_back(e);
        max_station = std::max(max_station, e.station);
    }
    polled_this_cap_.assign(static_cast<std::size_t>(max_station + 1), false);
}

FpollEntry& FpollPolicy::entry_mut(int station)
{
    for (auto& e : entries_) {
        if (e.station == station) return e;
    }
    throw ValidationError("unknown station in F-Poll policy");
}

const FpollEntry& FpollPolicy::entry(int station) const
{
    for (const auto& e : entries_) {
        if (e.station == station) return e;
    }
    throw ValidationError("unknown station in F-Poll policy");
}

std::vector<PollGrant> FpollPolicy::on_cap_start(Usec now_us, Usec)
{
    cap_start_us_ = now_us;
    std::fill(polled_this_cap_.begin(), polled_this_cap_.end(), false);

    std::vector<PollGrant> grants;
    for (auto& e : entries_) {
        const bool due = e.mode == FpollEntry::Mode::FirstCap ||
                         e.mode == FpollEntry::Mode::Fallback ||
                         e.eligible_us <= now_us;
        if (due) {
            grants.push_back({e.station, e.grant_us});
            polled_this_cap_[static_cast<std::size_t>(e.station)] = true;
        }
        // Skipped stations implicitly count this CAP off their feedback;
        // eligible_us is absolute, so no per-CAP decrement is needed.
    }
    return grants;
}

void FpollPolicy::enter_fallback(FpollEntry& e, int packets_already_seen)
{
    e.mode = FpollEntry::Mode::Fallback;
    e.post_loss_packets_seen = packets_already_seen;
}

void FpollPolicy::on_data_received(int station, const ResponseFeedback& feedback, Usec)
{
    FpollEntry& e = entry_mut(station);
    const std::uint16_t qs = feedback.qs.value_or(kQsSentinel);

    if (e.mode == FpollEntry::Mode::Fallback) {
        e.post_loss_packets_seen = std::min(e.post_loss_packets_seen + 1, 2);
        if (e.post_loss_packets_seen < 2) {
            return;  // first packet after loss: feedback is ignored
        }
    }

    if (qs == kQsSentinel) {
        // No further frame is known; keep polling at the SI rate. The next
        // data frame's feedback is adopted immediately.
        enter_fallback(e, 1);
        return;
    }
    e.mode = FpollEntry::Mode::Feedback;
    e.post_loss_packets_seen = 0;
    // Anchoring at the CAP start makes "eligible <= cap time" coincide with
    // the per-CAP SI-deduction loop of the scheme's pseudo code.
    e.eligible_us = cap_start_us_ + static_cast<Usec>(qs) * kUsecPerMs;
}

void FpollPolicy::on_null_received(int station)
{
    FpollEntry& e = entry_mut(station);
    switch (e.mode) {
    case FpollEntry::Mode::FirstCap:
        // Traffic has not started yet; poll at the SI rate and adopt the
        // first data frame's feedback when it appears.
        enter_fallback(e, 1);
        break;
    case FpollEntry::Mode::Feedback:
        // Data was due but none came: treat as loss.
        enter_fallback(e, 0);
        break;
    case FpollEntry::Mode::Fallback:
        break;
    }
}

void FpollPolicy::on_no_response(int station)
{
    FpollEntry& e = entry_mut(station);
    if (e.mode == FpollEntry::Mode::Fallback) {
        return;
    }
    enter_fallback(e, 0);
}

std::unique_ptr<PollingPolicy> make_policy(SchedulerKind kind, const ScheduleState& state,
                                           const PhyProfile& phy)
{
    switch (kind) {
    case SchedulerKind::Hcca: return std::make_unique<HccaPolicy>(state, phy);
    case SchedulerKind::Edd: return std::make_unique<EddPolicy>(state, phy);
    case SchedulerKind::Fpoll: return std::make_unique<FpollPolicy>(state, phy);
    }
    throw ValidationError("unknown scheduler kind");
}

} // namespace hcca
