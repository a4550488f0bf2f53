#pragma once

#include "hccasim/frames.hpp"
#include "hccasim/qos.hpp"
#include "hccasim/time_util.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hcca {

enum class SchedulerKind { Hcca, Edd, Fpoll };

const char* scheduler_token(SchedulerKind k);
std::optional<SchedulerKind> scheduler_from_token(const std::string& token);

struct PollGrant {
    int station = 0;
    Usec grant_us = 0;
};

// What the QAP learned from one poll exchange that produced data: the QS
// field of the last data frame and the airtime still queued at the station.
struct ResponseFeedback {
    std::optional<std::uint16_t> qs;
    Usec backlog_us = 0;
};

// A polling policy decides, at each CAP boundary, which admitted stations to
// poll and with what grant. The engine reports each exchange outcome back.
// Policy state is owned by a single simulation instance.
class PollingPolicy {
public:
    virtual ~PollingPolicy() = default;

    // `budget_us` is the airtime available in this CAP; policies that size
    // their own grants must keep the returned set within it.
    virtual std::vector<PollGrant> on_cap_start(Usec now_us, Usec budget_us) = 0;
    virtual void on_data_received(int station, const ResponseFeedback& feedback, Usec used_us) = 0;
    virtual void on_null_received(int station) = 0;
    virtual void on_no_response(int station) = 0;
    virtual const char* name() const = 0;
};

// Reference scheduler: every admitted station, in admission order, with its
// fixed TXOP, every service interval.
class HccaPolicy : public PollingPolicy {
public:
    HccaPolicy(const ScheduleState& state, const PhyProfile& phy);

    std::vector<PollGrant> on_cap_start(Usec now_us, Usec budget_us) override;
    void on_data_received(int, const ResponseFeedback&, Usec) override {}
    void on_null_received(int) override {}
    void on_no_response(int) override {}
    const char* name() const override { return "hcca"; }

private:
    std::vector<PollGrant> grants_;
};

// Enhanced EDD: grants grow with reported backlog (TXOP_avg + TD) and the
// next service time is advanced when a station was backlogged or underused
// its previous grant. Eligibility is evaluated against the fixed CAP grid.
class EddPolicy : public PollingPolicy {
public:
    EddPolicy(const ScheduleState& state, const PhyProfile& phy);

    std::vector<PollGrant> on_cap_start(Usec now_us, Usec budget_us) override;
    void on_data_received(int station, const ResponseFeedback& feedback, Usec used_us) override;
    void on_null_received(int station) override;
    void on_no_response(int station) override;
    const char* name() const override { return "edd"; }

    const EddStreamState& stream_state(int station) const;

private:
    struct Entry {
        int station = 0;
        Usec reference_txop_us = 0;  // one-max-MSDU floor, keeps grants serviceable
        Usec msi_us = 0;
        Usec next_service_us = 0;
        Usec granted_us = 0;         // grant issued at the current CAP
        Usec cap_start_us = 0;
        EddStreamState state;
    };

    void complete_round(Entry& e, Usec backlog_us, Usec used_us);
    Entry& entry(int station);

    std::vector<Entry> entries_;
    PhyProfile phy_;
};

// Per-station F-Poll bookkeeping. `eligible_us` is the absolute next poll
// time, anchored at the start of the CAP that carried the feedback; this is
// arithmetically the pseudo-code countdown (feedback minus one SI per CAP).
struct FpollEntry {
    enum class Mode { FirstCap, Feedback, Fallback };
    int station = 0;
    Mode mode = Mode::FirstCap;
    Usec eligible_us = 0;
    Usec grant_us = 0;
    int post_loss_packets_seen = 0;  // 0..2; data frames seen since fallback began
};

// Feedback-driven selective polling: a station is polled on its first CAP,
// whenever it is in fallback, or once the fed-back arrival time has come due.
// After a loss the QAP polls at the plain SI rate, ignores the first
// post-loss packet's feedback and resumes on the second.
class FpollPolicy : public PollingPolicy {
public:
    FpollPolicy(const ScheduleState& state, const PhyProfile& phy);

    std::vector<PollGrant> on_cap_start(Usec now_us, Usec budget_us) override;
    void on_data_received(int station, const ResponseFeedback& feedback, Usec used_us) override;
    void on_null_received(int station) override;
    void on_no_response(int station) override;
    const char* name() const override { return "fpoll"; }

    const FpollEntry& entry(int station) const;

private:
    FpollEntry& entry_mut(int station);
    void enter_fallback(FpollEntry& e, int packets_already_seen);

    std::vector<FpollEntry> entries_;
    std::vector<bool> polled_this_cap_;
    Usec cap_start_us_ = 0;
};

std::unique_ptr<PollingPolicy> make_policy(SchedulerKind kind, const ScheduleState& state,
                                           const PhyProfile& phy);

} // namespace hcca
