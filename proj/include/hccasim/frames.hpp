#pragma once

#include "hccasim/qos.hpp"
#include "hccasim/time_util.hpp"

#include <cstdint>
#include <optional>

namespace hcca {

enum class FrameKind { QosPoll, QosData, QosNull, Ack };

const char* frame_kind_token(FrameKind k);

// The QS subfield of the QoS Control header as repurposed for next-arrival
// feedback: milliseconds until the sender's next frame, saturating at 65534;
// 0xFFFF means "no further frame known".
constexpr std::uint16_t kQsSentinel = 0xFFFF;
constexpr std::uint16_t kQsMax = 0xFFFE;

// `now_us` is the data frame's transmission instant. A next arrival at or
// before `now_us` (backlog still queued) encodes as 0.
std::uint16_t encode_qs(std::optional<Usec> next_arrival_us, Usec now_us);

struct MacFrame {
    FrameKind kind = FrameKind::QosData;
    std::int64_t payload_bits = 0;
    std::optional<std::uint16_t> qs_field;  // data frames only
    int src_station = -1;                   // -1 = QAP
    int dst_station = -1;
    Usec txop_grant_us = 0;                 // polls only
};

// Data/Null frames: PLCP preamble+header plus (MAC header + payload) at the
// data rate. Poll/ACK frames: PLCP plus the control body at the basic rate.
Usec frame_duration(const MacFrame& frame, const PhyProfile& phy);

// Airtime atoms used all over the CAP timeline.
Usec plcp_time_us(const PhyProfile& phy);
Usec poll_duration_us(const PhyProfile& phy);
Usec ack_duration_us(const PhyProfile& phy);
Usec data_duration_us(std::int64_t payload_bits, const PhyProfile& phy);

// Grant cost of transmitting one MSDU inside a polled TXOP: the data frame,
// a SIFS, and its ACK. Consecutive exchanges are separated by one more SIFS.
Usec msdu_exchange_cost_us(std::int64_t payload_bits, const PhyProfile& phy);

} // namespace hcca
