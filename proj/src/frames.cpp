#include "hccasim/frames.hpp"

namespace hcca {

const char* frame_kind_token(FrameKind k)
{
    switch (k) {
    case FrameKind::QosPoll: return "POLL";
    case FrameKind::QosData: return "DATA";
    case FrameKind::QosNull: return "NULL";
    case FrameKind::Ack: return "ACK";
    }
    return "?";
}

std::uint16_t encode_qs(std::optional<Usec> next_arrival_us, Usec now_us)
{
    if (!next_arrival_us) {
        return kQsSentinel;
    }
    const Usec remaining = *next_arrival_us - now_us;
    if (remaining <= 0) {
        return 0;  // a frame is already waiting
    }
    const std::int64_t ms = ceil_div(remaining, kUsecPerMs);
    return ms > kQsMax ? kQsMax : static_cast<std::uint16_t>(ms);
}

Usec plcp_time_us(const PhyProfile& phy)
{
    return tx_time_us(phy.preamble_bits + phy.plcp_header_bits, phy.plcp_rate_bps);
}

Usec poll_duration_us(const PhyProfile& phy)
{
    return plcp_time_us(phy) + tx_time_us(phy.poll_bytes * 8, phy.basic_rate_bps);
}

Usec ack_duration_us(const PhyProfile& phy)
{
    return plcp_time_us(phy) + tx_time_us(phy.ack_bytes * 8, phy.basic_rate_bps);
}

Usec data_duration_us(std::int64_t payload_bits, const PhyProfile& phy)
{
    return plcp_time_us(phy) +
           tx_time_us(phy.mac_header_bytes * 8 + payload_bits, phy.data_rate_bps);
}

Usec frame_duration(const MacFrame& frame, const PhyProfile& phy)
{
    switch (frame.kind) {
    case FrameKind::QosData:
    case FrameKind::QosNull:
        return data_duration_us(frame.payload_bits, phy);
    case FrameKind::QosPoll:
        return poll_duration_us(phy);
    case FrameKind::Ack:
        return ack_duration_us(phy);
    }
    return 0;
}

Usec msdu_exchange_cost_us(std::int64_t payload_bits, const PhyProfile& phy)
{
    return data_duration_us(payload_bits, phy) + phy.sifs_us + ack_duration_us(phy);
}

} // namespace hcca
