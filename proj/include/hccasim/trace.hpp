#pragma once

#include "hccasim/time_util.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hcca {

enum class FrameType { I, P, PB, B, Other };

const char* frame_type_token(FrameType t);

// One encoded video frame: arrival offset from stream start (integer
// milliseconds), encoder frame type, and payload size in bits.
struct FrameRecord {
    std::int64_t arrival_ms = 0;
    FrameType type = FrameType::Other;
    std::int64_t size_bits = 0;

    bool operator==(const FrameRecord&) const = default;
};

struct VideoTrace {
    std::vector<FrameRecord> records;
    std::string source_label;
    // Rows whose frame-type token was not one of I/P/PB/B; they map to Other.
    std::size_t unknown_type_count = 0;
};

struct TraceStats {
    double mean_size_bytes = 0.0;
    double max_size_bytes = 0.0;
    double mean_bit_rate = 0.0;  // bit/s over the whole trace duration
    double peak_bit_rate = 0.0;  // bit/s over the busiest reference period
    double cov_bit_rate = 0.0;   // stddev/mean of per-second bit totals
};

// Distribution spec used by synthesize_trace for inter-arrival gaps and frame
// sizes. Uniform draws from [mean*(1-spread), mean*(1+spread)].
struct JitterSpec {
    enum class Kind { None, Uniform };
    Kind kind = Kind::Uniform;
    double spread = 0.5;

    static JitterSpec none() { return {Kind::None, 0.0}; }
    static JitterSpec uniform(double spread) { return {Kind::Uniform, spread}; }

    bool operator==(const JitterSpec&) const = default;
};

// Throws on malformed rows (with line number) and on invariant violations
// (empty trace, non-monotone timestamps, non-positive sizes).
VideoTrace parse_trace(std::istream& input, std::string source_label = "");
VideoTrace parse_trace_file(const std::string& path);

// One frame per line: "<time_ms> <type> <size_bits>". parse(serialize(t))
// reproduces t's records exactly.
void serialize_trace(const VideoTrace& trace, std::ostream& out);
std::string serialize_trace(const VideoTrace& trace);

// Validates the VideoTrace invariants; throws ValidationError.
void validate_trace(const VideoTrace& trace);

// reference_period_ms is the encoder tick (40 ms for 25 fps H.263). Rate
// statistics use duration = last arrival + the trace's mean inter-arrival;
// requires at least two frames.
TraceStats compute_stats(const VideoTrace& trace, std::int64_t reference_period_ms = 40);

// Deterministic synthetic VBR trace: inter-arrival times are integer
// multiples of frame_period_ms (frame skipping), sizes are positive bit
// counts. mean_interarrival_ms must be >= frame_period_ms; with a `none` gap
// jitter it must be an exact multiple of frame_period_ms.
VideoTrace synthesize_trace(std::uint64_t seed,
                            std::int64_t mean_interarrival_ms,
                            const JitterSpec& gap_jitter,
                            std::int64_t mean_size_bits,
                            const JitterSpec& size_jitter,
                            std::int64_t duration_ms,
                            std::int64_t frame_period_ms = 40);

} // namespace hcca
