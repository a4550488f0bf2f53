#include "hccasim/trace.hpp"

#include "hccasim/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>

namespace hcca {

namespace {

std::optional<std::int64_t> parse_i64(std::string_view text)
{
    std::int64_t value = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

FrameType frame_type_from_token(std::string_view token, bool& known)
{
    known = true;
    if (token == "I") return FrameType::I;
    if (token == "P") return FrameType::P;
    if (token == "PB") return FrameType::PB;
    if (token == "B") return FrameType::B;
    known = false;
    return FrameType::Other;
}

// [0, 1) from the raw engine; stable across platforms, unlike the standard
// library distributions.
double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double draw(std::mt19937_64& rng, double mean, const JitterSpec& jitter)
{
    if (jitter.kind == JitterSpec::Kind::None) {
        return mean;
    }
    const double lo = mean * (1.0 - jitter.spread);
    const double hi = mean * (1.0 + jitter.spread);
    return lo + (hi - lo) * uniform01(rng);
}

} // namespace

const char* frame_type_token(FrameType t)
{
    switch (t) {
    case FrameType::I: return "I";
    case FrameType::P: return "P";
    case FrameType::PB: return "PB";
    case FrameType::B: return "B";
    case FrameType::Other: return "OTHER";
    }
    return "OTHER";
}

VideoTrace parse_trace(std::istream& input, std::string source_label)
{
    VideoTrace trace;
    trace.source_label = std::move(source_label);

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        std::istringstream row(line);
        std::string time_tok;
        if (!(row >> time_tok) || time_tok.front() == '#') {
            continue;  // blank or comment
        }
        std::string type_tok;
        std::string size_tok;
        if (!(row >> type_tok >> size_tok)) {
            throw ParseError("expected '<time_ms> <type> <size_bits>'", line_no);
        }
        std::string excess;
        if (row >> excess && excess.front() != '#') {
            throw ParseError("trailing token '" + excess + "'", line_no);
        }

        const auto time_ms = parse_i64(time_tok);
        if (!time_ms) {
            throw ParseError("bad frame time '" + time_tok + "'", line_no);
        }
        const auto size_bits = parse_i64(size_tok);
        if (!size_bits) {
            throw ParseError("bad frame size '" + size_tok + "'", line_no);
        }
        if (*time_ms < 0) {
            throw ParseError("negative frame time", line_no);
        }
        if (*size_bits <= 0) {
            throw ParseError("frame size must be positive", line_no);
        }
        bool known = false;
        const FrameType type = frame_type_from_token(type_tok, known);
        if (!known) {
            ++trace.unknown_type_count;
        }
        if (!trace.records.empty() && trace.records.back().arrival_ms >= *time_ms) {
            throw ParseError("frame times must be strictly increasing", line_no);
        }
        trace.records.push_back({*time_ms, type, *size_bits});
    }

    validate_trace(trace);
    return trace;
}

VideoTrace parse_trace_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open trace file: " + path);
    }
    return parse_trace(in, path);
}

void serialize_trace(const VideoTrace& trace, std::ostream& out)
{
    for (const auto& rec : trace.records) {
        out << rec.arrival_ms << ' ' << frame_type_token(rec.type) << ' ' << rec.size_bits
            << '\n';
    }
}

std::string serialize_trace(const VideoTrace& trace)
{
    std::ostringstream out;
    serialize_trace(trace, out);
    return out.str();
}

void validate_trace(const VideoTrace& trace)
{
    if (trace.records.empty()) {
        throw ValidationError("empty trace" +
                              (trace.source_label.empty() ? "" : ": " + trace.source_label));
    }
    std::int64_t prev = -1;
    for (const auto& rec : trace.records) {
        if (rec.size_bits <= 0) {
            throw ValidationError("frame size must be positive");
        }
        if (rec.arrival_ms < 0) {
            throw ValidationError("frame time must be non-negative");
        }
        if (rec.arrival_ms <= prev) {
            throw ValidationError("frame times must be strictly increasing");
        }
        prev = rec.arrival_ms;
    }
}

TraceStats compute_stats(const VideoTrace& trace, std::int64_t reference_period_ms)
{
    validate_trace(trace);
    if (reference_period_ms <= 0) {
        throw ValidationError("reference frame period must be positive");
    }
    const std::size_t n = trace.records.size();
    if (n < 2) {
        throw ValidationError("rate statistics need at least two frames");
    }

    std::int64_t total_bits = 0;
    std::int64_t max_bits = 0;
    for (const auto& rec : trace.records) {
        total_bits += rec.size_bits;
        max_bits = std::max(max_bits, rec.size_bits);
    }

    const std::int64_t first = trace.records.front().arrival_ms;
    const std::int64_t last = trace.records.back().arrival_ms;
    // The paper leaves the closing interval open; close it with the mean gap.
    const double mean_gap_ms = static_cast<double>(last - first) / static_cast<double>(n - 1);
    const double duration_ms = static_cast<double>(last) + mean_gap_ms;

    TraceStats stats;
    stats.mean_size_bytes = static_cast<double>(total_bits) / 8.0 / static_cast<double>(n);
    stats.max_size_bytes = static_cast<double>(max_bits) / 8.0;
    stats.mean_bit_rate = static_cast<double>(total_bits) * 1000.0 / duration_ms;

    // Peak rate over any single reference period.
    std::int64_t period_bits = 0;
    std::int64_t period_idx = -1;
    std::int64_t peak_bits = 0;
    for (const auto& rec : trace.records) {
        const std::int64_t idx = rec.arrival_ms / reference_period_ms;
        if (idx != period_idx) {
            period_idx = idx;
            period_bits = 0;
        }
        period_bits += rec.size_bits;
        peak_bits = std::max(peak_bits, period_bits);
    }
    stats.peak_bit_rate =
        static_cast<double>(peak_bits) * 1000.0 / static_cast<double>(reference_period_ms);

    // CoV of per-second bit totals, zero seconds included.
    const auto seconds = static_cast<std::size_t>((duration_ms + 999.0) / 1000.0);
    std::vector<double> per_second(std::max<std::size_t>(seconds, 1), 0.0);
    for (const auto& rec : trace.records) {
        per_second[static_cast<std::size_t>(rec.arrival_ms / 1000) % per_second.size()] +=
            static_cast<double>(rec.size_bits);
    }
    double mean = 0.0;
    for (double v : per_second) mean += v;
    mean /= static_cast<double>(per_second.size());
    double var = 0.0;
    for (double v : per_second) var += (v - mean) * (v - mean);
    var /= static_cast<double>(per_second.size());
    stats.cov_bit_rate = mean > 0.0 ? std::sqrt(var) / mean : 0.0;

    return stats;
}

VideoTrace synthesize_trace(std::uint64_t seed,
                            std::int64_t mean_interarrival_ms,
                            const JitterSpec& gap_jitter,
                            std::int64_t mean_size_bits,
                            const JitterSpec& size_jitter,
                            std::int64_t duration_ms,
                            std::int64_t frame_period_ms)
{
    if (frame_period_ms <= 0) {
        throw ValidationError("frame period must be positive");
    }
    if (mean_interarrival_ms < frame_period_ms) {
        throw ValidationError("mean inter-arrival must be at least one frame period");
    }
    if (mean_size_bits <= 0 || duration_ms <= 0) {
        throw ValidationError("synthesis sizes and duration must be positive");
    }
    if (gap_jitter.kind == JitterSpec::Kind::None &&
        mean_interarrival_ms % frame_period_ms != 0) {
        throw ValidationError("periodic synthesis needs a gap that is a multiple of the "
                              "frame period");
    }
    if (gap_jitter.spread < 0.0 || gap_jitter.spread > 1.0 || size_jitter.spread < 0.0 ||
        size_jitter.spread > 1.0) {
        throw ValidationError("jitter spread must lie in [0, 1]");
    }

    std::mt19937_64 rng(seed);
    VideoTrace trace;
    trace.source_label = "synth:" + std::to_string(seed);

    const double mean_ticks =
        static_cast<double>(mean_interarrival_ms) / static_cast<double>(frame_period_ms);
    std::int64_t t_ms = 0;
    while (t_ms < duration_ms) {
        const auto size =
            std::max<std::int64_t>(1, std::llround(draw(rng, static_cast<double>(mean_size_bits),
                                                        size_jitter)));
        trace.records.push_back({t_ms, FrameType::P, size});
        const auto ticks =
            std::max<std::int64_t>(1, std::llround(draw(rng, mean_ticks, gap_jitter)));
        t_ms += ticks * frame_period_ms;
    }

    validate_trace(trace);
    return trace;
}

} // namespace hcca
