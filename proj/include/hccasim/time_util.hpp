#pragma once

#include <cstdint>

namespace hcca {

// All engine-side time arithmetic is in integer microseconds. Trace files
// keep their native integer milliseconds; conversion happens at the border.
using Usec = std::int64_t;

constexpr Usec kUsecPerMs = 1000;
constexpr Usec kUsecPerSec = 1'000'000;

constexpr Usec us_from_ms(std::int64_t ms) { return ms * kUsecPerMs; }
constexpr Usec us_from_s(double s) { return static_cast<Usec>(s * 1e6 + 0.5); }

constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den)
{
    return (num + den - 1) / den;
}

// Airtime of `bits` at `rate_bps`, rounded up to a whole microsecond. Every
// atomic transmission interval is an integer number of microseconds; compound
// intervals are integer sums of atoms.
constexpr Usec tx_time_us(std::int64_t bits, std::int64_t rate_bps)
{
    return ceil_div(bits * kUsecPerSec, rate_bps);
}

} // namespace hcca
