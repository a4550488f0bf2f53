#include "hccasim/metrics.hpp"

#include "hccasim/errors.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace hcca {

namespace {

// Fixed six decimals keeps CSV output byte-stable across runs.
std::string fixed6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace

std::int64_t MetricsLedger::total_polls() const
{
    std::int64_t n = 0;
    for (const auto& c : per_station) n += c.polls_sent;
    return n;
}

std::int64_t MetricsLedger::total_nulls() const
{
    std::int64_t n = 0;
    for (const auto& c : per_station) n += c.nulls_received;
    return n;
}

std::int64_t MetricsLedger::total_polls_window() const
{
    std::int64_t n = 0;
    for (const auto& c : per_station) n += c.polls_sent_window;
    return n;
}

std::int64_t MetricsLedger::total_nulls_window() const
{
    std::int64_t n = 0;
    for (const auto& c : per_station) n += c.nulls_received_window;
    return n;
}

std::int64_t MetricsLedger::delivered_bits() const
{
    std::int64_t n = 0;
    for (const auto& p : packets) n += p.size_bits;
    return n;
}

double mean_access_delay_us(const MetricsLedger& ledger)
{
    if (ledger.packets.empty()) {
        throw ValidationError("access delay is undefined without delivered packets");
    }
    double sum = 0.0;
    for (const auto& p : ledger.packets) {
        sum += static_cast<double>(p.send_us - p.gen_us);
    }
    return sum / static_cast<double>(ledger.packets.size());
}

double mean_e2e_delay_us(const MetricsLedger& ledger)
{
    if (ledger.packets.empty()) {
        throw ValidationError("end-to-end delay is undefined without delivered packets");
    }
    double sum = 0.0;
    for (const auto& p : ledger.packets) {
        sum += static_cast<double>(p.recv_us - p.gen_us);
    }
    return sum / static_cast<double>(ledger.packets.size());
}

double poll_overhead_ratio(const MetricsLedger& ledger)
{
    const std::int64_t polls = ledger.total_polls();
    if (polls == 0) {
        throw ValidationError("poll overhead is undefined without polls");
    }
    return static_cast<double>(ledger.total_nulls()) / static_cast<double>(polls);
}

double poll_overhead_ratio_window(const MetricsLedger& ledger)
{
    const std::int64_t polls = ledger.total_polls_window();
    if (polls == 0) {
        throw ValidationError("poll overhead is undefined without polls in the window");
    }
    return static_cast<double>(ledger.total_nulls_window()) / static_cast<double>(polls);
}

double aggregate_throughput_bps(const MetricsLedger& ledger)
{
    if (ledger.sim_duration_us <= 0) {
        throw ValidationError("throughput needs a positive simulation duration");
    }
    return static_cast<double>(ledger.delivered_bits()) * 1e6 /
           static_cast<double>(ledger.sim_duration_us);
}

std::vector<std::pair<Usec, Usec>> e2e_delay_series(const MetricsLedger& ledger, int stream)
{
    std::vector<std::pair<Usec, Usec>> series;
    for (const auto& p : ledger.packets) {
        if (p.stream == stream) {
            series.emplace_back(p.gen_us, p.recv_us - p.gen_us);
        }
    }
    // Packets are recorded in delivery order, which is generation order
    // within one FIFO stream.
    return series;
}

void write_packets_csv(const MetricsLedger& ledger, std::ostream& out)
{
    out << "stream,seq,gen_us,send_us,recv_us,size_bits\n";
    for (const auto& p : ledger.packets) {
        out << p.stream << ',' << p.seq << ',' << p.gen_us << ',' << p.send_us << ','
            << p.recv_us << ',' << p.size_bits << '\n';
    }
}

void write_polls_csv(const MetricsLedger& ledger, std::ostream& out)
{
    out << "station,polls,nulls,data_responses,polls_window,nulls_window,"
           "data_responses_window\n";
    for (std::size_t i = 0; i < ledger.per_station.size(); ++i) {
        const auto& c = ledger.per_station[i];
        out << i << ',' << c.polls_sent << ',' << c.nulls_received << ',' << c.data_responses
            << ',' << c.polls_sent_window << ',' << c.nulls_received_window << ','
            << c.data_responses_window << '\n';
    }
}

void write_summary_csv(const MetricsLedger& ledger, std::ostream& out)
{
    out << "metric,value\n";
    out << "sim_duration_us," << ledger.sim_duration_us << '\n';
    out << "packets_delivered," << ledger.packets.size() << '\n';
    out << "bytes_delivered," << ledger.delivered_bytes() << '\n';
    out << "frames_generated," << ledger.frames_generated << '\n';
    out << "frames_queued_at_end," << ledger.frames_queued_at_end << '\n';
    out << "frames_dropped," << ledger.frames_dropped << '\n';
    out << "polls_sent," << ledger.total_polls() << '\n';
    out << "nulls_received," << ledger.total_nulls() << '\n';
    if (!ledger.packets.empty()) {
        out << "mean_access_delay_us," << fixed6(mean_access_delay_us(ledger)) << '\n';
        out << "mean_e2e_delay_us," << fixed6(mean_e2e_delay_us(ledger)) << '\n';
    }
    if (ledger.total_polls() > 0) {
        out << "poll_overhead_ratio," << fixed6(poll_overhead_ratio(ledger)) << '\n';
    }
    if (ledger.total_polls_window() > 0) {
        out << "poll_overhead_ratio_window," << fixed6(poll_overhead_ratio_window(ledger))
            << '\n';
    }
    if (ledger.sim_duration_us > 0) {
        out << "aggregate_throughput_bps," << fixed6(aggregate_throughput_bps(ledger)) << '\n';
    }
}

void write_metrics_files(const MetricsLedger& ledger, const std::string& directory)
{
    std::filesystem::create_directories(directory);
    const auto open = [&](const char* name) {
        std::ofstream out(std::filesystem::path(directory) / name, std::ios::binary);
        if (!out) {
            throw ValidationError(std::string("cannot write ") + name + " under " + directory);
        }
        return out;
    };
    auto packets = open("packets.csv");
    write_packets_csv(ledger, packets);
    auto polls = open("polls.csv");
    write_polls_csv(ledger, polls);
    auto summary = open("summary.csv");
    write_summary_csv(ledger, summary);
}

} // namespace hcca
