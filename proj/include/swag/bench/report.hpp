#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace swag::bench {

struct CombineStats {
    std::uint64_t ops = 0;
    std::uint64_t total = 0;
    std::uint64_t max = 0;

    void record(std::uint64_t combines) {
        ++ops;
        total += combines;
        if (combines > max) max = combines;
    }
    double average() const { return ops == 0 ? 0.0 : static_cast<double>(total) / ops; }
};

struct LatencySummary {
    std::int64_t min = 0;
    std::int64_t median = 0;
    std::int64_t p99 = 0;
    std::int64_t p9999 = 0;
    std::int64_t max = 0;
};

/// Nearest-rank percentile, p in [0, 100]: the ceil(p/100 * n)-th smallest
/// sample (the minimum for p = 0). Requires a nonempty sample set.
std::int64_t percentile(std::span<const std::int64_t> samples, double p);

LatencySummary summarize(std::span<const std::int64_t> samples);

enum class OpKind : std::uint8_t { Insert, Evict, Query };

struct OpSample {
    std::uint64_t round = 0;
    OpKind op = OpKind::Insert;
    std::int64_t latency_ns = 0;
};

struct OpReport {
    std::string algo;
    std::string monoid;
    /// Window size for count-based modes, tau in ms for event mode.
    std::uint64_t n = 0;

    // Per-round series, latency mode only.
    std::vector<std::int64_t> latency_ns;
    std::vector<std::uint32_t> round_combines;
    std::vector<std::uint32_t> round_evictions;  // event mode
    std::vector<OpSample> op_samples;            // per-op sampling

    CombineStats insert;
    CombineStats evict;
    CombineStats query;

    std::uint64_t rounds = 0;
    std::uint64_t total_ops = 0;
    double elapsed_seconds = 0.0;
    /// Event mode: first round that evicted anything; latency statistics
    /// skip the rounds before it.
    std::uint64_t warmup_rounds = 0;
    std::uint64_t verified_checkpoints = 0;

    double ops_per_sec() const {
        return elapsed_seconds > 0.0 ? static_cast<double>(total_ops) / elapsed_seconds : 0.0;
    }
    std::optional<LatencySummary> latency_summary() const;
};

void write_summary_header(std::ostream& os);
void write_summary_row(std::ostream& os, const OpReport& r);
void write_samples_csv(std::ostream& os, const OpReport& r);
/// One human-readable line with throughput and latency percentiles.
void write_human_summary(std::ostream& os, const OpReport& r);

} // namespace swag::bench
