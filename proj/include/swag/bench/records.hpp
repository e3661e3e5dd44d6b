#pragma once

#include <cstdint>
#include <istream>
#include <random>
#include <vector>

namespace swag::bench {

struct TimestampedRecord {
    std::int64_t timestamp_ms = 0;
    double value = 0.0;

    friend bool operator==(const TimestampedRecord&, const TimestampedRecord&) = default;
};

/// Deterministic stream of raw 64-bit values for a given seed.
class SyntheticSource {
public:
    explicit SyntheticSource(std::uint64_t seed) : rng_(seed) {}
    std::uint64_t next() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

std::vector<std::uint64_t> gen_synthetic(std::uint64_t seed, std::size_t count);

/// Timestamped stand-in for a ~100 Hz sensor feed: gaps of 5..15 ms, with a
/// pause of 1..60 s roughly once every 10^4 records, and values in [1, 1001).
std::vector<TimestampedRecord> gen_synthetic_records(std::uint64_t seed, std::size_t count);

/// Reads `timestamp_ms,value` lines. Timestamps must be integers and
/// nondecreasing; violations throw InputError naming the line number.
std::vector<TimestampedRecord> read_records_csv(std::istream& in, bool has_header);

} // namespace swag::bench
