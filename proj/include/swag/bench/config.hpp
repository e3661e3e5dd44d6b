#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swag::bench {

/// Bad command line or configuration; exit status 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or out-of-order input data; exit status 3.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An engine's query disagreed with the recalculating oracle; exit status 4.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Algo { TwoStacks, TwoStacksLite, Daba, DabaLite, Recalc };
enum class MonoidKind { Sum, GeoMean, Bloom, MaxCount, Concat };
enum class Mode { Static, Dynamic, Event };
enum class Measure { Latency, Throughput };

std::string_view to_string(Algo a);
std::string_view to_string(MonoidKind m);
std::string_view to_string(Mode m);

Algo parse_algo(std::string_view s);
MonoidKind parse_monoid(std::string_view s);
Mode parse_mode(std::string_view s);

struct ExperimentConfig {
    Algo algo = Algo::DabaLite;
    MonoidKind monoid = MonoidKind::Sum;
    Mode mode = Mode::Static;
    int window_exp = 14;
    std::int64_t tau_ms = 600'000;
    std::uint64_t rounds = 1'000'000;
    std::uint64_t seed = 1;
    Measure measure = Measure::Latency;
    bool verify = false;
    std::uint64_t verify_every = 10'000;
    bool per_op = false;
    std::string out_path;
    std::string input_path;
    bool input_has_header = false;

    std::uint64_t window_size() const { return std::uint64_t{1} << window_exp; }

    /// Throws UsageError: rounds >= 1, window_exp in [0, 30], tau_ms >= 0.
    void validate() const;
};

} // namespace swag::bench
