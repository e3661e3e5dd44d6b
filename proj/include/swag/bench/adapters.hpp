#pragma once

#include <swag/bench/config.hpp>
#include <swag/monoids.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace swag::bench {

// Mapping from raw synthetic values and from numeric CSV values to each
// monoid's input type, plus the equality used when checking against the
// oracle.

inline SumMonoid::In input_from_raw(const SumMonoid&, std::uint64_t raw) {
    return static_cast<std::int64_t>(raw % 1'000'000);
}
inline SumMonoid::In input_from_value(const SumMonoid&, double v) { return std::llround(v); }
inline bool aggregates_match(const SumMonoid&, std::int64_t a, std::int64_t b) { return a == b; }

inline std::int64_t input_from_raw(const MaxCountMonoid<>&, std::uint64_t raw) {
    return static_cast<std::int64_t>(raw % 1'000);
}
inline std::int64_t input_from_value(const MaxCountMonoid<>&, double v) { return std::llround(v); }
inline bool aggregates_match(const MaxCountMonoid<>&, const MaxCount<>& a, const MaxCount<>& b) {
    return a == b;
}

inline double input_from_raw(const GeoMeanMonoid&, std::uint64_t raw) {
    return 1.0 + static_cast<double>(raw % 1'000'000) / 1'000.0;
}
inline double input_from_value(const GeoMeanMonoid&, double v) {
    if (!(v > 0.0)) throw InputError("geomean needs positive values, got " + std::to_string(v));
    return v;
}
/// Relative tolerance 1e-9 on the log-sum; counts must agree exactly.
inline bool aggregates_match(const GeoMeanMonoid&, const GeoMean& a, const GeoMean& b) {
    if (a.count != b.count) return false;
    const double scale = std::max({1.0, std::abs(a.log_sum), std::abs(b.log_sum)});
    return std::abs(a.log_sum - b.log_sum) <= 1e-9 * scale;
}

inline std::uint64_t input_from_raw(const BloomMonoid&, std::uint64_t raw) { return raw; }
inline std::uint64_t input_from_value(const BloomMonoid&, double v) {
    return std::bit_cast<std::uint64_t>(v);
}
inline bool aggregates_match(const BloomMonoid&, const BloomFilter& a, const BloomFilter& b) {
    return a == b;
}

inline std::string input_from_raw(const ConcatMonoid&, std::uint64_t raw) {
    return std::string(1, static_cast<char>('a' + raw % 26));
}
inline std::string input_from_value(const ConcatMonoid&, double v) {
    return std::string(1, static_cast<char>('a' + std::llabs(std::llround(v)) % 26));
}
inline bool aggregates_match(const ConcatMonoid&, const std::string& a, const std::string& b) {
    return a == b;
}

} // namespace swag::bench
