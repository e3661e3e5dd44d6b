#pragma once

#include <swag/errors.hpp>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace swag {

/// Integer sum. Addition wraps modulo 2^64, which keeps it exactly
/// associative for any input.
struct SumMonoid {
    using In = std::int64_t;
    using Agg = std::int64_t;
    using Out = std::int64_t;

    Agg identity() const { return 0; }
    Agg combine(Agg a, Agg b) const {
        return static_cast<Agg>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
    }
    Agg lift(In e) const { return e; }
    Out lower(Agg a) const { return a; }
};

/// Maximum of the window together with the number of times it occurs.
/// An empty `max` plays the role of minus infinity, so the identity is
/// well defined for any ordered value type.
template <std::totally_ordered T = std::int64_t>
struct MaxCount {
    std::optional<T> max;
    std::uint64_t count = 0;

    friend bool operator==(const MaxCount&, const MaxCount&) = default;
};

template <std::totally_ordered T = std::int64_t>
struct MaxCountMonoid {
    using In = T;
    using Agg = MaxCount<T>;
    using Out = std::uint64_t;

    Agg identity() const { return Agg{}; }

    Agg combine(const Agg& a, const Agg& b) const {
        if (!b.max) return a;
        if (!a.max) return b;
        if (*a.max > *b.max) return a;
        if (*a.max < *b.max) return b;
        return Agg{a.max, a.count + b.count};
    }

    Agg lift(const In& e) const { return Agg{e, 1}; }
    Out lower(const Agg& a) const { return a.count; }
};

/// Geometric mean, kept in log space.
struct GeoMean {
    double log_sum = 0.0;
    std::uint64_t count = 0;

    friend bool operator==(const GeoMean&, const GeoMean&) = default;
};

struct GeoMeanMonoid {
    using In = double;
    using Agg = GeoMean;
    using Out = double;

    Agg identity() const { return Agg{}; }
    Agg combine(const Agg& a, const Agg& b) const {
        return Agg{a.log_sum + b.log_sum, a.count + b.count};
    }
    /// Requires e > 0; throws std::domain_error otherwise.
    Agg lift(In e) const;
    /// exp(log_sum / count); an empty aggregate lowers to 1.
    Out lower(const Agg& a) const;
};

/// Fixed-width Bloom filter bit vector.
struct BloomFilter {
    std::vector<std::uint64_t> words;
    std::uint32_t bit_count = 0;
    std::uint32_t hash_count = 0;

    std::uint64_t popcount() const;
    bool may_contain(std::uint64_t key) const;

    friend bool operator==(const BloomFilter&, const BloomFilter&) = default;
};

/// Mergeable Bloom filter sketch: lift sets `hash_count` bits derived by
/// double hashing from one 64-bit hash, combine is bitwise OR.
class BloomMonoid {
public:
    using In = std::uint64_t;
    using Agg = BloomFilter;
    using Out = BloomFilter;

    static constexpr std::uint32_t kDefaultBits = 8192;
    static constexpr std::uint32_t kDefaultHashes = 3;

    explicit BloomMonoid(std::uint32_t bits = kDefaultBits,
                         std::uint32_t hashes = kDefaultHashes);

    Agg identity() const;
    /// Throws ConfigurationError if the operands differ in width or hash count.
    Agg combine(const Agg& a, const Agg& b) const;
    Agg lift(In e) const;
    Out lower(const Agg& a) const { return a; }

    std::uint32_t bits() const { return bits_; }
    std::uint32_t hashes() const { return hashes_; }

    /// Bit positions set by lift(e), in hash order (may repeat).
    std::vector<std::uint32_t> bit_positions(In e) const;

private:
    std::uint32_t bits_;
    std::uint32_t hashes_;
};

/// String concatenation; the canonical non-commutative monoid.
struct ConcatMonoid {
    using In = std::string;
    using Agg = std::string;
    using Out = std::string;

    Agg identity() const { return {}; }
    Agg combine(const Agg& a, const Agg& b) const {
        Agg out;
        out.reserve(a.size() + b.size());
        out.append(a).append(b);
        return out;
    }
    Agg lift(const In& e) const { return e; }
    Out lower(const Agg& a) const { return a; }
};

/// 64-bit finalizer (splitmix64) used for Bloom hashing.
std::uint64_t mix64(std::uint64_t x);

} // namespace swag
