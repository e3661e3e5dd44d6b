#include <swag/monoids.hpp>

#include <bit>
#include <cmath>
#include <stdexcept>

namespace swag {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

GeoMean GeoMeanMonoid::lift(double e) const {
    if (!(e > 0.0)) {
        throw std::domain_error("geometric mean is only defined for positive values");
    }
    return GeoMean{std::log(e), 1};
}

double GeoMeanMonoid::lower(const GeoMean& a) const {
    if (a.count == 0) return 1.0;
    return std::exp(a.log_sum / static_cast<double>(a.count));
}

std::uint64_t BloomFilter::popcount() const {
    std::uint64_t n = 0;
    for (auto w : words) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

bool BloomFilter::may_contain(std::uint64_t key) const {
    const BloomMonoid shape(bit_count, hash_count);
    for (auto bit : shape.bit_positions(key)) {
        if ((words[bit / 64] & (std::uint64_t{1} << (bit % 64))) == 0) return false;
    }
    return true;
}

BloomMonoid::BloomMonoid(std::uint32_t bits, std::uint32_t hashes)
    : bits_(bits), hashes_(hashes) {
    if (bits_ == 0 || hashes_ == 0) {
        throw ConfigurationError("bloom filter needs at least one bit and one hash");
    }
}

BloomFilter BloomMonoid::identity() const {
    return BloomFilter{std::vector<std::uint64_t>((bits_ + 63) / 64, 0), bits_, hashes_};
}

BloomFilter BloomMonoid::combine(const BloomFilter& a, const BloomFilter& b) const {
    if (a.bit_count != b.bit_count || a.hash_count != b.hash_count
        || a.words.size() != b.words.size()) {
        throw ConfigurationError("cannot combine bloom filters of different configuration");
    }
    BloomFilter out{std::vector<std::uint64_t>(a.words.size()), a.bit_count, a.hash_count};
    for (std::size_t i = 0; i < a.words.size(); ++i) out.words[i] = a.words[i] | b.words[i];
    return out;
}

std::vector<std::uint32_t> BloomMonoid::bit_positions(std::uint64_t e) const {
    const std::uint64_t h1 = mix64(e);
    const std::uint64_t h2 = mix64(h1) | 1;  // odd stride
    std::vector<std::uint32_t> out;
    out.reserve(hashes_);
    for (std::uint32_t i = 0; i < hashes_; ++i) {
        out.push_back(static_cast<std::uint32_t>((h1 + i * h2) % bits_));
    }
    return out;
}

BloomFilter BloomMonoid::lift(std::uint64_t e) const {
    BloomFilter out = identity();
    for (auto bit : bit_positions(e)) out.words[bit / 64] |= std::uint64_t{1} << (bit % 64);
    return out;
}

} // namespace swag
