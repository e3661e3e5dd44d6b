#pragma once

#include <swag/bench/adapters.hpp>
#include <swag/engine.hpp>
#include <swag/monoids.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace swag::testing {

/// Equality used for oracle comparisons: exact, except geomean.
template <Monoid M>
auto matcher(const M& m) {
    return [m](const typename M::Agg& a, const typename M::Agg& b) {
        return bench::aggregates_match(m, a, b);
    };
}

template <Monoid M>
typename M::Agg random_agg(const M& m, std::mt19937_64& rng) {
    return m.lift(bench::input_from_raw(m, rng()));
}

/// Random valid op sequence: never evicts from an empty window. The window
/// size drifts with `insert_bias` (probability of insert among mutations).
template <Monoid M>
std::vector<trace::Op<typename M::Agg>> random_trace(const M& m, std::uint64_t seed,
                                                      std::size_t count, double insert_bias = 0.5) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<trace::Op<typename M::Agg>> ops;
    ops.reserve(count);
    std::size_t size = 0;
    while (ops.size() < count) {
        const double c = coin(rng);
        if (c < 0.3) {
            ops.emplace_back(trace::Query{});
        } else if (size == 0 || coin(rng) < insert_bias) {
            ops.emplace_back(trace::Insert<typename M::Agg>{random_agg(m, rng)});
            ++size;
        } else {
            ops.emplace_back(trace::Evict{});
            --size;
        }
    }
    return ops;
}

} // namespace swag::testing
