#pragma once

#include <swag/bench/adapters.hpp>
#include <swag/bench/config.hpp>
#include <swag/bench/records.hpp>
#include <swag/bench/report.hpp>
#include <swag/engine.hpp>
#include <swag/errors.hpp>
#include <swag/monoid.hpp>
#include <swag/timestamped.hpp>

#include <chrono>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>

namespace swag::bench {

struct RunOptions {
    Measure measure = Measure::Latency;
    std::uint64_t window = 1;  // static and dynamic modes
    std::int64_t tau_ms = 0;   // event mode
    std::uint64_t rounds = 1;
    bool verify = false;
    std::uint64_t verify_every = 10'000;
    bool per_op = false;
};

/// Default query observer: ignores results.
struct NoSink {
    template <typename A>
    void operator()(const A&, std::size_t) const {}
};

/// An engine over CountingMonoid<M>, with per-operation combine
/// deltas and an optional recalculating shadow for --verify.
template <SwagEngine Engine, Monoid M, bool Timed = false>
    requires std::same_as<typename Engine::monoid_type, CountingMonoid<M>>
class Harness {
public:
    using Counting = CountingMonoid<M>;
    using Window = std::conditional_t<Timed, TimestampedWindow<Engine>, Engine>;
    using Agg = typename M::Agg;

    Harness(const M& m, bool verify)
        : monoid_(m), window_(Engine(Counting(m, tally_))), shadow_(m), verify_(verify) {}

    Harness(const Harness&) = delete;
    Harness& operator=(const Harness&) = delete;

    std::uint64_t insert(const Agg& v) requires(!Timed) {
        const auto c = combine_delta(tally_, [&] { window_.insert(v); });
        if (verify_) shadow_.insert(v);
        return c;
    }

    std::uint64_t insert(std::int64_t ts, const Agg& v) requires Timed {
        const auto c = combine_delta(tally_, [&] { window_.insert(ts, v); });
        if (verify_) shadow_.insert(v);
        return c;
    }

    std::uint64_t evict() {
        const auto c = combine_delta(tally_, [&] { window_.evict(); });
        if (verify_) shadow_.evict();
        return c;
    }

    std::uint64_t query(Agg& out) const {
        return combine_delta(tally_, [&] { out = window_.query(); });
    }

    /// Compares the engine's current answer against the shadow oracle.
    void check(std::uint64_t round) const {
        if (!aggregates_match(monoid_, window_.query(), shadow_.query())) {
            throw VerificationError("query result diverged from the recalculating oracle at round "
                                    + std::to_string(round));
        }
    }

    std::size_t size() const { return window_.size(); }
    const Window& window() const { return window_; }
    const M& monoid() const { return monoid_; }

private:
    M monoid_;
    CombineTally tally_;
    Window window_;
    RecalcOracle<M> shadow_;
    bool verify_;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline std::int64_t ns_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count();
}

inline bool checkpoint(const RunOptions& opt, std::uint64_t round) {
    return opt.verify && ((round + 1) % opt.verify_every == 0 || round + 1 == opt.rounds);
}

/// Times `op` when `timed`, appending a per-op sample when per-op sampling is on.
template <typename Op>
std::uint64_t timed_op(OpReport& r, const RunOptions& opt, std::uint64_t round, OpKind kind,
                       Op&& op) {
    if (!opt.per_op) return op();
    const auto t0 = Clock::now();
    const std::uint64_t c = op();
    const auto t1 = Clock::now();
    r.op_samples.push_back({round, kind, ns_between(t0, t1)});
    return c;
}

} // namespace detail

/// Static count-based window: fill to `window`, then `rounds` rounds of
/// evict, insert, query. Latency is sampled per round.
template <template <Monoid> class EngineT, Monoid M, typename Sink = NoSink>
OpReport run_static(const M& m, const RunOptions& opt, std::uint64_t seed, Sink&& sink = {}) {
    using detail::Clock;
    Harness<EngineT<CountingMonoid<M>>, M> h(m, opt.verify);
    SyntheticSource src(seed);
    for (std::uint64_t i = 0; i < opt.window; ++i) h.insert(m.lift(input_from_raw(m, src.next())));

    OpReport r;
    r.n = opt.window;
    r.rounds = opt.rounds;
    const bool latency = opt.measure == Measure::Latency;
    if (latency) {
        r.latency_ns.reserve(opt.rounds);
        r.round_combines.reserve(opt.rounds);
    }
    typename M::Agg q = m.identity();
    const auto start = Clock::now();
    for (std::uint64_t round = 0; round < opt.rounds; ++round) {
        const typename M::Agg v = m.lift(input_from_raw(m, src.next()));
        const auto t0 = latency ? Clock::now() : Clock::time_point{};
        const auto ce = detail::timed_op(r, opt, round, OpKind::Evict, [&] { return h.evict(); });
        const auto ci = detail::timed_op(r, opt, round, OpKind::Insert, [&] { return h.insert(v); });
        const auto cq = detail::timed_op(r, opt, round, OpKind::Query, [&] { return h.query(q); });
        if (latency) {
            r.latency_ns.push_back(detail::ns_between(t0, Clock::now()));
            r.round_combines.push_back(static_cast<std::uint32_t>(ce + ci + cq));
        }
        r.evict.record(ce);
        r.insert.record(ci);
        r.query.record(cq);
        sink(q, h.size());
        if (detail::checkpoint(opt, round)) {
            h.check(round);
            ++r.verified_checkpoints;
        }
    }
    r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    r.total_ops = 3 * opt.rounds;
    return r;
}

/// Dynamic fill-and-drain window: insert and query until the window holds
/// `window` items, then evict (without querying) down to empty, and repeat.
/// Each insert+query step or evict step is one round.
template <template <Monoid> class EngineT, Monoid M, typename Sink = NoSink>
OpReport run_dynamic(const M& m, const RunOptions& opt, std::uint64_t seed, Sink&& sink = {}) {
    using detail::Clock;
    Harness<EngineT<CountingMonoid<M>>, M> h(m, opt.verify);
    SyntheticSource src(seed);

    OpReport r;
    r.n = opt.window;
    r.rounds = opt.rounds;
    const bool latency = opt.measure == Measure::Latency;
    if (latency) {
        r.latency_ns.reserve(opt.rounds);
        r.round_combines.reserve(opt.rounds);
    }
    typename M::Agg q = m.identity();
    bool filling = true;
    const auto start = Clock::now();
    for (std::uint64_t round = 0; round < opt.rounds; ++round) {
        std::uint64_t combines = 0;
        std::int64_t ns = 0;
        if (filling) {
            const typename M::Agg v = m.lift(input_from_raw(m, src.next()));
            const auto t0 = latency ? Clock::now() : Clock::time_point{};
            const auto ci = detail::timed_op(r, opt, round, OpKind::Insert, [&] { return h.insert(v); });
            const auto cq = detail::timed_op(r, opt, round, OpKind::Query, [&] { return h.query(q); });
            if (latency) ns = detail::ns_between(t0, Clock::now());
            r.insert.record(ci);
            r.query.record(cq);
            combines = ci + cq;
            r.total_ops += 2;
            sink(q, h.size());
            if (h.size() >= opt.window) filling = false;
        } else {
            const auto t0 = latency ? Clock::now() : Clock::time_point{};
            const auto ce = detail::timed_op(r, opt, round, OpKind::Evict, [&] { return h.evict(); });
            if (latency) ns = detail::ns_between(t0, Clock::now());
            r.evict.record(ce);
            combines = ce;
            r.total_ops += 1;
            if (h.size() == 0) filling = true;
        }
        if (latency) {
            r.latency_ns.push_back(ns);
            r.round_combines.push_back(static_cast<std::uint32_t>(combines));
        }
        if (detail::checkpoint(opt, round)) {
            h.check(round);
            ++r.verified_checkpoints;
        }
    }
    r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

/// Event-time window of `tau_ms`: for each record, evict everything older
/// than (timestamp - tau), insert, query. Processes min(rounds, records)
/// records; latency statistics start at the first round that evicts.
template <template <Monoid> class EngineT, Monoid M, typename Sink = NoSink>
OpReport run_event(const M& m, const RunOptions& opt, std::span<const TimestampedRecord> records,
                   Sink&& sink = {}) {
    using detail::Clock;
    Harness<EngineT<CountingMonoid<M>>, M, true> h(m, opt.verify);

    OpReport r;
    r.n = static_cast<std::uint64_t>(opt.tau_ms);
    const std::uint64_t count = std::min<std::uint64_t>(opt.rounds, records.size());
    r.rounds = count;
    const bool latency = opt.measure == Measure::Latency;
    if (latency) {
        r.latency_ns.reserve(count);
        r.round_combines.reserve(count);
        r.round_evictions.reserve(count);
    }
    bool warmed_up = false;
    typename M::Agg q = m.identity();
    const auto start = Clock::now();
    for (std::uint64_t round = 0; round < count; ++round) {
        const TimestampedRecord& rec = records[round];
        if (round > 0 && rec.timestamp_ms < records[round - 1].timestamp_ms) {
            throw InputError("record " + std::to_string(round + 1) + ": timestamp "
                             + std::to_string(rec.timestamp_ms) + " is out of order");
        }
        const typename M::Agg v = m.lift(input_from_value(m, rec.value));
        const std::int64_t bound = rec.timestamp_ms - opt.tau_ms;

        const auto t0 = latency ? Clock::now() : Clock::time_point{};
        std::uint64_t combines = 0;
        std::uint32_t evicted = 0;
        while (h.size() > 0 && h.window().oldest() < bound) {
            const auto ce = detail::timed_op(r, opt, round, OpKind::Evict, [&] { return h.evict(); });
            r.evict.record(ce);
            combines += ce;
            ++evicted;
        }
        const auto ci = detail::timed_op(r, opt, round, OpKind::Insert,
                                         [&] { return h.insert(rec.timestamp_ms, v); });
        const auto cq = detail::timed_op(r, opt, round, OpKind::Query, [&] { return h.query(q); });
        if (latency) {
            r.latency_ns.push_back(detail::ns_between(t0, Clock::now()));
            r.round_combines.push_back(static_cast<std::uint32_t>(combines + ci + cq));
            r.round_evictions.push_back(evicted);
        }
        r.insert.record(ci);
        r.query.record(cq);
        r.total_ops += evicted + 2;
        if (!warmed_up && evicted > 0) {
            warmed_up = true;
            r.warmup_rounds = round;
        }
        sink(q, h.size());
        if (detail::checkpoint(opt, round)) {
            h.check(round);
            ++r.verified_checkpoints;
        }
    }
    r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

} // namespace swag::bench
