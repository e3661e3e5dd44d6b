#pragma once

#include <swag/errors.hpp>
#include <swag/monoid.hpp>

#include <concepts>
#include <cstddef>
#include <deque>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace swag {

/// FIFO sliding-window aggregator over already-lifted aggregates.
///
/// query() returns v0 ⊗ ... ⊗ v(n-1) ordered oldest to youngest, or the
/// identity for an empty window. evict() removes the oldest element and
/// throws PreconditionError when the window is empty.
template <typename E>
concept SwagEngine = requires(E& e, const E& ce, const typename E::Agg& v) {
    typename E::monoid_type;
    typename E::Agg;
    { ce.query() } -> std::same_as<typename E::Agg>;
    e.insert(v);
    e.evict();
    { ce.size() } -> std::convertible_to<std::size_t>;
    { ce.stored_aggregates() } -> std::convertible_to<std::size_t>;
};

/// Recalculate-from-scratch aggregator. Keeps a plain FIFO of the window
/// and folds it on every query, starting from the identity, so a query on a
/// window of n costs exactly n combines.
template <Monoid M>
class RecalcOracle {
public:
    using monoid_type = M;
    using Agg = typename M::Agg;

    explicit RecalcOracle(M monoid = M{}) : monoid_(std::move(monoid)) {}

    Agg query() const {
        Agg acc = monoid_.identity();
        for (const auto& v : fifo_) acc = monoid_.combine(acc, v);
        return acc;
    }

    void insert(const Agg& v) { fifo_.push_back(v); }

    void evict() {
        if (fifo_.empty()) throw PreconditionError("evict on an empty window");
        fifo_.pop_front();
    }

    std::size_t size() const { return fifo_.size(); }
    std::size_t stored_aggregates() const { return fifo_.size(); }

    const M& monoid() const { return monoid_; }
    const std::deque<Agg>& contents() const { return fifo_; }

private:
    M monoid_;
    std::deque<Agg> fifo_;
};

namespace trace {

template <typename Agg>
struct Insert {
    Agg value;
};
struct Evict {};
struct Query {};

template <typename Agg>
using Op = std::variant<Insert<Agg>, Evict, Query>;

} // namespace trace

/// Replays a trace against an engine; one output per Query, in order.
template <SwagEngine E>
std::vector<typename E::Agg> run_trace(E& engine,
                                       std::span<const trace::Op<typename E::Agg>> ops) {
    using Agg = typename E::Agg;
    std::vector<Agg> out;
    for (const auto& op : ops) {
        std::visit(
            [&](const auto& o) {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, trace::Insert<Agg>>) {
                    engine.insert(o.value);
                } else if constexpr (std::is_same_v<T, trace::Evict>) {
                    engine.evict();
                } else {
                    out.push_back(engine.query());
                }
            },
            op);
    }
    return out;
}

template <SwagEngine E>
std::vector<typename E::Agg> run_trace(E& engine,
                                       const std::vector<trace::Op<typename E::Agg>>& ops) {
    return run_trace(engine, std::span<const trace::Op<typename E::Agg>>(ops));
}

/// Left-to-right fold of `values`, starting from the identity.
template <Monoid M>
typename M::Agg fold(const M& m, std::span<const typename M::Agg> values) {
    auto acc = m.identity();
    for (const auto& v : values) acc = m.combine(acc, v);
    return acc;
}

} // namespace swag
