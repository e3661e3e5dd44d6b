#pragma once

#include <concepts>
#include <cstdint>
#include <utility>

namespace swag {

/// An aggregation monoid in lift/combine/lower form.
///
/// `Agg` with `combine` and `identity()` must form a monoid: combine is
/// associative and identity() is a two-sided unit. Operands of combine are
/// always ordered older-left, newer-right, so non-commutative monoids are
/// supported. `lift` turns an input element into a singleton aggregate and
/// `lower` turns an aggregate into the final answer.
template <typename M>
concept Monoid = std::copy_constructible<M>
    && std::copyable<typename M::Agg>
    && requires(const M& m, const typename M::Agg& a, const typename M::In& e) {
        typename M::In;
        typename M::Out;
        { m.identity() } -> std::convertible_to<typename M::Agg>;
        { m.combine(a, a) } -> std::convertible_to<typename M::Agg>;
        { m.lift(e) } -> std::convertible_to<typename M::Agg>;
        { m.lower(a) } -> std::convertible_to<typename M::Out>;
    };

/// Monotone tally of physical combine invocations.
struct CombineTally {
    std::uint64_t count = 0;
};

/// Wraps a monoid so that every call to combine bumps a shared tally. Calls
/// with an identity operand are counted like any other call.
template <Monoid M>
class CountingMonoid {
public:
    using In = typename M::In;
    using Agg = typename M::Agg;
    using Out = typename M::Out;

    CountingMonoid(M inner, CombineTally& tally)
        : inner_(std::move(inner)), tally_(&tally) {}

    Agg identity() const { return inner_.identity(); }
    Agg combine(const Agg& a, const Agg& b) const {
        ++tally_->count;
        return inner_.combine(a, b);
    }
    Agg lift(const In& e) const { return inner_.lift(e); }
    Out lower(const Agg& a) const { return inner_.lower(a); }

    const M& inner() const { return inner_; }
    const CombineTally& tally() const { return *tally_; }

private:
    M inner_;
    CombineTally* tally_;
};

/// Number of combine calls performed while running `op`.
template <typename Op>
std::uint64_t combine_delta(const CombineTally& tally, Op&& op) {
    const std::uint64_t before = tally.count;
    std::forward<Op>(op)();
    return tally.count - before;
}

} // namespace swag
