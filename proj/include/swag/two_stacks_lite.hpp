#pragma once

#include <swag/chunked_deque.hpp>
#include <swag/engine.hpp>
#include <swag/errors.hpp>
#include <swag/monoid.hpp>

#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace swag {

/// Two-Stacks Lite: the two stacks share one chunked deque split by an
/// internal cursor `b_`, and only n+1 aggregates are stored.
///
/// Slots in [begin, b_) hold suffix aggregates up to b_ (the front list).
/// Slots in [b_, end) hold raw window values (the back list), whose product
/// is kept in `agg_b_`. A flip rewrites the whole deque right to left in
/// place.
template <Monoid M>
class TwoStacksLite {
public:
    using monoid_type = M;
    using Agg = typename M::Agg;
    using Cursor = typename ChunkedDeque<Agg>::Cursor;
    using ConstCursor = typename ChunkedDeque<Agg>::ConstCursor;

    static constexpr std::size_t kSideAggregates = 1;

    explicit TwoStacksLite(M monoid = M{},
                           std::size_t chunk_capacity = ChunkedDeque<Agg>::kDefaultChunkCapacity)
        : monoid_(std::move(monoid)),
          identity_(monoid_.identity()),
          deque_(chunk_capacity),
          b_(deque_.begin()),
          agg_b_(identity_) {}

    TwoStacksLite(TwoStacksLite&&) = default;
    TwoStacksLite& operator=(TwoStacksLite&&) = default;

    Agg query() const { return monoid_.combine(agg_front(), agg_b_); }

    void insert(const Agg& v) {
        deque_.push_back(v);
        agg_b_ = monoid_.combine(agg_b_, v);
    }

    void evict() {
        if (deque_.empty()) throw PreconditionError("evict on an empty window");
        const Cursor f = deque_.begin();
        const Cursor e = deque_.end();
        if (f == b_) {  // flip; b_ != e because the window is nonempty
            Cursor i = std::prev(e);
            while (i != f) {
                Cursor next = i;
                --i;
                *i = monoid_.combine(*i, *next);
            }
            b_ = e;
            agg_b_ = identity_;
        }
        deque_.pop_front();
    }

    std::size_t size() const { return deque_.size(); }
    std::size_t slots() const { return deque_.size(); }
    std::size_t stored_aggregates() const { return deque_.size() + kSideAggregates; }

    const M& monoid() const { return monoid_; }

    template <typename Eq>
    void verify_invariants(std::span<const Agg> window, Eq eq) const {
        if (window.size() != size()) throw InvariantError("two-stacks-lite: size mismatch");
        std::size_t nb = 0;
        for (auto it = deque_.begin(); it != ConstCursor(b_); ++it) ++nb;
        std::size_t i = 0;
        for (auto it = deque_.begin(); it != deque_.end(); ++it, ++i) {
            const Agg expect = i < nb ? fold(monoid_, window.subspan(i, nb - i)) : window[i];
            if (!eq(*it, expect)) {
                throw InvariantError("two-stacks-lite: slot " + std::to_string(i));
            }
        }
        if (!eq(agg_b_, fold(monoid_, window.subspan(nb)))) {
            throw InvariantError("two-stacks-lite: aggB");
        }
    }

private:
    const Agg& agg_front() const {
        return ConstCursor(b_) == deque_.begin() ? identity_ : deque_.front();
    }

    M monoid_;
    Agg identity_;
    ChunkedDeque<Agg> deque_;
    Cursor b_;
    Agg agg_b_;
};

} // namespace swag
