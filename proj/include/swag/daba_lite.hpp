#pragma once

#include <swag/chunked_deque.hpp>
#include <swag/engine.hpp>
#include <swag/errors.hpp>
#include <swag/fixup.hpp>
#include <swag/monoid.hpp>

#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <utility>

namespace swag {

/// DABA Lite: DABA with one aggregate per slot plus two side aggregates,
/// n+2 in total.
///
/// Sublists aggregated towards the front ([F, L), [L, R), [A, B)) store
/// suffix aggregates exactly as in DABA. The right and back sublists store
/// raw values instead; their products live in `agg_ra_` (covering [R, B),
/// valid only while L != R) and `agg_b_` (covering [B, E)).
///
/// Bounds: query 1 combine, insert <= 3, evict <= 2.
template <Monoid M>
class DabaLite {
public:
    using monoid_type = M;
    using Agg = typename M::Agg;
    using Cursor = typename ChunkedDeque<Agg>::Cursor;
    using ConstCursor = typename ChunkedDeque<Agg>::ConstCursor;

    static constexpr std::size_t kSideAggregates = 2;

    explicit DabaLite(M monoid = M{},
                      std::size_t chunk_capacity = ChunkedDeque<Agg>::kDefaultChunkCapacity)
        : monoid_(std::move(monoid)),
          identity_(monoid_.identity()),
          deque_(chunk_capacity),
          l_(deque_.begin()),
          r_(l_),
          a_(l_),
          b_(l_),
          agg_ra_(identity_),
          agg_b_(identity_) {}

    DabaLite(DabaLite&&) = default;
    DabaLite& operator=(DabaLite&&) = default;

    Agg query() const { return monoid_.combine(agg_f(), agg_b_); }

    void insert(const Agg& v) {
        deque_.push_back(v);
        agg_b_ = monoid_.combine(agg_b_, v);
        fixup();
    }

    void evict() {
        if (deque_.empty()) throw PreconditionError("evict on an empty window");
        deque_.pop_front();
        fixup();
    }

    std::size_t size() const { return deque_.size(); }
    std::size_t slots() const { return deque_.size(); }
    std::size_t stored_aggregates() const { return deque_.size() + kSideAggregates; }
    const M& monoid() const { return monoid_; }

    FixupSteps last_fixup() const { return last_fixup_; }

    SublistSizes sublist_sizes() const {
        return detail::locate_sublists(deque_, l_, r_, a_, b_, "daba-lite");
    }

    /// Checks the guarded contents invariants: agg_ra_ is only compared
    /// while the left sublist is nonempty.
    template <typename Eq>
    void verify_invariants(std::span<const Agg> window, Eq eq) const {
        if (window.size() != size()) throw InvariantError("daba-lite: size mismatch");
        const SublistSizes s = sublist_sizes();
        if (!s.satisfied()) {
            throw InvariantError("daba-lite: size invariant violated: " + s.describe());
        }
        const std::size_t L = s.front - s.accum - s.right - s.left;
        const std::size_t R = L + s.left;
        const std::size_t A = R + s.right;
        const std::size_t B = s.front;
        std::size_t i = 0;
        for (auto it = deque_.begin(); it != deque_.end(); ++it, ++i) {
            const Agg expect = [&] {
                if (i < L || (i >= A && i < B)) return fold(monoid_, window.subspan(i, B - i));
                if (i < R) return fold(monoid_, window.subspan(i, R - i));
                return window[i];
            }();
            if (!eq(*it, expect)) fail("slot", i);
        }
        if (s.left != 0 && !eq(agg_ra_, fold(monoid_, window.subspan(R, B - R)))) fail("aggRA", R);
        if (!eq(agg_b_, fold(monoid_, window.subspan(B)))) fail("aggB", B);
    }

private:
    [[noreturn]] static void fail(const char* what, std::size_t i) {
        throw InvariantError(std::string("daba-lite: ") + what + " at " + std::to_string(i));
    }

    const Agg& agg_f() const {
        return ConstCursor(b_) == deque_.begin() ? identity_ : deque_.front();
    }
    const Agg& agg_l() const { return l_ == r_ ? identity_ : *l_; }
    const Agg& agg_a() const { return a_ == b_ ? identity_ : *a_; }

    void fixup() {
        const Cursor f = deque_.begin();
        const Cursor e = deque_.end();
        last_fixup_ = FixupSteps{};
        if (f == b_) {
            last_fixup_.singleton = true;
            b_ = a_ = r_ = l_ = e;
            agg_ra_ = identity_;
            agg_b_ = identity_;
            return;
        }
        if (l_ == b_) {
            last_fixup_.flip = true;
            l_ = f;
            a_ = e;
            b_ = e;
            agg_ra_ = std::move(agg_b_);
            agg_b_ = identity_;
        }
        if (l_ == r_) {
            // agg_ra_ goes stale here; it is not read again before the next flip.
            last_fixup_.shift = true;
            ++a_;
            ++r_;
            ++l_;
        } else {
            last_fixup_.shrink = true;
            *l_ = monoid_.combine(agg_l(), agg_ra_);
            ++l_;
            Cursor top_of_right = std::prev(a_);
            *top_of_right = monoid_.combine(*top_of_right, agg_a());
            a_ = top_of_right;
        }
    }

    M monoid_;
    Agg identity_;
    ChunkedDeque<Agg> deque_;
    Cursor l_, r_, a_, b_;
    Agg agg_ra_;
    Agg agg_b_;
    FixupSteps last_fixup_;
};

} // namespace swag
