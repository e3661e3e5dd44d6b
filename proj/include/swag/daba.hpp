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

/// De-amortized Banker's Aggregator: worst-case O(1) combines per operation.
///
/// Each deque slot is a (val, agg) record. Six cursors F <= L <= R <= A <=
/// B <= E split the deque into sublists:
///
///   [F, L)  agg = v_i ⊗ ... ⊗ v_(B-1)     front, left portion
///   [L, R)  agg = v_i ⊗ ... ⊗ v_(R-1)     left
///   [R, A)  agg = v_R ⊗ ... ⊗ v_i         right
///   [A, B)  agg = v_i ⊗ ... ⊗ v_(B-1)     accumulator
///   [B, E)  agg = v_B ⊗ ... ⊗ v_i         back
///
/// Instead of reversing the back list all at once when the front runs dry,
/// the front and back are relabelled as left/right once they reach the same
/// length and every later insert or evict performs one step of the reversal
/// (the fixup). F and E are always the deque's begin and end.
///
/// Bounds: query 1 combine, insert <= 4, evict <= 3; 2n stored aggregates.
template <Monoid M>
class Daba {
public:
    using monoid_type = M;
    using Agg = typename M::Agg;

    struct Record {
        Agg val;
        Agg agg;
    };
    using Cursor = typename ChunkedDeque<Record>::Cursor;
    using ConstCursor = typename ChunkedDeque<Record>::ConstCursor;

    static constexpr std::size_t kAggregatesPerRecord = 2;

    explicit Daba(M monoid = M{},
                  std::size_t chunk_capacity = ChunkedDeque<Record>::kDefaultChunkCapacity)
        : monoid_(std::move(monoid)),
          identity_(monoid_.identity()),
          deque_(chunk_capacity),
          l_(deque_.begin()),
          r_(l_),
          a_(l_),
          b_(l_) {}

    Daba(Daba&&) = default;
    Daba& operator=(Daba&&) = default;

    Agg query() const { return monoid_.combine(agg_f(), agg_b()); }

    void insert(const Agg& v) {
        deque_.push_back(Record{v, monoid_.combine(agg_b(), v)});
        fixup();
    }

    void evict() {
        if (deque_.empty()) throw PreconditionError("evict on an empty window");
        deque_.pop_front();
        fixup();
    }

    std::size_t size() const { return deque_.size(); }
    std::size_t stored_aggregates() const { return kAggregatesPerRecord * deque_.size(); }
    const M& monoid() const { return monoid_; }

    FixupSteps last_fixup() const { return last_fixup_; }

    /// Linear-time; for tests.
    SublistSizes sublist_sizes() const {
        return detail::locate_sublists(deque_, l_, r_, a_, b_, "daba");
    }

    /// Full O(n^2) check of cursor order, size invariants, and the value and
    /// partial-aggregate contents against `window` (oldest first).
    template <typename Eq>
    void verify_invariants(std::span<const Agg> window, Eq eq) const {
        if (window.size() != size()) throw InvariantError("daba: size mismatch");
        const SublistSizes s = sublist_sizes();
        if (!s.satisfied()) throw InvariantError("daba: size invariant violated: " + s.describe());
        const std::size_t L = s.front - s.accum - s.right - s.left;
        const std::size_t R = L + s.left;
        const std::size_t A = R + s.right;
        const std::size_t B = s.front;
        std::size_t i = 0;
        for (auto it = deque_.begin(); it != deque_.end(); ++it, ++i) {
            if (!eq(it->val, window[i])) fail("val", i);
            std::size_t lo = i;
            std::size_t hi = i + 1;
            if (i < L) {
                hi = B;
            } else if (i < R) {
                hi = R;
            } else if (i < A) {
                lo = R;
            } else if (i < B) {
                hi = B;
            } else {
                lo = B;
            }
            if (!eq(it->agg, fold(monoid_, window.subspan(lo, hi - lo)))) fail("agg", i);
        }
    }

private:
    [[noreturn]] static void fail(const char* what, std::size_t i) {
        throw InvariantError(std::string("daba: ") + what + " at " + std::to_string(i));
    }

    const Agg& agg_f() const {
        return ConstCursor(b_) == deque_.begin() ? identity_ : deque_.front().agg;
    }
    const Agg& agg_b() const {
        return ConstCursor(b_) == deque_.end() ? identity_ : deque_.back().agg;
    }
    const Agg& agg_l() const { return l_ == r_ ? identity_ : l_->agg; }
    const Agg& agg_r() const { return r_ == a_ ? identity_ : std::prev(a_)->agg; }
    const Agg& agg_a() const { return a_ == b_ ? identity_ : a_->agg; }

    void fixup() {
        const Cursor f = deque_.begin();
        const Cursor e = deque_.end();
        last_fixup_ = FixupSteps{};
        if (f == b_) {
            last_fixup_.singleton = true;
            b_ = a_ = r_ = l_ = e;
            return;
        }
        if (l_ == b_) {
            last_fixup_.flip = true;
            l_ = f;
            a_ = e;
            b_ = e;
        }
        if (l_ == r_) {
            last_fixup_.shift = true;
            ++a_;
            ++r_;
            ++l_;
        } else {
            last_fixup_.shrink = true;
            l_->agg = monoid_.combine(monoid_.combine(agg_l(), agg_r()), agg_a());
            ++l_;
            Cursor top_of_right = std::prev(a_);
            top_of_right->agg = monoid_.combine(top_of_right->val, agg_a());
            a_ = top_of_right;
        }
    }

    M monoid_;
    Agg identity_;
    ChunkedDeque<Record> deque_;
    Cursor l_, r_, a_, b_;
    FixupSteps last_fixup_;
};

} // namespace swag
