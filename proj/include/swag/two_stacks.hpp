#pragma once

#include <swag/chunked_deque.hpp>
#include <swag/engine.hpp>
#include <swag/errors.hpp>
#include <swag/monoid.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace swag {

/// Two-Stacks aggregator: amortized O(1), worst-case O(n) combines.
///
/// Insertions push onto the back stack, whose records carry running
/// aggregates from the bottom of the stack up. Evictions pop from the front
/// stack, whose records aggregate from each element to the newest element
/// of the front. When the front stack runs dry, evict first moves the whole
/// back stack over (a flip), one combine per element. Stores 2n aggregates.
template <Monoid M>
class TwoStacks {
public:
    using monoid_type = M;
    using Agg = typename M::Agg;

    struct Record {
        Agg val;
        Agg agg;
    };
    static constexpr std::size_t kAggregatesPerRecord = 2;

    explicit TwoStacks(M monoid = M{},
                       std::size_t chunk_capacity = ChunkedDeque<Record>::kDefaultChunkCapacity)
        : monoid_(std::move(monoid)),
          identity_(monoid_.identity()),
          front_(chunk_capacity),
          back_(chunk_capacity) {}

    Agg query() const { return monoid_.combine(agg_front(), agg_back()); }

    void insert(const Agg& v) { back_.push_back(Record{v, monoid_.combine(agg_back(), v)}); }

    void evict() {
        if (size() == 0) throw PreconditionError("evict on an empty window");
        if (front_.empty()) {
            while (!back_.empty()) {
                const Agg& top = back_.back().val;
                front_.push_back(Record{top, monoid_.combine(top, agg_front())});
                back_.pop_back();
            }
        }
        front_.pop_back();
    }

    std::size_t size() const { return front_.size() + back_.size(); }
    std::size_t stored_aggregates() const { return kAggregatesPerRecord * size(); }
    std::size_t front_size() const { return front_.size(); }
    std::size_t back_size() const { return back_.size(); }

    const M& monoid() const { return monoid_; }

    /// Window contents oldest to youngest, read from the val fields.
    std::vector<Agg> values() const {
        std::vector<Agg> out;
        out.reserve(size());
        for (auto it = front_.end(); it != front_.begin();) out.push_back((--it)->val);
        for (const auto& r : back_) out.push_back(r.val);
        return out;
    }

    /// Full O(n) check of the stack invariants against `window`, the
    /// expected contents oldest first. Throws InvariantError on mismatch.
    template <typename Eq>
    void verify_invariants(std::span<const Agg> window, Eq eq) const {
        if (window.size() != size()) throw InvariantError("two-stacks: size mismatch");
        const std::size_t nf = front_.size();
        // The front stack's top (deque back) is v0.
        std::vector<const Record*> front;
        for (auto it = front_.end(); it != front_.begin();) front.push_back(&*--it);
        for (std::size_t i = 0; i < nf; ++i) {
            if (!eq(front[i]->val, window[i])) fail("front val", i);
            if (!eq(front[i]->agg, fold(monoid_, window.subspan(i, nf - i)))) fail("front agg", i);
        }
        std::size_t i = nf;
        for (const auto& r : back_) {
            if (!eq(r.val, window[i])) fail("back val", i);
            if (!eq(r.agg, fold(monoid_, window.subspan(nf, i - nf + 1)))) fail("back agg", i);
            ++i;
        }
    }

private:
    [[noreturn]] static void fail(const char* what, std::size_t i) {
        throw InvariantError(std::string("two-stacks: ") + what + " at " + std::to_string(i));
    }

    const Agg& agg_front() const { return front_.empty() ? identity_ : front_.back().agg; }
    const Agg& agg_back() const { return back_.empty() ? identity_ : back_.back().agg; }

    M monoid_;
    Agg identity_;
    ChunkedDeque<Record> front_;  // stack; top is the deque back
    ChunkedDeque<Record> back_;   // stack; top is the deque back
};

} // namespace swag
