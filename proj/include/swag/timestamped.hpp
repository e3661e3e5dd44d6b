#pragma once

#include <swag/chunked_deque.hpp>
#include <swag/engine.hpp>
#include <swag/errors.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

namespace swag {

/// Adds oldest/youngest timestamp queries to any FIFO engine so it can
/// maintain an event-time window. Timestamps must arrive nondecreasing.
template <SwagEngine E>
class TimestampedWindow {
public:
    using Agg = typename E::Agg;

    explicit TimestampedWindow(E engine) : engine_(std::move(engine)) {}

    void insert(std::int64_t timestamp, const Agg& v) {
        if (!times_.empty() && timestamp < times_.back()) {
            throw PreconditionError("timestamp " + std::to_string(timestamp)
                                    + " is older than the youngest in the window");
        }
        engine_.insert(v);
        times_.push_back(timestamp);
    }

    void evict() {
        engine_.evict();
        times_.pop_front();
    }

    /// Evicts every element with a timestamp strictly below `bound`.
    std::size_t evict_older_than(std::int64_t bound) {
        std::size_t n = 0;
        while (!times_.empty() && times_.front() < bound) {
            evict();
            ++n;
        }
        return n;
    }

    Agg query() const { return engine_.query(); }
    std::size_t size() const { return engine_.size(); }
    std::int64_t oldest() const { return times_.front(); }
    std::int64_t youngest() const { return times_.back(); }

    E& engine() { return engine_; }
    const E& engine() const { return engine_; }

private:
    E engine_;
    ChunkedDeque<std::int64_t> times_;
};

} // namespace swag
