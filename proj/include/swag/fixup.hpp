#pragma once

#include <swag/errors.hpp>

#include <cstddef>
#include <string>

namespace swag {

/// Which fixup cases ran during the most recent insert or evict. A flip is
/// always followed by shift or shrink in the same call.
struct FixupSteps {
    bool singleton = false;
    bool flip = false;
    bool shift = false;
    bool shrink = false;

    friend bool operator==(const FixupSteps&, const FixupSteps&) = default;
};

/// Sizes of the five sublists delimited by F <= L <= R <= A <= B <= E.
struct SublistSizes {
    std::size_t front = 0;  // B - F
    std::size_t left = 0;   // R - L
    std::size_t right = 0;  // A - R
    std::size_t accum = 0;  // B - A
    std::size_t back = 0;   // E - B

    /// (|lF| = 0 and |lB| = 0) or (|lL| + |lR| + |lA| + 1 = |lF| - |lB| and |lL| = |lR|)
    bool satisfied() const {
        if (front == 0 && back == 0) return true;
        return front >= back && left + right + accum + 1 == front - back && left == right;
    }

    std::string describe() const {
        return "|lF|=" + std::to_string(front) + " |lL|=" + std::to_string(left)
            + " |lR|=" + std::to_string(right) + " |lA|=" + std::to_string(accum)
            + " |lB|=" + std::to_string(back);
    }
};

namespace detail {

/// Positions of the interior cursors of a deque-based engine, found by a
/// linear walk from the front. Throws InvariantError if any cursor is not
/// reached in the order L, R, A, B before the end.
template <typename Deque, typename C>
SublistSizes locate_sublists(const Deque& d, const C& l, const C& r, const C& a, const C& b,
                             const char* who) {
    const C* marks[] = {&l, &r, &a, &b};
    std::size_t pos[4] = {};
    std::size_t k = 0;
    std::size_t i = 0;
    auto it = d.begin();
    for (;; ++it, ++i) {
        while (k < 4 && *marks[k] == it) pos[k++] = i;
        if (k == 4 || it == d.end()) break;
    }
    if (k != 4) throw InvariantError(std::string(who) + ": cursors out of order");
    const std::size_t n = d.size();
    return SublistSizes{pos[3], pos[1] - pos[0], pos[2] - pos[1], pos[3] - pos[2], n - pos[3]};
}

} // namespace detail
} // namespace swag
