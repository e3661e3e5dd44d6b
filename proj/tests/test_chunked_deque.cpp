#include <swag/chunked_deque.hpp>
#include <swag/errors.hpp>

#include <gtest/gtest.h>

#include <deque>
#include <iterator>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace swag {
namespace {

template <typename T>
std::vector<T> contents(const ChunkedDeque<T>& d) {
    return std::vector<T>(d.begin(), d.end());
}

TEST(ChunkedDeque, FifoOrder) {
    ChunkedDeque<char> d;
    for (char c : {'a', 'b', 'c'}) d.push_back(c);
    EXPECT_EQ(contents(d), (std::vector<char>{'a', 'b', 'c'}));
    EXPECT_EQ(d.front(), 'a');
    EXPECT_EQ(d.back(), 'c');
}

TEST(ChunkedDeque, PopFrontToEmpty) {
    ChunkedDeque<char> d;
    d.push_back('a');
    d.pop_front();
    EXPECT_TRUE(d.empty());
    EXPECT_EQ(d.begin(), d.end());
}

TEST(ChunkedDeque, AlphabetPopThree) {
    ChunkedDeque<char> d(4);
    for (char c = 'a'; c <= 'z'; ++c) d.push_back(c);
    for (int i = 0; i < 3; ++i) d.pop_front();
    EXPECT_EQ(d.front(), 'd');
    EXPECT_EQ(d.size(), 23u);
}

TEST(ChunkedDeque, CapacityPlusOneSpansTwoChunks) {
    for (std::size_t cap : {1u, 2u, 7u, 256u}) {
        ChunkedDeque<int> d(cap);
        for (std::size_t i = 0; i < cap + 1; ++i) d.push_back(static_cast<int>(i));
        EXPECT_EQ(d.size(), cap + 1);
        // The tail chunk keeps a free slot, so capacity 1 needs one extra link.
        const std::size_t occupied = 2;
        EXPECT_GE(d.chunk_count(), occupied) << cap;
        EXPECT_LE(d.chunk_count(), occupied + 1) << cap;
        if (cap > 1) {
            EXPECT_EQ(d.chunk_count(), 2u) << cap;
        }
    }
}

TEST(ChunkedDeque, ChunkCountTracksLength) {
    constexpr std::size_t cap = 8;
    ChunkedDeque<int> d(cap);
    for (int i = 0; i < 100; ++i) {
        d.push_back(i);
        // All chunks but the two ends are full.
        EXPECT_LE(d.chunk_count(), d.size() / cap + 2);
    }
    while (!d.empty()) {
        d.pop_front();
        EXPECT_LE(d.chunk_count(), d.size() / cap + 2);
    }
    EXPECT_EQ(d.chunk_count(), 1u);
}

TEST(ChunkedDeque, DefaultCapacity) {
    ChunkedDeque<int> d;
    EXPECT_EQ(d.chunk_capacity(), 256u);
}

TEST(ChunkedDeque, RejectsBadCapacity) {
    EXPECT_THROW(ChunkedDeque<int>(0), ConfigurationError);
    EXPECT_THROW(ChunkedDeque<int>((std::size_t{1} << 31) + 1), ConfigurationError);
}

TEST(ChunkedDeque, ModelEquivalencePushFrontPop) {
    for (std::size_t cap : {1u, 3u, 16u, 256u}) {
        std::mt19937_64 rng(cap);
        ChunkedDeque<std::uint64_t> d(cap);
        std::deque<std::uint64_t> model;
        for (int i = 0; i < 10'000; ++i) {
            if (model.empty() || rng() % 2 == 0) {
                const auto v = rng();
                d.push_back(v);
                model.push_back(v);
            } else {
                d.pop_front();
                model.pop_front();
            }
            ASSERT_EQ(d.size(), model.size());
            if (!model.empty()) {
                ASSERT_EQ(d.front(), model.front());
                ASSERT_EQ(d.back(), model.back());
            }
        }
        EXPECT_EQ(contents(d), std::vector<std::uint64_t>(model.begin(), model.end()));
    }
}

TEST(ChunkedDeque, ModelEquivalenceAllOps) {
    for (std::size_t cap : {1u, 2u, 5u, 64u}) {
        std::mt19937_64 rng(100 + cap);
        ChunkedDeque<std::string> d(cap);
        std::deque<std::string> model;
        for (int i = 0; i < 100'000; ++i) {
            const auto r = rng() % 10;
            if (model.empty() || r < 4) {
                auto v = std::to_string(rng() % 1000);
                d.push_back(v);
                model.push_back(v);
            } else if (r < 7) {
                d.pop_front();
                model.pop_front();
            } else if (r < 9) {
                d.pop_back();
                model.pop_back();
            } else {
                // Writes through a cursor.
                auto it = d.begin();
                std::advance(it, static_cast<long>(rng() % model.size()));
                *it = "w" + *it;
                model[static_cast<std::size_t>(std::distance(d.begin(), it))] = *it;
            }
            ASSERT_EQ(d.size(), model.size());
            if (i % 997 == 0) {
                ASSERT_EQ(contents(d), std::vector<std::string>(model.begin(), model.end()));
            }
        }
        EXPECT_EQ(contents(d), std::vector<std::string>(model.begin(), model.end()));
    }
}

TEST(ChunkedDeque, WalkVisitsLengthElementsBothWays) {
    ChunkedDeque<int> d(3);
    for (int i = 0; i < 20; ++i) d.push_back(i);
    for (int i = 0; i < 4; ++i) d.pop_front();
    std::size_t n = 0;
    for (auto it = d.begin(); it != d.end(); ++it) ++n;
    EXPECT_EQ(n, d.size());
    int expect = 19;
    for (auto it = d.end(); it != d.begin();) EXPECT_EQ(*--it, expect--);
    EXPECT_EQ(expect, 3);
}

TEST(ChunkedDeque, BeginEqualsEndIffEmpty) {
    ChunkedDeque<int> d(2);
    EXPECT_EQ(d.begin(), d.end());
    for (int i = 0; i < 5; ++i) {
        d.push_back(i);
        EXPECT_NE(d.begin(), d.end());
    }
    for (int i = 0; i < 5; ++i) d.pop_back();
    EXPECT_EQ(d.begin(), d.end());
}

TEST(ChunkedDeque, CursorStableAcrossPushes) {
    ChunkedDeque<int> d(4);
    for (int i = 0; i < 10; ++i) d.push_back(i);
    auto it = std::next(d.begin(), 7);
    const int* addr = &*it;
    for (int i = 0; i < 1000; ++i) d.push_back(100 + i);
    EXPECT_EQ(*it, 7);
    EXPECT_EQ(&*it, addr);
    // Also stable while other elements leave from the front.
    for (int i = 0; i < 7; ++i) d.pop_front();
    EXPECT_EQ(*it, 7);
    EXPECT_EQ(it, d.begin());
}

TEST(ChunkedDeque, EndCursorAdvancesOnPush) {
    ChunkedDeque<int> d(2);
    auto e = d.end();
    d.push_back(1);
    // The old end now addresses the new element.
    EXPECT_EQ(*e, 1);
    EXPECT_EQ(std::next(e), d.end());
}

TEST(ChunkedDeque, CursorOrderingInTestBuilds) {
    ChunkedDeque<int> d(3);
    for (int i = 0; i < 10; ++i) d.push_back(i);
    d.pop_front();
    auto a = std::next(d.begin(), 2);
    auto b = std::next(d.begin(), 6);
    EXPECT_TRUE(a < b);
    EXPECT_TRUE(a <= a);
    EXPECT_FALSE(b < a);
    EXPECT_EQ(b - a, 4);
    EXPECT_EQ(a.index(), 2u);
    EXPECT_EQ(d.end().index(), d.size());
}

TEST(ChunkedDeque, ConstCursorFromMutable) {
    ChunkedDeque<int> d;
    d.push_back(5);
    ChunkedDeque<int>::ConstCursor c = d.begin();
    EXPECT_EQ(*c, 5);
    EXPECT_TRUE(c == d.begin());
}

TEST(ChunkedDeque, PreconditionErrors) {
    ChunkedDeque<int> d(2);
    EXPECT_THROW(d.pop_front(), PreconditionError);
    EXPECT_THROW(d.pop_back(), PreconditionError);
    EXPECT_THROW((void)d.front(), PreconditionError);
    EXPECT_THROW((void)d.back(), PreconditionError);
    EXPECT_THROW((void)*d.begin(), PreconditionError);
    auto e = d.end();
    EXPECT_THROW(++e, PreconditionError);
    auto b = d.begin();
    EXPECT_THROW(--b, PreconditionError);
    d.push_back(1);
    d.push_back(2);
    d.push_back(3);
    d.pop_front();
    auto first = d.begin();
    EXPECT_THROW(--first, PreconditionError);
    auto last = d.end();
    EXPECT_THROW(++last, PreconditionError);
    EXPECT_THROW((void)*d.end(), PreconditionError);
}

TEST(ChunkedDeque, MoveKeepsCursorsValid) {
    ChunkedDeque<int> d(4);
    for (int i = 0; i < 9; ++i) d.push_back(i);
    auto it = std::next(d.begin(), 5);
    ChunkedDeque<int> moved(std::move(d));
    EXPECT_EQ(*it, 5);
    moved.pop_front();
    EXPECT_EQ(std::distance(moved.begin(), it), 4);
    ChunkedDeque<int> assigned(2);
    assigned.push_back(42);
    assigned = std::move(moved);
    EXPECT_EQ(*it, 5);
    EXPECT_EQ(assigned.size(), 8u);
}

TEST(ChunkedDeque, DestroysElementsExactlyOnce) {
    auto token = std::make_shared<int>(0);
    {
        ChunkedDeque<std::shared_ptr<int>> d(3);
        for (int i = 0; i < 10; ++i) d.push_back(token);
        EXPECT_EQ(token.use_count(), 11);
        d.pop_front();
        d.pop_back();
        EXPECT_EQ(token.use_count(), 9);
    }
    EXPECT_EQ(token.use_count(), 1);
}

TEST(ChunkedDeque, SteadySlidingDoesNotGrowChunks) {
    ChunkedDeque<int> d(8);
    for (int i = 0; i < 100; ++i) d.push_back(i);
    const auto chunks = d.chunk_count();
    for (int i = 0; i < 100'000; ++i) {
        d.pop_front();
        d.push_back(i);
        ASSERT_LE(d.chunk_count(), chunks + 1);
    }
}

} // namespace
} // namespace swag
