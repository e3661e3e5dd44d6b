#include "support.hpp"

#include <swag/swag.hpp>

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace swag {
namespace {

using MC = MaxCount<>;
using MCM = MaxCountMonoid<>;

std::vector<trace::Op<MC>> worked_trace() {
    const MCM m;
    std::vector<trace::Op<MC>> ops;
    for (std::int64_t v : {4, 5, 3, 4, 0, 4, 4}) ops.emplace_back(trace::Insert<MC>{m.lift(v)});
    ops.emplace_back(trace::Evict{});
    ops.emplace_back(trace::Query{});
    ops.emplace_back(trace::Evict{});
    ops.emplace_back(trace::Query{});
    ops.emplace_back(trace::Insert<MC>{m.lift(2)});
    ops.emplace_back(trace::Query{});
    ops.emplace_back(trace::Insert<MC>{m.lift(6)});
    ops.emplace_back(trace::Query{});
    return ops;
}

TEST(RecalcOracle, WorkedWindows) {
    const MCM m;
    RecalcOracle<MCM> o(m);
    EXPECT_EQ(o.query(), m.identity());
    for (std::int64_t v : {4, 5, 3, 4, 0, 4, 4}) o.insert(m.lift(v));
    EXPECT_EQ(o.query(), (MC{5, 1}));
    o.evict();
    o.evict();
    EXPECT_EQ(o.query(), (MC{4, 3}));
    EXPECT_EQ(o.size(), 5u);
}

TEST(RecalcOracle, QueryCostsWindowSizeCombines) {
    CombineTally tally;
    RecalcOracle<CountingMonoid<SumMonoid>> o(CountingMonoid<SumMonoid>(SumMonoid{}, tally));
    EXPECT_EQ(combine_delta(tally, [&] { (void)o.query(); }), 0u);
    for (int i = 0; i < 9; ++i) {
        EXPECT_EQ(combine_delta(tally, [&] { o.insert(i); }), 0u);
    }
    EXPECT_EQ(combine_delta(tally, [&] { (void)o.query(); }), 9u);
    EXPECT_EQ(combine_delta(tally, [&] { o.evict(); }), 0u);
}

TEST(RecalcOracle, EvictOnEmptyThrows) {
    RecalcOracle<SumMonoid> o;
    EXPECT_THROW(o.evict(), PreconditionError);
}

template <typename E>
class EngineContract : public ::testing::Test {};

template <template <Monoid> class EngineT>
struct Family {
    template <Monoid M>
    using type = EngineT<M>;
};

using Engines = ::testing::Types<Family<RecalcOracle>, Family<TwoStacks>, Family<TwoStacksLite>,
                                 Family<Daba>, Family<DabaLite>>;
TYPED_TEST_SUITE(EngineContract, Engines);

TYPED_TEST(EngineContract, WorkedTrace) {
    typename TypeParam::template type<MCM> engine;
    const auto out = run_trace(engine, worked_trace());
    ASSERT_EQ(out.size(), 4u);
    EXPECT_EQ(out[0], (MC{5, 1}));
    EXPECT_EQ(out[1], (MC{4, 3}));
    EXPECT_EQ(out[2], (MC{4, 3}));
    EXPECT_EQ(out[3], (MC{6, 1}));
    std::vector<std::uint64_t> lowered;
    for (const auto& a : out) lowered.push_back(MCM{}.lower(a));
    EXPECT_EQ(lowered, (std::vector<std::uint64_t>{1, 3, 3, 1}));
}

TYPED_TEST(EngineContract, EmptyQueryIsIdentity) {
    typename TypeParam::template type<ConcatMonoid> e;
    EXPECT_EQ(e.query(), "");
    e.insert("a");
    e.evict();
    EXPECT_EQ(e.query(), "");
    EXPECT_EQ(e.size(), 0u);
}

TYPED_TEST(EngineContract, EvictOnEmptyThrows) {
    typename TypeParam::template type<SumMonoid> e;
    EXPECT_THROW(e.evict(), PreconditionError);
    e.insert(1);
    e.evict();
    EXPECT_THROW(e.evict(), PreconditionError);
    // Still usable afterwards.
    e.insert(2);
    EXPECT_EQ(e.query(), 2);
}

TYPED_TEST(EngineContract, InsertsThenOneQueryMatchesOracle) {
    typename TypeParam::template type<ConcatMonoid> e;
    RecalcOracle<ConcatMonoid> o;
    for (char c = 'a'; c <= 'p'; ++c) {
        e.insert(std::string(1, c));
        o.insert(std::string(1, c));
    }
    EXPECT_EQ(e.query(), o.query());
    EXPECT_EQ(e.query(), "abcdefghijklmnop");
}

TYPED_TEST(EngineContract, FifoOrderUnderNonCommutativeMonoid) {
    typename TypeParam::template type<ConcatMonoid> e;
    std::string expect;
    for (int i = 0; i < 200; ++i) {
        const std::string v(1, static_cast<char>('a' + i % 26));
        e.insert(v);
        expect += v;
        if (i % 3 == 2) {
            e.evict();
            expect.erase(0, 1);
        }
        ASSERT_EQ(e.query(), expect) << i;
    }
}

TYPED_TEST(EngineContract, QueryIsReadOnly) {
    const SumMonoid m;
    typename TypeParam::template type<SumMonoid> a;
    typename TypeParam::template type<SumMonoid> b;
    const auto ops = testing::random_trace(m, 77, 5'000);
    std::vector<std::int64_t> with_extra;
    for (const auto& op : ops) {
        if (const auto* ins = std::get_if<trace::Insert<std::int64_t>>(&op)) {
            a.insert(ins->value);
        } else if (std::holds_alternative<trace::Evict>(op)) {
            a.evict();
        } else {
            (void)a.query();
            (void)a.query();
            with_extra.push_back(a.query());
        }
    }
    EXPECT_EQ(run_trace(b, ops), with_extra);
}

TYPED_TEST(EngineContract, RandomOpsMatchOracle) {
    const MCM m;
    typename TypeParam::template type<MCM> e;
    RecalcOracle<MCM> o;
    const auto ops = testing::random_trace(m, 5, 100'000);
    EXPECT_EQ(run_trace(e, ops), run_trace(o, ops));
}

TYPED_TEST(EngineContract, MoveConstructedEngineKeepsWorking) {
    typename TypeParam::template type<ConcatMonoid> e;
    for (char c : std::string("abcdefg")) e.insert(std::string(1, c));
    e.evict();
    auto moved = std::move(e);
    EXPECT_EQ(moved.query(), "bcdefg");
    moved.insert("h");
    moved.evict();
    EXPECT_EQ(moved.query(), "cdefgh");
}

TYPED_TEST(EngineContract, SatisfiesEngineConcept) {
    static_assert(SwagEngine<typename TypeParam::template type<SumMonoid>>);
    static_assert(SwagEngine<typename TypeParam::template type<CountingMonoid<BloomMonoid>>>);
    SUCCEED();
}

TEST(CombineDelta, TwoStacksInsertAndQueryCostOne) {
    CombineTally tally;
    TwoStacks<CountingMonoid<SumMonoid>> e(CountingMonoid<SumMonoid>(SumMonoid{}, tally));
    EXPECT_EQ(combine_delta(tally, [&] { (void)e.query(); }), 1u);
    for (int i = 0; i < 100; ++i) {
        ASSERT_EQ(combine_delta(tally, [&] { e.insert(i); }), 1u);
        ASSERT_EQ(combine_delta(tally, [&] { (void)e.query(); }), 1u);
    }
}

TEST(Fold, LeftToRight) {
    const ConcatMonoid m;
    const std::vector<std::string> xs{"x", "y", "z"};
    EXPECT_EQ(fold(m, std::span<const std::string>(xs)), "xyz");
    EXPECT_EQ(fold(m, std::span<const std::string>()), "");
}

TEST(TimestampedWindow, TracksOldestAndYoungest) {
    TimestampedWindow<Daba<SumMonoid>> w{Daba<SumMonoid>{}};
    w.insert(10, 1);
    w.insert(10, 2);
    w.insert(15, 3);
    EXPECT_EQ(w.oldest(), 10);
    EXPECT_EQ(w.youngest(), 15);
    EXPECT_EQ(w.query(), 6);
    EXPECT_EQ(w.evict_older_than(11), 2u);
    EXPECT_EQ(w.oldest(), 15);
    EXPECT_EQ(w.query(), 3);
    EXPECT_EQ(w.evict_older_than(15), 0u);
    EXPECT_EQ(w.evict_older_than(100), 1u);
    EXPECT_EQ(w.size(), 0u);
    EXPECT_EQ(w.query(), 0);
}

TEST(TimestampedWindow, RejectsTimestampsGoingBackwards) {
    TimestampedWindow<TwoStacksLite<SumMonoid>> w{TwoStacksLite<SumMonoid>{}};
    w.insert(5, 1);
    EXPECT_THROW(w.insert(4, 1), PreconditionError);
    EXPECT_EQ(w.size(), 1u);
    EXPECT_EQ(w.evict_older_than(6), 1u);
    EXPECT_THROW(w.evict(), PreconditionError);
}

} // namespace
} // namespace swag
