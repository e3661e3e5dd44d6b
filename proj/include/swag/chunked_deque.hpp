#pragma once

#include <swag/errors.hpp>

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>

namespace swag {

/// A double-ended queue built from a doubly-linked list of fixed-capacity
/// chunks.
///
/// push_back, pop_front and pop_back run in worst-case O(1): there is no
/// chunk directory that would need to grow, and no element is ever moved
/// once constructed. Cursors (bidirectional iterators) therefore stay valid
/// for as long as the element they address survives, and the end cursor is
/// the slot the next push_back will fill. Pushing turns a cursor equal to
/// end() into a cursor addressing the new element.
///
/// The tail chunk always has at least one free slot: when a push fills it,
/// the next chunk is linked eagerly. One emptied chunk is kept as a spare to
/// avoid allocator churn when a window slides in steady state.
///
/// The control block lives on the heap, so moving a deque keeps all of its
/// cursors valid.
template <typename T>
class ChunkedDeque {
    struct Chunk {
        Chunk* prev = nullptr;
        Chunk* next = nullptr;
        T* slots = nullptr;
    };

    struct State {
        Chunk* head = nullptr;
        Chunk* tail = nullptr;
        Chunk* spare = nullptr;
        std::uint32_t head_off = 0;
        std::uint32_t tail_off = 0;
        std::uint32_t capacity = 0;
        std::size_t size = 0;
        std::size_t chunks = 0;
    };

    template <bool Const>
    class BasicCursor {
        friend class ChunkedDeque;
        friend class BasicCursor<!Const>;

    public:
        using iterator_category = std::bidirectional_iterator_tag;
        using value_type = T;
        using difference_type = std::ptrdiff_t;
        using reference = std::conditional_t<Const, const T&, T&>;
        using pointer = std::conditional_t<Const, const T*, T*>;

        BasicCursor() = default;
        BasicCursor(const BasicCursor&) = default;
        BasicCursor& operator=(const BasicCursor&) = default;

        BasicCursor(const BasicCursor<false>& o) requires Const  // NOLINT(google-explicit-constructor)
            : chunk_(o.chunk_), offset_(o.offset_), state_(o.state_) {}

        reference operator*() const {
            if (at_end()) throw PreconditionError("dereferencing the end cursor");
            return chunk_->slots[offset_];
        }
        pointer operator->() const { return &**this; }

        BasicCursor& operator++() {
            if (at_end()) throw PreconditionError("incrementing the end cursor");
            if (++offset_ == state_->capacity) {
                chunk_ = chunk_->next;
                offset_ = 0;
            }
            return *this;
        }
        BasicCursor operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }

        BasicCursor& operator--() {
            if (chunk_ == state_->head && offset_ == state_->head_off) {
                throw PreconditionError("decrementing the begin cursor");
            }
            if (offset_ == 0) {
                chunk_ = chunk_->prev;
                offset_ = state_->capacity - 1;
            } else {
                --offset_;
            }
            return *this;
        }
        BasicCursor operator--(int) {
            auto old = *this;
            --*this;
            return old;
        }

        friend bool operator==(const BasicCursor& a, const BasicCursor& b) {
            return a.chunk_ == b.chunk_ && a.offset_ == b.offset_;
        }

#if defined(SWAG_CURSOR_ORDERING) || !defined(NDEBUG)
        // Linear-time; for invariant checks only.
        std::size_t index() const {
            std::size_t i = 0;
            for (BasicCursor c(state_->head, state_->head_off, state_); c != *this; ++c) ++i;
            return i;
        }
        friend bool operator<(const BasicCursor& a, const BasicCursor& b) {
            return a.index() < b.index();
        }
        friend bool operator<=(const BasicCursor& a, const BasicCursor& b) {
            return a.index() <= b.index();
        }
        friend std::ptrdiff_t operator-(const BasicCursor& a, const BasicCursor& b) {
            return static_cast<std::ptrdiff_t>(a.index()) - static_cast<std::ptrdiff_t>(b.index());
        }
#endif

    private:
        BasicCursor(Chunk* c, std::uint32_t off, const State* s)
            : chunk_(c), offset_(off), state_(s) {}

        bool at_end() const { return chunk_ == state_->tail && offset_ == state_->tail_off; }

        Chunk* chunk_ = nullptr;
        std::uint32_t offset_ = 0;
        const State* state_ = nullptr;
    };

public:
    using value_type = T;
    using size_type = std::size_t;
    using Cursor = BasicCursor<false>;
    using ConstCursor = BasicCursor<true>;
    using iterator = Cursor;
    using const_iterator = ConstCursor;

    static constexpr std::size_t kDefaultChunkCapacity = 256;

    explicit ChunkedDeque(std::size_t chunk_capacity = kDefaultChunkCapacity)
        : state_(std::make_unique<State>()) {
        if (chunk_capacity == 0 || chunk_capacity > (std::size_t{1} << 31)) {
            throw ConfigurationError("chunk capacity must be in [1, 2^31]");
        }
        state_->capacity = static_cast<std::uint32_t>(chunk_capacity);
        state_->head = state_->tail = allocate_chunk();
        state_->chunks = 1;
    }

    ChunkedDeque(const ChunkedDeque&) = delete;
    ChunkedDeque& operator=(const ChunkedDeque&) = delete;

    // A moved-from deque may only be destroyed or assigned to.
    ChunkedDeque(ChunkedDeque&&) noexcept = default;
    ChunkedDeque& operator=(ChunkedDeque&& o) noexcept {
        if (this != &o) {
            release_all();
            state_ = std::move(o.state_);
        }
        return *this;
    }

    ~ChunkedDeque() { release_all(); }

    std::size_t size() const { return state_->size; }
    bool empty() const { return state_->size == 0; }
    std::size_t chunk_capacity() const { return state_->capacity; }
    /// Chunks currently linked into the deque (the spare is not counted).
    std::size_t chunk_count() const { return state_->chunks; }

    Cursor begin() { return Cursor(state_->head, state_->head_off, state_.get()); }
    Cursor end() { return Cursor(state_->tail, state_->tail_off, state_.get()); }
    ConstCursor begin() const { return ConstCursor(state_->head, state_->head_off, state_.get()); }
    ConstCursor end() const { return ConstCursor(state_->tail, state_->tail_off, state_.get()); }

    T& front() {
        require_nonempty("front");
        return state_->head->slots[state_->head_off];
    }
    const T& front() const {
        require_nonempty("front");
        return state_->head->slots[state_->head_off];
    }
    T& back() {
        require_nonempty("back");
        return *std::prev(end());
    }
    const T& back() const {
        require_nonempty("back");
        return *std::prev(end());
    }

    void push_back(const T& v) { emplace_back(v); }
    void push_back(T&& v) { emplace_back(std::move(v)); }

    template <typename... Args>
    T& emplace_back(Args&&... args) {
        State& s = *state_;
        Chunk* fresh = nullptr;
        if (s.tail_off + 1 == s.capacity) fresh = acquire_chunk();
        T* slot = s.tail->slots + s.tail_off;
        try {
            std::construct_at(slot, std::forward<Args>(args)...);
        } catch (...) {
            if (fresh) release_chunk(fresh);
            throw;
        }
        if (fresh) {
            fresh->prev = s.tail;
            s.tail->next = fresh;
            s.tail = fresh;
            s.tail_off = 0;
            ++s.chunks;
        } else {
            ++s.tail_off;
        }
        ++s.size;
        return *slot;
    }

    void pop_front() {
        require_nonempty("pop_front");
        State& s = *state_;
        std::destroy_at(s.head->slots + s.head_off);
        if (++s.head_off == s.capacity) {
            Chunk* old = s.head;
            s.head = old->next;
            s.head->prev = nullptr;
            s.head_off = 0;
            --s.chunks;
            release_chunk(old);
        }
        --s.size;
    }

    void pop_back() {
        require_nonempty("pop_back");
        State& s = *state_;
        if (s.tail_off == 0) {
            Chunk* old = s.tail;
            s.tail = old->prev;
            s.tail->next = nullptr;
            s.tail_off = s.capacity - 1;
            --s.chunks;
            release_chunk(old);
        } else {
            --s.tail_off;
        }
        std::destroy_at(s.tail->slots + s.tail_off);
        --s.size;
    }

private:
    void require_nonempty(const char* what) const {
        if (state_->size == 0) {
            throw PreconditionError(std::string(what) + " on an empty deque");
        }
    }

    Chunk* allocate_chunk() {
        auto chunk = std::make_unique<Chunk>();
        chunk->slots = std::allocator<T>{}.allocate(state_->capacity);
        return chunk.release();
    }

    void free_chunk(Chunk* c) noexcept {
        std::allocator<T>{}.deallocate(c->slots, state_->capacity);
        delete c;
    }

    Chunk* acquire_chunk() {
        if (Chunk* c = std::exchange(state_->spare, nullptr)) return c;
        return allocate_chunk();
    }

    void release_chunk(Chunk* c) noexcept {
        c->prev = c->next = nullptr;
        if (state_->spare == nullptr) {
            state_->spare = c;
        } else {
            free_chunk(c);
        }
    }

    void release_all() noexcept {
        if (!state_) return;
        for (auto it = begin(), e = end(); it != e; ++it) std::destroy_at(&*it);
        for (Chunk* c = state_->head; c != nullptr;) {
            Chunk* next = c->next;
            free_chunk(c);
            c = next;
        }
        if (state_->spare) free_chunk(state_->spare);
        state_.reset();
    }

    std::unique_ptr<State> state_;
};

} // namespace swag
