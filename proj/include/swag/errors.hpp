#pragma once

#include <stdexcept>
#include <string>

namespace swag {

/// Raised when an operation is called outside its contract, e.g. evict() on
/// an empty window or stepping a cursor past the end of its deque.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when two monoid values with incompatible configuration meet
/// (Bloom filters of different width or hash count) or a monoid is built
/// with an unusable configuration.
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the O(n) verify_invariants() scans used in tests.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace swag
