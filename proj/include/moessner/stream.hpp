#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "moessner/nat.hpp"

namespace moessner {

namespace detail {
struct StreamCell;
}

/// Unbounded lazy sequence of Nat, 1-indexed. A stream is a head plus a
/// memoized producer for the rest: asking for a prefix of length L forces
/// exactly the cells needed for L elements, and asking again re-reads the
/// cached cells instead of re-running producers.
///
/// Streams are conceptually infinite; `take` is the only terminating
/// consumer. One logical consumer per stream value at a time.
class LazyStream {
public:
    using Producer = std::function<LazyStream()>;

    LazyStream(Nat head, Producer rest);

    LazyStream(const LazyStream&) = default;
    LazyStream& operator=(const LazyStream&) = default;
    LazyStream(LazyStream&&) noexcept = default;
    LazyStream& operator=(LazyStream&&) noexcept = default;
    ~LazyStream();  // iterative teardown, long forced chains must not recurse

    const Nat& head() const;

    /// Forces and memoizes the next cell.
    LazyStream tail() const;

private:
    std::shared_ptr<detail::StreamCell> cell_;
};

/// 1, 2, 3, 4, ...
LazyStream naturals();

/// Removes every period-th element (1-indexed): keeps positions p with
/// p mod period != 0. Requires period >= 2; period 1 would delete everything.
LazyStream drop_every(LazyStream source, const Nat& period);

/// Output position p holds the sum of input positions 1..p.
LazyStream partial_sums(LazyStream source);

/// First `count` elements; forces no more than `count` cells of `source`.
std::vector<Nat> take(LazyStream source, std::size_t count);

}  // namespace moessner
