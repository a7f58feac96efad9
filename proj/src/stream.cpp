#include "moessner/stream.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace moessner {

namespace detail {

struct StreamCell {
    Nat head;
    LazyStream::Producer make_rest;  // cleared once forced
    std::optional<LazyStream> rest;

    StreamCell(Nat h, LazyStream::Producer p) : head(std::move(h)), make_rest(std::move(p)) {}
};

}  // namespace detail

LazyStream::LazyStream(Nat head, Producer rest)
    : cell_(std::make_shared<detail::StreamCell>(std::move(head), std::move(rest))) {}

LazyStream::~LazyStream() {
    // Unlink the forced chain iteratively while this is the sole owner.
    // Destroying a frontier cell's pending producer may release upstream
    // streams, but that nesting is bounded by pipeline depth, not length.
    std::shared_ptr<detail::StreamCell> current = std::move(cell_);
    while (current && current.use_count() == 1) {
        std::shared_ptr<detail::StreamCell> next;
        if (current->rest) {
            next = std::move(current->rest->cell_);
        }
        current = std::move(next);
    }
}

const Nat& LazyStream::head() const {
    return cell_->head;
}

LazyStream LazyStream::tail() const {
    detail::StreamCell& cell = *cell_;
    if (!cell.rest) {
        cell.rest.emplace(cell.make_rest());
        cell.make_rest = nullptr;  // release captured upstream state
    }
    return *cell.rest;
}

namespace {

LazyStream naturals_from(const Nat& value) {
    return LazyStream(value, [value] { return naturals_from(value + 1); });
}

// keep_left: elements still to emit before the next removal; 1 <= keep_left < period.
LazyStream drop_from(LazyStream source, const Nat& keep_left, const Nat& period) {
    Nat head = source.head();
    if (keep_left == Nat(1)) {
        return LazyStream(std::move(head), [source, period] {
            return drop_from(source.tail().tail(), period - 1, period);
        });
    }
    return LazyStream(std::move(head), [source, keep_left, period] {
        return drop_from(source.tail(), keep_left - 1, period);
    });
}

LazyStream sums_from(LazyStream source, const Nat& acc) {
    Nat total = acc + source.head();
    return LazyStream(total, [source, total] { return sums_from(source.tail(), total); });
}

}  // namespace

LazyStream naturals() {
    return naturals_from(Nat(1));
}

LazyStream drop_every(LazyStream source, const Nat& period) {
    if (period < Nat(2)) {
        throw std::invalid_argument("drop_every: period must be at least 2, got " +
                                    period.str());
    }
    return drop_from(std::move(source), period - 1, period);
}

LazyStream partial_sums(LazyStream source) {
    return sums_from(std::move(source), Nat(0));
}

std::vector<Nat> take(LazyStream source, std::size_t count) {
    std::vector<Nat> prefix;
    prefix.reserve(count);
    LazyStream cursor = std::move(source);
    for (std::size_t produced = 0; produced < count; ++produced) {
        prefix.push_back(cursor.head());
        if (produced + 1 < count) {
            cursor = cursor.tail();
        }
    }
    return prefix;
}

}  // namespace moessner
