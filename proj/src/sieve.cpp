#include "moessner/sieve.hpp"

#include <utility>

namespace moessner {

std::vector<Nat> sieve_periods(const Nat& n) {
    std::vector<Nat> periods;
    for (Nat x = n + 2; x >= Nat(2); x -= 1) {
        periods.push_back(x);
    }
    return periods;
}

SieveResult moessner_sieve(const Nat& n) {
    LazyStream stream = naturals();
    for (const Nat& period : sieve_periods(n)) {
        stream = partial_sums(drop_every(std::move(stream), period));
    }
    return SieveResult{n, std::move(stream)};
}

Nat sieve_value(const Nat& k, const Nat& n) {
    LazyStream cursor = moessner_sieve(n).stream;
    for (Nat steps(0); steps < k + 1; ++steps) {  // walk to position k+2
        cursor = cursor.tail();
    }
    return cursor.head();
}

Nat power_oracle(const Nat& k, const Nat& n) {
    return pow(k + 2, n + 2);
}

}  // namespace moessner
