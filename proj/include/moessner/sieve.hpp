#pragma once

#include <vector>

#include "moessner/nat.hpp"
#include "moessner/stream.hpp"

namespace moessner {

/// The fully sieved stream for a given n. Position 1 holds 1 and position
/// k+2 holds the k-th sieved value, which Moessner's theorem pins to
/// (k+2)^(n+2).
struct SieveResult {
    Nat n;
    LazyStream stream;
};

/// Removal periods applied by the sieve for parameter n, in application
/// order: n+2, n+1, ..., 2. Exactly n+1 rounds; the instrument the tests use
/// to count rounds.
std::vector<Nat> sieve_periods(const Nat& n);

/// Runs the full pipeline: starting from the naturals, each round removes
/// every x-th element and re-forms the stream by partial summation, with x
/// walking down sieve_periods(n).
SieveResult moessner_sieve(const Nat& n);

/// Element at 1-indexed position k+2 of moessner_sieve(n). Rebuilds the
/// pipeline per call; reuse one SieveResult when sweeping k for a fixed n.
Nat sieve_value(const Nat& k, const Nat& n);

/// Exact (k+2)^(n+2) by square-and-multiply. Shares no code with the sieve;
/// this is the ground truth the sieve is checked against.
Nat power_oracle(const Nat& k, const Nat& n);

}  // namespace moessner
