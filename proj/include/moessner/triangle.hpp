#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "moessner/nat.hpp"

namespace moessner {

/// Which staircase a dump refers to: the plain triangle (entries f), a
/// numbered block triangle (entries g for one block), or the growth
/// triangle (entries h, the per-entry increase when n steps up).
enum class TriangleKind { plain, block, growth };

/// A materialized staircase: rows top to bottom, each row one entry shorter
/// than the one above. The value of the triangle is the sum of all entries.
struct Staircase {
    TriangleKind kind;
    std::optional<Nat> block;  // set for block and growth kinds
    Nat n;
    std::vector<std::vector<Nat>> rows;

    std::vector<Nat> row_sums() const;
    Nat total() const;
};

/// The surviving seed value, the per-block triangle totals, and their sum.
/// `total` is a_term + blocks_total by construction; Moessner's sieve makes
/// it equal the sieved value, which callers check separately.
struct ValueDecomposition {
    Nat k;
    Nat n;
    Nat a_term;
    std::vector<Nat> block_totals;  // block 0 through block k
    Nat blocks_total;
    Nat total;
};

/// Recursive triangle entries and their staircase/diagonal aggregates, with
/// memoization keyed on full index tuples. Externally pure: memoized and
/// fresh evaluations agree everywhere.
///
/// Entry recurrences:
///   plain_entry(0, x)   = x + 1
///   plain_entry(m+1, x) = sum over a = 0..x of plain_entry(m, a)
///   block_entry(i, 0, x, n)   = i*(n+2) + x + 1
///   block_entry(i, m+1, x, n) = sum over a = 0..x of block_entry(i, m, a, n)
///                             + cross_block_sum(i, m, n)
/// where cross_block_sum adds the first n-m rows of every earlier block
/// (empty for block 0, so block 0 is exactly the plain triangle).
///
/// The two leaf terms are virtual seams so the test suite can inject broken
/// variants and confirm the identity checks reject them.
class TriangleModel {
public:
    TriangleModel() = default;
    virtual ~TriangleModel() = default;

    TriangleModel(const TriangleModel&) = delete;
    TriangleModel& operator=(const TriangleModel&) = delete;

    /// f. Defined for all m, x.
    Nat plain_entry(const Nat& m, const Nat& x);

    /// g. For blocks i >= 1 the recursion is only defined down to depth
    /// m <= n+1; deeper rows would need a negative cross-block row count and
    /// are rejected.
    Nat block_entry(const Nat& i, const Nat& m, const Nat& x, const Nat& n);

    /// h: how much block_entry(i, m, x, .) grows when n steps to n+1.
    Nat entry_growth(const Nat& i, const Nat& m, const Nat& x, const Nat& n);

    /// The seed term (k+1)(n+2)+1.
    Nat a_term(const Nat& k, const Nat& n) const;

    /// B: total of the plain staircase for n (rows m = 0..n, row m holding
    /// offsets 0..n-m).
    Nat plain_triangle_total(const Nat& n);

    /// Delta: total of block i's staircase for n, same shape as B.
    Nat block_triangle_total(const Nat& i, const Nat& n);

    /// Sum of block_triangle_total over blocks 0..k.
    Nat blocks_total(const Nat& k, const Nat& n);

    /// V: the extra diagonal the plain staircase gains when n steps up.
    Nat plain_diagonal_total(const Nat& n);

    /// Generalized V for block i >= 1.
    Nat block_diagonal_total(const Nat& i, const Nat& n);

    /// H: total of the growth staircase for block i >= 1 (rows m = 0..n+1,
    /// row m holding offsets 0..n+1-m).
    Nat growth_triangle_total(const Nat& i, const Nat& n);

    /// a_term(k, n) plus every block triangle through block k.
    ValueDecomposition decompose(const Nat& k, const Nat& n);

    /// Materializes a staircase for display. block index required for block
    /// and growth kinds; growth additionally requires block >= 1.
    Staircase staircase(TriangleKind kind, const std::optional<Nat>& block, const Nat& n);

protected:
    virtual Nat base_row_value(const Nat& x) const;
    virtual Nat cross_block_sum(const Nat& i, const Nat& m, const Nat& n);

private:
    std::map<std::pair<Nat, Nat>, Nat> plain_memo_;
    std::map<std::tuple<Nat, Nat, Nat, Nat>, Nat> block_memo_;
    std::map<std::tuple<Nat, Nat, Nat>, Nat> cross_memo_;
};

}  // namespace moessner
