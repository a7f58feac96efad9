#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moessner/nat.hpp"
#include "moessner/sieve.hpp"
#include "moessner/triangle.hpp"

namespace moessner {

/// Closed registry of the checkable identities. Every id fixes one equation
/// between two independently computed sides; the verifier instantiates it
/// over finite grids and compares exactly.
enum class IdentityId {
    I1,   // sieve_value(k,n) = power_oracle(k,n)
    I2,   // sieve_value(k,n) = a_term(k,n) + blocks_total(k,n)
    I3,   // plain_diagonal_total(n) = plain_entry(0,n+1) + plain_triangle_total(n)
    I4,   // sieve_value(0,n+1) = 2 * sieve_value(0,n)
    I5,   // sieve_value(k+1,0) = sieve_value(k,0) + 2(k+2) + 1
    I6,   // sieve_value(k+1,n) - sieve_value(k,n) = (n+2) + block_triangle_total(k+1,n)
    I7,   // sieve_value(k,n+1) - sieve_value(k,n) = sieve_value(k,n) * (k+1)
    I8,   // block_triangle_total(k+1,n+1) - block_triangle_total(k+1,n)
          //   = block_diagonal_total(k+1,n) + growth_triangle_total(k+1,n)
    I9,   // block_diagonal_total(k+1,n) = block_entry(k+1,0,n+1,n) + blocks_total(k+1,n)
    I10,  // block_diagonal_total(k+1,n) = sieve_value(k+1,n) - 1
    I11,  // entry_growth(i,m+1,x,n) = block_entry(i,m,x,n) * i
    I12,  // growth_triangle_total(k+1,n) = ((n+2) + block_triangle_total(k+1,n)) * (k+1)
    I13,  // sum_{j<i} block_entry(j,m+1,n-m,n)
          //   = sum_{a<=n-m} sum_{u<i} block_entry(u,m,a,n) * (i-u)
    I14,  // (n+3) + block_triangle_total(k+1,n+1) + sieve_value(k,n)*(k+1)
          //   = (n+2) + block_triangle_total(k+1,n) + sieve_value(k+1,n)*(k+2)
};

struct IdentityInfo {
    IdentityId id;
    std::string_view name;     // wire name, "I1".."I14"
    std::string_view summary;
    std::string_view arity;    // quantified indices in iteration order, e.g. "kn", "imxn"
};

const std::array<IdentityInfo, 14>& identity_registry();
const IdentityInfo& identity_info(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view name);

/// Inclusive grid bounds. The optional bounds only matter for identities
/// quantifying over m, x, or i; unset they default to m_max = x_max = n_max
/// and i_max = k_max + 1.
struct GridRange {
    Nat k_max;
    Nat n_max;
    std::optional<Nat> m_max;
    std::optional<Nat> x_max;
    std::optional<Nat> i_max;
};

/// Grid an identity is checked on when the caller does not pick one:
/// k <= 50, n <= 10 for the theorem check I1, k <= 8, n <= 8 elsewhere.
GridRange default_grid(IdentityId id);

/// One point of an identity's grid: the quantified indices, in arity order.
struct CellIndex {
    std::vector<std::pair<char, Nat>> coords;

    CellIndex() = default;
    CellIndex(std::initializer_list<std::pair<char, Nat>> init) : coords(init) {}

    const Nat& at(char name) const;
    std::string str() const;  // "k=0 n=3"
};

enum class CellOutcome { pass, fail, skip };

/// Exact left and right side of one identity at one cell. pass means
/// lhs == rhs; skip means the cell lies outside the identity's domain and
/// carries no sides.
struct IdentityReport {
    IdentityId id;
    CellIndex cell;
    Nat lhs;
    Nat rhs;
    CellOutcome outcome;
    std::string note;  // skip reason or evaluation note

    bool passed() const { return outcome == CellOutcome::pass; }
};

/// Evaluates identities over grids against one shared triangle model and a
/// per-n cache of sieved streams. Deterministic: cells are visited in
/// lexicographic order of the identity's arity, reports come back in visit
/// order.
class IdentityVerifier {
public:
    IdentityVerifier();
    /// Injects the model the identities are evaluated against; the test
    /// suite uses this to prove broken recurrences are caught.
    explicit IdentityVerifier(std::unique_ptr<TriangleModel> model);

    /// Single cell. Throws std::domain_error when the cell is outside the
    /// identity's domain, naming the violated bound.
    IdentityReport verify_identity(IdentityId id, const CellIndex& cell);

    /// One report per (identity, cell), skip reports for out-of-domain
    /// cells. With fail_fast, stops after the first failing report.
    std::vector<IdentityReport> verify_grid(std::span<const IdentityId> ids,
                                            const GridRange& grid, bool fail_fast = false);

private:
    Nat sieved(const Nat& k, const Nat& n);
    IdentityReport evaluate(IdentityId id, const CellIndex& cell);

    std::unique_ptr<TriangleModel> model_;
    std::map<Nat, SieveResult> sieve_cache_;
};

}  // namespace moessner
