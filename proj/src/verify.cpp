#include "moessner/verify.hpp"

#include <stdexcept>

namespace moessner {

namespace {

constexpr std::array<IdentityInfo, 14> kRegistry{{
    {IdentityId::I1, "I1", "sieve value equals the exponentiation oracle", "kn"},
    {IdentityId::I2, "I2", "sieve value equals seed term plus block triangles", "kn"},
    {IdentityId::I3, "I3", "plain diagonal equals first-row entry plus plain triangle", "n"},
    {IdentityId::I4, "I4", "raising n doubles the first sieved value", "n"},
    {IdentityId::I5, "I5", "base-row step adds the next odd number", "k"},
    {IdentityId::I6, "I6", "k-step difference is (n+2) plus the next block triangle", "kn"},
    {IdentityId::I7, "I7", "n-step difference is the value times (k+1)", "kn"},
    {IdentityId::I8, "I8", "block triangle growth splits into diagonal plus growth triangle",
     "kn"},
    {IdentityId::I9, "I9", "block diagonal expands to a top entry plus all block triangles",
     "kn"},
    {IdentityId::I10, "I10", "block diagonal is the sieved value minus one", "kn"},
    {IdentityId::I11, "I11", "one-deeper growth entry is the block entry times its block",
     "imxn"},
    {IdentityId::I12, "I12", "growth triangle has the closed form ((n+2)+delta)*(k+1)", "kn"},
    {IdentityId::I13, "I13", "earlier-block column sum equals the weighted row double sum",
     "imn"},
    {IdentityId::I14, "I14", "the two diagonal walks to (k+1,n+1) agree", "kn"},
}};

}  // namespace

const std::array<IdentityInfo, 14>& identity_registry() {
    return kRegistry;
}

const IdentityInfo& identity_info(IdentityId id) {
    return kRegistry[static_cast<std::size_t>(id)];
}

std::optional<IdentityId> parse_identity_id(std::string_view name) {
    for (const IdentityInfo& info : kRegistry) {
        if (info.name == name) {
            return info.id;
        }
    }
    return std::nullopt;
}

GridRange default_grid(IdentityId id) {
    if (id == IdentityId::I1) {
        return GridRange{Nat(50), Nat(10), {}, {}, {}};
    }
    return GridRange{Nat(8), Nat(8), {}, {}, {}};
}

const Nat& CellIndex::at(char name) const {
    for (const auto& [coord, value] : coords) {
        if (coord == name) {
            return value;
        }
    }
    throw std::invalid_argument(std::string("cell has no index '") + name + "'");
}

std::string CellIndex::str() const {
    std::string text;
    for (const auto& [coord, value] : coords) {
        if (!text.empty()) {
            text += ' ';
        }
        text += coord;
        text += '=';
        text += value.str();
    }
    return text;
}

IdentityVerifier::IdentityVerifier() : model_(std::make_unique<TriangleModel>()) {}

IdentityVerifier::IdentityVerifier(std::unique_ptr<TriangleModel> model)
    : model_(std::move(model)) {}

Nat IdentityVerifier::sieved(const Nat& k, const Nat& n) {
    auto found = sieve_cache_.find(n);
    if (found == sieve_cache_.end()) {
        found = sieve_cache_.emplace(n, moessner_sieve(n)).first;
    }
    LazyStream cursor = found->second.stream;  // memoized cells, re-walk is cheap
    for (Nat steps(0); steps < k + 1; ++steps) {
        cursor = cursor.tail();
    }
    return cursor.head();
}

namespace {

// Side condition shared by I11 and I13: the cell must lie on the staircase.
std::optional<std::string> domain_violation(IdentityId id, const CellIndex& cell) {
    if (id == IdentityId::I11 || id == IdentityId::I13) {
        const Nat& m = cell.at('m');
        const Nat& n = cell.at('n');
        if (m > n) {
            return "m=" + m.str() + " exceeds n=" + n.str() + " (outside the staircase)";
        }
    }
    return std::nullopt;
}

}  // namespace

IdentityReport IdentityVerifier::evaluate(IdentityId id, const CellIndex& cell) {
    TriangleModel& t = *model_;
    Nat lhs(0);
    Nat rhs(0);
    switch (id) {
        case IdentityId::I1: {
            const Nat &k = cell.at('k'), &n = cell.at('n');
            lhs = sieved(k, n);
            rhs = power_oracle(k, n);
            break;
        }
        case IdentityId::I2: {
            const Nat &k = cell.at('k'), &n = cell.at('n');
            lhs = sieved(k, n);
            rhs = t.a_term(k, n) + t.blocks_total(k, n);
            break;
        }
        case IdentityId::I3: {
            const Nat& n = cell.at('n');
            lhs = t.plain_diagonal_total(n);
            rhs = t.plain_entry(0, n + 1) + t.plain_triangle_total(n);
            break;
        }
        case IdentityId::I4: {
            const Nat& n = cell.at('n');
            lhs = sieved(0, n + 1);
            rhs = Nat(2) * sieved(0, n);
            break;
        }
        case IdentityId::I5: {
            const Nat& k = cell.at('k');
            lhs = sieved(k + 1, 0);
            rhs = sieved(k, 0) + Nat(2) * (k + 2) + 1;
            break;
        }
        case IdentityId::I6: {
            const Nat &k = cell.at('k'), &n = cell.at('n');
            lhs = sieved(k + 1, n) - sieved(k, n);
            rhs = (n + 2) + t.block_triangle_total(k + 1, n);
            break;
        }
        case IdentityId::I7: {
            const Nat &k = cell.at('k'), &n = cell.at('n');
            lhs = sieved(k, n + 1) - sieved(k, n);
            rhs = sieved(k, n) * (k + 1);
            break;
        }
        case IdentityId::I8: {
            const Nat &k = cell.at('k'), &n = cell.at('n');
            lhs = t.block_triangle_total(k + 1, n + 1) - t.block_triangle_total(k + 1, n);
            rhs = t.block_diagonal_total(k + 1, n) + t.growth_triangle_total(k + 1, n);
            break;
        }
        case IdentityId::I9: {
            const Nat &k = cell.at('k'), &n = cell.at('n');
            lhs = t.block_diagonal_total(k + 1, n);
            rhs = t.block_entry(k + 1, 0, n + 1, n) + t.blocks_total(k + 1, n);
            break;
        }
        case IdentityId::I10: {
            const Nat &k = cell.at('k'), &n = cell.at('n');
            lhs = t.block_diagonal_total(k + 1, n);
            rhs = sieved(k + 1, n) - 1;
            break;
        }
        case IdentityId::I11: {
            const Nat &i = cell.at('i'), &m = cell.at('m');
            const Nat &x = cell.at('x'), &n = cell.at('n');
            lhs = t.entry_growth(i, m + 1, x, n);
            rhs = t.block_entry(i, m, x, n) * i;
            break;
        }
        case IdentityId::I12: {
            const Nat &k = cell.at('k'), &n = cell.at('n');
            lhs = t.growth_triangle_total(k + 1, n);
            rhs = ((n + 2) + t.block_triangle_total(k + 1, n)) * (k + 1);
            break;
        }
        case IdentityId::I13: {
            const Nat &i = cell.at('i'), &m = cell.at('m'), &n = cell.at('n');
            for (Nat j(0); j < i; ++j) {
                lhs += t.block_entry(j, m + 1, n - m, n);
            }
            for (Nat a(0); a <= n - m; ++a) {
                for (Nat u(0); u < i; ++u) {
                    rhs += t.block_entry(u, m, a, n) * (i - u);
                }
            }
            break;
        }
        case IdentityId::I14: {
            const Nat &k = cell.at('k'), &n = cell.at('n');
            lhs = (n + 3) + t.block_triangle_total(k + 1, n + 1) + sieved(k, n) * (k + 1);
            rhs = (n + 2) + t.block_triangle_total(k + 1, n) + sieved(k + 1, n) * (k + 2);
            break;
        }
    }
    const bool equal = (lhs == rhs);
    return IdentityReport{id, cell, std::move(lhs), std::move(rhs),
                          equal ? CellOutcome::pass : CellOutcome::fail, {}};
}

IdentityReport IdentityVerifier::verify_identity(IdentityId id, const CellIndex& cell) {
    if (auto violation = domain_violation(id, cell)) {
        throw std::domain_error(std::string(identity_info(id).name) + " at " + cell.str() +
                                ": " + *violation);
    }
    try {
        return evaluate(id, cell);
    } catch (const std::underflow_error& e) {
        // Only reachable with a broken model: a side the recurrences keep
        // non-negative went negative. Report it as a failing cell.
        return IdentityReport{id, cell, Nat(0), Nat(0), CellOutcome::fail,
                              std::string("side underflowed: ") + e.what()};
    }
}

std::vector<IdentityReport> IdentityVerifier::verify_grid(std::span<const IdentityId> ids,
                                                          const GridRange& grid,
                                                          bool fail_fast) {
    const Nat m_max = grid.m_max.value_or(grid.n_max);
    const Nat x_max = grid.x_max.value_or(grid.n_max);
    const Nat i_max = grid.i_max.value_or(grid.k_max + 1);

    std::vector<IdentityReport> reports;
    for (IdentityId id : ids) {
        const IdentityInfo& info = identity_info(id);

        std::vector<std::pair<char, Nat>> dims;
        for (char coord : info.arity) {
            switch (coord) {
                case 'k': dims.emplace_back('k', grid.k_max); break;
                case 'n': dims.emplace_back('n', grid.n_max); break;
                case 'm': dims.emplace_back('m', m_max); break;
                case 'x': dims.emplace_back('x', x_max); break;
                case 'i': dims.emplace_back('i', i_max); break;
                default: throw std::logic_error("unknown arity coordinate");
            }
        }

        // Odometer over the cell rectangle, last coordinate fastest.
        CellIndex cell;
        for (const auto& [coord, bound] : dims) {
            (void)bound;
            cell.coords.emplace_back(coord, Nat(0));
        }
        bool exhausted = dims.empty();
        bool stop = false;
        while (!stop) {
            if (auto violation = domain_violation(id, cell)) {
                reports.push_back(IdentityReport{id, cell, Nat(0), Nat(0),
                                                 CellOutcome::skip, *violation});
            } else {
                reports.push_back(verify_identity(id, cell));
                if (fail_fast && reports.back().outcome == CellOutcome::fail) {
                    return reports;
                }
            }
            if (exhausted) {
                break;
            }
            // advance
            std::size_t pos = dims.size();
            while (pos > 0) {
                --pos;
                if (cell.coords[pos].second < dims[pos].second) {
                    ++cell.coords[pos].second;
                    break;
                }
                cell.coords[pos].second = Nat(0);
                if (pos == 0) {
                    stop = true;
                }
            }
        }
    }
    return reports;
}

}  // namespace moessner
