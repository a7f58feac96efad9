#include "moessner/triangle.hpp"

#include <stdexcept>

namespace moessner {

std::vector<Nat> Staircase::row_sums() const {
    std::vector<Nat> sums;
    sums.reserve(rows.size());
    for (const auto& row : rows) {
        Nat sum(0);
        for (const Nat& entry : row) {
            sum += entry;
        }
        sums.push_back(std::move(sum));
    }
    return sums;
}

Nat Staircase::total() const {
    Nat grand(0);
    for (const Nat& sum : row_sums()) {
        grand += sum;
    }
    return grand;
}

Nat TriangleModel::base_row_value(const Nat& x) const {
    return x + 1;
}

Nat TriangleModel::cross_block_sum(const Nat& i, const Nat& m, const Nat& n) {
    auto key = std::make_tuple(i, m, n);
    if (auto found = cross_memo_.find(key); found != cross_memo_.end()) {
        return found->second;
    }
    Nat sum(0);
    for (Nat j(0); j < i; ++j) {
        for (Nat a(0); a <= n - m; ++a) {
            sum += block_entry(j, m, a, n);
        }
    }
    return cross_memo_.emplace(std::move(key), std::move(sum)).first->second;
}

Nat TriangleModel::plain_entry(const Nat& m, const Nat& x) {
    if (m.is_zero()) {
        return base_row_value(x);
    }
    auto key = std::make_pair(m, x);
    if (auto found = plain_memo_.find(key); found != plain_memo_.end()) {
        return found->second;
    }
    Nat sum(0);
    for (Nat a(0); a <= x; ++a) {
        sum += plain_entry(m - 1, a);
    }
    return plain_memo_.emplace(std::move(key), std::move(sum)).first->second;
}

Nat TriangleModel::block_entry(const Nat& i, const Nat& m, const Nat& x, const Nat& n) {
    if (m.is_zero()) {
        return i * (n + 2) + base_row_value(x);
    }
    if (i >= Nat(1) && m > n + 1) {
        throw std::domain_error("block_entry: depth m=" + m.str() + " exceeds n+1=" +
                                (n + 1).str() + " for block i=" + i.str() +
                                " (cross-block rows n-m would be negative)");
    }
    auto key = std::make_tuple(i, m, x, n);
    if (auto found = block_memo_.find(key); found != block_memo_.end()) {
        return found->second;
    }
    Nat sum(0);
    for (Nat a(0); a <= x; ++a) {
        sum += block_entry(i, m - 1, a, n);
    }
    sum += cross_block_sum(i, m - 1, n);
    return block_memo_.emplace(std::move(key), std::move(sum)).first->second;
}

Nat TriangleModel::entry_growth(const Nat& i, const Nat& m, const Nat& x, const Nat& n) {
    return block_entry(i, m, x, n + 1) - block_entry(i, m, x, n);
}

Nat TriangleModel::a_term(const Nat& k, const Nat& n) const {
    return (k + 1) * (n + 2) + 1;
}

Nat TriangleModel::plain_triangle_total(const Nat& n) {
    Nat total(0);
    for (Nat m(0); m <= n; ++m) {
        for (Nat x(0); x <= n - m; ++x) {
            total += plain_entry(m, x);
        }
    }
    return total;
}

Nat TriangleModel::block_triangle_total(const Nat& i, const Nat& n) {
    Nat total(0);
    for (Nat m(0); m <= n; ++m) {
        for (Nat x(0); x <= n - m; ++x) {
            total += block_entry(i, m, x, n);
        }
    }
    return total;
}

Nat TriangleModel::blocks_total(const Nat& k, const Nat& n) {
    Nat total(0);
    for (Nat i(0); i <= k; ++i) {
        total += block_triangle_total(i, n);
    }
    return total;
}

Nat TriangleModel::plain_diagonal_total(const Nat& n) {
    Nat total(0);
    for (Nat a(0); a <= n + 1; ++a) {
        total += plain_entry(a, n + 1 - a);
    }
    return total;
}

Nat TriangleModel::block_diagonal_total(const Nat& i, const Nat& n) {
    if (i < Nat(1)) {
        throw std::invalid_argument("block_diagonal_total: block index must be >= 1");
    }
    Nat total(0);
    for (Nat a(0); a <= n + 1; ++a) {
        total += block_entry(i, a, n + 1 - a, n);
    }
    return total;
}

Nat TriangleModel::growth_triangle_total(const Nat& i, const Nat& n) {
    if (i < Nat(1)) {
        throw std::invalid_argument("growth_triangle_total: block index must be >= 1");
    }
    Nat total(0);
    for (Nat m(0); m <= n + 1; ++m) {
        for (Nat x(0); x <= n + 1 - m; ++x) {
            total += entry_growth(i, m, x, n);
        }
    }
    return total;
}

ValueDecomposition TriangleModel::decompose(const Nat& k, const Nat& n) {
    ValueDecomposition d{k, n, a_term(k, n), {}, Nat(0), Nat(0)};
    for (Nat i(0); i <= k; ++i) {
        d.block_totals.push_back(block_triangle_total(i, n));
        d.blocks_total += d.block_totals.back();
    }
    d.total = d.a_term + d.blocks_total;
    return d;
}

Staircase TriangleModel::staircase(TriangleKind kind, const std::optional<Nat>& block,
                                   const Nat& n) {
    if (kind == TriangleKind::plain) {
        if (block) {
            throw std::invalid_argument("staircase: plain triangle takes no block index");
        }
    } else if (!block) {
        throw std::invalid_argument("staircase: block index required");
    }
    if (kind == TriangleKind::growth && *block < Nat(1)) {
        throw std::invalid_argument("staircase: growth triangle needs block >= 1");
    }

    Staircase s{kind, block, n, {}};
    const Nat top = (kind == TriangleKind::growth) ? n + 1 : n;
    for (Nat m(0); m <= top; ++m) {
        std::vector<Nat> row;
        for (Nat x(0); x <= top - m; ++x) {
            switch (kind) {
                case TriangleKind::plain:
                    row.push_back(plain_entry(m, x));
                    break;
                case TriangleKind::block:
                    row.push_back(block_entry(*block, m, x, n));
                    break;
                case TriangleKind::growth:
                    row.push_back(entry_growth(*block, m, x, n));
                    break;
            }
        }
        s.rows.push_back(std::move(row));
    }
    return s;
}

}  // namespace moessner
