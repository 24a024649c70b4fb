#pragma once

#include "listpack/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace listpack {

/// Integer column of a constraint matrix, as (row, coefficient) pairs.
struct SparseColumn {
    std::vector<std::pair<int, int>> entries;
};

/// Supplies columns on demand: returns one with y . a > 0, or nullopt if none exists.
class ColumnSource {
public:
    virtual ~ColumnSource() = default;
    virtual std::optional<SparseColumn> improving(const std::vector<Rational>& y) = 0;
};

struct LpSolution {
    bool feasible = false;
    /// Values of the columns (the final pool when a ColumnSource added some).
    std::vector<Rational> x;
    std::vector<SparseColumn> columns;
    /// When infeasible: y with y . a <= 0 for every column a and y . b > 0.
    std::vector<Rational> farkas;
    std::uint64_t pivots = 0;
};

/// Decides {A x = b, x >= 0} by a phase-one simplex in exact arithmetic, entering and leaving
/// variables chosen by Bland's rule. Columns not in the pool are priced through `source`.
LpSolution solve_feasibility(std::vector<SparseColumn> columns, const std::vector<Rational>& rhs,
                             ColumnSource* source = nullptr);

/// Same contract as solve_feasibility. A double-precision simplex proposes a final basis,
/// which is then solved exactly; the result is returned only if the exact primal point or
/// Farkas vector checks out (including an exact pricing call through `source`). Otherwise
/// the exact solver runs on the accumulated column pool.
LpSolution solve_feasibility_guided(std::vector<SparseColumn> columns, const std::vector<Rational>& rhs,
                                    ColumnSource* source = nullptr);

/// A x = b exactly and x >= 0.
bool verify_primal(const std::vector<SparseColumn>& columns, const std::vector<Rational>& rhs,
                   const std::vector<Rational>& x);
/// y . a <= 0 for the given columns and y . b > 0.
bool verify_farkas(const std::vector<SparseColumn>& columns, const std::vector<Rational>& rhs,
                   const std::vector<Rational>& y);

}  // namespace listpack
