#pragma once

#include "orbitstar/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitstar {

using SparseRow = std::map<std::size_t, Scalar>;

/// Exact incremental row-echelon elimination over the Gaussian rationals.
///
/// Equations are reduced against the existing pivots as they arrive, so the
/// first equation that collapses to "0 = nonzero" is kept as an
/// inconsistency witness.  All the solvers in this project (coboundaries,
/// gauge operators, the bidifferential ansatz) have a few hundred unknowns
/// and very sparse rows.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

    /// Returns false when the equation made the system inconsistent.
    bool add_equation(SparseRow row, Scalar rhs, std::string tag = {});

    std::size_t unknowns() const { return unknowns_; }
    std::size_t rank() const { return pivots_.size(); }
    std::size_t equations() const { return equations_; }
    bool consistent() const { return !inconsistent_tag_.has_value(); }
    /// Tag of the first equation found inconsistent with its predecessors.
    const std::optional<std::string>& inconsistency() const { return inconsistent_tag_; }

    /// A particular solution with every free unknown set to zero.
    /// Throws std::logic_error if the system is inconsistent.
    std::vector<Scalar> solution() const;

private:
    struct Pivot {
        SparseRow row;  // leading entry is 1 at the pivot column
        Scalar rhs;
    };

    std::size_t unknowns_;
    std::size_t equations_ = 0;
    std::map<std::size_t, Pivot> pivots_;
    std::optional<std::string> inconsistent_tag_;
};

/// Rank of a set of sparse vectors.
std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t columns);

}  // namespace orbitstar
