#include "orbitstar/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace orbitstar {

bool LinearSystem::add_equation(SparseRow row, Scalar rhs, std::string tag)
{
    ++equations_;
    for (auto it = row.begin(); it != row.end();) {
        if (it->first >= unknowns_)
            throw std::out_of_range("unknown index out of range");
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
    while (!row.empty()) {
        auto lead = row.begin();
        auto pivot = pivots_.find(lead->first);
        if (pivot == pivots_.end())
            break;
        Scalar factor = lead->second;
        for (const auto& [col, value] : pivot->second.row) {
            auto [slot, inserted] = row.try_emplace(col, Scalar());
            slot->second -= factor * value;
            if (slot->second.is_zero())
                row.erase(slot);
        }
        rhs -= factor * pivot->second.rhs;
    }
    if (row.empty()) {
        if (rhs.is_zero())
            return true;
        if (!inconsistent_tag_)
            inconsistent_tag_ = tag.empty() ? std::string("equation ") + std::to_string(equations_) : std::move(tag);
        return false;
    }
    Scalar inv = row.begin()->second.inverse();
    for (auto& [col, value] : row)
        value *= inv;
    rhs *= inv;
    std::size_t col = row.begin()->first;
    pivots_.emplace(col, Pivot{std::move(row), std::move(rhs)});
    return true;
}

std::vector<Scalar> LinearSystem::solution() const
{
    if (!consistent())
        throw std::logic_error("inconsistent linear system has no solution");
    std::vector<Scalar> x(unknowns_);
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        Scalar value = it->second.rhs;
        for (const auto& [col, coeff] : it->second.row)
            if (col != it->first)
                value -= coeff * x[col];
        x[it->first] = value;
    }
    return x;
}

std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t columns)
{
    LinearSystem sys(columns);
    for (const auto& r : rows)
        sys.add_equation(r, Scalar());
    return sys.rank();
}

}  // namespace orbitstar
