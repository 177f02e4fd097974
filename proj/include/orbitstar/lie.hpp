#pragma once

#include "orbitstar/matrix.hpp"
#include "orbitstar/scalar.hpp"

#include "json.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbitstar {

/// Raw structure constants c[i][j][k], the coefficient of X_k in [X_i, X_j].
/// Unvalidated; LieAlgebra is the checked form.
class StructureConstants {
public:
    explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const
    {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    /// Sets [X_i, X_j] = value*X_k and [X_j, X_i] = -value*X_k.
    void set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    std::size_t dim_;
    std::vector<Scalar> c_;
};

bool check_antisymmetry(const StructureConstants& c);
/// Exact vanishing of the Jacobiator; assumes antisymmetry.
bool check_jacobi(const StructureConstants& c);

/// Finite-dimensional Lie algebra over Q(i) with a fixed ordered basis.
/// Construction validates antisymmetry and the Jacobi identity.
class LieAlgebra {
public:
    /// coords are the names of the dual coordinates x_i; derived from names when empty.
    LieAlgebra(std::vector<std::string> names, StructureConstants c, std::vector<std::string> coords = {});

    std::size_t dim() const { return c_.dim(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::string>& coords() const { return coords_; }
    const StructureConstants& structure() const { return c_; }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

    /// Nonzero (k, c[i][j][k]) pairs of [X_i, X_j].
    const std::vector<std::pair<std::size_t, Scalar>>& bracket(std::size_t i, std::size_t j) const
    {
        return brackets_[i * dim() + j];
    }

    /// Throws std::out_of_range for an unknown name.
    std::size_t generator_index(std::string_view name) const;
    std::size_t coord_index(std::string_view name) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
    {
        return a.names_ == b.names_ && a.coords_ == b.coords_ && a.c_ == b.c_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::string> coords_;
    StructureConstants c_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> brackets_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

inline bool check_jacobi(const LieAlgebra& L)
{
    return check_jacobi(L.structure());
}

struct KillingForm {
    Matrix matrix;
    Scalar determinant;
    bool nondegenerate() const { return !determinant.is_zero(); }
};

/// K[i][j] = sum_{k,l} c[i][k][l] c[j][l][k].
KillingForm killing_form(const LieAlgebra& L);

/// n square matrices over Q(i), one per generator.
struct MatrixRep {
    std::size_t dim = 0;
    std::vector<Matrix> matrices;
};

/// (ad_i)[k][j] = c[i][j][k].
MatrixRep adjoint_rep(const LieAlgebra& L);

/// Invertible change of basis. Column a of the matrix holds the coordinates
/// of the new generator Y_a in the old basis: Y_a = sum_i M(i, a) X_i.
class BasisChange {
public:
    /// Throws std::invalid_argument for a singular or non-square matrix.
    explicit BasisChange(Matrix m);

    const Matrix& matrix() const { return m_; }
    const Matrix& inverse() const { return inv_; }

private:
    Matrix m_;
    Matrix inv_;
};

/// Algebra in the new basis Y_a; names default to Y0, Y1, ...
LieAlgebra change_basis(const LieAlgebra& L, const BasisChange& M, std::vector<std::string> names = {});

/// "su2" ([X,Y]=Z, [Y,Z]=X, [Z,X]=Y) or "sl2" (basis H, E, F with
/// [H,E]=2E, [H,F]=-2F, [E,F]=H). Throws std::invalid_argument otherwise.
LieAlgebraPtr predefined(std::string_view name);

/// {"dim": n, "names": [...], "brackets": [[i, j, [[k, "coeff"], ...]], ...]}
/// with 0-based indices and only i < j listed; optional "coords".
LieAlgebraPtr load_algebra(const nlohmann::json& j);
nlohmann::json algebra_to_json(const LieAlgebra& L);

/// The su2 -> sl2 complexification H = 2iZ, E = iX - Y, F = iX + Y.
BasisChange su2_to_sl2_change();

}  // namespace orbitstar
