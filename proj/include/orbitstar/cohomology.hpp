#pragma once

#include "orbitstar/lie.hpp"
#include "orbitstar/linsolve.hpp"
#include "orbitstar/polyalg.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitstar {

/// C(X_i) = values[i], polynomials in the coordinates of L.
struct Cochain1 {
    std::vector<CPoly> values;

    static Cochain1 zero(const LieAlgebra& L);
    bool is_zero() const;
    friend bool operator==(const Cochain1&, const Cochain1&) = default;
};

/// Antisymmetric C(X_i, X_j); only i < j is stored.
class Cochain2 {
public:
    explicit Cochain2(const LieAlgebra& L);

    std::size_t dim() const { return n_; }
    CPoly at(std::size_t i, std::size_t j) const;
    /// Sets C_ij and C_ji = -C_ij.  Throws for i == j with a nonzero value.
    void set(std::size_t i, std::size_t j, const CPoly& value);
    bool is_zero() const;
    friend bool operator==(const Cochain2&, const Cochain2&) = default;

private:
    std::size_t n_;
    std::size_t nvars_;
    std::vector<CPoly> upper_;  // row-major over i < j
    std::size_t slot(std::size_t i, std::size_t j) const;
};

/// Fully antisymmetric C(X_i, X_j, X_k); only i < j < k is stored.
class Cochain3 {
public:
    explicit Cochain3(const LieAlgebra& L);

    CPoly at(std::size_t i, std::size_t j, std::size_t k) const;
    void set(std::size_t i, std::size_t j, std::size_t k, const CPoly& value);
    bool is_zero() const;

private:
    std::size_t n_;
    std::size_t nvars_;
    std::map<std::array<std::size_t, 3>, CPoly> values_;
};

/// (dC)_ij = C([X_i, X_j]) - {x_i, C_j} + {x_j, C_i}.
Cochain2 d1(const LieAlgebra& L, const Cochain1& C);
/// (dC)_ijk = {x_i, C_jk} - {x_j, C_ik} + {x_k, C_ij}
///            - C([X_i,X_j], X_k) + C([X_i,X_k], X_j) - C([X_j,X_k], X_i).
Cochain3 d2(const LieAlgebra& L, const Cochain2& C);

/// Common homogeneous degree of all components; nullopt for mixed or zero.
std::optional<unsigned> homogeneous_degree(const Cochain1& C);
std::optional<unsigned> homogeneous_degree(const Cochain2& C);

struct CoboundaryResult {
    std::optional<Cochain1> primitive;
    std::optional<std::string> certificate;  // first inconsistent equation
    std::size_t unknowns = 0;
    std::size_t rank = 0;
};

/// Finds C1 of degree d with d1(C1) = C.  Throws std::invalid_argument if C
/// is not a cocycle or not homogeneous of degree d.
CoboundaryResult solve_coboundary(const LieAlgebra& L, const Cochain2& C, unsigned degree);

/// Images of the basis cochains (component i set to a degree-d monomial)
/// under d1, flattened over (i < j, monomial); one row per basis cochain.
std::vector<SparseRow> d1_rows(const LieAlgebra& L, unsigned degree);
/// Same for d2 on the basis of degree-d 2-cochains.
std::vector<SparseRow> d2_rows(const LieAlgebra& L, unsigned degree);

/// dim ker d2 - dim im d1 on the degree-d component; 0 for negative d.
std::size_t h2_dimension(const LieAlgebra& L, int degree);

/// f -> sum_k C_k df/dx_k.
class Derivation {
public:
    explicit Derivation(Cochain1 C) : c_(std::move(C)) {}
    CPoly operator()(const CPoly& f) const;
    const Cochain1& cochain() const { return c_; }

private:
    Cochain1 c_;
};

inline Derivation extend_c1(const Cochain1& C)
{
    return Derivation(C);
}

}  // namespace orbitstar
