#pragma once

#include "orbitstar/envelope.hpp"
#include "orbitstar/polyalg.hpp"

#include "json.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitstar {

/// Sym(x_1 ... x_p) = (1/p!) sum over S_p of X_{s(1)} ... X_{s(p)}, in PBW
/// canonical form.  Repeated variables are handled by averaging over the
/// distinct arrangements of the multiset, which is the same average.
NCElement symmetrize(const LieAlgebraPtr& algebra, const CPoly& f);

/// Inverse of symmetrize by triangular descent on the maximal word length.
CPoly sym_inverse(const NCElement& u);

/// A product f * g = backward(reduce(forward(f) forward(g))) induced by a
/// basis correspondence between polynomials and U_h.
struct StarProduct {
    std::string name;
    LieAlgebraPtr algebra;
    std::function<NCElement(const CPoly&)> forward;
    std::function<CPoly(const NCElement&)> backward;
    /// Optional hook applied to the U_h product (ideal reduction for orbits).
    std::function<NCElement(const NCElement&)> reduce;
    /// Optional projection of commutative data onto the domain (orbit
    /// reduction); identity when empty.
    std::function<CPoly(const CPoly&)> classical;
    /// Optional domain basis test; every monomial when empty.
    std::function<bool(const Exponents&)> in_domain;

    CPoly operator()(const CPoly& f, const CPoly& g) const;
    /// The undeformed product, projected by `classical`.
    CPoly commutative(const CPoly& f, const CPoly& g) const;
    /// The Kirillov bracket, projected by `classical`.
    CPoly bracket(const CPoly& f, const CPoly& g) const;
    CPoly project(const CPoly& f) const { return classical ? classical(f) : f; }
    std::vector<Exponents> domain_monomials(unsigned max_degree) const;
};

/// psi = pi_h o Sym.
StarProduct symmetric_star(const LieAlgebraPtr& algebra);
/// psi(x^e) = ordered word X^e (standard ordering).
StarProduct pbw_star(const LieAlgebraPtr& algebra);

CPoly star_S(const LieAlgebraPtr& algebra, const CPoly& f, const CPoly& g);

/// Coefficient of h^n in f * g.  Inputs must be h-free.
CPoly bn_coefficient(const StarProduct& star, const CPoly& f, const CPoly& g, unsigned n);

struct AxiomFailure {
    std::string property;  // "a", "b" or "associativity"
    std::vector<std::string> inputs;
    std::string expected;
    std::string got;
};

struct AxiomReport {
    std::string star;
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::vector<AxiomFailure> failures;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

/// Checks on domain monomials:
///  (a) f*g = fg mod h and (b) f*g - g*f = h{f,g} mod h^2 for deg f + deg g <= pair_bound;
///  associativity for triples with total degree <= triple_bound.
AxiomReport check_deformation_axioms(const StarProduct& star, unsigned pair_bound, unsigned triple_bound);
inline AxiomReport check_deformation_axioms(const StarProduct& star, unsigned degree_bound)
{
    return check_deformation_axioms(star, degree_bound, degree_bound);
}

/// Linear operator on polynomials given by its values on monomials (h-free
/// images), extended C[h]-linearly.
struct LinearMap {
    std::map<Exponents, CPoly> images;

    /// Throws std::out_of_range if f has a monomial without an image.
    CPoly apply(const CPoly& f) const;
    bool is_zero() const;
    std::string to_string(const std::vector<std::string>& names) const;
};

struct GaugeResult {
    bool feasible = false;
    LinearMap operator_n;  // T_n when feasible
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t rank = 0;
    std::optional<std::string> certificate;  // the first inconsistent equation
};

/// Solves for T_n such that T = Id + h T_1 + ... + h^n T_n intertwines the
/// two products mod h^{n+1} on every domain monomial pair with
/// deg f + deg g <= degree_bound.  `lower` holds T_1 .. T_{n-1}.
/// Throws std::invalid_argument if `lower` has the wrong length or the
/// products do not already agree through order h^{n-1}.
GaugeResult gauge_step(const StarProduct& a, const StarProduct& b, unsigned n, unsigned degree_bound,
                       const std::vector<LinearMap>& lower);

}  // namespace orbitstar
