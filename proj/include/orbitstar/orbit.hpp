#pragma once

#include "orbitstar/envelope.hpp"
#include "orbitstar/polyalg.hpp"
#include "orbitstar/quantize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbitstar {

/// A coadjoint orbit {p_i = c_i^0} together with lifts c_i(h) of the levels.
/// The commutative ideal (p_i - c_i^0) is reduced with `basis_rule()`; the
/// deformed ideal (P_i - c_i(h)), P_i = Sym(p_i), by `ideal_reduce_h`.
class Orbit {
public:
    struct LiftedRule {
        Exponents lead;      // leading monomial of p_i
        Scalar lead_coeff;   // its coefficient in p_i
        NCElement central;   // P_i
        HPoly level;         // c_i(h)
    };

    /// Throws std::invalid_argument when an invariant is not Casimir, its
    /// symmetrization is not central, a lift does not start at its level,
    /// or an su2 orbit is singular (level 0).
    Orbit(LieAlgebraPtr algebra, std::vector<CPoly> invariants, std::vector<Rational> levels,
          std::vector<HPoly> lifts, MonomialOrder order);

    /// {x^2 + y^2 + z^2 = level} with z^2 leading; the lift defaults to the
    /// constant level.
    static Orbit su2(const Rational& level, std::optional<HPoly> lift = std::nullopt);

    const LieAlgebraPtr& algebra() const { return algebra_; }
    std::size_t nvars() const { return algebra_->dim(); }
    const std::vector<CPoly>& invariants() const { return invariants_; }
    const std::vector<Rational>& levels() const { return levels_; }
    const std::vector<HPoly>& lifts() const { return lifts_; }
    const ReductionSystem& basis_rule() const { return basis_rule_; }
    const std::vector<LiftedRule>& lifted_rules() const { return lifted_; }

    /// Monomial of the orbit basis (not divisible by any leading monomial).
    bool in_basis(const Exponents& e) const { return basis_rule_.is_normal(e); }
    /// Single invariant whose leading monomial is v^2: returns v.
    std::optional<std::size_t> reduced_variable() const;
    /// Same invariant at level c'^2 = level', lifted by c(h) + level' - level.
    Orbit neighbor(const Rational& level) const;

private:
    LieAlgebraPtr algebra_;
    std::vector<CPoly> invariants_;
    std::vector<Rational> levels_;
    std::vector<HPoly> lifts_;
    ReductionSystem basis_rule_;
    std::vector<LiftedRule> lifted_;
};

CPoly orbit_reduce(const Orbit& o, const CPoly& f);

struct B1B2 {
    CPoly a;  // quotient by p - c^2
    CPoly r;  // remainder part free of the reduced variable
    CPoly s;  // coefficient of the reduced variable in the remainder
};
/// f = a (p - c^2) + r + s z.  Throws for orbits that are not su2-type.
B1B2 decompose_B1B2(const Orbit& o, const CPoly& f);

struct IdealReduction {
    NCElement remainder;
    std::vector<NCElement> quotients;  // u = sum_i q_i (P_i - c_i(h)) + remainder
};
IdealReduction ideal_divide_h(const Orbit& o, const NCElement& u);
NCElement ideal_reduce_h(const Orbit& o, const NCElement& u);

/// x^r y^s z^t (p - c^2) -> X^r Y^s Z^t (P - c(h)),  x^r y^s z^v -> X^r Y^s Z^v (v <= 1).
NCElement psi_example(const Orbit& o, const CPoly& f);
CPoly psi_example_inverse(const Orbit& o, const NCElement& u);
/// (p - c^2)^k b -> (P - c(h))^k B for b in the orbit basis.
NCElement psi_tangential(const Orbit& o, const CPoly& f);
CPoly psi_tangential_inverse(const Orbit& o, const NCElement& u);

/// Star products on the full polynomial algebra induced by the two maps.
StarProduct example_star(const Orbit& o);
StarProduct tangential_star(const Orbit& o);
/// The product on C[orbit][h]: orbit-basis monomials -> ordered words,
/// multiply, ideal_reduce_h, read back.
StarProduct orbit_star_product(const Orbit& o);
/// Throws std::invalid_argument when f or g leaves the orbit basis span.
CPoly orbit_star(const Orbit& o, const CPoly& f, const CPoly& g);

struct CheckResult {
    bool passed = true;
    std::size_t cases = 0;
    std::string input;    // the first failing input
    std::string witness;  // what it produced
    std::optional<Exponents> monomial;  // failing monomial, when the check sweeps monomials
};

/// psi(g (p - level')) reduced modulo the lifted ideal of the neighbour orbit
/// for every monomial g with deg(g) + deg(p) <= degree_bound.
CheckResult tangentiality_check(const Orbit& o, const std::function<NCElement(const CPoly&)>& psi,
                                const Rational& level, unsigned degree_bound);
/// g * f == g f for monomials g and powers f of the invariants within the bound.
CheckResult invariant_multiplication_check(const Orbit& o, const StarProduct& star, unsigned degree_bound);
/// orbit_star(p1, p2) against orbit_reduce(p1 p2 - h z d_y(p1) d_x(p2)) through order h.
CheckResult lemma_check(const Orbit& o, const CPoly& p1, const CPoly& p2);
/// ideal_reduce_h(psi(f)) == ordered image of orbit_reduce(f) for monomials f.
CheckResult diagram_check(const Orbit& o, const std::function<NCElement(const CPoly&)>& psi, unsigned degree_bound);

struct BidiffResult {
    bool feasible = false;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t rank = 0;
    CPoly b1_zz;                        // z^2 B_1(z, z) used on the right-hand side
    CPoly forced;                       // sum b^{uv} u v with b^{uv} from the pair data
    std::optional<std::string> certificate;
    std::vector<CPoly> coefficients;    // b^{xx}, b^{xy}, b^{yx}, b^{yy} when feasible
};
/// Ansatz B_1(f, g) = sum b^{uv} d_u f d_v g over u, v in {x, y} on the chart
/// z = z(x, y).  `override_zz` replaces the engine value of z^2 B_1(z, z).
BidiffResult bidiff_infeasibility(const Orbit& o, unsigned coeff_degree_bound,
                                  std::optional<CPoly> override_zz = std::nullopt);

}  // namespace orbitstar
