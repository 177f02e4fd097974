#pragma once

#include "orbitstar/envelope.hpp"
#include "orbitstar/lie.hpp"
#include "orbitstar/matrix.hpp"
#include "orbitstar/polyalg.hpp"

#include "json.hpp"

#include <vector>

namespace orbitstar {

/// rho_i rho_j - rho_j rho_i = sum_k c[i][j][k] rho_k for all i, j.
bool validate_rep(const LieAlgebra& L, const MatrixRep& R);

/// X = -(i/2) sigma_1, Y = -(i/2) sigma_2, Z = -(i/2) sigma_3.
MatrixRep su2_defining_rep();

/// Algebra map X_i -> h0 rho_i, h -> h0.
Matrix evaluate(const NCElement& u, const MatrixRep& R, const Scalar& h0);
/// lambda with evaluate(u, R, h0) = lambda Id.  Throws std::invalid_argument
/// when the image is not scalar.
Scalar casimir_scalar(const NCElement& u, const MatrixRep& R, const Scalar& h0);

/// Value of a central element on the highest-weight vector of weight lambda,
/// as a polynomial in lambda (one variable) with coefficients in Q(i)[h].
/// The algebra must contain generators named H, E, F with
/// [H,E] = 2E, [H,F] = -2F, [E,F] = H.  Throws std::invalid_argument when a
/// word with F but no E survives (non-central input).
CPoly highest_weight_casimir(const NCElement& u);

/// EF + FE + H^2/2 in sl2.
NCElement sl2_omega(const LieAlgebraPtr& sl2);

struct NonisomorphismReport {
    unsigned bound = 0;
    HPoly c;
    HPoly c_prime;
    std::vector<unsigned> spectrum_c;
    std::vector<unsigned> spectrum_c_prime;
    bool witness = false;

    nlohmann::json to_json() const;
};

/// For the ideals (C - c(h)) and (C - c'(h)) with C = -Omega (= 2P), lists
/// the highest weights lambda in 0..bound admitted at h = 1.  The witness
/// holds when one list is nonempty and the two are disjoint.
NonisomorphismReport nonisomorphism_witness(const HPoly& c, const HPoly& c_prime, unsigned lambda_bound);

}  // namespace orbitstar
