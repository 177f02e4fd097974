#pragma once

#include "orbitstar/envelope.hpp"
#include "orbitstar/polyalg.hpp"

#include <random>

namespace orbitstar {

/// Small random data for property checks.  Coefficients are rationals
/// n/d with |n| <= 5, 1 <= d <= 3.
Scalar random_rational(std::mt19937& rng);
/// Up to `terms` monomials of degree <= max_degree; h-powers up to
/// max_h_degree in the coefficients.
CPoly random_cpoly(std::size_t nvars, std::mt19937& rng, unsigned max_degree, unsigned terms,
                   unsigned max_h_degree = 0);
/// Homogeneous of the given degree, h-free.
CPoly random_homogeneous(std::size_t nvars, std::mt19937& rng, unsigned degree, unsigned terms);
/// Canonical element with up to `terms` words of length <= max_length.
NCElement random_ncelement(const LieAlgebraPtr& L, std::mt19937& rng, unsigned max_length, unsigned terms,
                           unsigned max_h_degree = 1);

}  // namespace orbitstar
