#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitstar/expr.hpp"
#include "orbitstar/reps.hpp"

using namespace orbitstar;

namespace {
auto su2 = predefined("su2");
auto sl2 = predefined("sl2");

// Spin-j representation of sl2 in the basis v_0..v_{2j} of weights 2j, 2j-2, ...
MatrixRep sl2_irrep(unsigned n)
{
    MatrixRep R{n + 1, {Matrix::zero(n + 1), Matrix::zero(n + 1), Matrix::zero(n + 1)}};
    for (unsigned k = 0; k <= n; ++k) {
        R.matrices[0](k, k) = Scalar(static_cast<long>(n) - 2 * static_cast<long>(k));
        if (k < n)
            R.matrices[2](k + 1, k) = Scalar(1);
        if (k > 0)
            R.matrices[1](k - 1, k) = Scalar(static_cast<long>(k) * static_cast<long>(n - k + 1));
    }
    return R;
}
}  // namespace

TEST_CASE("defining representation") {
    auto R = su2_defining_rep();
    CHECK(R.dim == 2);
    CHECK(validate_rep(*su2, R));
    CHECK(validate_rep(*su2, adjoint_rep(*su2)));
    MatrixRep broken = R;
    broken.matrices[2] = broken.matrices[2] * Scalar(2);
    CHECK_FALSE(validate_rep(*su2, broken));
}

TEST_CASE("Casimir values") {
    auto P = parse_ncelement("X^2 + Y^2 + Z^2", su2);
    // (-i/2)^2 * 3 = -3/4 on C^2, -2 on the adjoint
    CHECK(casimir_scalar(P, su2_defining_rep(), 1) == Scalar(Rational(-3, 4)));
    CHECK(casimir_scalar(P, adjoint_rep(*su2), 1) == Scalar(-2));
    CHECK(casimir_scalar(P, su2_defining_rep(), 2) == Scalar(-3));
    CHECK_THROWS_AS(casimir_scalar(parse_ncelement("X", su2), su2_defining_rep(), 1), std::invalid_argument);
    auto u = parse_ncelement("X*Y - h*Z", su2);
    auto R = su2_defining_rep();
    CHECK(evaluate(u, R, 1) == R.matrices[0] * R.matrices[1] - R.matrices[2]);
}

TEST_CASE("sl2 Casimir on irreducible representations") {
    auto omega = sl2_omega(sl2);
    CHECK(is_central(omega));
    for (unsigned n = 0; n <= 4; ++n) {
        auto R = sl2_irrep(n);
        REQUIRE(validate_rep(*sl2, R));
        Rational l = n;
        CHECK(casimir_scalar(omega, R, 1) == Scalar(l * l / 2 + l));
    }
}

TEST_CASE("highest weight polynomial") {
    auto hw = highest_weight_casimir(sl2_omega(sl2));
    REQUIRE(hw.nvars() == 1);
    CHECK(hw.to_string({"l"}) == "1/2*l^2 + h*l");
    CHECK(hw.evaluate_h(1) == parse_cpoly("l + 1/2*l^2", LieAlgebra({"L"}, StructureConstants(1))));
    CHECK_THROWS_AS(highest_weight_casimir(parse_ncelement("F", sl2)), std::invalid_argument);
    CHECK(highest_weight_casimir(parse_ncelement("E*F", sl2)) == parse_cpoly("h*l", LieAlgebra({"L"}, StructureConstants(1))));
    CHECK_THROWS_AS(highest_weight_casimir(parse_ncelement("X", su2)), std::invalid_argument);
}

TEST_CASE("distinct central characters") {
    auto r = nonisomorphism_witness(HPoly(-4), HPoly(-4) + HPoly(Scalar(Rational(1, 3))) * HPoly::h(), 20);
    CHECK(r.spectrum_c == std::vector<unsigned>{2});
    CHECK(r.spectrum_c_prime.empty());
    CHECK(r.witness);
    auto j = r.to_json();
    CHECK(j["witness"] == true);
    CHECK(j["bound"] == 20);
    auto same = nonisomorphism_witness(HPoly(-4), HPoly(-4), 20);
    CHECK_FALSE(same.witness);
    // C = 2P acts on spin l/2 at h = 1 as -(l^2/2 + l); -12 needs l = 4
    auto twelve = nonisomorphism_witness(HPoly(-12), HPoly(-4), 20);
    CHECK(twelve.spectrum_c == std::vector<unsigned>{4});
    CHECK(twelve.witness);
}
