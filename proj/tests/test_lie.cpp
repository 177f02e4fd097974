#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitstar/lie.hpp"

using namespace orbitstar;

TEST_CASE("su2 structure") {
    auto L = predefined("su2");
    CHECK(L->dim() == 3);
    CHECK(L->names() == std::vector<std::string>{"X", "Y", "Z"});
    CHECK(L->coords() == std::vector<std::string>{"x", "y", "z"});
    CHECK(L->c(0, 1, 2) == Scalar(1));
    CHECK(L->c(1, 0, 2) == Scalar(-1));
    CHECK(L->c(2, 0, 1) == Scalar(1));
    CHECK(check_antisymmetry(L->structure()));
    CHECK(check_jacobi(*L));
    CHECK_THROWS_AS(predefined("so5"), std::invalid_argument);
}

TEST_CASE("Killing forms") {
    // tr(ad_X ad_X) = -2 in the basis [X,Y]=Z, [Y,Z]=X, [Z,X]=Y
    auto K = killing_form(*predefined("su2"));
    CHECK(K.matrix == Matrix::identity(3) * Scalar(-2));
    CHECK(K.determinant == Scalar(-8));
    auto K2 = killing_form(*predefined("sl2"));
    CHECK(K2.matrix(0, 0) == Scalar(8));
    CHECK(K2.matrix(1, 2) == Scalar(4));
    CHECK(K2.determinant == Scalar(-128));
    LieAlgebra ab({"A", "B"}, StructureConstants(2));
    CHECK_FALSE(killing_form(ab).nondegenerate());
}

TEST_CASE("validation") {
    StructureConstants c(3);
    c(0, 1, 2) = 1;  // not antisymmetric
    CHECK_FALSE(check_antisymmetry(c));
    CHECK_THROWS_AS(LieAlgebra({"A", "B", "C"}, c), std::invalid_argument);

    StructureConstants j(3);
    j.set_antisymmetric(0, 1, 1, 1);
    j.set_antisymmetric(0, 2, 0, 1);
    j.set_antisymmetric(1, 2, 2, 1);
    CHECK(check_antisymmetry(j));
    CHECK_FALSE(check_jacobi(j));
    CHECK_THROWS_AS(LieAlgebra({"A", "B", "C"}, j), std::invalid_argument);
    CHECK_THROWS_AS(LieAlgebra({"A", "A", "C"}, StructureConstants(3)), std::invalid_argument);
}

TEST_CASE("adjoint representation") {
    auto L = predefined("su2");
    MatrixRep ad = adjoint_rep(*L);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Matrix want = Matrix::zero(3);
            for (const auto& [k, c] : L->bracket(i, j))
                want += ad.matrices[k] * c;
            CHECK(commutator(ad.matrices[i], ad.matrices[j]) == want);
        }
}

TEST_CASE("complexified basis gives sl2") {
    auto su2 = predefined("su2");
    LieAlgebra m = change_basis(*su2, su2_to_sl2_change(), {"H", "E", "F"});
    CHECK(m.structure() == predefined("sl2")->structure());
    Matrix singular = Matrix::zero(3);
    CHECK_THROWS_AS(BasisChange{singular}, std::invalid_argument);
}

TEST_CASE("json round trip") {
    auto L = predefined("sl2");
    auto j = algebra_to_json(*L);
    auto back = load_algebra(j);
    CHECK(*back == *L);
    nlohmann::json bad = {{"dim", 2}, {"names", {"A", "B"}}, {"brackets", {{1, 0, {{0, "1"}}}}}};
    CHECK_THROWS(load_algebra(bad));
    nlohmann::json heis = {{"dim", 3},
                           {"names", {"P", "Q", "C"}},
                           {"brackets", {{0, 1, {{2, "1"}}}}}};
    auto H = load_algebra(heis);
    CHECK(H->c(0, 1, 2) == Scalar(1));
    CHECK(H->coords() == std::vector<std::string>{"p", "q", "c"});
}
