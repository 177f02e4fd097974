#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitstar/expr.hpp"
#include "orbitstar/orbit.hpp"
#include "orbitstar/quantize.hpp"

#include <algorithm>

using namespace orbitstar;

namespace {
auto su2 = predefined("su2");
CPoly P(const char* t) { return parse_cpoly(t, *su2); }
NCElement U(const char* t) { return parse_ncelement(t, su2); }
}  // namespace

TEST_CASE("symmetrization") {
    CHECK(symmetrize(su2, P("x*y")) == U("1/2*(X*Y + Y*X)"));
    CHECK(symmetrize(su2, P("x*y")) == U("X*Y - 1/2*h*Z"));
    CHECK(symmetrize(su2, P("x*y*z")) ==
          U("1/6*(X*Y*Z + X*Z*Y + Y*X*Z + Y*Z*X + Z*X*Y + Z*Y*X)"));
    CHECK(symmetrize(su2, P("x^2*y")) == U("1/3*(X*X*Y + X*Y*X + Y*X*X)"));
    CHECK(sym_inverse(U("X*Y")) == P("x*y + 1/2*h*z"));
    CHECK(sym_inverse(U("h*Z")) == P("h*z"));
    for (const auto& e : monomials_up_to(3, 5)) {
        CPoly m = CPoly::monomial(e);
        CHECK(sym_inverse(symmetrize(su2, m)) == m);
    }
}

TEST_CASE("symmetric star product goldens") {
    CHECK(star_S(su2, P("x"), P("y")) == P("x*y + 1/2*h*z"));
    CHECK(star_S(su2, P("y"), P("x")) == P("x*y - 1/2*h*z"));
    auto S = symmetric_star(su2);
    CHECK(bn_coefficient(S, P("x"), P("y"), 1) == P("1/2*z"));
    // B_1 = 1/2 {,} for the symmetric product
    for (const char* f : {"x^2", "x*z", "y^2*z"})
        for (const char* g : {"y", "x*y", "z^2"})
            CHECK(bn_coefficient(S, P(f), P(g), 1) * HPoly(2) == kirillov_bracket(*su2, P(f), P(g)));
    CHECK(bn_coefficient(S, P("x*y"), P("z"), 5).is_zero());
    CHECK(bn_coefficient(S, P("x^2"), P("y^2"), 5).is_zero());
    CHECK_THROWS(bn_coefficient(S, P("h*x"), P("y"), 1));
}

TEST_CASE("deformation axioms") {
    CHECK(check_deformation_axioms(symmetric_star(su2), 4).passed());
    CHECK(check_deformation_axioms(pbw_star(su2), 4).passed());
    auto sl2 = predefined("sl2");
    CHECK(check_deformation_axioms(symmetric_star(sl2), 3).passed());
}

TEST_CASE("a broken backward map is caught") {
    auto S = symmetric_star(su2);
    S.name = "broken";
    auto good = S.backward;
    S.backward = [good](const NCElement& u) { return good(u) + good(u); };
    auto report = check_deformation_axioms(S, 2);
    REQUIRE_FALSE(report.passed());
    CHECK(report.failures.front().property == "a");
    auto j = report.to_json();
    CHECK(j["star"] == "broken");
    CHECK(j["failures"].size() == report.failures.size());
}

TEST_CASE("gauge equivalence, first order") {
    auto S = symmetric_star(su2);
    auto same = gauge_step(S, S, 1, 3, {});
    CHECK(same.feasible);
    CHECK(same.operator_n.is_zero());

    auto B = pbw_star(su2);
    auto g = gauge_step(S, B, 1, 3, {});
    REQUIRE(g.feasible);
    CHECK_FALSE(g.operator_n.is_zero());
    CHECK(g.rank <= g.unknowns);
    // T = Id + h T_1 intertwines the two products through order h
    auto T = [&](const CPoly& f) { return f + g.operator_n.apply(f) * HPoly::h(); };
    for (const auto& e : monomials_up_to(3, 1))
        for (const auto& e2 : monomials_up_to(3, 2)) {
            CPoly f = CPoly::monomial(e), k = CPoly::monomial(e2);
            CPoly lhs = T(S(f, k)).truncate_h(2);
            CPoly rhs = B(T(f), T(k)).truncate_h(2);
            CHECK(lhs == rhs);
        }

    CHECK_THROWS_AS(gauge_step(S, B, 2, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(gauge_step(S, B, 1, 3, {LinearMap{}}), std::invalid_argument);
    CHECK_THROWS_AS(gauge_step(S, B, 0, 3, {}), std::invalid_argument);
}

TEST_CASE("gauge comparison of two lifts on an orbit") {
    auto a = orbit_star_product(Orbit::su2(1));
    auto b = orbit_star_product(Orbit::su2(1, HPoly(1) + HPoly::h()));
    auto r = gauge_step(a, b, 1, 2, {});
    CHECK(r.equations > 0);
    if (!r.feasible)
        CHECK(r.certificate.has_value());
}

TEST_CASE("linear maps") {
    LinearMap m;
    m.images[{1, 0, 0}] = P("z");
    CHECK(m.apply(P("3*h*x")) == P("3*h*z"));
    CHECK_THROWS_AS(m.apply(P("y")), std::out_of_range);
    CHECK_FALSE(m.is_zero());
    CHECK(m.to_string(su2->coords()).find("x -> z") != std::string::npos);
}
