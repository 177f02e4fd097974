#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitstar/config.hpp"
#include "orbitstar/expr.hpp"
#include "orbitstar/orbit.hpp"
#include "orbitstar/sampling.hpp"

#include <random>

using namespace orbitstar;

namespace {
auto su2 = predefined("su2");
CPoly P(const char* t) { return parse_cpoly(t, *su2); }
NCElement U(const char* t) { return parse_ncelement(t, su2); }
const Orbit unit = Orbit::su2(1);
}  // namespace

TEST_CASE("construction and validation") {
    CHECK(unit.reduced_variable() == 2u);
    CHECK(unit.levels() == std::vector<Rational>{1});
    CHECK(unit.lifts().front() == HPoly(1));
    CHECK(unit.in_basis({3, 2, 1}));
    CHECK_FALSE(unit.in_basis({0, 0, 2}));
    CHECK_THROWS_AS(Orbit::su2(0), std::invalid_argument);
    CHECK_THROWS_AS(Orbit::su2(1, HPoly(2) + HPoly::h()), std::invalid_argument);
    CHECK_THROWS_AS(Orbit(su2, {P("x^2 + y^2")}, {1}, {HPoly(1)}, MonomialOrder({2, 1, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(unit.neighbor(0), std::invalid_argument);
    auto n = unit.neighbor(Rational(3, 2));
    CHECK(n.levels().front() == Rational(3, 2));
    CHECK(n.lifts().front() == HPoly(Scalar(Rational(3, 2))));
}

TEST_CASE("commutative reduction") {
    CHECK(orbit_reduce(unit, P("z^2")) == P("1 - x^2 - y^2"));
    CHECK(orbit_reduce(unit, P("z^3")) == P("z - x^2*z - y^2*z"));
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        CPoly f = random_cpoly(3, rng, 5, 4, 1);
        CPoly r = orbit_reduce(unit, f);
        CHECK(orbit_reduce(unit, r) == r);
        for (const auto& [e, c] : r.terms())
            CHECK(unit.in_basis(e));
        // f - r vanishes on the orbit point (x, y, z) = (3/5, 0, 4/5)
        auto at = [](const CPoly& g) {
            Scalar s;
            for (const auto& [e, c] : g.terms()) {
                Scalar m = c.evaluate(0);
                for (unsigned k = 0; k < e[0]; ++k) m *= Scalar(Rational(3, 5));
                for (unsigned k = 0; k < e[1]; ++k) m *= Scalar(0);
                for (unsigned k = 0; k < e[2]; ++k) m *= Scalar(Rational(4, 5));
                s += m;
            }
            return s;
        };
        CHECK(at(f.evaluate_h(0)) == at(r.evaluate_h(0)));
    }
}

TEST_CASE("decomposition f = a (p - c^2) + r + s z") {
    auto d = decompose_B1B2(unit, P("y*z^3"));
    CHECK(d.a == P("y*z"));
    CHECK(d.r.is_zero());
    CHECK(d.s == P("y - x^2*y - y^3"));
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        CPoly f = random_cpoly(3, rng, 5, 5);
        auto e = decompose_B1B2(unit, f);
        CHECK(e.a * P("x^2 + y^2 + z^2 - 1") + e.r + e.s * P("z") == f);
        for (const auto& [m, c] : e.r.terms())
            CHECK(m[2] == 0);
        for (const auto& [m, c] : e.s.terms())
            CHECK(m[2] == 0);
    }
}

TEST_CASE("deformed ideal reduction") {
    CHECK(ideal_reduce_h(unit, U("Z^2*X")) == U("X - h^2*X - X^3 - X*Y^2 + 2*h*Y*Z"));
    auto div = ideal_divide_h(unit, U("Z^3*Y + X*Z"));
    NCElement rebuilt = div.remainder;
    for (const auto& q : div.quotients)
        rebuilt += q * (U("X^2 + Y^2 + Z^2") - NCElement::scalar(su2, 1));
    CHECK(rebuilt == U("Z^3*Y + X*Z"));
    for (const auto& [w, c] : div.remainder.terms())
        CHECK(unit.in_basis(word_exponents(w, 3)));
}

TEST_CASE("orbit star product") {
    CHECK(orbit_star(unit, P("z"), P("z")) == P("1 - x^2 - y^2"));
    CHECK(orbit_star(unit, P("y"), P("x")) == P("x*y - h*z"));
    CHECK(orbit_star(unit, P("x"), P("y")) == P("x*y"));
    CHECK_THROWS_AS(orbit_star(unit, P("z^2"), P("x")), std::invalid_argument);
    auto star = orbit_star_product(unit);
    // h -> 0 recovers the reduced commutative product
    for (const char* f : {"x", "y*z", "x^2*z"})
        for (const char* g : {"y", "x*z", "y^2"})
            CHECK(star(P(f), P(g)).evaluate_h(0) == orbit_reduce(unit, P(f) * P(g)));
    CHECK(check_deformation_axioms(star, 3).passed());
}

TEST_CASE("first-order lemma") {
    for (const char* f : {"x", "y", "x*y", "x^2", "y^3"})
        for (const char* g : {"x", "y", "x^2*y"})
            CHECK(lemma_check(unit, P(f), P(g)).passed);
}

TEST_CASE("quantization maps") {
    for (const auto& e : monomials_up_to(3, 4)) {
        CPoly f = CPoly::monomial(e);
        CHECK(psi_example_inverse(unit, psi_example(unit, f)) == f);
        CHECK(psi_tangential_inverse(unit, psi_tangential(unit, f)) == f);
    }
    auto ex = [](const CPoly& f) { return psi_example(unit, f); };
    auto tg = [](const CPoly& f) { return psi_tangential(unit, f); };
    CHECK(diagram_check(unit, ex, 4).passed);
    CHECK(diagram_check(unit, tg, 4).passed);
    CHECK(check_deformation_axioms(example_star(unit), 3).passed());
}

TEST_CASE("tangentiality") {
    auto ex = [](const CPoly& f) { return psi_example(unit, f); };
    auto tg = [](const CPoly& f) { return psi_tangential(unit, f); };
    auto bad = tangentiality_check(unit, ex, Rational(3, 2), 5);
    CHECK_FALSE(bad.passed);
    REQUIRE(bad.monomial.has_value());
    CHECK(*bad.monomial == Exponents{0, 1, 2});
    CHECK(parse_ncelement(bad.witness, su2) == U("h*X*Z + 1/2*h^2*Y"));
    CHECK(tangentiality_check(unit, ex, 1, 5).passed);
    CHECK(tangentiality_check(unit, tg, Rational(3, 2), 5).passed);
    CHECK(tangentiality_check(unit, tg, Rational(1, 2), 5).passed);
}

TEST_CASE("multiplication by invariants") {
    CHECK(invariant_multiplication_check(unit, tangential_star(unit), 5).passed);
    auto s = invariant_multiplication_check(unit, symmetric_star(su2), 4);
    CHECK_FALSE(s.passed);
    CPoly p = P("x^2 + y^2 + z^2");
    CHECK(star_S(su2, P("x"), p) - P("x") * p == P("-1/3*h^2*x"));
}

TEST_CASE("no bidifferential first-order term") {
    auto r = bidiff_infeasibility(unit, 3);
    CHECK_FALSE(r.feasible);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->find("0 = -x*y*z") != std::string::npos);
    auto ok = bidiff_infeasibility(unit, 3, P("-x*y*z"));
    CHECK(ok.feasible);
    REQUIRE(ok.coefficients.size() == 4);
    CHECK(ok.coefficients[2] == P("-z"));
}

TEST_CASE("orbit configuration") {
    nlohmann::json j = {{"algebra", "su2"},
                        {"invariants", {"x^2+y^2+z^2"}},
                        {"constants", {"4"}},
                        {"lifts", {"4 + h"}}};
    Orbit o = load_orbit(j);
    CHECK(o.levels().front() == 4);
    CHECK(o.lifts().front() == HPoly(4) + HPoly::h());
    CHECK(load_orbit(orbit_to_json(o)).lifts() == o.lifts());
    j["constants"] = {"0"};
    CHECK_THROWS(load_orbit(j));
    CHECK_THROWS_AS(load_orbit({{"invariants", {"x^2 +"}}, {"constants", {"1"}}}), ConfigError);
}
