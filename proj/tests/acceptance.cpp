#include "orbitstar/cohomology.hpp"
#include "orbitstar/expr.hpp"
#include "orbitstar/orbit.hpp"
#include "orbitstar/reps.hpp"
#include "orbitstar/sampling.hpp"
#include "orbitstar/suites.hpp"

#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace orbitstar;

namespace {

auto su2 = predefined("su2");
CPoly P(const char* t) { return parse_cpoly(t, *su2); }
NCElement U(const char* t) { return parse_ncelement(t, su2); }

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
    void suite(const std::string& name)
    {
        for (const auto& c : run_suite(name, {}))
            if (!c.passed)
                failures.push_back(name + "/" + c.name + (c.witness.empty() ? "" : ": " + c.witness));
    }
};

void pbw(Criterion& c)
{
    c.suite("pbw");
    // hand-built right-hand sides: word + h * generator
    auto rhs = [](Word w, std::uint8_t g, long sign) {
        NCElement e = NCElement::word(su2, std::move(w));
        e.add_term({g}, HPoly::h() * HPoly(sign));
        return e;
    };
    c.check(normal_form(NCElement::word(su2, {1, 0})) == rhs({0, 1}, 2, -1), "YX = XY - hZ");
    c.check(normal_form(NCElement::word(su2, {2, 0})) == rhs({0, 2}, 1, 1), "ZX = XZ + hY");
    c.check(normal_form(NCElement::word(su2, {2, 1})) == rhs({1, 2}, 0, -1), "ZY = YZ - hX");
    c.check(U("(X*Y - h*Z)*Z") == U("Y*X*Z"), "YXZ confluence");
    c.check(U("(Y*Z - h*X)*X") == U("Z*(X*Y - h*Z)"), "ZYX confluence");
    c.check(U("Y*X*Z") == U("X*Y*Z - h*Z^2"), "YXZ golden");
}

void centrality(Criterion& c)
{
    c.suite("centrality");
    auto p = U("X^2 + Y^2 + Z^2");
    for (const char* g : {"X", "Y", "Z"})
        c.check((p * U(g) - U(g) * p).is_zero(), std::string("[P, ") + g + "]");
}

void star_sym(Criterion& c)
{
    c.suite("star-sym");
    c.check(star_S(su2, P("x"), P("y")).to_string(su2->coords()) == "x*y + 1/2*h*z", "x*y");
    auto report = check_deformation_axioms(symmetric_star(su2), 4, 5);
    c.check(report.passed(), "axioms");
}

void orbit_star_c(Criterion& c)
{
    c.suite("orbit-star");
    Orbit o = Orbit::su2(1);
    c.check(orbit_star(o, P("z"), P("z")) == P("1 - x^2 - y^2"), "z*z");
    c.check(orbit_star(o, P("y"), P("x")) == P("x*y - h*z"), "y*x");
    c.check(check_deformation_axioms(orbit_star_product(o), 4).passed(), "axioms");
}

void lemma(Criterion& c)
{
    c.suite("lemma");
    Orbit o = Orbit::su2(1);
    std::size_t cases = 0;
    for (unsigned d = 0; d <= 6; ++d)
        for (unsigned a = 0; a <= d; ++a)
            for (unsigned b = 0; a + b <= d; ++b) {
                unsigned d2 = d - a - b;
                for (unsigned e = 0; e <= d2; ++e) {
                    if (a + b + e + (d2 - e) != d)
                        continue;
                    CPoly p1 = CPoly::monomial({a, b, 0});
                    CPoly p2 = CPoly::monomial({e, d2 - e, 0});
                    CPoly want = orbit_reduce(o, p1 * p2 - P("z") * partial_derivative(p1, 1) *
                                                                partial_derivative(p2, 0) * HPoly::h());
                    CPoly got = orbit_star(o, p1, p2).truncate_h(2);
                    c.check(got == want, p1.to_string(su2->coords()) + ", " + p2.to_string(su2->coords()));
                    ++cases;
                }
            }
    c.check(cases > 100, "coverage");
}

void nondiff(Criterion& c)
{
    c.suite("nondiff");
    Orbit o = Orbit::su2(1);
    auto r = bidiff_infeasibility(o, 3);
    c.check(!r.feasible && r.certificate && r.certificate->find("0 = -x*y*z") != std::string::npos,
            "certificate");
    c.check(bidiff_infeasibility(o, 3, P("-x*y*z")).feasible, "control");
}

void tangentiality(Criterion& c)
{
    c.suite("tangentiality");
    Orbit o = Orbit::su2(1);
    Rational delta(1, 4);
    Orbit n = o.neighbor(1 + delta);
    CPoly g = P("y*z^2") * (P("x^2 + y^2 + z^2") - CPoly::constant(3, HPoly(Scalar(1 + delta))));
    NCElement rem = ideal_reduce_h(n, psi_example(o, g));
    NCElement want = U("X*Z") * HPoly(Scalar(2 * delta)) * HPoly::h() +
                     U("Y") * HPoly(Scalar(delta)) * HPoly::h() * HPoly::h();
    c.check(rem == want, "remainder " + rem.to_string());
    c.check(ideal_reduce_h(n, psi_tangential(o, g)).is_zero(), "tangential map");
}

void invariant_mult(Criterion& c)
{
    c.suite("invariant-mult");
    Orbit o = Orbit::su2(1);
    auto star = tangential_star(o);
    CPoly p = P("x^2 + y^2 + z^2");
    for (const auto& e : monomials_up_to(3, 3)) {
        CPoly g = CPoly::monomial(e);
        c.check(star(g, p) == g * p, "g*p " + g.to_string(su2->coords()));
    }
    c.check(!(star_S(su2, P("x"), p) == P("x") * p), "symmetrizer violation");
}

void reps(Criterion& c)
{
    c.suite("reps");
    auto p = U("X^2 + Y^2 + Z^2");
    c.check(casimir_scalar(p, su2_defining_rep(), 1) == Scalar(Rational(-3, 4)), "defining");
    c.check(casimir_scalar(p, adjoint_rep(*su2), 1) == Scalar(-2), "adjoint");
    auto sl2 = predefined("sl2");
    c.check(highest_weight_casimir(sl2_omega(sl2)).to_string({"l"}) == "1/2*l^2 + h*l", "highest weight");
    auto r = nonisomorphism_witness(HPoly(-4), HPoly(-4) + HPoly(Scalar(Rational(1, 3))) * HPoly::h(), 20);
    c.check(r.witness, "spectra");
}

void cohomology(Criterion& c)
{
    c.suite("cohomology");
    for (int d = 0; d <= 4; ++d)
        c.check(h2_dimension(*su2, d) == 0, "H2 degree " + std::to_string(d));
    LieAlgebra ab({"A", "B"}, StructureConstants(2));
    c.check(h2_dimension(ab, 0) > 0, "abelian");
}

void grading(Criterion& c)
{
    c.suite("grading");
    for (const char* rel : {"X*Y - Y*X - h*Z", "Y*Z - Z*Y - h*X", "Z*X - X*Z - h*Y"})
        c.check(is_graded_homogeneous(parse_ncelement(rel, su2)) || parse_ncelement(rel, su2).is_zero(), rel);
    std::mt19937 rng(21);
    for (int t = 0; t < 10; ++t) {
        auto a = random_ncelement(su2, rng, 3, 3), b = random_ncelement(su2, rng, 3, 3);
        c.check(project_h0(a * b) == project_h0(a) * project_h0(b), "project_h0");
        c.check(specialize(a * b, 2) == specialize(specialize(a, 2) * specialize(b, 2), 2), "specialize");
    }
}

}  // namespace

int main()
{
    struct Entry {
        const char* title;
        void (*run)(Criterion&);
    };
    const Entry entries[] = {
        {"PBW kernel", pbw},
        {"Centrality", centrality},
        {"Deformation axioms for the symmetrizer product", star_sym},
        {"Orbit star product", orbit_star_c},
        {"First-order lemma", lemma},
        {"Non-differentiability certificate", nondiff},
        {"Tangentiality", tangentiality},
        {"Invariant multiplication", invariant_mult},
        {"Representations", reps},
        {"Cohomology", cohomology},
        {"Specialization and grading", grading},
    };
    int failed = 0;
    int number = 0;
    for (const auto& e : entries) {
        Criterion c{++number, e.title, {}};
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.failures.push_back(std::string("exception: ") + ex.what());
        }
        std::printf("%s %2d %s\n", c.failures.empty() ? "PASS" : "FAIL", c.number, c.title.c_str());
        for (const auto& f : c.failures)
            std::printf("     %s\n", f.c_str());
        failed += !c.failures.empty();
    }
    return failed == 0 ? 0 : 1;
}
