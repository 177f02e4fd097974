#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitstar/cohomology.hpp"
#include "orbitstar/expr.hpp"
#include "orbitstar/sampling.hpp"

#include <random>

using namespace orbitstar;

namespace {
auto su2 = predefined("su2");
CPoly P(const char* t) { return parse_cpoly(t, *su2); }

// Dense Gaussian elimination, independent of the sparse solver.
std::size_t dense_rank(const std::vector<SparseRow>& rows, std::size_t columns)
{
    std::vector<std::vector<Scalar>> m;
    for (const auto& r : rows) {
        std::vector<Scalar> v(columns);
        for (const auto& [k, c] : r)
            v.at(k) = c;
        m.push_back(std::move(v));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col].is_zero())
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col].is_zero())
                continue;
            Scalar f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < columns; ++c)
                m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::size_t columns(const std::vector<SparseRow>& rows)
{
    std::size_t n = 0;
    for (const auto& r : rows)
        if (!r.empty())
            n = std::max(n, r.rbegin()->first + 1);
    return n;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

Cochain1 random_c1(const LieAlgebra& L, std::mt19937& rng, unsigned d)
{
    Cochain1 c = Cochain1::zero(L);
    for (auto& v : c.values)
        v = random_homogeneous(L.dim(), rng, d, 3);
    return c;
}
}  // namespace

TEST_CASE("coboundary of the coordinate cochain") {
    Cochain1 c{{P("x"), P("y"), P("z")}};
    auto d = d1(*su2, c);
    CHECK(d.at(0, 1) == P("-z"));
    CHECK(d.at(1, 2) == P("-x"));
    CHECK(d.at(2, 0) == P("-y"));
    CHECK(d.at(1, 0) == P("z"));
    CHECK(d.at(0, 0).is_zero());
}

TEST_CASE("d2 d1 = 0") {
    std::mt19937 rng(9);
    for (unsigned deg = 0; deg <= 3; ++deg)
        for (int t = 0; t < 5; ++t)
            CHECK(d2(*su2, d1(*su2, random_c1(*su2, rng, deg))).is_zero());
    auto sl2 = predefined("sl2");
    CHECK(d2(*sl2, d1(*sl2, random_c1(*sl2, rng, 2))).is_zero());
}

TEST_CASE("every degree-d 2-cocycle of su2 is exact") {
    std::mt19937 rng(4);
    for (unsigned deg = 0; deg <= 3; ++deg) {
        auto C1 = random_c1(*su2, rng, deg);
        auto C = d1(*su2, C1);
        if (C.is_zero())
            continue;
        auto r = solve_coboundary(*su2, C, deg);
        REQUIRE(r.primitive.has_value());
        CHECK(d1(*su2, *r.primitive) == C);
    }
    Cochain2 bad(*su2);
    bad.set(0, 1, P("x"));
    CHECK_THROWS_AS(solve_coboundary(*su2, bad, 1), std::invalid_argument);
    Cochain2 mixed(*su2);
    mixed.set(0, 1, P("x + x^2"));
    CHECK_THROWS_AS(solve_coboundary(*su2, mixed, 1), std::invalid_argument);
}

TEST_CASE("second cohomology dimensions") {
    for (unsigned deg = 0; deg <= 3; ++deg) {
        auto r1 = d1_rows(*su2, deg);
        auto r2 = d2_rows(*su2, deg);
        std::size_t nd = monomials_of_degree(3, deg).size();
        std::size_t ker2 = binomial(3, 2) * nd - dense_rank(r2, std::max(columns(r2), std::size_t(1)));
        std::size_t im1 = dense_rank(r1, std::max(columns(r1), std::size_t(1)));
        CHECK(ker2 - im1 == h2_dimension(*su2, static_cast<int>(deg)));
        CHECK(h2_dimension(*su2, static_cast<int>(deg)) == 0);
    }
    CHECK(h2_dimension(*su2, -1) == 0);
    LieAlgebra ab({"A", "B"}, StructureConstants(2));
    for (int deg = 0; deg <= 3; ++deg)
        CHECK(h2_dimension(ab, deg) == static_cast<std::size_t>(deg + 1));
}

TEST_CASE("extension of a 1-cochain to a derivation") {
    Cochain1 c = Cochain1::zero(*su2);
    c.values[0] = P("z");
    Derivation D = extend_c1(c);
    CHECK(D(P("x^2")) == P("2*x*z"));
    CHECK(D(P("y")).is_zero());
    std::mt19937 rng(2);
    Derivation E = extend_c1(random_c1(*su2, rng, 2));
    for (int t = 0; t < 5; ++t) {
        CPoly f = random_cpoly(3, rng, 3, 3), g = random_cpoly(3, rng, 3, 3);
        CHECK(E(f * g) == E(f) * g + f * E(g));
    }
}

TEST_CASE("cochain storage") {
    Cochain2 c(*su2);
    c.set(2, 0, P("y"));
    CHECK(c.at(0, 2) == P("-y"));
    CHECK_THROWS(c.set(1, 1, P("x")));
    CHECK_THROWS(c.at(3, 0));
    CHECK(homogeneous_degree(c) == 1u);
    CHECK_FALSE(homogeneous_degree(Cochain2(*su2)).has_value());
}
