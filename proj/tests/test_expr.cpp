#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitstar/expr.hpp"

#include <random>

using namespace orbitstar;

namespace {
auto su2 = predefined("su2");

std::size_t error_offset(const std::string& text)
{
    try {
        parse_cpoly(text, *su2);
    } catch (const ParseError& e) {
        return e.offset();
    }
    return std::string::npos;
}

std::string random_expression(std::mt19937& rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 6 : 3);
    const char* atoms[] = {"x", "y", "z", "h", "i", "2/3", "5"};
    switch (pick(rng)) {
    case 0:
    case 1:
    case 2:
    case 3:
        return atoms[std::uniform_int_distribution<int>(0, 6)(rng)];
    case 4:
        return random_expression(rng, depth - 1) + " + " + random_expression(rng, depth - 1);
    case 5:
        return random_expression(rng, depth - 1) + "*" + random_expression(rng, depth - 1);
    default:
        return "(" + random_expression(rng, depth - 1) + " - " + random_expression(rng, depth - 1) + ")^2";
    }
}
}  // namespace

TEST_CASE("parsing") {
    CHECK(parse_cpoly("x*y + 1/2*h*z", *su2).to_string(su2->coords()) == "x*y + 1/2*h*z");
    CHECK(parse_cpoly("-(x - y)^2", *su2) == parse_cpoly("-x^2 + 2*x*y - y^2", *su2));
    CHECK(parse_cpoly("i*i", *su2) == parse_cpoly("-1", *su2));
    CHECK(parse_hpoly("(1 + i)*h^2 + h - 3/2").to_string() == "-3/2 + h + (1 + i)*h^2");
    CHECK(parse_ncelement("Y*X", su2).to_string() == "X*Y - h*Z");
    CHECK(parse_ncelement("  Z * Z ", su2) == parse_ncelement("Z^2", su2));
}

TEST_CASE("syntax errors report offsets") {
    CHECK(error_offset("x + * y") == 4);
    CHECK(error_offset("x^") == 2);
    CHECK(error_offset("(x + y") == 6);
    CHECK(error_offset("x y") == 2);
    CHECK(error_offset("1/0") == 2);
    CHECK(error_offset("") == 0);
    CHECK(error_offset("w + x") == 0);
    CHECK(error_offset("x + Q") == 4);
    try {
        parse_expression("x + * y");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "offset 4: unexpected '*'");
    }
    CHECK_THROWS_AS(parse_ncelement("x", su2), ParseError);
    CHECK_THROWS_AS(parse_hpoly("x"), ParseError);
}

TEST_CASE("printing round trip") {
    auto e = parse_expression("-x^2 + 2/3*(y - h)^3*i");
    CHECK(print_expression(*e) == "-x^2 + 2/3*(y - h)^3*i");
    std::mt19937 rng(17);
    for (int t = 0; t < 200; ++t) {
        std::string s = random_expression(rng, 3);
        auto a = parse_expression(s);
        auto b = parse_expression(print_expression(*a));
        CHECK(*a == *b);
        CHECK(to_cpoly(*a, *su2) == parse_cpoly(s, *su2));
    }
}

TEST_CASE("ast shape") {
    auto e = parse_expression("x*y^3");
    REQUIRE(e->kind == Expr::Kind::Product);
    REQUIRE(e->children.size() == 2);
    CHECK(e->children[1]->kind == Expr::Kind::Power);
    CHECK(e->children[1]->exponent == 3);
    CHECK(e->children[1]->offset == 2);
    auto n = parse_expression("Y*X");
    CHECK(n->children[0]->name == "Y");
}
