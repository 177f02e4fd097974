#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitstar/envelope.hpp"
#include "orbitstar/expr.hpp"
#include "orbitstar/sampling.hpp"

#include <random>

using namespace orbitstar;

namespace {
auto su2 = predefined("su2");
NCElement U(const char* t) { return parse_ncelement(t, su2); }

// Rewrites the rightmost descent first; a different strategy from the library.
std::map<Word, HPoly> rightmost_normal_form(const LieAlgebra& L, std::map<Word, HPoly> todo)
{
    std::map<Word, HPoly> done;
    while (!todo.empty()) {
        auto node = todo.extract(todo.begin());
        Word w = node.key();
        HPoly c = node.mapped();
        if (c.is_zero())
            continue;
        std::size_t pos = w.size();
        for (std::size_t k = w.size(); k-- > 1;)
            if (w[k - 1] > w[k]) {
                pos = k - 1;
                break;
            }
        if (pos == w.size()) {
            done[w] += c;
            if (done[w].is_zero())
                done.erase(w);
            continue;
        }
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        todo[swapped] += c;
        for (const auto& [k, s] : L.bracket(w[pos], w[pos + 1])) {
            Word shorter(w.begin(), w.begin() + pos);
            shorter.push_back(static_cast<std::uint8_t>(k));
            shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
            todo[shorter] += c * HPoly::h() * HPoly(s);
        }
    }
    return done;
}
}  // namespace

TEST_CASE("commutation relations") {
    CHECK(U("Y*X") == U("X*Y - h*Z"));
    CHECK(U("Z*X") == U("X*Z + h*Y"));
    CHECK(U("Z*Y") == U("Y*Z - h*X"));
    CHECK(U("Y*X").to_string() == "X*Y - h*Z");
    CHECK(U("X*Y - Y*X") == U("h*Z"));
}

TEST_CASE("normal form agrees with an independent rewriting order") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> gen(0, 2), len(0, 6);
    for (int t = 0; t < 200; ++t) {
        Word w(len(rng));
        for (auto& g : w)
            g = static_cast<std::uint8_t>(gen(rng));
        auto got = normal_form(NCElement::word(su2, w));
        auto want = rightmost_normal_form(*su2, {{w, HPoly(1)}});
        CHECK(got.terms() == want);
        CHECK(got.is_canonical());
    }
    auto sl2 = predefined("sl2");
    Word w{2, 1, 0, 2, 1};
    CHECK(normal_form(NCElement::word(sl2, w)).terms() == rightmost_normal_form(*sl2, {{w, HPoly(1)}}));
}

TEST_CASE("associativity on random elements") {
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto a = random_ncelement(su2, rng, 3, 3);
        auto b = random_ncelement(su2, rng, 2, 3);
        auto c = random_ncelement(su2, rng, 2, 3);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("Casimir is central") {
    auto P = U("X^2 + Y^2 + Z^2");
    CHECK(is_central(P));
    CHECK_FALSE(is_central(U("X*Y")));
    CHECK(is_central(NCElement::scalar(su2, HPoly::h())));
}

TEST_CASE("grading and projections") {
    auto u = U("X*Y - h*Z");
    CHECK(graded_degree(u) == 2u);
    CHECK(is_graded_homogeneous(u));
    CHECK_FALSE(is_graded_homogeneous(U("X + X*Y")));
    CHECK_FALSE(graded_degree(NCElement(su2)).has_value());
    CHECK(project_h0(U("Y*X + h")) == parse_cpoly("x*y", *su2));
    CHECK(specialize(u, 2) == U("X*Y - 2*Z"));
    CHECK(power(U("X + Y"), 2) == U("X^2 + 2*X*Y - h*Z + Y^2"));
    CHECK(power(U("Z"), 0) == NCElement::scalar(su2, 1));
}

TEST_CASE("substitution and ordered embedding") {
    // X -> Y, Y -> X, Z -> -Z is an automorphism of [X,Y]=Z, [Y,Z]=X, [Z,X]=Y
    std::vector<NCElement> images{U("Y"), U("X"), U("-Z")};
    auto u = U("X*Y*Z");
    auto s = substitute(u, images);
    CHECK(s == U("Y*X*(-Z)"));
    CHECK(substitute(s, images) == u);
    CPoly f = parse_cpoly("x^2*z - 3*h*y", *su2);
    CHECK(ordered_readback(ordered_embedding(su2, f)) == f);
    CHECK(ordered_word({1, 0, 2}) == Word{0, 2, 2});
    CHECK(word_exponents({2, 0, 2}, 3) == Exponents{1, 0, 2});
    CHECK_THROWS_AS(multiply(U("X"), NCElement::generator(predefined("sl2"), 0)), std::invalid_argument);
}
