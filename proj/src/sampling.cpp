#include "orbitstar/sampling.hpp"

namespace orbitstar {

Scalar random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    long n = num(rng);
    if (n == 0)
        n = 1;
    Rational r(n, den(rng));
    r.canonicalize();
    return Scalar(r);
}

namespace {

HPoly random_coeff(std::mt19937& rng, unsigned max_h_degree)
{
    std::uniform_int_distribution<unsigned> hd(0, max_h_degree);
    return HPoly::monomial(random_rational(rng), hd(rng));
}

}  // namespace

CPoly random_cpoly(std::size_t nvars, std::mt19937& rng, unsigned max_degree, unsigned terms, unsigned max_h_degree)
{
    auto monos = monomials_up_to(nvars, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    CPoly out(nvars);
    for (unsigned t = 0; t < terms; ++t)
        out.add_term(monos[pick(rng)], random_coeff(rng, max_h_degree));
    return out;
}

CPoly random_homogeneous(std::size_t nvars, std::mt19937& rng, unsigned degree, unsigned terms)
{
    auto monos = monomials_of_degree(nvars, degree);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    CPoly out(nvars);
    for (unsigned t = 0; t < terms; ++t)
        out.add_term(monos[pick(rng)], HPoly(random_rational(rng)));
    return out;
}

NCElement random_ncelement(const LieAlgebraPtr& L, std::mt19937& rng, unsigned max_length, unsigned terms,
                           unsigned max_h_degree)
{
    std::uniform_int_distribution<unsigned> len(0, max_length);
    std::uniform_int_distribution<unsigned> gen(0, static_cast<unsigned>(L->dim() - 1));
    NCElement out(L);
    for (unsigned t = 0; t < terms; ++t) {
        Word w(len(rng));
        for (auto& g : w)
            g = static_cast<std::uint8_t>(gen(rng));
        out.add_term(w, random_coeff(rng, max_h_degree));
    }
    return normal_form(out);
}

}  // namespace orbitstar
