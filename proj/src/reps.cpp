#include "orbitstar/reps.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitstar {

bool validate_rep(const LieAlgebra& L, const MatrixRep& R)
{
    const std::size_t n = L.dim();
    if (R.matrices.size() != n)
        return false;
    for (const auto& m : R.matrices)
        if (m.rows() != R.dim || m.cols() != R.dim)
            return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix want = Matrix::zero(R.dim);
            for (const auto& [k, c] : L.bracket(i, j))
                want += R.matrices[k] * c;
            if (!(commutator(R.matrices[i], R.matrices[j]) == want))
                return false;
        }
    return true;
}

MatrixRep su2_defining_rep()
{
    const Scalar half_i(0, Rational(-1, 2));
    Matrix s1(2, 2), s2(2, 2), s3(2, 2);
    s1(0, 1) = 1;
    s1(1, 0) = 1;
    s2(0, 1) = -Scalar::i();
    s2(1, 0) = Scalar::i();
    s3(0, 0) = 1;
    s3(1, 1) = -1;
    return {2, {s1 * half_i, s2 * half_i, s3 * half_i}};
}

Matrix evaluate(const NCElement& u, const MatrixRep& R, const Scalar& h0)
{
    if (R.matrices.size() != u.algebra()->dim())
        throw std::invalid_argument("representation does not match the algebra");
    Matrix out = Matrix::zero(R.dim);
    for (const auto& [w, c] : u.terms()) {
        Matrix m = Matrix::identity(R.dim) * c.evaluate(h0);
        for (auto g : w)
            m = m * (R.matrices[g] * h0);
        out += m;
    }
    return out;
}

Scalar casimir_scalar(const NCElement& u, const MatrixRep& R, const Scalar& h0)
{
    auto s = evaluate(u, R, h0).scalar_multiple_of_identity();
    if (!s)
        throw std::invalid_argument("element does not act by a scalar");
    return *s;
}

NCElement sl2_omega(const LieAlgebraPtr& sl2)
{
    NCElement H = NCElement::generator(sl2, sl2->generator_index("H"));
    NCElement E = NCElement::generator(sl2, sl2->generator_index("E"));
    NCElement F = NCElement::generator(sl2, sl2->generator_index("F"));
    return E * F + F * E + H * H * HPoly(Scalar(Rational(1, 2)));
}

CPoly highest_weight_casimir(const NCElement& u)
{
    const LieAlgebraPtr& L = u.algebra();
    std::size_t iH = 0, iE = 0, iF = 0;
    try {
        iH = L->generator_index("H");
        iE = L->generator_index("E");
        iF = L->generator_index("F");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("algebra has no generators named H, E, F");
    }
    if (L->dim() != 3 || !(L->c(iH, iE, iE) == Scalar(2)) || !(L->c(iH, iF, iF) == Scalar(-2)) || !(L->c(iE, iF, iH) == Scalar(1)))
        throw std::invalid_argument("algebra is not an sl2 triple H, E, F");

    // reorder the basis as F < H < E so that E ends up rightmost
    Matrix M(3, 3);
    M(iF, 0) = 1;
    M(iH, 1) = 1;
    M(iE, 2) = 1;
    auto ordered = std::make_shared<const LieAlgebra>(change_basis(*L, BasisChange(M), {"F", "H", "E"}));
    std::vector<NCElement> images(3, NCElement(ordered));
    images[iF] = NCElement::generator(ordered, 0);
    images[iH] = NCElement::generator(ordered, 1);
    images[iE] = NCElement::generator(ordered, 2);
    NCElement v = substitute(u, images);

    CPoly out(1);
    for (const auto& [w, c] : v.terms()) {
        if (std::find(w.begin(), w.end(), 2) != w.end())
            continue;
        if (std::find(w.begin(), w.end(), 0) != w.end())
            throw std::invalid_argument("F-word survives: element is not central");
        out.add_term({static_cast<unsigned>(w.size())}, c);
    }
    return out;
}

nlohmann::json NonisomorphismReport::to_json() const
{
    return {{"bound", bound},
            {"c", c.to_string()},
            {"c_prime", c_prime.to_string()},
            {"spectrum_c", spectrum_c},
            {"spectrum_c_prime", spectrum_c_prime},
            {"witness", witness}};
}

NonisomorphismReport nonisomorphism_witness(const HPoly& c, const HPoly& c_prime, unsigned lambda_bound)
{
    auto sl2 = predefined("sl2");
    CPoly value = highest_weight_casimir(-sl2_omega(sl2)).evaluate_h(1);
    NonisomorphismReport r;
    r.bound = lambda_bound;
    r.c = c;
    r.c_prime = c_prime;
    const Scalar target = c.evaluate(1);
    const Scalar target_prime = c_prime.evaluate(1);
    for (unsigned lambda = 0; lambda <= lambda_bound; ++lambda) {
        Scalar v;
        for (const auto& [e, k] : value.terms()) {
            Scalar term = k.constant_term();
            for (unsigned p = 0; p < e[0]; ++p)
                term *= Scalar(static_cast<long>(lambda));
            v += term;
        }
        if (v == target)
            r.spectrum_c.push_back(lambda);
        if (v == target_prime)
            r.spectrum_c_prime.push_back(lambda);
    }
    std::vector<unsigned> common;
    std::set_intersection(r.spectrum_c.begin(), r.spectrum_c.end(), r.spectrum_c_prime.begin(),
                          r.spectrum_c_prime.end(), std::back_inserter(common));
    r.witness = common.empty() && (!r.spectrum_c.empty() || !r.spectrum_c_prime.empty());
    return r;
}

}  // namespace orbitstar
