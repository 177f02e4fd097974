#include "orbitstar/cohomology.hpp"

#include <stdexcept>

namespace orbitstar {

namespace {

CPoly act(const LieAlgebra& L, std::size_t a, const CPoly& m)
{
    return kirillov_bracket(L, CPoly::variable(L.dim(), a), m);
}

std::optional<unsigned> common_degree(const std::vector<CPoly>& polys)
{
    std::optional<unsigned> d;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms()) {
            unsigned k = total_degree(e);
            if (d && *d != k)
                return std::nullopt;
            d = k;
        }
    return d;
}

/// Position of (i < j) in the row-major list of pairs.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j)
{
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::array<std::size_t, 3>> triples(std::size_t n)
{
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                out.push_back({i, j, k});
    return out;
}

}  // namespace

Cochain1 Cochain1::zero(const LieAlgebra& L)
{
    return {std::vector<CPoly>(L.dim(), CPoly(L.dim()))};
}

bool Cochain1::is_zero() const
{
    for (const auto& v : values)
        if (!v.is_zero())
            return false;
    return true;
}

Cochain2::Cochain2(const LieAlgebra& L)
    : n_(L.dim()), nvars_(L.dim()), upper_(n_ * (n_ > 0 ? n_ - 1 : 0) / 2, CPoly(L.dim()))
{
}

std::size_t Cochain2::slot(std::size_t i, std::size_t j) const
{
    if (i >= n_ || j >= n_)
        throw std::out_of_range("cochain index out of range");
    return pair_index(n_, i, j);
}

CPoly Cochain2::at(std::size_t i, std::size_t j) const
{
    if (i >= n_ || j >= n_)
        throw std::out_of_range("cochain index out of range");
    if (i == j)
        return CPoly(nvars_);
    return i < j ? upper_[slot(i, j)] : -upper_[slot(j, i)];
}

void Cochain2::set(std::size_t i, std::size_t j, const CPoly& value)
{
    if (i == j) {
        if (!value.is_zero())
            throw std::invalid_argument("diagonal of a 2-cochain must vanish");
        return;
    }
    if (i < j)
        upper_[slot(i, j)] = value;
    else
        upper_[slot(j, i)] = -value;
}

bool Cochain2::is_zero() const
{
    for (const auto& v : upper_)
        if (!v.is_zero())
            return false;
    return true;
}

Cochain3::Cochain3(const LieAlgebra& L) : n_(L.dim()), nvars_(L.dim()) {}

namespace {

/// Sorts (i, j, k) and returns the sign of the permutation, 0 on repeats.
int sort3(std::array<std::size_t, 3>& t)
{
    int sign = 1;
    for (int pass = 0; pass < 2; ++pass)
        for (int a = 0; a < 2; ++a)
            if (t[a] > t[a + 1]) {
                std::swap(t[a], t[a + 1]);
                sign = -sign;
            }
    if (t[0] == t[1] || t[1] == t[2])
        return 0;
    return sign;
}

}  // namespace

CPoly Cochain3::at(std::size_t i, std::size_t j, std::size_t k) const
{
    if (i >= n_ || j >= n_ || k >= n_)
        throw std::out_of_range("cochain index out of range");
    std::array<std::size_t, 3> t{i, j, k};
    int sign = sort3(t);
    auto it = values_.find(t);
    if (sign == 0 || it == values_.end())
        return CPoly(nvars_);
    return sign > 0 ? it->second : -it->second;
}

void Cochain3::set(std::size_t i, std::size_t j, std::size_t k, const CPoly& value)
{
    if (i >= n_ || j >= n_ || k >= n_)
        throw std::out_of_range("cochain index out of range");
    std::array<std::size_t, 3> t{i, j, k};
    int sign = sort3(t);
    if (sign == 0) {
        if (!value.is_zero())
            throw std::invalid_argument("3-cochain must vanish on repeated indices");
        return;
    }
    values_[t] = sign > 0 ? value : -value;
}

bool Cochain3::is_zero() const
{
    for (const auto& [t, v] : values_)
        if (!v.is_zero())
            return false;
    return true;
}

Cochain2 d1(const LieAlgebra& L, const Cochain1& C)
{
    const std::size_t n = L.dim();
    if (C.values.size() != n)
        throw std::invalid_argument("1-cochain needs one value per generator");
    Cochain2 out(L);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            CPoly v(n);
            for (const auto& [k, c] : L.bracket(i, j))
                v += C.values[k] * HPoly(c);
            v -= act(L, i, C.values[j]);
            v += act(L, j, C.values[i]);
            out.set(i, j, v);
        }
    return out;
}

Cochain3 d2(const LieAlgebra& L, const Cochain2& C)
{
    const std::size_t n = L.dim();
    if (C.dim() != n)
        throw std::invalid_argument("2-cochain does not match the algebra");
    auto bracket_term = [&](std::size_t i, std::size_t j, std::size_t k) {
        CPoly v(n);
        for (const auto& [l, c] : L.bracket(i, j))
            v += C.at(l, k) * HPoly(c);
        return v;
    };
    Cochain3 out(L);
    for (const auto& [i, j, k] : triples(n)) {
        CPoly v = act(L, i, C.at(j, k)) - act(L, j, C.at(i, k)) + act(L, k, C.at(i, j));
        v -= bracket_term(i, j, k);
        v += bracket_term(i, k, j);
        v -= bracket_term(j, k, i);
        out.set(i, j, k, v);
    }
    return out;
}

std::optional<unsigned> homogeneous_degree(const Cochain1& C)
{
    return common_degree(C.values);
}

std::optional<unsigned> homogeneous_degree(const Cochain2& C)
{
    std::vector<CPoly> all;
    for (std::size_t i = 0; i < C.dim(); ++i)
        for (std::size_t j = i + 1; j < C.dim(); ++j)
            all.push_back(C.at(i, j));
    return common_degree(all);
}

std::vector<SparseRow> d1_rows(const LieAlgebra& L, unsigned degree)
{
    const std::size_t n = L.dim();
    auto monos = monomials_of_degree(n, degree);
    std::map<Exponents, std::size_t> index;
    for (std::size_t m = 0; m < monos.size(); ++m)
        index.emplace(monos[m], m);
    std::vector<SparseRow> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& m : monos) {
            Cochain1 C = Cochain1::zero(L);
            C.values[i] = CPoly::monomial(m);
            Cochain2 image = d1(L, C);
            SparseRow row;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) {
                    CPoly v = image.at(a, b);
                    for (const auto& [e, c] : v.terms())
                        row[pair_index(n, a, b) * monos.size() + index.at(e)] = c.constant_term();
                }
            rows.push_back(std::move(row));
        }
    return rows;
}

std::vector<SparseRow> d2_rows(const LieAlgebra& L, unsigned degree)
{
    const std::size_t n = L.dim();
    auto monos = monomials_of_degree(n, degree);
    std::map<Exponents, std::size_t> index;
    for (std::size_t m = 0; m < monos.size(); ++m)
        index.emplace(monos[m], m);
    auto trip = triples(n);
    std::vector<SparseRow> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (const auto& m : monos) {
                Cochain2 C(L);
                C.set(i, j, CPoly::monomial(m));
                Cochain3 image = d2(L, C);
                SparseRow row;
                for (std::size_t t = 0; t < trip.size(); ++t) {
                    CPoly v = image.at(trip[t][0], trip[t][1], trip[t][2]);
                    for (const auto& [e, c] : v.terms())
                        row[t * monos.size() + index.at(e)] = c.constant_term();
                }
                rows.push_back(std::move(row));
            }
    return rows;
}

std::size_t h2_dimension(const LieAlgebra& L, int degree)
{
    if (degree < 0)
        return 0;
    const std::size_t n = L.dim();
    const auto d = static_cast<unsigned>(degree);
    const std::size_t nd = monomials_of_degree(n, d).size();
    const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t trips = triples(n).size();
    std::size_t rank2 = sparse_rank(d2_rows(L, d), trips * nd);
    std::size_t rank1 = sparse_rank(d1_rows(L, d), pairs * nd);
    return pairs * nd - rank2 - rank1;
}

CoboundaryResult solve_coboundary(const LieAlgebra& L, const Cochain2& C, unsigned degree)
{
    const std::size_t n = L.dim();
    if (!C.is_zero()) {
        auto d = homogeneous_degree(C);
        if (!d || *d != degree)
            throw std::invalid_argument("2-cochain is not homogeneous of degree " + std::to_string(degree));
    }
    if (!d2(L, C).is_zero())
        throw std::invalid_argument("2-cochain is not a cocycle");
    auto monos = monomials_of_degree(n, degree);
    const std::size_t nd = monos.size();
    auto rows = d1_rows(L, degree);

    // column view: one equation per (pair, monomial)
    std::map<std::size_t, SparseRow> equations;
    for (std::size_t u = 0; u < rows.size(); ++u)
        for (const auto& [col, c] : rows[u])
            equations[col][u] = c;
    const auto& names = L.coords();
    std::vector<std::size_t> all_cols;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t m = 0; m < nd; ++m)
                all_cols.push_back(pair_index(n, a, b) * nd + m);

    CoboundaryResult out;
    out.unknowns = n * nd;
    LinearSystem sys(n * nd);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            CPoly target = C.at(a, b);
            for (std::size_t m = 0; m < nd; ++m) {
                std::size_t col = pair_index(n, a, b) * nd + m;
                auto it = equations.find(col);
                SparseRow row = it == equations.end() ? SparseRow{} : it->second;
                Scalar rhs = target.coeff(monos[m]).constant_term();
                sys.add_equation(std::move(row), rhs,
                                 "C(" + L.names()[a] + "," + L.names()[b] + ") at " +
                                     CPoly::monomial(monos[m]).to_string(names) + " = " + rhs.to_string());
            }
        }
    out.rank = sys.rank();
    if (!sys.consistent()) {
        out.certificate = sys.inconsistency();
        return out;
    }
    auto x = sys.solution();
    Cochain1 prim = Cochain1::zero(L);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < nd; ++m)
            prim.values[i].add_term(monos[m], HPoly(x[i * nd + m]));
    out.primitive = std::move(prim);
    return out;
}

CPoly Derivation::operator()(const CPoly& f) const
{
    if (c_.values.size() != f.nvars())
        throw std::invalid_argument("derivation and polynomial have different variable counts");
    CPoly out(f.nvars());
    for (std::size_t k = 0; k < c_.values.size(); ++k)
        out += c_.values[k] * partial_derivative(f, k);
    return out;
}

}  // namespace orbitstar
