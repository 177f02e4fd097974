#include "orbitstar/lie.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace orbitstar {

void StructureConstants::set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, const Scalar& value)
{
    (*this)(i, j, k) = value;
    (*this)(j, i, k) = -value;
}

bool check_antisymmetry(const StructureConstants& c)
{
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(c(i, j, k) == -c(j, i, k)))
                    return false;
    return true;
}

bool check_jacobi(const StructureConstants& c)
{
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Scalar sum;
                    for (std::size_t m = 0; m < n; ++m) {
                        sum += c(i, j, m) * c(m, k, l);
                        sum += c(j, k, m) * c(m, i, l);
                        sum += c(k, i, m) * c(m, j, l);
                    }
                    if (!sum.is_zero())
                        return false;
                }
    return true;
}

namespace {

bool reserved_name(const std::string& s)
{
    return s == "h" || s == "i";
}

bool valid_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
}

std::vector<std::string> default_coords(const std::vector<std::string>& names)
{
    std::vector<std::string> coords;
    for (const auto& name : names) {
        std::string lower = name;
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        bool clash = reserved_name(lower) || std::find(names.begin(), names.end(), lower) != names.end() ||
                     std::find(coords.begin(), coords.end(), lower) != coords.end();
        coords.push_back(clash ? "x" + name : lower);
    }
    return coords;
}

void check_names(const std::vector<std::string>& names, const char* what)
{
    for (std::size_t a = 0; a < names.size(); ++a) {
        if (!valid_identifier(names[a]) || reserved_name(names[a]))
            throw std::invalid_argument(std::string("invalid ") + what + " name '" + names[a] + "'");
        for (std::size_t b = 0; b < a; ++b)
            if (names[a] == names[b])
                throw std::invalid_argument(std::string("duplicate ") + what + " name '" + names[a] + "'");
    }
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> names, StructureConstants c, std::vector<std::string> coords)
    : names_(std::move(names)), coords_(std::move(coords)), c_(std::move(c))
{
    if (names_.size() != c_.dim())
        throw std::invalid_argument("generator name count does not match dimension");
    if (c_.dim() > 255)
        throw std::invalid_argument("dimension above 255 is not supported");
    if (coords_.empty())
        coords_ = default_coords(names_);
    if (coords_.size() != names_.size())
        throw std::invalid_argument("coordinate name count does not match dimension");
    check_names(names_, "generator");
    check_names(coords_, "coordinate");
    if (!check_antisymmetry(c_))
        throw std::invalid_argument("structure constants are not antisymmetric");
    if (!check_jacobi(c_))
        throw std::invalid_argument("structure constants violate the Jacobi identity");
    const std::size_t n = c_.dim();
    brackets_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!c_(i, j, k).is_zero())
                    brackets_[i * n + j].emplace_back(k, c_(i, j, k));
}

std::size_t LieAlgebra::generator_index(std::string_view name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw std::out_of_range("unknown generator '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t LieAlgebra::coord_index(std::string_view name) const
{
    auto it = std::find(coords_.begin(), coords_.end(), name);
    if (it == coords_.end())
        throw std::out_of_range("unknown coordinate '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - coords_.begin());
}

KillingForm killing_form(const LieAlgebra& L)
{
    const std::size_t n = L.dim();
    Matrix K(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar sum;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    sum += L.c(i, k, l) * L.c(j, l, k);
            K(i, j) = sum;
        }
    Scalar det = K.determinant();
    return {std::move(K), std::move(det)};
}

MatrixRep adjoint_rep(const LieAlgebra& L)
{
    const std::size_t n = L.dim();
    MatrixRep rep{n, {}};
    for (std::size_t i = 0; i < n; ++i) {
        Matrix ad(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                ad(k, j) = L.c(i, j, k);
        rep.matrices.push_back(std::move(ad));
    }
    return rep;
}

BasisChange::BasisChange(Matrix m) : m_(std::move(m))
{
    if (!m_.is_square())
        throw std::invalid_argument("basis change matrix must be square");
    auto inv = m_.inverse();
    if (!inv)
        throw std::invalid_argument("basis change matrix is singular");
    inv_ = std::move(*inv);
}

LieAlgebra change_basis(const LieAlgebra& L, const BasisChange& change, std::vector<std::string> names)
{
    const std::size_t n = L.dim();
    const Matrix& M = change.matrix();
    const Matrix& Minv = change.inverse();
    if (M.rows() != n)
        throw std::invalid_argument("basis change dimension mismatch");
    StructureConstants c(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            // [Y_a, Y_b] in the old basis
            std::vector<Scalar> old(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (M(i, a).is_zero())
                    continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (M(j, b).is_zero())
                        continue;
                    Scalar w = M(i, a) * M(j, b);
                    for (const auto& [k, cijk] : L.bracket(i, j))
                        old[k] += w * cijk;
                }
            }
            for (std::size_t r = 0; r < n; ++r) {
                Scalar sum;
                for (std::size_t k = 0; k < n; ++k)
                    sum += Minv(r, k) * old[k];
                c(a, b, r) = sum;
            }
        }
    if (names.empty())
        for (std::size_t a = 0; a < n; ++a)
            names.push_back("Y" + std::to_string(a));
    return LieAlgebra(std::move(names), std::move(c));
}

LieAlgebraPtr predefined(std::string_view name)
{
    if (name == "su2") {
        StructureConstants c(3);
        c.set_antisymmetric(0, 1, 2, 1);  // [X,Y] = Z
        c.set_antisymmetric(1, 2, 0, 1);  // [Y,Z] = X
        c.set_antisymmetric(2, 0, 1, 1);  // [Z,X] = Y
        return std::make_shared<const LieAlgebra>(std::vector<std::string>{"X", "Y", "Z"}, std::move(c),
                                                  std::vector<std::string>{"x", "y", "z"});
    }
    if (name == "sl2") {
        StructureConstants c(3);
        c.set_antisymmetric(0, 1, 1, 2);   // [H,E] = 2E
        c.set_antisymmetric(0, 2, 2, -2);  // [H,F] = -2F
        c.set_antisymmetric(1, 2, 0, 1);   // [E,F] = H
        return std::make_shared<const LieAlgebra>(std::vector<std::string>{"H", "E", "F"}, std::move(c),
                                                  std::vector<std::string>{"t", "e", "f"});
    }
    throw std::invalid_argument("unknown predefined algebra '" + std::string(name) + "'");
}

BasisChange su2_to_sl2_change()
{
    // columns: H = 2iZ, E = iX - Y, F = iX + Y
    Matrix M(3, 3);
    M(2, 0) = Scalar(0, 2);
    M(0, 1) = Scalar::i();
    M(1, 1) = -1;
    M(0, 2) = Scalar::i();
    M(1, 2) = 1;
    return BasisChange(std::move(M));
}

namespace {

Scalar json_scalar(const nlohmann::json& v)
{
    if (v.is_number_integer())
        return Scalar(v.get<long>());
    if (v.is_string())
        return parse_scalar(v.get<std::string>());
    throw std::invalid_argument("coefficient must be a string or integer");
}

}  // namespace

LieAlgebraPtr load_algebra(const nlohmann::json& j)
{
    if (j.is_string())
        return predefined(j.get<std::string>());
    const auto n = j.at("dim").get<std::size_t>();
    auto names = j.at("names").get<std::vector<std::string>>();
    std::vector<std::string> coords;
    if (j.contains("coords"))
        coords = j.at("coords").get<std::vector<std::string>>();
    StructureConstants c(n);
    for (const auto& entry : j.at("brackets")) {
        const auto i = entry.at(0).get<std::size_t>();
        const auto jj = entry.at(1).get<std::size_t>();
        if (i >= jj || jj >= n)
            throw std::invalid_argument("bracket entries must list index pairs i < j < dim");
        for (const auto& term : entry.at(2)) {
            const auto k = term.at(0).get<std::size_t>();
            if (k >= n)
                throw std::invalid_argument("bracket result index out of range");
            c.set_antisymmetric(i, jj, k, c(i, jj, k) + json_scalar(term.at(1)));
        }
    }
    return std::make_shared<const LieAlgebra>(std::move(names), std::move(c), std::move(coords));
}

nlohmann::json algebra_to_json(const LieAlgebra& L)
{
    nlohmann::json brackets = nlohmann::json::array();
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [k, v] : L.bracket(i, j))
                terms.push_back({k, v.to_string()});
            if (!terms.empty())
                brackets.push_back({i, j, terms});
        }
    return {{"dim", n}, {"names", L.names()}, {"coords", L.coords()}, {"brackets", brackets}};
}

}  // namespace orbitstar
