#pragma once

#include "orbitstar/envelope.hpp"
#include "orbitstar/lie.hpp"
#include "orbitstar/polyalg.hpp"
#include "orbitstar/scalar.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbitstar {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Rational, ImagUnit, HParam, Name, Sum, Product, Power, Group };

    Kind kind;
    std::size_t offset = 0;  // position in the source; ignored by ==
    Rational value;          // Rational
    std::string name;        // Name
    unsigned exponent = 0;   // Power
    std::vector<ExprPtr> children;
    std::vector<int> signs;  // Sum: +1 / -1 per child

    friend bool operator==(const Expr& a, const Expr& b);
};

/// expr := ['+'|'-'] term (('+'|'-') term)*
/// term := factor ('*' factor)*
/// factor := atom ('^' natural)?
/// atom := natural ['/' natural] | 'i' | 'h' | name | '(' expr ')'
ExprPtr parse_expression(std::string_view text);
std::string print_expression(const Expr& e);

/// Names resolve to the coordinate functions of the algebra.
CPoly to_cpoly(const Expr& e, const LieAlgebra& L);
/// Names resolve to generator labels; product order is kept.
NCElement to_ncelement(const Expr& e, const LieAlgebraPtr& L);
/// Only rationals, i and h.
HPoly to_hpoly(const Expr& e);

CPoly parse_cpoly(std::string_view text, const LieAlgebra& L);
NCElement parse_ncelement(std::string_view text, const LieAlgebraPtr& L);
HPoly parse_hpoly(std::string_view text);

}  // namespace orbitstar
