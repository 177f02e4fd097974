#pragma once

#include "orbitstar/lie.hpp"
#include "orbitstar/scalar.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace orbitstar {

/// Exponent vector of a commutative monomial x_1^e_1 ... x_n^e_n.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);

/// All exponent vectors in n variables with total degree exactly d.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree);
/// All exponent vectors in n variables with total degree <= d, by increasing degree.
std::vector<Exponents> monomials_up_to(std::size_t nvars, unsigned max_degree);

/// Element of C[g*][h]: a polynomial in x_1..x_n whose coefficients are
/// polynomials in h.
class CPoly {
public:
    using Terms = std::map<Exponents, HPoly>;

    CPoly() = default;
    explicit CPoly(std::size_t nvars) : nvars_(nvars) {}

    static CPoly constant(std::size_t nvars, const HPoly& c);
    static CPoly variable(std::size_t nvars, std::size_t index);
    static CPoly monomial(Exponents e, const HPoly& c = HPoly(1));

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of a monomial (zero if absent).
    HPoly coeff(const Exponents& e) const;
    /// Maximal total degree in the x variables; -1 for zero.
    int total_degree() const;
    bool is_h_free() const;

    /// Adds c * x^e.
    void add_term(const Exponents& e, const HPoly& c);

    /// Coefficient of h^n as an h-free polynomial.
    CPoly h_coefficient(std::size_t n) const;
    CPoly truncate_h(std::size_t k) const;
    CPoly evaluate_h(const Scalar& h0) const;

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    CPoly& operator*=(const HPoly& c);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    friend CPoly operator*(CPoly a, const HPoly& c) { return a *= c; }
    CPoly operator-() const;
    CPoly pow(unsigned k) const;

    friend bool operator==(const CPoly& a, const CPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    /// Terms ordered by increasing (degree + h-degree), ties broken
    /// lexicographically with earlier variables first.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void require_same(const CPoly& o) const;
    std::size_t nvars_ = 0;
    Terms terms_;
};

CPoly cpoly_arith(const CPoly& f, const CPoly& g, ArithOp op);
CPoly partial_derivative(const CPoly& f, std::size_t index);
/// {f, g} = sum_{i,j,k} c[i][j][k] x_k d_i f d_j g.
CPoly kirillov_bracket(const LieAlgebra& L, const CPoly& f, const CPoly& g);
/// True iff {x_i, p} = 0 for every coordinate x_i.
bool is_invariant(const LieAlgebra& L, const CPoly& p);

/// Graded lexicographic order with a variable priority list (highest
/// priority first).  The default priority is x_1 > x_2 > ... > x_n.
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<std::size_t> priority) : priority_(std::move(priority)) {}

    /// True if a > b.
    bool greater(const Exponents& a, const Exponents& b) const;
    const std::vector<std::size_t>& priority() const { return priority_; }

    /// Leading exponent of a nonzero polynomial. Throws for zero.
    Exponents leading(const CPoly& f) const;

private:
    std::vector<std::size_t> priority_;
};

/// Confluent rewriting system lead -> replacement.  The polynomial a rule
/// represents is lead - replacement.
class ReductionSystem {
public:
    struct Rule {
        Exponents lead;
        CPoly replacement;
        CPoly generator() const;
    };

    ReductionSystem(MonomialOrder order, std::vector<Rule> rules);
    /// One rule per generator g: g / lc(g) rewritten as LM(g) -> LM(g) - g / lc(g).
    /// Leading coefficients must be nonzero h-free scalars.
    static ReductionSystem from_generators(MonomialOrder order, const std::vector<CPoly>& generators);

    const MonomialOrder& order() const { return order_; }
    const std::vector<Rule>& rules() const { return rules_; }
    /// True if no rule's lead divides e.
    bool is_normal(const Exponents& e) const;

private:
    MonomialOrder order_;
    std::vector<Rule> rules_;
};

struct Reduction {
    std::vector<CPoly> quotients;  // one per rule
    CPoly remainder;
};

/// Multivariate division: f = sum q_r * rule_r + remainder, no remainder
/// monomial divisible by a rule lead.  Rules are tried in listed order.
Reduction reduce(const CPoly& f, const ReductionSystem& R);

}  // namespace orbitstar
