#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbitstar {

using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

class Scalar;
/// Parses a Gaussian rational written as "p/q", "i", "p/q*i", "-i" or
/// "a + b*i" / "a - b*i". Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// Gaussian rational re + im*i.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}  // NOLINT: implicit from integer literals
    Scalar(Rational re, Rational im = 0);

    static Scalar i() { return Scalar(0, 1); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// Throws std::domain_error for zero.
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// "3/2", "-i", "1/2 - 2*i".
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

/// Polynomial in the deformation parameter h with Gaussian-rational coefficients.
/// coeffs()[k] is the coefficient of h^k; the highest stored coefficient is nonzero.
class HPoly {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    HPoly() = default;
    HPoly(long value) : HPoly(Scalar(value)) {}  // NOLINT
    HPoly(const Scalar& c);                      // NOLINT
    explicit HPoly(std::vector<Scalar> coeffs);

    static HPoly h() { return monomial(Scalar(1), 1); }
    static HPoly monomial(const Scalar& c, std::size_t power);

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    /// Lowest power of h with a nonzero coefficient; kZeroDegree for zero.
    int order() const;
    Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(); }
    Scalar constant_term() const { return coeff(0); }

    Scalar evaluate(const Scalar& h0) const;
    HPoly truncate(std::size_t k) const;
    /// Multiplies by h^k.
    HPoly shifted(std::size_t k) const;

    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    HPoly& operator*=(const HPoly& o);
    HPoly& operator*=(const Scalar& s);

    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    friend HPoly operator*(HPoly a, const Scalar& s) { return a *= s; }
    HPoly operator-() const;

    friend bool operator==(const HPoly& a, const HPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// "3/2 + 2*i*h^2"
    std::string to_string() const;

private:
    void trim();
    std::vector<Scalar> coeffs_;
};

enum class ArithOp { add, sub, mul };

HPoly hpoly_arith(const HPoly& a, const HPoly& b, ArithOp op);
inline Scalar evaluate_h(const HPoly& p, const Scalar& h0) { return p.evaluate(h0); }
inline HPoly truncate_h(const HPoly& p, std::size_t k) { return p.truncate(k); }

namespace detail {

/// One printed term: a coefficient followed by '*'-joined factor strings.
struct TermText {
    Scalar coeff;
    std::vector<std::string> factors;
};

/// Joins terms as "a - b + (1 + i)*c"; "0" when empty.
std::string join_terms(const std::vector<TermText>& terms);

std::string power_text(const std::string& base, std::size_t exponent);

}  // namespace detail

}  // namespace orbitstar
