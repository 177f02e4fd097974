#include "orbitstar/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace orbitstar {

Rational parse_rational(std::string_view text)
{
    auto fail = [&] { throw std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
            ++p;
        if (p == start)
            fail();
        return std::string(text.substr(start, p - start));
    };
    mpz_class num(digits(pos));
    mpz_class den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = mpz_class(digits(pos));
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    if (pos != text.size())
        fail();
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

namespace {

std::string strip_spaces(std::string_view text)
{
    std::string out;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            out += ch;
    return out;
}

// "i", "-i", "p/q*i", "-p/q*i"
bool parse_imaginary(const std::string& t, Rational& out)
{
    if (t.empty() || t.back() != 'i')
        return false;
    std::string head = t.substr(0, t.size() - 1);
    if (head.empty() || head == "+") {
        out = 1;
        return true;
    }
    if (head == "-") {
        out = -1;
        return true;
    }
    if (head.back() != '*')
        return false;
    out = parse_rational(head.substr(0, head.size() - 1));
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
    std::string t = strip_spaces(text);
    if (t.empty())
        throw std::invalid_argument("empty scalar");
    // Split at a '+' or '-' that is not the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < t.size(); ++k)
        if (t[k] == '+' || t[k] == '-')
            split = k;
    Rational im;
    if (split == std::string::npos) {
        if (parse_imaginary(t, im))
            return Scalar(0, im);
        return Scalar(parse_rational(t));
    }
    Rational re = parse_rational(t.substr(0, split));
    if (!parse_imaginary(t.substr(split), im))
        throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    return Scalar(re, im);
}

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::inverse() const
{
    Rational norm = re_ * re_ + im_ * im_;
    if (sgn(norm) == 0)
        throw std::domain_error("division by zero scalar");
    return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_real()) {
        if (sgn(o.re_) == 0)
            throw std::domain_error("division by zero scalar");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

namespace {

std::string imag_text(const Rational& magnitude)
{
    return magnitude == 1 ? std::string("i") : to_string(magnitude) + "*i";
}

}  // namespace

std::string Scalar::to_string() const
{
    if (is_real())
        return orbitstar::to_string(re_);
    if (sgn(re_) == 0)
        return (sgn(im_) < 0 ? "-" : "") + imag_text(abs(im_));
    return orbitstar::to_string(re_) + (sgn(im_) < 0 ? " - " : " + ") + imag_text(abs(im_));
}

// ---------------------------------------------------------------- HPoly

HPoly::HPoly(const Scalar& c)
{
    if (!c.is_zero())
        coeffs_.push_back(c);
}

HPoly::HPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

HPoly HPoly::monomial(const Scalar& c, std::size_t power)
{
    if (c.is_zero())
        return {};
    std::vector<Scalar> v(power + 1);
    v[power] = c;
    return HPoly(std::move(v));
}

void HPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

int HPoly::order() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero())
            return static_cast<int>(k);
    return kZeroDegree;
}

Scalar HPoly::evaluate(const Scalar& h0) const
{
    Scalar acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= h0;
        acc += *it;
    }
    return acc;
}

HPoly HPoly::truncate(std::size_t k) const
{
    if (k >= coeffs_.size())
        return *this;
    return HPoly(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k)));
}

HPoly HPoly::shifted(std::size_t k) const
{
    if (is_zero() || k == 0)
        return *this;
    HPoly r;
    r.coeffs_.assign(k, Scalar());
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

HPoly& HPoly::operator+=(const HPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return HPoly(std::move(out));
}

HPoly& HPoly::operator*=(const HPoly& o)
{
    *this = *this * o;
    return *this;
}

HPoly& HPoly::operator*=(const Scalar& s)
{
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

HPoly HPoly::operator-() const
{
    HPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

std::string HPoly::to_string() const
{
    std::vector<detail::TermText> terms;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero())
            continue;
        detail::TermText t{coeffs_[k], {}};
        if (k > 0)
            t.factors.push_back(detail::power_text("h", k));
        terms.push_back(std::move(t));
    }
    return detail::join_terms(terms);
}

HPoly hpoly_arith(const HPoly& a, const HPoly& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    }
    throw std::logic_error("unknown ArithOp");
}

namespace detail {

std::string power_text(const std::string& base, std::size_t exponent)
{
    return exponent == 1 ? base : base + "^" + std::to_string(exponent);
}

namespace {

std::string joined(const std::vector<std::string>& factors)
{
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty())
            out += '*';
        out += f;
    }
    return out;
}

// Returns (negative, body).
std::pair<bool, std::string> render(const Scalar& c, const std::vector<std::string>& factors)
{
    std::string tail = factors.empty() ? std::string() : joined(factors);
    if (c.is_real() || sgn(c.re()) == 0) {
        bool real = c.is_real();
        const Rational& v = real ? c.re() : c.im();
        bool negative = sgn(v) < 0;
        Rational mag = abs(v);
        std::string head;
        if (real)
            head = (mag == 1 && !tail.empty()) ? std::string() : to_string(mag);
        else
            head = imag_text(mag);
        if (head.empty())
            return {negative, tail};
        return {negative, tail.empty() ? head : head + "*" + tail};
    }
    return {false, "(" + c.to_string() + ")*" + tail};
}

}  // namespace

std::string join_terms(const std::vector<TermText>& terms)
{
    std::vector<TermText> expanded;
    expanded.reserve(terms.size());
    for (const auto& t : terms) {
        if (t.coeff.is_zero())
            continue;
        if (t.factors.empty() && !t.coeff.is_real() && sgn(t.coeff.re()) != 0) {
            expanded.push_back({Scalar(t.coeff.re()), {}});
            expanded.push_back({Scalar(0, t.coeff.im()), {}});
        } else {
            expanded.push_back(t);
        }
    }
    if (expanded.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : expanded) {
        auto [negative, body] = render(t.coeff, t.factors);
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

}  // namespace detail

}  // namespace orbitstar
