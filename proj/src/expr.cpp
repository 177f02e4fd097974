#include "orbitstar/expr.hpp"

#include <cctype>

namespace orbitstar {

bool operator==(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.exponent != b.exponent ||
        a.signs != b.signs || a.children.size() != b.children.size())
        return false;
    for (std::size_t k = 0; k < a.children.size(); ++k)
        if (!(*a.children[k] == *b.children[k]))
            return false;
    return true;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ExprPtr run()
    {
        ExprPtr e = expr();
        skip();
        if (pos_ < s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    ExprPtr expr()
    {
        skip();
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Sum;
        node->offset = pos_;
        int sign = 1;
        if (peek('+') || peek('-')) {
            sign = s_[pos_] == '-' ? -1 : 1;
            ++pos_;
        }
        node->children.push_back(term());
        node->signs.push_back(sign);
        while (peek('+') || peek('-')) {
            sign = s_[pos_] == '-' ? -1 : 1;
            ++pos_;
            node->children.push_back(term());
            node->signs.push_back(sign);
        }
        if (node->children.size() == 1 && node->signs.front() == 1)
            return node->children.front();
        return node;
    }

    ExprPtr term()
    {
        skip();
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Product;
        node->offset = pos_;
        node->children.push_back(factor());
        while (peek('*')) {
            ++pos_;
            node->children.push_back(factor());
        }
        if (node->children.size() == 1)
            return node->children.front();
        return node;
    }

    ExprPtr factor()
    {
        ExprPtr base = atom();
        if (!peek('^'))
            return base;
        ++pos_;
        skip();
        std::size_t at = pos_;
        std::string d = digits();
        if (d.empty())
            fail("expected a natural exponent");
        if (d.size() > 6)
            throw ParseError(at, "exponent too large");
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Power;
        node->offset = base->offset;
        node->exponent = static_cast<unsigned>(std::stoul(d));
        node->children.push_back(std::move(base));
        return node;
    }

    ExprPtr atom()
    {
        skip();
        auto node = std::make_shared<Expr>();
        node->offset = pos_;
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                const std::size_t den_at = pos_;
                std::string den = digits();
                if (den.empty())
                    fail("expected a denominator");
                Rational d(den);
                if (sgn(d) == 0) {
                    pos_ = den_at;
                    fail("zero denominator");
                }
                node->value = Rational(num) / d;
            } else {
                node->value = Rational(num);
            }
            node->value.canonicalize();
            node->kind = Expr::Kind::Rational;
            return node;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string word(s_.substr(start, pos_ - start));
            if (word == "i")
                node->kind = Expr::Kind::ImagUnit;
            else if (word == "h")
                node->kind = Expr::Kind::HParam;
            else {
                node->kind = Expr::Kind::Name;
                node->name = std::move(word);
            }
            return node;
        }
        if (c == '(') {
            ++pos_;
            node->kind = Expr::Kind::Group;
            node->children.push_back(expr());
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return node;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

/// Evaluates an expression into any ring with the given leaf constructors.
template <class T, class Leaf>
T fold(const Expr& e, const Leaf& leaf, const T& one)
{
    switch (e.kind) {
    case Expr::Kind::Rational:
    case Expr::Kind::ImagUnit:
    case Expr::Kind::HParam:
    case Expr::Kind::Name:
        return leaf(e);
    case Expr::Kind::Group:
        return fold<T>(*e.children.front(), leaf, one);
    case Expr::Kind::Sum: {
        T acc = one - one;
        for (std::size_t k = 0; k < e.children.size(); ++k) {
            T v = fold<T>(*e.children[k], leaf, one);
            if (e.signs[k] < 0)
                acc = acc - v;
            else
                acc = acc + v;
        }
        return acc;
    }
    case Expr::Kind::Product: {
        T acc = one;
        for (const auto& c : e.children)
            acc = acc * fold<T>(*c, leaf, one);
        return acc;
    }
    case Expr::Kind::Power: {
        T base = fold<T>(*e.children.front(), leaf, one);
        T acc = one;
        for (unsigned k = 0; k < e.exponent; ++k)
            acc = acc * base;
        return acc;
    }
    }
    throw std::logic_error("unknown expression node");
}

HPoly constant_leaf(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Rational:
        return HPoly(Scalar(e.value));
    case Expr::Kind::ImagUnit:
        return HPoly(Scalar::i());
    case Expr::Kind::HParam:
        return HPoly::h();
    default:
        throw ParseError(e.offset, "unknown name '" + e.name + "'");
    }
}

}  // namespace

ExprPtr parse_expression(std::string_view text)
{
    return Parser(text).run();
}

std::string print_expression(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Rational:
        return to_string(e.value);
    case Expr::Kind::ImagUnit:
        return "i";
    case Expr::Kind::HParam:
        return "h";
    case Expr::Kind::Name:
        return e.name;
    case Expr::Kind::Group:
        return "(" + print_expression(*e.children.front()) + ")";
    case Expr::Kind::Power:
        return print_expression(*e.children.front()) + "^" + std::to_string(e.exponent);
    case Expr::Kind::Product: {
        std::string out;
        for (const auto& c : e.children)
            out += (out.empty() ? "" : "*") + print_expression(*c);
        return out;
    }
    case Expr::Kind::Sum: {
        std::string out;
        for (std::size_t k = 0; k < e.children.size(); ++k) {
            if (k == 0)
                out += e.signs[k] < 0 ? "-" : "";
            else
                out += e.signs[k] < 0 ? " - " : " + ";
            out += print_expression(*e.children[k]);
        }
        return out;
    }
    }
    throw std::logic_error("unknown expression node");
}

HPoly to_hpoly(const Expr& e)
{
    return fold<HPoly>(e, constant_leaf, HPoly(1));
}

CPoly to_cpoly(const Expr& e, const LieAlgebra& L)
{
    const std::size_t n = L.dim();
    auto leaf = [&](const Expr& x) {
        if (x.kind != Expr::Kind::Name)
            return CPoly::constant(n, constant_leaf(x));
        const auto& coords = L.coords();
        for (std::size_t k = 0; k < n; ++k)
            if (coords[k] == x.name)
                return CPoly::variable(n, k);
        throw ParseError(x.offset, "unknown name '" + x.name + "'");
    };
    return fold<CPoly>(e, leaf, CPoly::constant(n, 1));
}

NCElement to_ncelement(const Expr& e, const LieAlgebraPtr& L)
{
    auto leaf = [&](const Expr& x) {
        if (x.kind != Expr::Kind::Name)
            return NCElement::scalar(L, constant_leaf(x));
        const auto& names = L->names();
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k] == x.name)
                return NCElement::generator(L, k);
        throw ParseError(x.offset, "unknown name '" + x.name + "'");
    };
    return fold<NCElement>(e, leaf, NCElement::scalar(L, 1));
}

CPoly parse_cpoly(std::string_view text, const LieAlgebra& L)
{
    return to_cpoly(*parse_expression(text), L);
}

NCElement parse_ncelement(std::string_view text, const LieAlgebraPtr& L)
{
    return to_ncelement(*parse_expression(text), L);
}

HPoly parse_hpoly(std::string_view text)
{
    return to_hpoly(*parse_expression(text));
}

}  // namespace orbitstar
