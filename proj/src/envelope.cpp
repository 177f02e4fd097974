#include "orbitstar/envelope.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace orbitstar {

bool is_sorted_word(const Word& w)
{
    return std::is_sorted(w.begin(), w.end());
}

Word ordered_word(const Exponents& e)
{
    Word w;
    for (std::size_t v = 0; v < e.size(); ++v)
        w.insert(w.end(), e[v], static_cast<std::uint8_t>(v));
    return w;
}

Exponents word_exponents(const Word& w, std::size_t dim)
{
    Exponents e(dim, 0);
    for (auto g : w) {
        if (g >= dim)
            throw std::out_of_range("generator index out of range");
        ++e[g];
    }
    return e;
}

namespace {

using Terms = NCElement::Terms;

void accumulate(Terms& into, const Word& w, const HPoly& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = into.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            into.erase(it);
    }
}

/// Memoized normal form of single words.  Each rewrite either removes one
/// inversion (same length) or shortens the word, so the recursion is finite.
class Rewriter {
public:
    explicit Rewriter(const LieAlgebra& L) : L_(L) {}

    const Terms& word_nf(const Word& w)
    {
        auto found = memo_.find(w);
        if (found != memo_.end())
            return found->second;
        Terms result;
        std::size_t i = 0;
        while (i + 1 < w.size() && w[i] <= w[i + 1])
            ++i;
        if (i + 1 >= w.size()) {
            result.emplace(w, HPoly(1));
        } else {
            Word swapped = w;
            std::swap(swapped[i], swapped[i + 1]);
            result = word_nf(swapped);
            for (const auto& [k, c] : L_.bracket(w[i], w[i + 1])) {
                Word shorter;
                shorter.reserve(w.size() - 1);
                shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                shorter.push_back(static_cast<std::uint8_t>(k));
                shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
                HPoly hc = HPoly::monomial(c, 1);
                for (const auto& [v, vc] : word_nf(shorter))
                    accumulate(result, v, vc * hc);
            }
        }
        return memo_.emplace(w, std::move(result)).first->second;
    }

    void add_normalized(Terms& into, const Word& w, const HPoly& c)
    {
        if (is_sorted_word(w)) {
            accumulate(into, w, c);
            return;
        }
        for (const auto& [v, vc] : word_nf(w))
            accumulate(into, v, vc * c);
    }

private:
    const LieAlgebra& L_;
    std::map<Word, Terms> memo_;
};

}  // namespace

NCElement NCElement::scalar(LieAlgebraPtr algebra, const HPoly& c)
{
    NCElement e(std::move(algebra));
    e.add_term({}, c);
    return e;
}

NCElement NCElement::generator(LieAlgebraPtr algebra, std::size_t index)
{
    if (index >= algebra->dim())
        throw std::out_of_range("generator index out of range");
    NCElement e(std::move(algebra));
    e.add_term({static_cast<std::uint8_t>(index)}, HPoly(1));
    return e;
}

NCElement NCElement::word(LieAlgebraPtr algebra, Word w, const HPoly& c)
{
    for (auto g : w)
        if (g >= algebra->dim())
            throw std::out_of_range("generator index out of range");
    NCElement e(std::move(algebra));
    e.add_term(w, c);
    return e;
}

bool NCElement::is_canonical() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_sorted_word(t.first); });
}

HPoly NCElement::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? HPoly() : it->second;
}

void NCElement::add_term(const Word& w, const HPoly& c)
{
    accumulate(terms_, w, c);
}

void NCElement::require_same(const NCElement& o) const
{
    if (algebra_ != o.algebra_ && !(*algebra_ == *o.algebra_))
        throw std::invalid_argument("elements belong to different algebras");
}

NCElement& NCElement::operator+=(const NCElement& o)
{
    require_same(o);
    for (const auto& [w, c] : o.terms_)
        accumulate(terms_, w, c);
    return *this;
}

NCElement& NCElement::operator-=(const NCElement& o)
{
    require_same(o);
    for (const auto& [w, c] : o.terms_)
        accumulate(terms_, w, -c);
    return *this;
}

NCElement& NCElement::operator*=(const HPoly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_)
        coeff *= c;
    return *this;
}

NCElement NCElement::operator-() const
{
    NCElement r = *this;
    for (auto& [w, c] : r.terms_)
        c = -c;
    return r;
}

bool operator==(const NCElement& a, const NCElement& b)
{
    return (a.algebra_ == b.algebra_ || *a.algebra_ == *b.algebra_) && a.terms_ == b.terms_;
}

std::string NCElement::to_string() const
{
    struct Item {
        std::size_t graded;
        const Word* w;
        std::size_t hpow;
        Scalar c;
    };
    std::vector<Item> items;
    for (const auto& [w, c] : terms_)
        for (std::size_t k = 0; k < c.coeffs().size(); ++k)
            if (!c.coeffs()[k].is_zero())
                items.push_back({w.size() + k, &w, k, c.coeffs()[k]});
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return std::tie(a.graded, *a.w, a.hpow) < std::tie(b.graded, *b.w, b.hpow);
    });
    const auto& names = algebra_->names();
    std::vector<detail::TermText> terms;
    for (const auto& it : items) {
        detail::TermText t{it.c, {}};
        if (it.hpow > 0)
            t.factors.push_back(detail::power_text("h", it.hpow));
        const Word& w = *it.w;
        for (std::size_t p = 0; p < w.size();) {
            std::size_t q = p;
            while (q < w.size() && w[q] == w[p])
                ++q;
            t.factors.push_back(detail::power_text(names[w[p]], q - p));
            p = q;
        }
        terms.push_back(std::move(t));
    }
    return detail::join_terms(terms);
}

NCElement normal_form(const NCElement& a)
{
    Rewriter rw(*a.algebra());
    NCElement out(a.algebra());
    Terms acc;
    for (const auto& [w, c] : a.terms())
        rw.add_normalized(acc, w, c);
    for (const auto& [w, c] : acc)
        out.add_term(w, c);
    return out;
}

NCElement multiply(const NCElement& a, const NCElement& b)
{
    return a * b;
}

NCElement operator*(const NCElement& a, const NCElement& b)
{
    a.require_same(b);
    Rewriter rw(*a.algebra_);
    Terms acc;
    Word w;
    for (const auto& [u, cu] : a.terms_)
        for (const auto& [v, cv] : b.terms_) {
            w.assign(u.begin(), u.end());
            w.insert(w.end(), v.begin(), v.end());
            rw.add_normalized(acc, w, cu * cv);
        }
    NCElement out(a.algebra_);
    out.terms_ = std::move(acc);
    return out;
}

NCElement power(const NCElement& a, unsigned k)
{
    NCElement r = NCElement::scalar(a.algebra(), 1);
    for (unsigned i = 0; i < k; ++i)
        r = r * a;
    return r;
}

bool is_central(const NCElement& a)
{
    NCElement canon = normal_form(a);
    for (std::size_t i = 0; i < a.algebra()->dim(); ++i) {
        NCElement x = NCElement::generator(a.algebra(), i);
        if (!(canon * x - x * canon).is_zero())
            return false;
    }
    return true;
}

std::optional<unsigned> graded_degree(const NCElement& a)
{
    std::optional<unsigned> best;
    for (const auto& [w, c] : a.terms()) {
        unsigned d = static_cast<unsigned>(w.size() + static_cast<std::size_t>(c.degree()));
        if (!best || d > *best)
            best = d;
    }
    return best;
}

bool is_graded_homogeneous(const NCElement& a)
{
    std::optional<std::size_t> degree;
    for (const auto& [w, c] : a.terms())
        for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
            if (c.coeffs()[k].is_zero())
                continue;
            std::size_t d = w.size() + k;
            if (degree && *degree != d)
                return false;
            degree = d;
        }
    return true;
}

NCElement specialize(const NCElement& a, const Scalar& h0)
{
    NCElement out(a.algebra());
    for (const auto& [w, c] : a.terms())
        out.add_term(w, HPoly(c.evaluate(h0)));
    return out;
}

CPoly project_h0(const NCElement& a)
{
    const std::size_t n = a.algebra()->dim();
    CPoly out(n);
    for (const auto& [w, c] : a.terms())
        out.add_term(word_exponents(w, n), HPoly(c.constant_term()));
    return out;
}

NCElement substitute(const NCElement& a, const std::vector<NCElement>& images)
{
    if (images.size() != a.algebra()->dim())
        throw std::invalid_argument("substitution needs one image per generator");
    if (images.empty())
        throw std::invalid_argument("empty substitution");
    const LieAlgebraPtr& target = images.front().algebra();
    NCElement out(target);
    for (const auto& [w, c] : a.terms()) {
        NCElement term = NCElement::scalar(target, c);
        for (auto g : w)
            term = term * images[g];
        out += term;
    }
    return out;
}

NCElement ordered_embedding(const LieAlgebraPtr& algebra, const CPoly& f)
{
    if (f.nvars() != algebra->dim())
        throw std::invalid_argument("polynomial variable count does not match algebra dimension");
    NCElement out(algebra);
    for (const auto& [e, c] : f.terms())
        out.add_term(ordered_word(e), c);
    return out;
}

CPoly ordered_readback(const NCElement& u)
{
    const std::size_t n = u.algebra()->dim();
    CPoly out(n);
    for (const auto& [w, c] : u.terms()) {
        if (!is_sorted_word(w))
            throw std::invalid_argument("ordered readback needs a canonical element");
        out.add_term(word_exponents(w, n), c);
    }
    return out;
}

}  // namespace orbitstar
