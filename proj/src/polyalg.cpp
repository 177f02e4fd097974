#include "orbitstar/polyalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace orbitstar {

unsigned total_degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool divides(const Exponents& a, const Exponents& b)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k])
            return false;
    return true;
}

namespace {

void compositions(std::size_t nvars, unsigned degree, std::size_t pos, Exponents& current,
                  std::vector<Exponents>& out)
{
    if (pos + 1 == nvars) {
        current[pos] = degree;
        out.push_back(current);
        return;
    }
    for (unsigned e = degree + 1; e-- > 0;) {
        current[pos] = e;
        compositions(nvars, degree - e, pos + 1, current, out);
    }
    current[pos] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree)
{
    std::vector<Exponents> out;
    if (nvars == 0) {
        if (degree == 0)
            out.emplace_back();
        return out;
    }
    Exponents current(nvars, 0);
    compositions(nvars, degree, 0, current, out);
    return out;
}

std::vector<Exponents> monomials_up_to(std::size_t nvars, unsigned max_degree)
{
    std::vector<Exponents> out;
    for (unsigned d = 0; d <= max_degree; ++d) {
        auto level = monomials_of_degree(nvars, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// ---------------------------------------------------------------- CPoly

CPoly CPoly::constant(std::size_t nvars, const HPoly& c)
{
    CPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

CPoly CPoly::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars)
        throw std::out_of_range("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(std::move(e));
}

CPoly CPoly::monomial(Exponents e, const HPoly& c)
{
    CPoly p(e.size());
    p.add_term(e, c);
    return p;
}

HPoly CPoly::coeff(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? HPoly() : it->second;
}

int CPoly::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<int>(orbitstar::total_degree(e)));
    return d;
}

bool CPoly::is_h_free() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_constant(); });
}

void CPoly::add_term(const Exponents& e, const HPoly& c)
{
    if (e.size() != nvars_)
        throw std::invalid_argument("exponent length does not match variable count");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

CPoly CPoly::h_coefficient(std::size_t n) const
{
    CPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        out.add_term(e, HPoly(c.coeff(n)));
    return out;
}

CPoly CPoly::truncate_h(std::size_t k) const
{
    CPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        out.add_term(e, c.truncate(k));
    return out;
}

CPoly CPoly::evaluate_h(const Scalar& h0) const
{
    CPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        out.add_term(e, HPoly(c.evaluate(h0)));
    return out;
}

void CPoly::require_same(const CPoly& o) const
{
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial variable counts differ");
}

CPoly& CPoly::operator+=(const CPoly& o)
{
    require_same(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o)
{
    require_same(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

CPoly& CPoly::operator*=(const HPoly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b)
{
    a.require_same(b);
    CPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

CPoly CPoly::operator-() const
{
    CPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

CPoly CPoly::pow(unsigned k) const
{
    CPoly r = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

std::string CPoly::to_string(const std::vector<std::string>& names) const
{
    if (names.size() < nvars_)
        throw std::invalid_argument("not enough variable names to print polynomial");
    struct Item {
        unsigned graded;
        Exponents e;
        std::size_t hpow;
        Scalar c;
    };
    std::vector<Item> items;
    for (const auto& [e, c] : terms_)
        for (std::size_t k = 0; k < c.coeffs().size(); ++k)
            if (!c.coeffs()[k].is_zero())
                items.push_back({orbitstar::total_degree(e) + static_cast<unsigned>(k), e, k, c.coeffs()[k]});
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.graded != b.graded)
            return a.graded < b.graded;
        if (a.e != b.e)
            return a.e > b.e;  // x^2 before x*y before y^2
        return a.hpow < b.hpow;
    });
    std::vector<detail::TermText> terms;
    for (const auto& it : items) {
        detail::TermText t{it.c, {}};
        if (it.hpow > 0)
            t.factors.push_back(detail::power_text("h", it.hpow));
        for (std::size_t v = 0; v < nvars_; ++v)
            if (it.e[v] > 0)
                t.factors.push_back(detail::power_text(names[v], it.e[v]));
        terms.push_back(std::move(t));
    }
    return detail::join_terms(terms);
}

CPoly cpoly_arith(const CPoly& f, const CPoly& g, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return f + g;
    case ArithOp::sub:
        return f - g;
    case ArithOp::mul:
        return f * g;
    }
    throw std::logic_error("unknown ArithOp");
}

CPoly partial_derivative(const CPoly& f, std::size_t index)
{
    if (index >= f.nvars())
        throw std::out_of_range("partial derivative index out of range");
    CPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[index] == 0)
            continue;
        Exponents d = e;
        --d[index];
        out.add_term(d, c * Scalar(static_cast<long>(e[index])));
    }
    return out;
}

CPoly kirillov_bracket(const LieAlgebra& L, const CPoly& f, const CPoly& g)
{
    const std::size_t n = L.dim();
    if (f.nvars() != n || g.nvars() != n)
        throw std::invalid_argument("polynomial variable count does not match algebra dimension");
    std::vector<CPoly> df, dg;
    for (std::size_t i = 0; i < n; ++i) {
        df.push_back(partial_derivative(f, i));
        dg.push_back(partial_derivative(g, i));
    }
    CPoly out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (df[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (dg[j].is_zero() || L.bracket(i, j).empty())
                continue;
            CPoly lin(n);
            for (const auto& [k, c] : L.bracket(i, j)) {
                Exponents e(n, 0);
                e[k] = 1;
                lin.add_term(e, HPoly(c));
            }
            out += lin * df[i] * dg[j];
        }
    }
    return out;
}

bool is_invariant(const LieAlgebra& L, const CPoly& p)
{
    for (std::size_t i = 0; i < L.dim(); ++i)
        if (!kirillov_bracket(L, CPoly::variable(L.dim(), i), p).is_zero())
            return false;
    return true;
}

// ---------------------------------------------------------------- ordering / division

bool MonomialOrder::greater(const Exponents& a, const Exponents& b) const
{
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da > db;
    if (priority_.empty()) {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k])
                return a[k] > b[k];
        return false;
    }
    for (std::size_t v : priority_)
        if (a[v] != b[v])
            return a[v] > b[v];
    return false;
}

Exponents MonomialOrder::leading(const CPoly& f) const
{
    if (f.is_zero())
        throw std::invalid_argument("leading monomial of zero polynomial");
    const Exponents* best = nullptr;
    for (const auto& [e, c] : f.terms())
        if (!best || greater(e, *best))
            best = &e;
    return *best;
}

CPoly ReductionSystem::Rule::generator() const
{
    CPoly g = CPoly::monomial(lead);
    g -= replacement;
    return g;
}

ReductionSystem::ReductionSystem(MonomialOrder order, std::vector<Rule> rules)
    : order_(std::move(order)), rules_(std::move(rules))
{
    for (const auto& r : rules_)
        for (const auto& [e, c] : r.replacement.terms())
            if (!order_.greater(r.lead, e))
                throw std::invalid_argument("rule replacement is not smaller than its leading monomial");
}

ReductionSystem ReductionSystem::from_generators(MonomialOrder order, const std::vector<CPoly>& generators)
{
    std::vector<Rule> rules;
    for (const auto& g : generators) {
        Exponents lead = order.leading(g);
        HPoly lc = g.coeff(lead);
        if (!lc.is_constant())
            throw std::invalid_argument("leading coefficient of a reduction generator must be h-free");
        Scalar inv = lc.constant_term().inverse();
        CPoly normalized = g * HPoly(inv);
        CPoly replacement = CPoly::monomial(lead) - normalized;
        rules.push_back({std::move(lead), std::move(replacement)});
    }
    return ReductionSystem(std::move(order), std::move(rules));
}

bool ReductionSystem::is_normal(const Exponents& e) const
{
    return std::none_of(rules_.begin(), rules_.end(), [&](const Rule& r) { return divides(r.lead, e); });
}

Reduction reduce(const CPoly& f, const ReductionSystem& R)
{
    const std::size_t n = f.nvars();
    Reduction out{std::vector<CPoly>(R.rules().size(), CPoly(n)), CPoly(n)};
    CPoly p = f;
    while (!p.is_zero()) {
        Exponents lead = R.order().leading(p);
        HPoly c = p.coeff(lead);
        bool divided = false;
        for (std::size_t r = 0; r < R.rules().size(); ++r) {
            const auto& rule = R.rules()[r];
            if (!divides(rule.lead, lead))
                continue;
            Exponents cofactor = lead;
            for (std::size_t k = 0; k < n; ++k)
                cofactor[k] -= rule.lead[k];
            CPoly q = CPoly::monomial(std::move(cofactor), c);
            out.quotients[r] += q;
            p.add_term(lead, -c);
            p += q * rule.replacement;
            divided = true;
            break;
        }
        if (!divided) {
            out.remainder.add_term(lead, c);
            p.add_term(lead, -c);
        }
    }
    return out;
}

}  // namespace orbitstar
