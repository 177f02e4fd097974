#include "orbitstar/quantize.hpp"

#include "orbitstar/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitstar {

NCElement symmetrize(const LieAlgebraPtr& algebra, const CPoly& f)
{
    if (f.nvars() != algebra->dim())
        throw std::invalid_argument("polynomial variable count does not match algebra dimension");
    NCElement raw(algebra);
    for (const auto& [e, c] : f.terms()) {
        Word w = ordered_word(e);
        std::vector<Word> arrangements;
        do {
            arrangements.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
        HPoly weight = c * Scalar(Rational(1, static_cast<long>(arrangements.size())));
        for (const auto& a : arrangements)
            raw.add_term(a, weight);
    }
    return normal_form(raw);
}

CPoly sym_inverse(const NCElement& u)
{
    const LieAlgebraPtr& algebra = u.algebra();
    const std::size_t n = algebra->dim();
    NCElement rest = u.is_canonical() ? u : normal_form(u);
    CPoly out(n);
    while (!rest.is_zero()) {
        std::size_t top = 0;
        for (const auto& [w, c] : rest.terms())
            top = std::max(top, w.size());
        CPoly leading(n);
        for (const auto& [w, c] : rest.terms())
            if (w.size() == top)
                leading.add_term(word_exponents(w, n), c);
        out += leading;
        rest -= symmetrize(algebra, leading);
        for (const auto& [w, c] : rest.terms())
            if (w.size() >= top && top > 0)
                throw std::logic_error("symmetrizer descent did not lower the word length");
        if (top == 0 && !rest.is_zero())
            throw std::logic_error("symmetrizer descent failed on scalars");
    }
    return out;
}

// ---------------------------------------------------------------- StarProduct

CPoly StarProduct::operator()(const CPoly& f, const CPoly& g) const
{
    NCElement prod = forward(f) * forward(g);
    if (reduce)
        prod = reduce(prod);
    return backward(prod);
}

CPoly StarProduct::commutative(const CPoly& f, const CPoly& g) const
{
    return project(f * g);
}

CPoly StarProduct::bracket(const CPoly& f, const CPoly& g) const
{
    return project(kirillov_bracket(*algebra, f, g));
}

std::vector<Exponents> StarProduct::domain_monomials(unsigned max_degree) const
{
    auto all = monomials_up_to(algebra->dim(), max_degree);
    if (!in_domain)
        return all;
    std::vector<Exponents> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), in_domain);
    return out;
}

StarProduct symmetric_star(const LieAlgebraPtr& algebra)
{
    StarProduct s;
    s.name = "sym";
    s.algebra = algebra;
    s.forward = [algebra](const CPoly& f) { return symmetrize(algebra, f); };
    s.backward = [](const NCElement& u) { return sym_inverse(u); };
    return s;
}

StarProduct pbw_star(const LieAlgebraPtr& algebra)
{
    StarProduct s;
    s.name = "pbw";
    s.algebra = algebra;
    s.forward = [algebra](const CPoly& f) { return ordered_embedding(algebra, f); };
    s.backward = [](const NCElement& u) { return ordered_readback(u); };
    return s;
}

CPoly star_S(const LieAlgebraPtr& algebra, const CPoly& f, const CPoly& g)
{
    return sym_inverse(symmetrize(algebra, f) * symmetrize(algebra, g));
}

CPoly bn_coefficient(const StarProduct& star, const CPoly& f, const CPoly& g, unsigned n)
{
    if (!f.is_h_free() || !g.is_h_free())
        throw std::invalid_argument("B_n extraction needs h-free arguments");
    return star(f, g).h_coefficient(n);
}

// ---------------------------------------------------------------- axiom checks

namespace {

/// Products of domain monomials, reused by the bilinear expansions.
class PairCache {
public:
    explicit PairCache(const StarProduct& star) : star_(star), n_(star.algebra->dim()) {}

    const CPoly& get(const Exponents& a, const Exponents& b)
    {
        auto key = std::make_pair(a, b);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        CPoly p = star_(CPoly::monomial(a), CPoly::monomial(b));
        return cache_.emplace(std::move(key), std::move(p)).first->second;
    }

    CPoly left(const CPoly& f, const Exponents& b)
    {
        CPoly out(n_);
        for (const auto& [e, c] : f.terms())
            out += get(e, b) * c;
        return out;
    }

    CPoly right(const Exponents& a, const CPoly& g)
    {
        CPoly out(n_);
        for (const auto& [e, c] : g.terms())
            out += get(a, e) * c;
        return out;
    }

private:
    const StarProduct& star_;
    std::size_t n_;
    std::map<std::pair<Exponents, Exponents>, CPoly> cache_;
};

}  // namespace

nlohmann::json AxiomReport::to_json() const
{
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : failures)
        fails.push_back({{"property", f.property}, {"pair", f.inputs}, {"expected", f.expected}, {"got", f.got}});
    return {{"star", star},
            {"pairs_checked", pairs_checked},
            {"triples_checked", triples_checked},
            {"passed", passed()},
            {"failures", fails}};
}

AxiomReport check_deformation_axioms(const StarProduct& star, unsigned pair_bound, unsigned triple_bound)
{
    const auto& names = star.algebra->coords();
    const std::size_t n = star.algebra->dim();
    auto text = [&](const CPoly& p) { return p.to_string(names); };
    AxiomReport report;
    report.star = star.name;
    PairCache cache(star);

    auto domain = star.domain_monomials(std::max(pair_bound, triple_bound));
    for (const auto& a : domain)
        for (const auto& b : domain) {
            if (total_degree(a) + total_degree(b) > pair_bound)
                continue;
            ++report.pairs_checked;
            CPoly fa = CPoly::monomial(a), fb = CPoly::monomial(b);
            const CPoly& ab = cache.get(a, b);
            const CPoly& ba = cache.get(b, a);
            CPoly expected_a = star.commutative(fa, fb);
            CPoly got_a = ab.truncate_h(1);
            if (!(got_a == expected_a))
                report.failures.push_back({"a", {text(fa), text(fb)}, text(expected_a), text(got_a)});
            CPoly expected_b = star.bracket(fa, fb) * HPoly::h();
            CPoly got_b = (ab - ba).truncate_h(2);
            if (!(got_b == expected_b))
                report.failures.push_back({"b", {text(fa), text(fb)}, text(expected_b), text(got_b)});
        }

    for (const auto& a : domain)
        for (const auto& b : domain) {
            unsigned dab = total_degree(a) + total_degree(b);
            if (dab > triple_bound)
                continue;
            for (const auto& c : domain) {
                if (dab + total_degree(c) > triple_bound)
                    continue;
                ++report.triples_checked;
                CPoly lhs = cache.left(cache.get(a, b), c);
                CPoly rhs = cache.right(a, cache.get(b, c));
                if (!(lhs == rhs))
                    report.failures.push_back({"associativity",
                                               {text(CPoly::monomial(a)), text(CPoly::monomial(b)),
                                                text(CPoly::monomial(c))},
                                               text(rhs),
                                               text(lhs)});
            }
        }
    (void)n;
    return report;
}

// ---------------------------------------------------------------- gauge solver

CPoly LinearMap::apply(const CPoly& f) const
{
    CPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        auto it = images.find(e);
        if (it == images.end())
            throw std::out_of_range("linear map has no image for a monomial");
        out += it->second * c;
    }
    return out;
}

bool LinearMap::is_zero() const
{
    return std::all_of(images.begin(), images.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

std::string LinearMap::to_string(const std::vector<std::string>& names) const
{
    std::string out;
    for (const auto& [e, img] : images) {
        if (img.is_zero())
            continue;
        if (!out.empty())
            out += "; ";
        out += CPoly::monomial(e).to_string(names) + " -> " + img.to_string(names);
    }
    return out.empty() ? "0" : out;
}

GaugeResult gauge_step(const StarProduct& a, const StarProduct& b, unsigned n, unsigned degree_bound,
                       const std::vector<LinearMap>& lower)
{
    if (n == 0)
        throw std::invalid_argument("gauge step order must be positive");
    if (lower.size() + 1 != n)
        throw std::invalid_argument("gauge step needs exactly the operators T_1 .. T_{n-1}");
    if (a.algebra->dim() != b.algebra->dim())
        throw std::invalid_argument("star products live on different spaces");
    const std::size_t nv = a.algebra->dim();
    const auto& names = a.algebra->coords();

    auto domain = a.domain_monomials(degree_bound);
    std::map<Exponents, std::size_t> index;
    for (std::size_t k = 0; k < domain.size(); ++k)
        index.emplace(domain[k], k);
    const std::size_t D = domain.size();
    auto unknown = [&](std::size_t from, std::size_t to) { return from * D + to; };

    auto lower_total = [&](const CPoly& f) {
        CPoly out = f;
        for (std::size_t k = 0; k < lower.size(); ++k)
            out += lower[k].apply(f) * HPoly::monomial(1, k + 1);
        return out;
    };

    std::map<std::pair<std::size_t, std::size_t>, CPoly> classical;
    auto classical_product = [&](std::size_t i, std::size_t j) -> const CPoly& {
        auto key = std::minmax(i, j);
        auto it = classical.find(key);
        if (it == classical.end())
            it = classical
                     .emplace(key, a.commutative(CPoly::monomial(domain[i]), CPoly::monomial(domain[j])))
                     .first;
        return it->second;
    };

    GaugeResult result;
    result.unknowns = D * D;
    LinearSystem sys(D * D);
    for (std::size_t fi = 0; fi < D; ++fi)
        for (std::size_t gi = 0; gi < D; ++gi) {
            if (total_degree(domain[fi]) + total_degree(domain[gi]) > degree_bound)
                continue;
            CPoly f = CPoly::monomial(domain[fi]);
            CPoly g = CPoly::monomial(domain[gi]);
            CPoly lhs = lower_total(a(f, g));
            CPoly rhs = b(lower_total(f), lower_total(g));
            for (unsigned k = 0; k < n; ++k)
                if (!(lhs.h_coefficient(k) == rhs.h_coefficient(k)))
                    throw std::invalid_argument("products disagree below order " + std::to_string(n) + " at (" +
                                                f.to_string(names) + ", " + g.to_string(names) + ")");
            CPoly defect = rhs.h_coefficient(n) - lhs.h_coefficient(n);

            std::map<Exponents, SparseRow> rows;
            auto add = [&](const Exponents& mono, std::size_t var, const Scalar& v) {
                auto& slot = rows[mono][var];
                slot += v;
            };
            // T_n(fg)
            for (const auto& [m, c] : classical_product(fi, gi).terms()) {
                auto it = index.find(m);
                if (it == index.end())
                    throw std::invalid_argument("classical product leaves the degree-bounded domain");
                for (std::size_t mu = 0; mu < D; ++mu)
                    add(domain[mu], unknown(it->second, mu), c.constant_term());
            }
            // - T_n(f) g - f T_n(g)
            for (std::size_t mu = 0; mu < D; ++mu) {
                for (const auto& [m, c] : classical_product(mu, gi).terms())
                    add(m, unknown(fi, mu), -c.constant_term());
                for (const auto& [m, c] : classical_product(fi, mu).terms())
                    add(m, unknown(gi, mu), -c.constant_term());
            }
            for (const auto& [m, c] : defect.terms())
                rows[m];
            for (auto& [m, row] : rows) {
                std::string tag = "pair (" + f.to_string(names) + ", " + g.to_string(names) +
                                  "), coefficient of " + CPoly::monomial(m).to_string(names) + ": 0 = " +
                                  defect.coeff(m).to_string();
                sys.add_equation(std::move(row), defect.coeff(m).constant_term(), std::move(tag));
            }
        }
    result.equations = sys.equations();
    result.rank = sys.rank();
    if (!sys.consistent()) {
        result.certificate = sys.inconsistency();
        return result;
    }
    result.feasible = true;
    auto x = sys.solution();
    for (std::size_t from = 0; from < D; ++from) {
        CPoly img(nv);
        for (std::size_t to = 0; to < D; ++to)
            img.add_term(domain[to], HPoly(x[unknown(from, to)]));
        result.operator_n.images.emplace(domain[from], std::move(img));
    }
    return result;
}

}  // namespace orbitstar
