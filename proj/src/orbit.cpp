#include "orbitstar/orbit.hpp"

#include "orbitstar/linsolve.hpp"

#include <stdexcept>

namespace orbitstar {

namespace {

ReductionSystem make_basis_rule(const MonomialOrder& order, const std::vector<CPoly>& invariants,
                                const std::vector<Rational>& levels)
{
    std::vector<CPoly> gens;
    for (std::size_t i = 0; i < invariants.size(); ++i)
        gens.push_back(invariants[i] - CPoly::constant(invariants[i].nvars(), Scalar(levels[i])));
    return ReductionSystem::from_generators(order, gens);
}

NCElement central_minus_lift(const Orbit::LiftedRule& r)
{
    return r.central - NCElement::scalar(r.central.algebra(), r.level);
}

std::size_t require_su2_type(const Orbit& o)
{
    auto v = o.reduced_variable();
    if (!v)
        throw std::invalid_argument("operation needs an orbit with a single invariant led by a square");
    return *v;
}

}  // namespace

Orbit::Orbit(LieAlgebraPtr algebra, std::vector<CPoly> invariants, std::vector<Rational> levels,
             std::vector<HPoly> lifts, MonomialOrder order)
    : algebra_(std::move(algebra)),
      invariants_(std::move(invariants)),
      levels_(std::move(levels)),
      lifts_(std::move(lifts)),
      basis_rule_(make_basis_rule(order, invariants_, levels_))
{
    if (invariants_.empty())
        throw std::invalid_argument("orbit needs at least one invariant");
    if (levels_.size() != invariants_.size() || lifts_.size() != invariants_.size())
        throw std::invalid_argument("orbit needs one level and one lift per invariant");
    const bool is_su2 = *algebra_ == *predefined("su2");
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
        const CPoly& p = invariants_[i];
        if (p.nvars() != algebra_->dim())
            throw std::invalid_argument("invariant has the wrong number of variables");
        if (!p.is_h_free())
            throw std::invalid_argument("invariants must not depend on h");
        if (!is_invariant(*algebra_, p))
            throw std::invalid_argument("polynomial is not invariant: " + p.to_string(algebra_->coords()));
        if (!(lifts_[i].constant_term() == Scalar(levels_[i])))
            throw std::invalid_argument("lift c(h) does not reduce to the level at h = 0");
        if (is_su2 && sgn(levels_[i]) == 0)
            throw std::invalid_argument("su2 orbit at level 0 is not regular");
        NCElement central = symmetrize(algebra_, p);
        if (!is_central(central))
            throw std::invalid_argument("symmetrized invariant is not central");
        const auto& rule = basis_rule_.rules()[i];
        lifted_.push_back({rule.lead, p.coeff(rule.lead).constant_term(), std::move(central), lifts_[i]});
    }
}

Orbit Orbit::su2(const Rational& level, std::optional<HPoly> lift)
{
    auto L = predefined("su2");
    CPoly p(3);
    for (std::size_t k = 0; k < 3; ++k) {
        Exponents e(3, 0);
        e[k] = 2;
        p.add_term(e, 1);
    }
    HPoly c = lift ? *lift : HPoly(Scalar(level));
    return Orbit(L, {p}, {level}, {c}, MonomialOrder({2, 1, 0}));
}

std::optional<std::size_t> Orbit::reduced_variable() const
{
    if (invariants_.size() != 1)
        return std::nullopt;
    const Exponents& lead = lifted_.front().lead;
    for (std::size_t v = 0; v < lead.size(); ++v)
        if (lead[v] == 2 && total_degree(lead) == 2)
            return v;
    return std::nullopt;
}

Orbit Orbit::neighbor(const Rational& level) const
{
    if (invariants_.size() != 1)
        throw std::invalid_argument("neighbouring orbit needs a single invariant");
    HPoly lift = lifts_.front() + HPoly(Scalar(level - levels_.front()));
    return Orbit(algebra_, invariants_, {level}, {lift}, basis_rule_.order());
}

// ---------------------------------------------------------------- reductions

CPoly orbit_reduce(const Orbit& o, const CPoly& f)
{
    return reduce(f, o.basis_rule()).remainder;
}

B1B2 decompose_B1B2(const Orbit& o, const CPoly& f)
{
    const std::size_t z = require_su2_type(o);
    const std::size_t n = o.nvars();
    Reduction red = reduce(f, o.basis_rule());
    B1B2 out{red.quotients.front(), CPoly(n), CPoly(n)};
    for (const auto& [e, c] : red.remainder.terms()) {
        if (e[z] == 0) {
            out.r.add_term(e, c);
        } else {
            Exponents d = e;
            d[z] = 0;
            out.s.add_term(d, c);
        }
    }
    return out;
}

IdealReduction ideal_divide_h(const Orbit& o, const NCElement& u)
{
    const auto& L = o.algebra();
    const std::size_t n = o.nvars();
    const auto& rules = o.lifted_rules();
    const MonomialOrder& order = o.basis_rule().order();
    std::vector<NCElement> generators;
    for (const auto& r : rules)
        generators.push_back(central_minus_lift(r));

    IdealReduction out{NCElement(L), std::vector<NCElement>(rules.size(), NCElement(L))};
    NCElement rest = u.is_canonical() ? u : normal_form(u);
    for (;;) {
        const Word* best = nullptr;
        Exponents best_e;
        std::size_t best_rule = 0;
        for (const auto& [w, c] : rest.terms()) {
            Exponents e = word_exponents(w, n);
            std::size_t r = 0;
            while (r < rules.size() && !divides(rules[r].lead, e))
                ++r;
            if (r == rules.size())
                continue;
            if (!best || w.size() > best->size() || (w.size() == best->size() && order.greater(e, best_e))) {
                best = &w;
                best_e = std::move(e);
                best_rule = r;
            }
        }
        if (!best)
            break;
        const auto& rule = rules[best_rule];
        Exponents cof = best_e;
        for (std::size_t k = 0; k < n; ++k)
            cof[k] -= rule.lead[k];
        HPoly c = rest.coeff(*best) * rule.lead_coeff.inverse();
        NCElement q = NCElement::word(L, ordered_word(cof), c);
        out.quotients[best_rule] += q;
        rest -= q * generators[best_rule];
    }
    out.remainder = std::move(rest);
    return out;
}

NCElement ideal_reduce_h(const Orbit& o, const NCElement& u)
{
    return ideal_divide_h(o, u).remainder;
}

// ---------------------------------------------------------------- the two psi maps

NCElement psi_example(const Orbit& o, const CPoly& f)
{
    const std::size_t z = require_su2_type(o);
    const auto& L = o.algebra();
    B1B2 d = decompose_B1B2(o, f);
    CPoly basis_part = d.r + d.s * CPoly::variable(o.nvars(), z);
    NCElement out = ordered_embedding(L, basis_part);
    if (!d.a.is_zero())
        out += ordered_embedding(L, d.a) * central_minus_lift(o.lifted_rules().front());
    return out;
}

CPoly psi_example_inverse(const Orbit& o, const NCElement& u)
{
    require_su2_type(o);
    IdealReduction d = ideal_divide_h(o, u);
    const CPoly& p = o.invariants().front();
    CPoly gen = p - CPoly::constant(o.nvars(), Scalar(o.levels().front()));
    return ordered_readback(d.quotients.front()) * gen + ordered_readback(d.remainder);
}

NCElement psi_tangential(const Orbit& o, const CPoly& f)
{
    if (o.invariants().size() != 1)
        throw std::invalid_argument("tangential map is implemented for a single invariant");
    Reduction red = reduce(f, o.basis_rule());
    NCElement out = ordered_embedding(o.algebra(), red.remainder);
    if (!red.quotients.front().is_zero())
        out += psi_tangential(o, red.quotients.front()) * central_minus_lift(o.lifted_rules().front());
    return out;
}

CPoly psi_tangential_inverse(const Orbit& o, const NCElement& u)
{
    if (o.invariants().size() != 1)
        throw std::invalid_argument("tangential map is implemented for a single invariant");
    IdealReduction d = ideal_divide_h(o, u);
    CPoly out = ordered_readback(d.remainder);
    if (!d.quotients.front().is_zero()) {
        CPoly gen = o.invariants().front() - CPoly::constant(o.nvars(), Scalar(o.levels().front()));
        out += gen * psi_tangential_inverse(o, d.quotients.front());
    }
    return out;
}

StarProduct example_star(const Orbit& o)
{
    StarProduct s;
    s.name = "example-psi";
    s.algebra = o.algebra();
    s.forward = [o](const CPoly& f) { return psi_example(o, f); };
    s.backward = [o](const NCElement& u) { return psi_example_inverse(o, u); };
    return s;
}

StarProduct tangential_star(const Orbit& o)
{
    StarProduct s;
    s.name = "tangential";
    s.algebra = o.algebra();
    s.forward = [o](const CPoly& f) { return psi_tangential(o, f); };
    s.backward = [o](const NCElement& u) { return psi_tangential_inverse(o, u); };
    return s;
}

StarProduct orbit_star_product(const Orbit& o)
{
    StarProduct s;
    s.name = "orbit";
    s.algebra = o.algebra();
    s.forward = [o](const CPoly& f) {
        for (const auto& [e, c] : f.terms())
            if (!o.in_basis(e))
                throw std::invalid_argument("input is not in the orbit basis: " +
                                            CPoly::monomial(e).to_string(o.algebra()->coords()));
        return ordered_embedding(o.algebra(), f);
    };
    s.backward = [](const NCElement& u) { return ordered_readback(u); };
    s.reduce = [o](const NCElement& u) { return ideal_reduce_h(o, u); };
    s.classical = [o](const CPoly& f) { return orbit_reduce(o, f); };
    s.in_domain = [o](const Exponents& e) { return o.in_basis(e); };
    return s;
}

CPoly orbit_star(const Orbit& o, const CPoly& f, const CPoly& g)
{
    return orbit_star_product(o)(f, g);
}

// ---------------------------------------------------------------- checks

CheckResult tangentiality_check(const Orbit& o, const std::function<NCElement(const CPoly&)>& psi,
                                const Rational& level, unsigned degree_bound)
{
    Orbit nb = o.neighbor(level);
    const auto& names = o.algebra()->coords();
    const CPoly& p = o.invariants().front();
    const unsigned dp = static_cast<unsigned>(p.total_degree());
    CheckResult out;
    if (degree_bound < dp)
        return out;
    CPoly gen = p - CPoly::constant(o.nvars(), Scalar(level));
    for (const auto& g : monomials_up_to(o.nvars(), degree_bound - dp)) {
        ++out.cases;
        CPoly f = CPoly::monomial(g) * gen;
        NCElement rem = ideal_reduce_h(nb, psi(f));
        if (!rem.is_zero()) {
            out.passed = false;
            out.input = CPoly::monomial(g).to_string(names) + "*(" + gen.to_string(names) + ")";
            out.witness = rem.to_string();
            out.monomial = g;
            return out;
        }
    }
    return out;
}

CheckResult invariant_multiplication_check(const Orbit& o, const StarProduct& star, unsigned degree_bound)
{
    const auto& names = o.algebra()->coords();
    const std::size_t n = o.nvars();
    CheckResult out;
    for (const auto& k : monomials_up_to(o.invariants().size(), degree_bound)) {
        if (total_degree(k) == 0)
            continue;
        CPoly f = CPoly::constant(n, 1);
        for (std::size_t i = 0; i < k.size(); ++i)
            f = f * o.invariants()[i].pow(k[i]);
        const int df = f.total_degree();
        if (df > static_cast<int>(degree_bound))
            continue;
        for (const auto& g : monomials_up_to(n, degree_bound - static_cast<unsigned>(df))) {
            ++out.cases;
            CPoly gm = CPoly::monomial(g);
            CPoly got = star(gm, f);
            CPoly want = gm * f;
            if (!(got == want)) {
                out.passed = false;
                out.input = gm.to_string(names) + " * " + f.to_string(names);
                out.witness = (got - want).to_string(names);
                return out;
            }
        }
    }
    return out;
}

CheckResult lemma_check(const Orbit& o, const CPoly& p1, const CPoly& p2)
{
    const std::size_t z = require_su2_type(o);
    const std::size_t n = o.nvars();
    if (n != 3 || z != 2)
        throw std::invalid_argument("lemma check needs the x, y, z chart");
    for (const CPoly* p : {&p1, &p2})
        for (const auto& [e, c] : p->terms())
            if (e[z] != 0)
                throw std::invalid_argument("lemma check inputs must be free of z");
    const auto& names = o.algebra()->coords();
    CPoly got = orbit_star(o, p1, p2).truncate_h(2);
    CPoly correction = CPoly::variable(n, z) * partial_derivative(p1, 1) * partial_derivative(p2, 0);
    CPoly want = orbit_reduce(o, p1 * p2 - correction * HPoly::h()).truncate_h(2);
    CheckResult out;
    out.cases = 1;
    if (!(got == want)) {
        out.passed = false;
        out.input = p1.to_string(names) + " * " + p2.to_string(names);
        out.witness = got.to_string(names) + " vs " + want.to_string(names);
    }
    return out;
}

CheckResult diagram_check(const Orbit& o, const std::function<NCElement(const CPoly&)>& psi, unsigned degree_bound)
{
    const auto& names = o.algebra()->coords();
    CheckResult out;
    for (const auto& e : monomials_up_to(o.nvars(), degree_bound)) {
        ++out.cases;
        CPoly f = CPoly::monomial(e);
        NCElement top = ideal_reduce_h(o, psi(f));
        NCElement bottom = ordered_embedding(o.algebra(), orbit_reduce(o, f));
        if (!(top == bottom)) {
            out.passed = false;
            out.input = f.to_string(names);
            out.witness = top.to_string() + " vs " + bottom.to_string();
            return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------- non-differentiability probe

BidiffResult bidiff_infeasibility(const Orbit& o, unsigned coeff_degree_bound, std::optional<CPoly> override_zz)
{
    const std::size_t z = require_su2_type(o);
    const std::size_t n = o.nvars();
    if (n != 3 || z != 2)
        throw std::invalid_argument("the probe needs the x, y, z chart");
    const auto& names = o.algebra()->coords();
    StarProduct star = orbit_star_product(o);

    std::vector<Exponents> basis;
    for (const auto& e : monomials_up_to(n, coeff_degree_bound))
        if (o.in_basis(e))
            basis.push_back(e);
    std::map<Exponents, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k)
        index.emplace(basis[k], k);
    const std::size_t N = basis.size();
    const std::size_t uv[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const char* uv_name[4] = {"xx", "xy", "yx", "yy"};

    BidiffResult out;
    out.unknowns = 4 * N;
    LinearSystem sys(4 * N);

    // b^{uv} = B_1(u, v)
    std::vector<CPoly> pair_data;
    for (std::size_t a = 0; a < 4; ++a) {
        CPoly b1 = bn_coefficient(star, CPoly::variable(n, uv[a][0]), CPoly::variable(n, uv[a][1]), 1);
        pair_data.push_back(b1);
        std::map<Exponents, Scalar> rhs;
        for (const auto& m : basis)
            rhs[m];
        for (const auto& [m, c] : b1.terms())
            rhs[m] = c.constant_term();
        for (const auto& [m, c] : rhs) {
            SparseRow row;
            auto it = index.find(m);
            if (it != index.end())
                row[a * N + it->second] = 1;
            sys.add_equation(std::move(row), c,
                             std::string("b^") + uv_name[a] + " at " + CPoly::monomial(m).to_string(names) +
                                 " = " + c.to_string());
        }
    }
    bool pair_consistent = sys.consistent();

    // z^2 B_1(z, z) = sum b^{uv} u v  (d_u z = -u / z)
    if (override_zz) {
        out.b1_zz = *override_zz;
    } else {
        CPoly bzz = bn_coefficient(star, CPoly::variable(n, z), CPoly::variable(n, z), 1);
        out.b1_zz = orbit_reduce(o, CPoly::variable(n, z).pow(2) * bzz);
    }
    std::map<Exponents, SparseRow> rows;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t k = 0; k < N; ++k) {
            CPoly image = orbit_reduce(
                o, CPoly::monomial(basis[k]) * CPoly::variable(n, uv[a][0]) * CPoly::variable(n, uv[a][1]));
            for (const auto& [m, c] : image.terms())
                rows[m][a * N + k] += c.constant_term();
        }
    for (const auto& [m, c] : out.b1_zz.terms())
        rows[m];
    for (auto& [m, row] : rows)
        sys.add_equation(std::move(row), out.b1_zz.coeff(m).constant_term(),
                         "z^2 B1(z,z) at " + CPoly::monomial(m).to_string(names));

    out.forced = CPoly(n);
    for (std::size_t a = 0; a < 4; ++a)
        out.forced += pair_data[a] * CPoly::variable(n, uv[a][0]) * CPoly::variable(n, uv[a][1]);
    out.forced = orbit_reduce(o, out.forced);

    out.equations = sys.equations();
    out.rank = sys.rank();
    out.feasible = sys.consistent();
    if (!out.feasible) {
        if (pair_consistent)
            out.certificate = out.b1_zz.to_string(names) + " = " + out.forced.to_string(names);
        else
            out.certificate = *sys.inconsistency();
        return out;
    }
    auto x = sys.solution();
    for (std::size_t a = 0; a < 4; ++a) {
        CPoly b(n);
        for (std::size_t k = 0; k < N; ++k)
            b.add_term(basis[k], HPoly(x[a * N + k]));
        out.coefficients.push_back(std::move(b));
    }
    return out;
}

}  // namespace orbitstar
