#pragma once

#include "orbitstar/lie.hpp"
#include "orbitstar/polyalg.hpp"
#include "orbitstar/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitstar {

/// A word X_{w_0} X_{w_1} ... in the generators, stored densely so that
/// intermediate non-PBW states are representable.
using Word = std::vector<std::uint8_t>;

bool is_sorted_word(const Word& w);
Word ordered_word(const Exponents& e);
Exponents word_exponents(const Word& w, std::size_t dim);

/// Element of U_h = T(g)[h] / (XY - YX - h[X,Y]): a combination of words
/// with coefficients in Q(i)[h].  Products are always returned in PBW
/// canonical form (every word nondecreasing); sums of canonical elements
/// stay canonical.
class NCElement {
public:
    using Terms = std::map<Word, HPoly>;

    explicit NCElement(LieAlgebraPtr algebra) : algebra_(std::move(algebra)) {}

    static NCElement scalar(LieAlgebraPtr algebra, const HPoly& c);
    static NCElement generator(LieAlgebraPtr algebra, std::size_t index);
    /// The raw word; not normalized.
    static NCElement word(LieAlgebraPtr algebra, Word w, const HPoly& c = HPoly(1));

    const LieAlgebraPtr& algebra() const { return algebra_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_canonical() const;
    HPoly coeff(const Word& w) const;

    void add_term(const Word& w, const HPoly& c);

    NCElement& operator+=(const NCElement& o);
    NCElement& operator-=(const NCElement& o);
    NCElement& operator*=(const HPoly& c);
    friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
    friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
    friend NCElement operator*(NCElement a, const HPoly& c) { return a *= c; }
    /// multiply(): concatenation followed by normal_form.
    friend NCElement operator*(const NCElement& a, const NCElement& b);
    NCElement operator-() const;

    /// Structural equality of the stored terms (compare canonical forms).
    friend bool operator==(const NCElement& a, const NCElement& b);

    /// "X*Y - h*Z", generator powers written X^2.
    std::string to_string() const;

private:
    void require_same(const NCElement& o) const;
    LieAlgebraPtr algebra_;
    Terms terms_;
};

/// PBW normal form by leftmost-descent rewriting
///   X_j X_i -> X_i X_j + h sum_k c[j][i][k] X_k   (j > i).
NCElement normal_form(const NCElement& a);
/// Throws std::invalid_argument when the algebras differ.
NCElement multiply(const NCElement& a, const NCElement& b);
NCElement power(const NCElement& a, unsigned k);
/// a*X_i - X_i*a == 0 for every generator.
bool is_central(const NCElement& a);
/// max over terms of word length + h-degree; nullopt for zero.
std::optional<unsigned> graded_degree(const NCElement& a);
/// True if every term has the same graded degree.
bool is_graded_homogeneous(const NCElement& a);
/// Evaluates every coefficient at h = h0.
NCElement specialize(const NCElement& a, const Scalar& h0);
/// rho: U_h -> U_h / hU_h = C[g*]: drops positive h-powers, words become monomials.
CPoly project_h0(const NCElement& a);
/// Replaces each generator X_i by images[i] and multiplies out in the
/// algebra of the images.
NCElement substitute(const NCElement& a, const std::vector<NCElement>& images);

/// x^e -> the ordered word X_1^{e_1} ... X_n^{e_n}, extended linearly.
NCElement ordered_embedding(const LieAlgebraPtr& algebra, const CPoly& f);
/// Inverse of ordered_embedding on canonical elements.
CPoly ordered_readback(const NCElement& u);

}  // namespace orbitstar
