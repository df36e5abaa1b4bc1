#ifndef SUPERHOPF_ALGEBRA_HPP
#define SUPERHOPF_ALGEBRA_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <superhopf/superpoly.hpp>

namespace superhopf
{

/// Free superalgebra modulo relations, localized at declared even denominators.
///
/// Relations that are single monomials are applied eagerly by every
/// arithmetic operation (they form an exact normal form). Other relations are
/// consulted only through the membership solver.
class PresentedSuperalgebra
{
public:
    PresentedSuperalgebra(FreeRingPtr free, std::vector<SuperPolynomial> relations = {},
                          std::vector<SuperPolynomial> denominators = {}, std::string name = {})
        : m_free(std::move(free)), m_relations(std::move(relations)), m_denominators(std::move(denominators)),
          m_name(std::move(name))
    {
        for (const auto &r : m_relations) {
            if (!same_ring(r.ring(), m_free)) throw RingMismatch("relation in a foreign ring");
        }
        for (const auto &d : m_denominators) {
            if (!same_ring(d.ring(), m_free)) throw RingMismatch("denominator in a foreign ring");
            if (d.is_zero()) throw std::invalid_argument("zero denominator");
            if (!d.is_pure_even()) throw std::invalid_argument("denominators must be even polynomials in even variables");
        }
        std::vector<SuperPolynomial> kept;
        for (const auto &r : m_relations) {
            if (r.is_zero()) continue;
            if (r.size() == 1) {
                m_monomial_relations.push_back(r.terms().begin()->first);
            } else {
                m_general_relations.push_back(r);
            }
            kept.push_back(r);
        }
        m_relations = std::move(kept);
        m_nilpotent.assign(m_free->num_vars(), false);
        for (std::size_t v = m_free->num_even(); v < m_free->num_vars(); ++v) m_nilpotent[v] = true;
        m_even_nilpotency = 1;
        for (const auto &m : m_monomial_relations) {
            std::size_t support = 0, var = 0;
            for (std::size_t v = 0; v < m_free->num_vars(); ++v) {
                if (m.exponent(v) > 0) {
                    ++support;
                    var = v;
                }
            }
            if (support == 1 && var < m_free->num_even()) {
                m_nilpotent[var] = true;
                m_even_nilpotency += m.exponent(var);
            }
        }
    }

    const FreeRingPtr &free() const { return m_free; }
    const std::vector<SuperPolynomial> &relations() const { return m_relations; }
    const std::vector<SuperPolynomial> &denominators() const { return m_denominators; }
    const std::vector<Monomial> &monomial_relations() const { return m_monomial_relations; }
    const std::vector<SuperPolynomial> &general_relations() const { return m_general_relations; }
    const std::string &name() const { return m_name; }
    std::size_t num_generators() const { return m_free->num_vars(); }
    std::size_t num_denominators() const { return m_denominators.size(); }
    bool has_general_relations() const { return !m_general_relations.empty(); }

    /// Variables that are nilpotent in the algebra: odd ones and even ones
    /// with a pure-power monomial relation.
    const std::vector<bool> &nilpotent_variables() const { return m_nilpotent; }
    unsigned even_nilpotency_bound() const { return m_even_nilpotency; }

    /// Drop every term divisible by a monomial relation.
    SuperPolynomial reduce(SuperPolynomial p) const
    {
        if (m_monomial_relations.empty()) return p;
        TermMap out;
        for (const auto &[m, c] : p.terms()) {
            const bool dead = std::any_of(m_monomial_relations.begin(), m_monomial_relations.end(),
                                          [&](const Monomial &r) { return r.divides(m); });
            if (!dead) out.emplace_hint(out.end(), m, c);
        }
        return SuperPolynomial(p.ring(), std::move(out));
    }

    friend bool operator==(const PresentedSuperalgebra &a, const PresentedSuperalgebra &b)
    {
        return same_ring(a.m_free, b.m_free) && a.m_relations == b.m_relations &&
               a.m_denominators == b.m_denominators;
    }

private:
    FreeRingPtr m_free;
    std::vector<SuperPolynomial> m_relations;
    std::vector<SuperPolynomial> m_denominators;
    std::string m_name;
    std::vector<Monomial> m_monomial_relations;
    std::vector<SuperPolynomial> m_general_relations;
    std::vector<bool> m_nilpotent;
    unsigned m_even_nilpotency = 1;
};

using AlgebraPtr = std::shared_ptr<const PresentedSuperalgebra>;

inline AlgebraPtr make_algebra(FreeRingPtr free, std::vector<SuperPolynomial> relations = {},
                               std::vector<SuperPolynomial> denominators = {}, std::string name = {})
{
    return std::make_shared<const PresentedSuperalgebra>(std::move(free), std::move(relations),
                                                         std::move(denominators), std::move(name));
}

// Free algebra K[even | odd] with no relations or denominators.
inline AlgebraPtr make_free_algebra(std::vector<std::string> even, std::vector<std::string> odd,
                                    std::string name = {})
{
    return make_algebra(make_free_ring(std::move(even), std::move(odd)), {}, {}, std::move(name));
}

inline bool same_algebra(const AlgebraPtr &a, const AlgebraPtr &b)
{
    return a == b || (a && b && *a == *b);
}

} // namespace superhopf

#endif
