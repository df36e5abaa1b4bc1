#ifndef SUPERHOPF_MORPHISM_HPP
#define SUPERHOPF_MORPHISM_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <superhopf/localized.hpp>
#include <superhopf/parse.hpp>

namespace superhopf
{

class InvalidMorphism : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Sum of localized elements over one common denominator.
inline LocalizedElement sum_localized(const AlgebraPtr &alg, const std::vector<LocalizedElement> &parts)
{
    std::vector<unsigned> top(alg->num_denominators(), 0);
    for (const auto &p : parts) {
        if (p.is_zero()) continue;
        for (std::size_t i = 0; i < top.size(); ++i) top[i] = std::max(top[i], p.denominator_exponents()[i]);
    }
    // Powers of each denominator, filled on demand.
    std::vector<std::vector<SuperPolynomial>> powers(top.size());
    auto den_pow = [&](std::size_t i, unsigned k) -> const SuperPolynomial & {
        auto &v = powers[i];
        if (v.empty()) v.push_back(SuperPolynomial::constant(alg->free(), Rational(1)));
        while (v.size() <= k) v.push_back(v.back() * alg->denominators()[i]);
        return v[k];
    };
    SuperPolynomial num(alg->free());
    for (const auto &p : parts) {
        if (p.is_zero()) continue;
        SuperPolynomial t = p.numerator();
        for (std::size_t i = 0; i < top.size(); ++i) {
            const unsigned gap = top[i] - p.denominator_exponents()[i];
            if (gap > 0) t = t * den_pow(i, gap);
        }
        num += t;
    }
    return LocalizedElement(alg, alg->reduce(std::move(num)), std::move(top));
}

/// Even superalgebra morphism given by the images of the free generators.
///
/// Images of the source denominators must be units of the target; their
/// inverses are computed once at construction.
class SuperalgebraMorphism
{
public:
    SuperalgebraMorphism() = default;

    SuperalgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<LocalizedElement> images)
        : m_source(std::move(source)), m_target(std::move(target)), m_images(std::move(images))
    {
        const auto &ring = *m_source->free();
        if (m_images.size() != ring.num_vars()) {
            throw InvalidMorphism("expected " + std::to_string(ring.num_vars()) + " generator images");
        }
        for (std::size_t v = 0; v < m_images.size(); ++v) {
            if (!same_algebra(m_images[v].algebra(), m_target)) {
                throw InvalidMorphism("image of " + ring.name(v) + " lies outside the target");
            }
            auto p = m_images[v].homogeneous_parity();
            if (!m_images[v].is_zero() && (!p || *p != ring.parity(v))) {
                throw InvalidMorphism("image of " + ring.name(v) + " does not preserve parity");
            }
        }
        for (const auto &d : m_source->denominators()) {
            try {
                m_den_inverses.push_back(invert_unit(apply_polynomial(d)));
            } catch (const NonUnit &e) {
                throw InvalidMorphism("image of denominator " + to_string(d) + " is not a unit: " + e.what());
            }
        }
        if (!m_target->has_general_relations()) {
            for (const auto &r : m_source->relations()) {
                if (!apply_polynomial(r).is_zero()) {
                    throw InvalidMorphism("relation " + to_string(r) + " is not mapped to zero");
                }
            }
        }
    }

    static SuperalgebraMorphism identity(const AlgebraPtr &alg)
    {
        std::vector<LocalizedElement> images;
        for (std::size_t v = 0; v < alg->num_generators(); ++v) images.push_back(LocalizedElement::generator(alg, v));
        return SuperalgebraMorphism(alg, alg, std::move(images));
    }

    /// Morphism from images written in the expression grammar.
    static SuperalgebraMorphism from_strings(const AlgebraPtr &source, const AlgebraPtr &target,
                                             const std::vector<std::string> &images)
    {
        std::vector<LocalizedElement> els;
        for (const auto &s : images) els.push_back(parse_element(target, s));
        return SuperalgebraMorphism(source, target, std::move(els));
    }

    const AlgebraPtr &source() const { return m_source; }
    const AlgebraPtr &target() const { return m_target; }
    const std::vector<LocalizedElement> &images() const { return m_images; }
    const LocalizedElement &image(std::size_t var) const { return m_images.at(var); }
    const std::vector<LocalizedElement> &denominator_inverses() const { return m_den_inverses; }

    LocalizedElement apply(const LocalizedElement &x) const
    {
        if (!same_algebra(x.algebra(), m_source)) throw RingMismatch("argument is not in the morphism source");
        LocalizedElement r = apply_polynomial(x.numerator());
        const auto &den = x.denominator_exponents();
        for (std::size_t i = 0; i < den.size(); ++i) {
            if (den[i] > 0) r = r * m_den_inverses[i].pow(den[i]);
        }
        return r;
    }

    /// Image of a polynomial in the source's free ring.
    LocalizedElement apply_polynomial(const SuperPolynomial &p) const
    {
        const auto &ring = *m_source->free();
        if (!same_ring(p.ring(), m_source->free())) throw RingMismatch("polynomial is not over the source ring");
        std::vector<std::vector<LocalizedElement>> pow(ring.num_even());
        auto even_pow = [&](std::size_t v, unsigned k) -> const LocalizedElement & {
            auto &cache = pow[v];
            if (cache.empty()) cache.push_back(LocalizedElement::constant(m_target, Rational(1)));
            while (cache.size() <= k) cache.push_back(cache.back() * m_images[v]);
            return cache[k];
        };
        std::vector<LocalizedElement> parts;
        parts.reserve(p.size());
        for (const auto &[m, c] : p.terms()) {
            LocalizedElement t = LocalizedElement::constant(m_target, c);
            for (std::size_t v = 0; v < ring.num_even() && !t.is_zero(); ++v) {
                if (m.even[v] > 0) t = t * even_pow(v, m.even[v]);
            }
            for (std::size_t j = 0; j < ring.num_odd() && !t.is_zero(); ++j) {
                if ((m.odd >> j) & 1U) t = t * m_images[ring.num_even() + j];
            }
            if (!t.is_zero()) parts.push_back(std::move(t));
        }
        return sum_localized(m_target, parts);
    }

private:
    AlgebraPtr m_source;
    AlgebraPtr m_target;
    std::vector<LocalizedElement> m_images;
    std::vector<LocalizedElement> m_den_inverses;
};

/// phi after psi.
inline SuperalgebraMorphism compose(const SuperalgebraMorphism &phi, const SuperalgebraMorphism &psi)
{
    if (!same_algebra(psi.target(), phi.source())) throw RingMismatch("morphisms are not composable");
    std::vector<LocalizedElement> images;
    for (const auto &img : psi.images()) images.push_back(phi.apply(img));
    return SuperalgebraMorphism(psi.source(), phi.target(), std::move(images));
}

/// The ground field K as a presented superalgebra.
inline AlgebraPtr ground_algebra()
{
    static const AlgebraPtr k = make_free_algebra({}, {}, "K");
    return k;
}

/// One summand c * (leg_1 ⊗ ... ⊗ leg_k) of a tensor element.
struct PureTensor {
    Rational coefficient;
    std::vector<LocalizedElement> legs;
};

/// A_1 ⊗ ... ⊗ A_k realized as one presented superalgebra.
///
/// Even generators are laid out factor by factor, then odd generators factor
/// by factor, so the canonical monomial of a pure tensor of monomials carries
/// no sign. A name shared by several factors is qualified as `name@k`
/// (k counted from 1).
class TensorSuperalgebra
{
public:
    TensorSuperalgebra() = default;

    explicit TensorSuperalgebra(std::vector<AlgebraPtr> factors) : m_factors(std::move(factors))
    {
        std::map<std::string, int> uses;
        for (const auto &f : m_factors) {
            for (std::size_t v = 0; v < f->num_generators(); ++v) ++uses[f->free()->name(v)];
        }
        auto qualified = [&](const std::string &n, std::size_t k) {
            return uses[n] > 1 ? n + "@" + std::to_string(k + 1) : n;
        };
        std::vector<std::string> even, odd;
        for (std::size_t k = 0; k < m_factors.size(); ++k) {
            for (const auto &n : m_factors[k]->free()->even_names()) even.push_back(qualified(n, k));
        }
        for (std::size_t k = 0; k < m_factors.size(); ++k) {
            for (const auto &n : m_factors[k]->free()->odd_names()) odd.push_back(qualified(n, k));
        }
        m_var_map.resize(m_factors.size());
        std::size_t e = 0, o = even.size();
        for (std::size_t k = 0; k < m_factors.size(); ++k) {
            const auto &fr = *m_factors[k]->free();
            m_var_map[k].resize(fr.num_vars());
            for (std::size_t v = 0; v < fr.num_even(); ++v) m_var_map[k][v] = e++;
        }
        for (std::size_t k = 0; k < m_factors.size(); ++k) {
            const auto &fr = *m_factors[k]->free();
            for (std::size_t j = 0; j < fr.num_odd(); ++j) m_var_map[k][fr.num_even() + j] = o++;
        }
        m_var_factor.resize(even.size() + odd.size());
        for (std::size_t k = 0; k < m_factors.size(); ++k) {
            for (auto v : m_var_map[k]) m_var_factor[v] = k;
        }
        auto ring = make_free_ring(std::move(even), std::move(odd));
        m_ring = ring;
        std::vector<SuperPolynomial> rels, dens;
        for (std::size_t k = 0; k < m_factors.size(); ++k) {
            m_den_offset.push_back(dens.size());
            for (const auto &r : m_factors[k]->relations()) rels.push_back(embed_polynomial(k, r));
            for (const auto &d : m_factors[k]->denominators()) dens.push_back(embed_polynomial(k, d));
        }
        std::string name;
        for (std::size_t k = 0; k < m_factors.size(); ++k) {
            if (k) name += " (x) ";
            name += m_factors[k]->name().empty() ? "A" : m_factors[k]->name();
        }
        m_ambient = make_algebra(ring, std::move(rels), std::move(dens), std::move(name));
    }

    const AlgebraPtr &ambient() const { return m_ambient; }
    const std::vector<AlgebraPtr> &factors() const { return m_factors; }
    std::size_t size() const { return m_factors.size(); }
    const AlgebraPtr &factor(std::size_t k) const { return m_factors.at(k); }

    // Ambient index of generator `var` of factor k.
    std::size_t ambient_variable(std::size_t k, std::size_t var) const { return m_var_map.at(k).at(var); }
    std::size_t factor_of_variable(std::size_t ambient_var) const { return m_var_factor.at(ambient_var); }

    SuperPolynomial embed_polynomial(std::size_t k, const SuperPolynomial &p) const
    {
        const auto &fr = *m_factors.at(k)->free();
        if (!same_ring(p.ring(), m_factors[k]->free())) throw RingMismatch("polynomial is not over this factor");
        TermMap out;
        for (const auto &[m, c] : p.terms()) {
            Monomial mm(m_ring->num_even());
            for (std::size_t v = 0; v < fr.num_even(); ++v) mm.even[m_var_map[k][v]] = m.even[v];
            for (std::size_t j = 0; j < fr.num_odd(); ++j) {
                if ((m.odd >> j) & 1U) mm.odd |= std::uint64_t{1} << (m_var_map[k][fr.num_even() + j] - m_ring->num_even());
            }
            out.emplace(std::move(mm), c);
        }
        return SuperPolynomial(m_ring, std::move(out));
    }

    /// 1 ⊗ ... ⊗ x ⊗ ... ⊗ 1 with x in slot k.
    LocalizedElement embed(std::size_t k, const LocalizedElement &x) const
    {
        if (!same_algebra(x.algebra(), m_factors.at(k))) throw RingMismatch("element is not in this factor");
        std::vector<unsigned> den(m_ambient->num_denominators(), 0);
        const auto &xd = x.denominator_exponents();
        for (std::size_t i = 0; i < xd.size(); ++i) den[m_den_offset[k] + i] = xd[i];
        return LocalizedElement(m_ambient, embed_polynomial(k, x.numerator()), std::move(den));
    }

    /// x_1 ⊗ ... ⊗ x_k.
    LocalizedElement pure(const std::vector<LocalizedElement> &legs) const
    {
        if (legs.size() != m_factors.size()) throw std::invalid_argument("wrong number of tensor legs");
        LocalizedElement r = LocalizedElement::constant(m_ambient, Rational(1));
        for (std::size_t k = 0; k < legs.size(); ++k) r = r * embed(k, legs[k]);
        return r;
    }

    /// Canonical morphism A_k -> ambient.
    SuperalgebraMorphism injection(std::size_t k) const
    {
        std::vector<LocalizedElement> images;
        for (std::size_t v = 0; v < m_factors.at(k)->num_generators(); ++v) {
            images.push_back(LocalizedElement::generator(m_ambient, m_var_map[k][v]));
        }
        return SuperalgebraMorphism(m_factors[k], m_ambient, std::move(images));
    }

    /// Term-by-term decomposition into pure tensors of monomials.
    std::vector<PureTensor> split(const LocalizedElement &x) const
    {
        if (!same_algebra(x.algebra(), m_ambient)) throw RingMismatch("element is not in this tensor product");
        std::vector<std::vector<unsigned>> dens(m_factors.size());
        for (std::size_t k = 0; k < m_factors.size(); ++k) {
            const std::size_t nd = m_factors[k]->num_denominators();
            dens[k].assign(x.denominator_exponents().begin() + static_cast<std::ptrdiff_t>(m_den_offset[k]),
                           x.denominator_exponents().begin() + static_cast<std::ptrdiff_t>(m_den_offset[k] + nd));
        }
        std::vector<PureTensor> out;
        for (const auto &[m, c] : x.numerator().terms()) {
            PureTensor t{c, {}};
            for (std::size_t k = 0; k < m_factors.size(); ++k) {
                const auto &fr = m_factors[k]->free();
                Monomial mk(fr->num_even());
                for (std::size_t v = 0; v < fr->num_even(); ++v) mk.even[v] = m.even[m_var_map[k][v]];
                for (std::size_t j = 0; j < fr->num_odd(); ++j) {
                    const std::size_t av = m_var_map[k][fr->num_even() + j] - m_ring->num_even();
                    if ((m.odd >> av) & 1U) mk.odd |= std::uint64_t{1} << j;
                }
                t.legs.emplace_back(m_factors[k], SuperPolynomial::monomial(fr, std::move(mk)), dens[k]);
            }
            out.push_back(std::move(t));
        }
        return out;
    }

private:
    std::vector<AlgebraPtr> m_factors;
    FreeRingPtr m_ring;
    AlgebraPtr m_ambient;
    std::vector<std::vector<std::size_t>> m_var_map;
    std::vector<std::size_t> m_var_factor;
    std::vector<std::size_t> m_den_offset;
};

inline TensorSuperalgebra tensor_algebra(const AlgebraPtr &a, const AlgebraPtr &b)
{
    return TensorSuperalgebra({a, b});
}

/// phi_1 ⊗ ... ⊗ phi_k between given tensor products.
inline SuperalgebraMorphism tensor_morphism(const TensorSuperalgebra &source, const TensorSuperalgebra &target,
                                            const std::vector<SuperalgebraMorphism> &maps)
{
    if (maps.size() != source.size() || maps.size() != target.size()) {
        throw std::invalid_argument("tensor_morphism: factor count mismatch");
    }
    std::vector<LocalizedElement> images(source.ambient()->num_generators());
    for (std::size_t k = 0; k < maps.size(); ++k) {
        if (!same_algebra(maps[k].source(), source.factor(k)) || !same_algebra(maps[k].target(), target.factor(k))) {
            throw RingMismatch("tensor_morphism: factor does not match");
        }
        for (std::size_t v = 0; v < source.factor(k)->num_generators(); ++v) {
            images[source.ambient_variable(k, v)] = target.embed(k, maps[k].image(v));
        }
    }
    return SuperalgebraMorphism(source.ambient(), target.ambient(), std::move(images));
}

inline SuperalgebraMorphism tensor_morphism(const SuperalgebraMorphism &phi, const SuperalgebraMorphism &psi)
{
    return tensor_morphism(TensorSuperalgebra({phi.source(), psi.source()}),
                           TensorSuperalgebra({phi.target(), psi.target()}), {phi, psi});
}

/// Multiplication A ⊗ ... ⊗ A -> A (all factors equal to A).
inline SuperalgebraMorphism multiplication(const TensorSuperalgebra &t, const AlgebraPtr &a)
{
    std::vector<LocalizedElement> images(t.ambient()->num_generators());
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (!same_algebra(t.factor(k), a)) throw RingMismatch("multiplication: factor differs from target");
        for (std::size_t v = 0; v < a->num_generators(); ++v) {
            images[t.ambient_variable(k, v)] = LocalizedElement::generator(a, v);
        }
    }
    return SuperalgebraMorphism(t.ambient(), a, std::move(images));
}

/// Ambient morphism sending factor k to factor perm[k] (Koszul sign of the
/// transposition arises from the supercommutative product).
inline SuperalgebraMorphism permute_factors(const TensorSuperalgebra &source, const TensorSuperalgebra &target,
                                            const std::vector<std::size_t> &perm)
{
    std::vector<LocalizedElement> images(source.ambient()->num_generators());
    for (std::size_t k = 0; k < source.size(); ++k) {
        for (std::size_t v = 0; v < source.factor(k)->num_generators(); ++v) {
            images[source.ambient_variable(k, v)] =
                LocalizedElement::generator(target.ambient(), target.ambient_variable(perm.at(k), v));
        }
    }
    return SuperalgebraMorphism(source.ambient(), target.ambient(), std::move(images));
}

} // namespace superhopf

#endif
