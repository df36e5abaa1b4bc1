#ifndef SUPERHOPF_LOCALIZED_HPP
#define SUPERHOPF_LOCALIZED_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <superhopf/algebra.hpp>

namespace superhopf
{

/// Element numerator / prod_i d_i^{k_i} of a presented superalgebra.
///
/// Values are kept with common factors d_i cancelled where the numerator is
/// exactly divisible; equality is decided by cross-multiplication.
class LocalizedElement
{
public:
    LocalizedElement() = default;

    explicit LocalizedElement(AlgebraPtr alg)
        : m_alg(std::move(alg)), m_num(m_alg->free()), m_den(m_alg->num_denominators(), 0)
    {
    }

    LocalizedElement(AlgebraPtr alg, SuperPolynomial num, std::vector<unsigned> den = {})
        : m_alg(std::move(alg)), m_num(std::move(num)), m_den(std::move(den))
    {
        if (!same_ring(m_num.ring(), m_alg->free())) throw RingMismatch("numerator in a foreign ring");
        if (m_den.empty()) m_den.assign(m_alg->num_denominators(), 0);
        if (m_den.size() != m_alg->num_denominators()) throw std::invalid_argument("denominator exponent count");
        normalize();
    }

    static LocalizedElement constant(AlgebraPtr alg, const Rational &c)
    {
        auto ring = alg->free();
        return LocalizedElement(std::move(alg), SuperPolynomial::constant(std::move(ring), c));
    }

    static LocalizedElement generator(AlgebraPtr alg, std::size_t var)
    {
        auto ring = alg->free();
        return LocalizedElement(std::move(alg), SuperPolynomial::variable(std::move(ring), var));
    }

    static LocalizedElement generator(AlgebraPtr alg, std::string_view name)
    {
        const auto var = alg->free()->require(name);
        return generator(std::move(alg), var);
    }

    // 1 / d_i^k.
    static LocalizedElement denominator_power(AlgebraPtr alg, std::size_t i, unsigned k)
    {
        std::vector<unsigned> den(alg->num_denominators(), 0);
        den.at(i) = k;
        auto ring = alg->free();
        return LocalizedElement(std::move(alg), SuperPolynomial::constant(std::move(ring), Rational(1)),
                                std::move(den));
    }

    const AlgebraPtr &algebra() const { return m_alg; }
    const SuperPolynomial &numerator() const { return m_num; }
    const std::vector<unsigned> &denominator_exponents() const { return m_den; }

    bool is_polynomial() const
    {
        return std::all_of(m_den.begin(), m_den.end(), [](unsigned k) { return k == 0; });
    }

    bool is_zero() const { return m_num.is_zero(); }

    std::optional<Parity> homogeneous_parity() const { return m_num.homogeneous_parity(); }

    /// Numerator degree minus denominator degree.
    int degree() const
    {
        if (m_num.is_zero()) return -1;
        int d = m_num.degree();
        for (std::size_t i = 0; i < m_den.size(); ++i) {
            d -= static_cast<int>(m_den[i]) * m_alg->denominators()[i].degree();
        }
        return d;
    }

    // Constant value if the element is a constant.
    std::optional<Rational> constant_value() const
    {
        if (!m_num.is_constant() || !is_polynomial()) return std::nullopt;
        return m_num.constant_term();
    }

    SuperPolynomial denominator() const { return denominator_product(*m_alg, m_den); }

    static SuperPolynomial denominator_product(const PresentedSuperalgebra &alg, const std::vector<unsigned> &exps)
    {
        SuperPolynomial r = SuperPolynomial::constant(alg.free(), Rational(1));
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] > 0) r = r * alg.denominators()[i].pow(exps[i]);
        }
        return r;
    }

    LocalizedElement component(Parity p) const
    {
        return LocalizedElement(m_alg, m_num.component(p), m_den);
    }

    LocalizedElement &operator+=(const LocalizedElement &o) { return *this = combine(*this, o, 1); }
    LocalizedElement &operator-=(const LocalizedElement &o) { return *this = combine(*this, o, -1); }

    friend LocalizedElement operator+(const LocalizedElement &a, const LocalizedElement &b)
    {
        return combine(a, b, 1);
    }
    friend LocalizedElement operator-(const LocalizedElement &a, const LocalizedElement &b)
    {
        return combine(a, b, -1);
    }

    LocalizedElement operator-() const { return LocalizedElement(m_alg, -m_num, m_den); }

    friend LocalizedElement operator*(const LocalizedElement &a, const Rational &s)
    {
        return LocalizedElement(a.m_alg, a.m_num * s, a.m_den);
    }
    friend LocalizedElement operator*(const Rational &s, const LocalizedElement &a) { return a * s; }

    friend LocalizedElement operator*(const LocalizedElement &a, const LocalizedElement &b)
    {
        a.check(b);
        std::vector<unsigned> den(a.m_den.size());
        for (std::size_t i = 0; i < den.size(); ++i) den[i] = a.m_den[i] + b.m_den[i];
        return LocalizedElement(a.m_alg, a.m_alg->reduce(a.m_num * b.m_num), std::move(den));
    }

    LocalizedElement &operator*=(const LocalizedElement &o) { return *this = *this * o; }

    LocalizedElement pow(unsigned k) const
    {
        LocalizedElement r = constant(m_alg, Rational(1));
        LocalizedElement base = *this;
        while (k > 0) {
            if (k & 1U) r = r * base;
            k >>= 1U;
            if (k > 0) base = base * base;
        }
        return r;
    }

    /// Equality in the localized free ring modulo monomial relations.
    friend bool operator==(const LocalizedElement &a, const LocalizedElement &b)
    {
        if (!same_algebra(a.m_alg, b.m_alg)) return false;
        if (a.m_den == b.m_den) return a.m_num == b.m_num;
        auto [x, y] = cross(a, b);
        return x == y;
    }

    /// Numerators of a and b over a common denominator.
    static std::pair<SuperPolynomial, SuperPolynomial> cross(const LocalizedElement &a, const LocalizedElement &b)
    {
        a.check(b);
        std::vector<unsigned> ea(a.m_den.size()), eb(a.m_den.size());
        for (std::size_t i = 0; i < ea.size(); ++i) {
            const unsigned top = std::max(a.m_den[i], b.m_den[i]);
            ea[i] = top - a.m_den[i];
            eb[i] = top - b.m_den[i];
        }
        return {a.m_alg->reduce(a.m_num * denominator_product(*a.m_alg, ea)),
                b.m_alg->reduce(b.m_num * denominator_product(*b.m_alg, eb))};
    }

    void check(const LocalizedElement &o) const
    {
        if (!same_algebra(m_alg, o.m_alg)) throw RingMismatch("elements belong to different algebras");
    }

private:
    static LocalizedElement combine(const LocalizedElement &a, const LocalizedElement &b, int sign)
    {
        a.check(b);
        if (a.m_den == b.m_den) {
            return LocalizedElement(a.m_alg, sign > 0 ? a.m_num + b.m_num : a.m_num - b.m_num, a.m_den);
        }
        std::vector<unsigned> top(a.m_den.size());
        for (std::size_t i = 0; i < top.size(); ++i) top[i] = std::max(a.m_den[i], b.m_den[i]);
        auto [x, y] = cross(a, b);
        return LocalizedElement(a.m_alg, sign > 0 ? x + y : x - y, std::move(top));
    }

    void normalize()
    {
        m_num = m_alg->reduce(std::move(m_num));
        if (m_num.is_zero()) {
            std::fill(m_den.begin(), m_den.end(), 0U);
            return;
        }
        for (std::size_t i = 0; i < m_den.size(); ++i) {
            while (m_den[i] > 0) {
                auto q = m_num.divide_exact(m_alg->denominators()[i]);
                if (!q) break;
                m_num = std::move(*q);
                --m_den[i];
            }
        }
    }

    AlgebraPtr m_alg;
    SuperPolynomial m_num;
    std::vector<unsigned> m_den;
};

/// Inverse of a unit: body (nilpotent variables set to zero) must be a
/// nonzero constant times a product of declared denominators; the nilpotent
/// remainder is handled by a terminating Neumann series.
inline LocalizedElement invert_unit(const LocalizedElement &x)
{
    const auto &alg = x.algebra();
    const auto &ring = alg->free();
    const auto &nilv = alg->nilpotent_variables();
    TermMap body_terms;
    for (const auto &[m, c] : x.numerator().terms()) {
        bool nil = false;
        for (std::size_t v = 0; v < ring->num_vars() && !nil; ++v) nil = nilv[v] && m.exponent(v) > 0;
        if (!nil) body_terms.emplace(m, c);
    }
    SuperPolynomial body(ring, std::move(body_terms));
    if (body.is_zero()) throw NonUnit("element has nilpotent body");
    std::vector<unsigned> beta(alg->num_denominators(), 0);
    for (std::size_t i = 0; i < beta.size(); ++i) {
        while (!body.is_constant()) {
            auto q = body.divide_exact(alg->denominators()[i]);
            if (!q) break;
            body = std::move(*q);
            ++beta[i];
        }
    }
    if (!body.is_constant() || body.is_zero()) throw NonUnit("body is not a unit of the localized ring");
    const Rational c = body.constant_term();
    // body^{-1} = c^{-1} / D^beta
    LocalizedElement body_inv(alg, SuperPolynomial::constant(ring, Rational(1 / c)), beta);
    const SuperPolynomial body_full = LocalizedElement::denominator_product(*alg, beta) * c;
    const LocalizedElement nil(alg, x.numerator() - body_full);
    const LocalizedElement step = -(nil * body_inv);
    const unsigned bound = 2 * static_cast<unsigned>(ring->num_odd()) + alg->even_nilpotency_bound();
    LocalizedElement sum = LocalizedElement::constant(alg, Rational(1));
    LocalizedElement power = sum;
    bool done = false;
    for (unsigned k = 1; k <= bound + 1; ++k) {
        power = power * step;
        if (power.is_zero()) {
            done = true;
            break;
        }
        sum += power;
    }
    if (!done) throw NonUnit("nilpotent series did not terminate");
    const LocalizedElement num_inv = sum * body_inv;
    // x^{-1} = D^alpha * num^{-1}
    const LocalizedElement da(alg, LocalizedElement::denominator_product(*alg, x.denominator_exponents()));
    return da * num_inv;
}

} // namespace superhopf

#endif
