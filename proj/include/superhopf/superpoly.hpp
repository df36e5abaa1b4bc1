#ifndef SUPERHOPF_SUPERPOLY_HPP
#define SUPERHOPF_SUPERPOLY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <superhopf/monomial.hpp>
#include <superhopf/rational.hpp>

namespace superhopf
{

class NonUnit : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

using TermMap = std::map<Monomial, Rational, LeadingFirst>;

/// Exact sparse element of a free commutative superalgebra.
///
/// Terms are kept in canonical form: no zero coefficients, odd factors in
/// ascending order with the Koszul sign folded into the coefficient. The
/// first term is the grlex-leading one.
class SuperPolynomial
{
public:
    SuperPolynomial() = default;
    explicit SuperPolynomial(FreeRingPtr ring) : m_ring(std::move(ring)) {}

    SuperPolynomial(FreeRingPtr ring, TermMap terms) : m_ring(std::move(ring)), m_terms(std::move(terms))
    {
        prune();
    }

    static SuperPolynomial constant(FreeRingPtr ring, const Rational &c)
    {
        SuperPolynomial p(std::move(ring));
        if (!superhopf::is_zero(c)) p.m_terms.emplace(Monomial(p.m_ring->num_even()), c);
        return p;
    }

    static SuperPolynomial variable(FreeRingPtr ring, std::size_t var)
    {
        SuperPolynomial p(std::move(ring));
        p.m_terms.emplace(Monomial::variable(*p.m_ring, var), Rational(1));
        return p;
    }

    static SuperPolynomial variable(FreeRingPtr ring, std::string_view name)
    {
        const auto i = ring->require(name);
        return variable(std::move(ring), i);
    }

    static SuperPolynomial monomial(FreeRingPtr ring, Monomial m, const Rational &c = Rational(1))
    {
        SuperPolynomial p(std::move(ring));
        if (!superhopf::is_zero(c)) p.m_terms.emplace(std::move(m), c);
        return p;
    }

    const FreeRingPtr &ring() const { return m_ring; }
    const TermMap &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    std::size_t size() const { return m_terms.size(); }

    Rational coefficient(const Monomial &m) const
    {
        auto it = m_terms.find(m);
        return it == m_terms.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Monomial(m_ring->num_even())); }

    /// Maximal total degree of a term; -1 for zero.
    int degree() const
    {
        int d = -1;
        for (const auto &[m, c] : m_terms) d = std::max(d, static_cast<int>(m.degree()));
        return d;
    }

    // Largest degree counted only over variables in `mask`.
    int partial_degree(const std::vector<bool> &mask) const
    {
        int d = -1;
        for (const auto &[m, c] : m_terms) {
            int k = 0;
            for (std::size_t v = 0; v < mask.size(); ++v) {
                if (mask[v]) k += static_cast<int>(m.exponent(v));
            }
            d = std::max(d, k);
        }
        return d;
    }

    /// True when every term has the same parity (zero counts as both).
    std::optional<Parity> homogeneous_parity() const
    {
        if (m_terms.empty()) return Parity::even;
        const Parity p = m_terms.begin()->first.parity();
        for (const auto &[m, c] : m_terms) {
            if (m.parity() != p) return std::nullopt;
        }
        return p;
    }

    bool is_homogeneous() const { return homogeneous_parity().has_value(); }

    bool is_constant() const
    {
        return m_terms.empty() || (m_terms.size() == 1 && m_terms.begin()->first.is_one());
    }

    /// True when no term involves an odd variable.
    bool is_pure_even() const
    {
        for (const auto &[m, c] : m_terms) {
            if (m.odd != 0) return false;
        }
        return true;
    }

    SuperPolynomial component(Parity p) const
    {
        SuperPolynomial r(m_ring);
        for (const auto &[m, c] : m_terms) {
            if (m.parity() == p) r.m_terms.emplace_hint(r.m_terms.end(), m, c);
        }
        return r;
    }

    /// Terms free of odd variables (the image under z_j -> 0).
    SuperPolynomial body() const
    {
        SuperPolynomial r(m_ring);
        for (const auto &[m, c] : m_terms) {
            if (m.odd == 0) r.m_terms.emplace_hint(r.m_terms.end(), m, c);
        }
        return r;
    }

    SuperPolynomial truncated(unsigned max_degree) const
    {
        SuperPolynomial r(m_ring);
        for (const auto &[m, c] : m_terms) {
            if (m.degree() <= max_degree) r.m_terms.emplace_hint(r.m_terms.end(), m, c);
        }
        return r;
    }

    SuperPolynomial &operator+=(const SuperPolynomial &o)
    {
        check_ring(o);
        for (const auto &[m, c] : o.m_terms) add_term(m, c);
        return *this;
    }

    SuperPolynomial &operator-=(const SuperPolynomial &o)
    {
        check_ring(o);
        for (const auto &[m, c] : o.m_terms) add_term(m, -c);
        return *this;
    }

    SuperPolynomial &operator*=(const Rational &s)
    {
        if (superhopf::is_zero(s)) {
            m_terms.clear();
        } else {
            for (auto &[m, c] : m_terms) c *= s;
        }
        return *this;
    }

    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial &b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial &b) { return a -= b; }
    friend SuperPolynomial operator*(SuperPolynomial a, const Rational &s) { return a *= s; }
    friend SuperPolynomial operator*(const Rational &s, SuperPolynomial a) { return a *= s; }
    SuperPolynomial operator-() const { return *this * Rational(-1); }

    friend SuperPolynomial operator*(const SuperPolynomial &a, const SuperPolynomial &b)
    {
        return multiply_truncated(a, b, std::nullopt);
    }

    SuperPolynomial &operator*=(const SuperPolynomial &o) { return *this = *this * o; }

    /// Product keeping only terms of total degree <= max_degree (if given).
    static SuperPolynomial multiply_truncated(const SuperPolynomial &a, const SuperPolynomial &b,
                                              std::optional<unsigned> max_degree,
                                              const std::vector<bool> &degree_mask = {})
    {
        a.check_ring(b);
        SuperPolynomial r(a.m_ring);
        for (const auto &[ma, ca] : a.m_terms) {
            const unsigned da = mask_degree(ma, degree_mask);
            if (max_degree && da > *max_degree) continue;
            for (const auto &[mb, cb] : b.m_terms) {
                if (max_degree && da + mask_degree(mb, degree_mask) > *max_degree) continue;
                int sign = 0;
                Monomial mm = multiply(ma, mb, sign);
                if (sign == 0) continue;
                Rational c = ca * cb;
                if (sign < 0) c = -c;
                r.add_term(mm, c);
            }
        }
        return r;
    }

    SuperPolynomial pow(unsigned k) const
    {
        SuperPolynomial r = constant(m_ring, Rational(1));
        SuperPolynomial base = *this;
        while (k > 0) {
            if (k & 1U) r = r * base;
            k >>= 1U;
            if (k > 0) base = base * base;
        }
        return r;
    }

    friend bool operator==(const SuperPolynomial &a, const SuperPolynomial &b)
    {
        if (!same_ring(a.m_ring, b.m_ring)) return false;
        return a.m_terms == b.m_terms;
    }

    /// Exact quotient by a polynomial in the even variables only, or nullopt
    /// when it does not divide.
    std::optional<SuperPolynomial> divide_exact(const SuperPolynomial &d) const
    {
        check_ring(d);
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        if (!d.is_pure_even()) throw std::invalid_argument("divisor must not involve odd variables");
        const auto &[lm, lc] = *d.m_terms.begin();
        SuperPolynomial q(m_ring), rem = *this;
        while (!rem.is_zero()) {
            const auto [rm, rc] = *rem.m_terms.begin();
            if (!lm.divides(rm)) return std::nullopt;
            int sign = 0;
            Monomial qm = superhopf::divide(rm, lm, sign);
            const Rational qc = rc / lc;
            q.add_term(qm, qc);
            rem -= SuperPolynomial::monomial(m_ring, qm, qc) * d;
        }
        return q;
    }

    /// Rebuild term-by-term; canonical form is an invariant so this must be
    /// the identity (used to check idempotence).
    SuperPolynomial renormalized() const
    {
        SuperPolynomial r(m_ring);
        for (const auto &[m, c] : m_terms) {
            r += monomial(m_ring, m, c);
        }
        return r;
    }

    void add_term(const Monomial &m, const Rational &c)
    {
        if (superhopf::is_zero(c)) return;
        auto [it, inserted] = m_terms.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (superhopf::is_zero(it->second)) m_terms.erase(it);
        }
    }

    void check_ring(const SuperPolynomial &o) const
    {
        if (!same_ring(m_ring, o.m_ring)) throw RingMismatch("polynomials belong to different rings");
    }

private:
    static unsigned mask_degree(const Monomial &m, const std::vector<bool> &mask)
    {
        if (mask.empty()) return m.degree();
        unsigned k = 0;
        for (std::size_t v = 0; v < mask.size(); ++v) {
            if (mask[v]) k += m.exponent(v);
        }
        return k;
    }

    void prune()
    {
        for (auto it = m_terms.begin(); it != m_terms.end();) {
            it = superhopf::is_zero(it->second) ? m_terms.erase(it) : std::next(it);
        }
    }

    FreeRingPtr m_ring;
    TermMap m_terms;
};

/// p = p_0 + p_1 split by parity.
inline std::pair<SuperPolynomial, SuperPolynomial> parity_decompose(const SuperPolynomial &p)
{
    return {p.component(Parity::even), p.component(Parity::odd)};
}

/// Inverse of c + n with c a nonzero constant and n nilpotent, via the
/// terminating series c^{-1} sum_k (-n/c)^k.
///
/// The series must vanish within 2*(number of odd variables) +
/// even_nilpotency_bound steps; otherwise NonUnit is thrown.
inline SuperPolynomial invert_nilpotent_unit(const SuperPolynomial &p, unsigned even_nilpotency_bound = 1)
{
    const Rational c = p.constant_term();
    if (is_zero(c)) throw NonUnit("constant term is zero");
    const auto &ring = p.ring();
    const SuperPolynomial step = (p - SuperPolynomial::constant(ring, c)) * Rational(-1 / c);
    const unsigned bound = 2 * static_cast<unsigned>(ring->num_odd()) + even_nilpotency_bound;
    SuperPolynomial sum = SuperPolynomial::constant(ring, Rational(1));
    SuperPolynomial power = sum;
    for (unsigned k = 1; k <= bound + 1; ++k) {
        power = power * step;
        if (power.is_zero()) return sum * Rational(1 / c);
        sum += power;
    }
    throw NonUnit("series did not terminate: element is not a nilpotent perturbation of a unit");
}

} // namespace superhopf

#endif
