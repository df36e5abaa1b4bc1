#ifndef SUPERHOPF_DISTLIE_HPP
#define SUPERHOPF_DISTLIE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <superhopf/supergroup.hpp>

namespace superhopf
{

/// K[G]/M^{n+1} at the identity, with the group attached.
class JetSpace
{
public:
    JetSpace(HopfPtr g, unsigned order)
        : m_group(std::move(g)), m_jet(m_group->algebra(), m_group->identity_point(), order)
    {
        const auto &alg = m_group->algebra();
        const auto c = m_group->identity_point();
        for (const auto &m : m_jet.basis()) {
            LocalizedElement f = LocalizedElement::constant(alg, Rational(1));
            const auto &ring = *alg->free();
            for (std::size_t v = 0; v < ring.num_even(); ++v) {
                const auto shifted = LocalizedElement::generator(alg, v) - LocalizedElement::constant(alg, c[v]);
                for (unsigned k = 0; k < m.even[v]; ++k) f = f * shifted;
            }
            Monomial odd_part(ring.num_even());
            odd_part.odd = m.odd;
            f = f * LocalizedElement(alg, SuperPolynomial::monomial(alg->free(), odd_part));
            m_elements.push_back(std::move(f));
        }
    }

    const HopfPtr &group() const { return m_group; }
    unsigned order() const { return m_jet.order(); }
    std::size_t dimension() const { return m_jet.dimension(); }
    const JetQuotient &jet() const { return m_jet; }
    const Monomial &basis_monomial(std::size_t i) const { return m_jet.basis().at(i); }
    Parity basis_parity(std::size_t i) const { return basis_monomial(i).parity(); }

    /// The element of K[G] whose shifted form is the i-th basis monomial.
    const LocalizedElement &basis_element(std::size_t i) const { return m_elements.at(i); }

    std::vector<Rational> coordinates(const LocalizedElement &x) const { return m_jet.coordinates(x); }

private:
    HopfPtr m_group;
    JetQuotient m_jet;
    std::vector<LocalizedElement> m_elements;
};

using JetPtr = std::shared_ptr<const JetSpace>;

inline JetPtr make_jet_space(const HopfPtr &g, unsigned order) { return std::make_shared<const JetSpace>(g, order); }

/// φ ∈ Dist_n(G), stored by its values on the jet basis of K[G]/M^{n+1}.
struct Distribution {
    JetPtr space;
    std::vector<Rational> values;

    unsigned order() const { return space->order(); }
    const HopfPtr &group() const { return space->group(); }

    Rational operator()(const LocalizedElement &f) const
    {
        const auto c = space->coordinates(f);
        Rational r(0);
        for (std::size_t i = 0; i < c.size(); ++i) r += c[i] * values[i];
        return r;
    }

    bool is_zero() const
    {
        for (const auto &v : values) {
            if (!superhopf::is_zero(v)) return false;
        }
        return true;
    }

    /// Part supported on basis monomials of parity p.
    Distribution component(Parity p) const
    {
        Distribution out{space, values};
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (space->basis_parity(i) != p) out.values[i] = 0;
        }
        return out;
    }

    std::optional<Parity> homogeneous_parity() const
    {
        const bool e = !component(Parity::even).is_zero(), o = !component(Parity::odd).is_zero();
        if (e && o) return std::nullopt;
        return o ? Parity::odd : Parity::even;
    }

    /// Same functional viewed on a jet space of another order.
    Distribution restricted(const JetPtr &target) const
    {
        Distribution out{target, std::vector<Rational>(target->dimension(), Rational(0))};
        for (std::size_t i = 0; i < target->dimension(); ++i) out.values[i] = (*this)(target->basis_element(i));
        return out;
    }

    friend bool operator==(const Distribution &a, const Distribution &b)
    {
        if (a.space->dimension() >= b.space->dimension()) return a.values == b.restricted(a.space).values;
        return a.restricted(b.space).values == b.values;
    }
};

/// ε_G as an element of Dist_0.
inline Distribution counit_distribution(const HopfPtr &g)
{
    auto s = make_jet_space(g, 0);
    return {s, std::vector<Rational>(s->dimension(), Rational(1))};
}

/// The functional dual to the i-th jet basis monomial.
inline Distribution dual_distribution(const JetPtr &s, std::size_t i)
{
    Distribution d{s, std::vector<Rational>(s->dimension(), Rational(0))};
    d.values.at(i) = 1;
    return d;
}

inline Distribution operator+(const Distribution &a, const Distribution &b)
{
    if (a.group() != b.group()) throw RingMismatch("distributions on different groups");
    if (a.order() < b.order()) return b + a;
    const Distribution c = a.space == b.space ? b : b.restricted(a.space);
    Distribution out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += c.values[i];
    return out;
}

inline Distribution operator*(const Rational &c, const Distribution &a)
{
    Distribution out = a;
    for (auto &v : out.values) v *= c;
    return out;
}

inline Distribution operator-(const Distribution &a, const Distribution &b) { return a + Rational(-1) * b; }

namespace detail
{

inline Distribution dist_product_homogeneous(const Distribution &phi, const Distribution &psi, Parity psi_parity,
                                             const JetPtr &target)
{
    const auto &g = *phi.group();
    const auto &t2 = g.tensor2();
    Distribution out{target, std::vector<Rational>(target->dimension(), Rational(0))};
    for (std::size_t b = 0; b < target->dimension(); ++b) {
        Rational acc(0);
        for (const auto &pt : t2.split(g.delta(target->basis_element(b)))) {
            const auto &f1 = pt.legs[0];
            const Rational a = phi(f1);
            if (superhopf::is_zero(a)) continue;
            const Rational c = psi(pt.legs[1]);
            if (superhopf::is_zero(c)) continue;
            const auto p1 = f1.homogeneous_parity().value_or(Parity::even);
            acc += pt.coefficient * a * c * Rational(koszul(psi_parity, p1));
        }
        out.values[b] = acc;
    }
    return out;
}

} // namespace detail

/// φψ(f) = Σ (-1)^{|ψ||f1|} φ(f1) ψ(f2), an element of Dist_{k+l}.
inline Distribution dist_product(const Distribution &phi, const Distribution &psi)
{
    if (phi.group() != psi.group()) throw RingMismatch("distributions on different groups");
    const auto target = make_jet_space(phi.group(), phi.order() + psi.order());
    Distribution out{target, std::vector<Rational>(target->dimension(), Rational(0))};
    for (Parity p : {Parity::even, Parity::odd}) {
        const auto part = psi.component(p);
        if (part.is_zero()) continue;
        out = out + detail::dist_product_homogeneous(phi, part, p, target);
    }
    return out;
}

/// [φ, ψ] = φψ - (-1)^{|φ||ψ|} ψφ for homogeneous φ, ψ.
inline Distribution dist_bracket(const Distribution &phi, const Distribution &psi)
{
    const auto pp = phi.homogeneous_parity(), qq = psi.homogeneous_parity();
    if (!pp || !qq) throw std::invalid_argument("bracket of inhomogeneous distributions");
    return dist_product(phi, psi) - Rational(koszul(*pp, *qq)) * dist_product(psi, phi);
}

/// Lie(G) with basis dual to the shifted generators modulo M².
struct LieSuperalgebra {
    HopfPtr group;
    JetPtr space;  // order 1
    std::vector<std::size_t> jet_index;  // basis element -> jet basis index
    std::vector<std::string> names;
    std::vector<Parity> parities;
    // structure[i][j][k] = c_ij^k with [x_i, x_j] = Σ_k c_ij^k x_k.
    std::vector<std::vector<std::vector<Rational>>> structure;

    std::size_t dimension() const { return names.size(); }

    std::pair<std::size_t, std::size_t> superdimension() const
    {
        std::size_t e = 0;
        for (auto p : parities) e += p == Parity::even ? 1 : 0;
        return {e, parities.size() - e};
    }

    Distribution element(std::size_t i) const { return dual_distribution(space, jet_index.at(i)); }

    std::optional<std::size_t> index_of(const std::string &name) const
    {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == name) return i;
        }
        return std::nullopt;
    }

    /// Coordinates of a distribution of Lie type in the basis.
    std::vector<Rational> coordinates(const Distribution &d) const
    {
        std::vector<Rational> out;
        for (std::size_t i = 0; i < dimension(); ++i) out.push_back(d(space->basis_element(jet_index[i])));
        return out;
    }

    std::vector<Rational> bracket(const std::vector<Rational> &x, const std::vector<Rational> &y) const
    {
        std::vector<Rational> out(dimension(), Rational(0));
        for (std::size_t i = 0; i < dimension(); ++i) {
            if (superhopf::is_zero(x[i])) continue;
            for (std::size_t j = 0; j < dimension(); ++j) {
                if (superhopf::is_zero(y[j])) continue;
                for (std::size_t k = 0; k < dimension(); ++k) out[k] += x[i] * y[j] * structure[i][j][k];
            }
        }
        return out;
    }
};

/// Name of the Lie basis element dual to generator `var`.
inline std::string lie_name(const std::string &var) { return "d_" + var; }

/// Lie(G) = {φ ∈ Dist_1 | φ(1) = 0} with brackets from dist_product.
inline LieSuperalgebra lie_algebra(const HopfPtr &g)
{
    LieSuperalgebra lie;
    lie.group = g;
    lie.space = make_jet_space(g, 1);
    const auto &ring = *g->algebra()->free();
    for (std::size_t i = 0; i < lie.space->dimension(); ++i) {
        const auto &m = lie.space->basis_monomial(i);
        if (m.degree() != 1) continue;
        lie.jet_index.push_back(i);
        std::size_t var = 0;
        while (m.exponent(var) == 0) ++var;
        lie.names.push_back(lie_name(ring.name(var)));
        lie.parities.push_back(m.parity());
    }
    const std::size_t n = lie.dimension();
    lie.structure.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto b = dist_bracket(lie.element(i), lie.element(j));
            for (std::size_t k = 0; k < b.space->dimension(); ++k) {
                const auto &m = b.space->basis_monomial(k);
                if (m.degree() != 1 && !superhopf::is_zero(b.values[k])) {
                    throw std::logic_error("bracket of " + lie.names[i] + ", " + lie.names[j] + " leaves Lie(G)");
                }
            }
            lie.structure[i][j] = lie.coordinates(b);
        }
    }
    return lie;
}

/// Super skew-symmetry and the super Jacobi identity on basis triples.
inline CheckReport check_lie_axioms(const LieSuperalgebra &lie)
{
    CheckReport rep;
    const std::size_t n = lie.dimension();
    auto unit = [&](std::size_t i) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = 1;
        return v;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            bool ok = true;
            const int s = koszul(lie.parities[i], lie.parities[j]);
            for (std::size_t k = 0; k < n; ++k) ok = ok && lie.structure[i][j][k] == -Rational(s) * lie.structure[j][i][k];
            rep.add("skew " + lie.names[i] + " " + lie.names[j], ok);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const auto &pi = lie.parities[i], &pj = lie.parities[j], &pk = lie.parities[k];
                auto a = lie.bracket(unit(i), lie.bracket(unit(j), unit(k)));
                auto b = lie.bracket(unit(j), lie.bracket(unit(k), unit(i)));
                auto c = lie.bracket(unit(k), lie.bracket(unit(i), unit(j)));
                bool ok = true;
                for (std::size_t l = 0; l < n; ++l) {
                    const Rational sum = Rational(koszul(pi, pk)) * a[l] + Rational(koszul(pj, pi)) * b[l] +
                                         Rational(koszul(pk, pj)) * c[l];
                    ok = ok && superhopf::is_zero(sum);
                }
                rep.add("jacobi " + lie.names[i] + " " + lie.names[j] + " " + lie.names[k], ok);
            }
        }
    }
    return rep;
}

namespace detail
{

// Σ over pure tensors of x: the left leg's order-1 jet coordinates times
// the right leg, grouped by jet index.
inline std::vector<LocalizedElement> left_linear_part(const HopfSuperalgebra &g, const JetSpace &jet1,
                                                      const LocalizedElement &x)
{
    std::vector<LocalizedElement> out(jet1.dimension(), LocalizedElement(g.algebra()));
    for (const auto &pt : g.tensor2().split(x)) {
        const auto c = jet1.coordinates(pt.legs[0]);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (!superhopf::is_zero(c[k])) out[k] += pt.legs[1] * (c[k] * pt.coefficient);
        }
    }
    return out;
}

} // namespace detail

/// Ad: right coaction on Lie(G)^* restricted from ν_l on M/M²:
/// ν_l(f_i) ≡ Σ_j f_j ⊗ c_ji mod M²⊗K[G].
inline Supercomodule adjoint_coaction(const LieSuperalgebra &lie)
{
    const auto &g = *lie.group;
    Supercomodule v{lie.group, {}, lie.parities, {}, ComoduleSide::right};
    const std::size_t n = lie.dimension();
    for (const auto &nm : lie.names) v.names.push_back(nm.substr(2));
    v.matrix.assign(n, std::vector<LocalizedElement>(n, LocalizedElement(g.algebra())));
    for (std::size_t i = 0; i < n; ++i) {
        const auto parts = detail::left_linear_part(g, *lie.space, nu_l(g, lie.space->basis_element(lie.jet_index[i])));
        for (std::size_t j = 0; j < n; ++j) v.matrix[j][i] = parts[lie.jet_index[j]];
    }
    return v;
}

/// d(Ad)(x)(y) = (y ⊗ x)(ν_r(f)) on shifted generators f, compared with
/// -[y, x] for every pair of basis elements.
inline CheckReport check_d_ad(const LieSuperalgebra &lie)
{
    const auto &g = *lie.group;
    const std::size_t n = lie.dimension();
    // coeff[k][m] = right leg paired with the m-th left coordinate of ν_r(f_k).
    std::vector<std::vector<LocalizedElement>> coeff;
    for (std::size_t k = 0; k < n; ++k) {
        coeff.push_back(detail::left_linear_part(g, *lie.space, nu_r(g, lie.space->basis_element(lie.jet_index[k]))));
    }
    CheckReport rep;
    for (std::size_t x = 0; x < n; ++x) {
        const auto dx = lie.element(x);
        for (std::size_t y = 0; y < n; ++y) {
            const int sign = koszul(lie.parities[x], lie.parities[y]);
            std::vector<Rational> lhs(n), rhs(n);
            for (std::size_t k = 0; k < n; ++k) {
                lhs[k] = Rational(sign) * dx(coeff[k][lie.jet_index[y]]);
                rhs[k] = -lie.structure[y][x][k];
            }
            const bool ok = lhs == rhs;
            rep.add("d(Ad)(" + lie.names[x] + ")(" + lie.names[y] + ")", ok);
        }
    }
    return rep;
}

/// One entry of the pairing table: ∏φ_i^{s_i} evaluated on ∏f_i^{d_i}.
struct PairingEntry {
    std::vector<unsigned> s, d;
    Rational value;
    Rational expected_magnitude;
};

struct PairingReport {
    std::vector<PairingEntry> entries;
    bool pass() const
    {
        for (const auto &e : entries) {
            if (abs(e.value) != e.expected_magnitude) return false;
        }
        return true;
    }
};

namespace detail
{

inline std::vector<std::vector<unsigned>> exponent_vectors(const std::vector<Parity> &parities, unsigned max_total)
{
    std::vector<std::vector<unsigned>> out{{}};
    for (auto p : parities) {
        std::vector<std::vector<unsigned>> next;
        const unsigned cap = p == Parity::odd ? 1 : max_total;
        for (const auto &v : out) {
            unsigned used = 0;
            for (auto e : v) used += e;
            for (unsigned e = 0; e <= cap && used + e <= max_total; ++e) {
                auto w = v;
                w.push_back(e);
                next.push_back(std::move(w));
            }
        }
        out = std::move(next);
    }
    return out;
}

inline Rational factorial(unsigned k)
{
    Rational r(1);
    for (unsigned i = 2; i <= k; ++i) r *= Rational(i);
    return r;
}

} // namespace detail

/// ∏φ_i^{s_i}(∏f_i^{d_i}) = ±δ_{s,d} s_1!…s_n! for all exponent vectors of
/// total degree ≤ max_total (odd exponents ≤ 1); the sign is recorded.
inline PairingReport pairing_check(const HopfPtr &g, unsigned max_total)
{
    const auto lie = lie_algebra(g);
    const std::size_t n = lie.dimension();
    // Even generators first, then odd, as in the jet basis order.
    const auto exps = detail::exponent_vectors(lie.parities, max_total);
    PairingReport rep;
    std::map<std::vector<unsigned>, Distribution> products;
    for (const auto &s : exps) {
        Distribution phi = counit_distribution(g);
        for (std::size_t i = 0; i < n; ++i) {
            for (unsigned k = 0; k < s[i]; ++k) phi = dist_product(phi, lie.element(i));
        }
        for (const auto &d : exps) {
            LocalizedElement f = LocalizedElement::constant(g->algebra(), Rational(1));
            for (std::size_t i = 0; i < n; ++i) {
                for (unsigned k = 0; k < d[i]; ++k) f = f * lie.space->basis_element(lie.jet_index[i]);
            }
            Rational mag(0);
            if (s == d) {
                mag = 1;
                for (auto e : s) mag *= detail::factorial(e);
            }
            rep.entries.push_back({s, d, phi(f), mag});
        }
    }
    return rep;
}

struct DimensionEntry {
    unsigned order = 0;
    std::size_t jet_dimension = 0;
    std::size_t pbw_count = 0;
};

/// PBW monomials of degree ≤ n in e even and o odd generators.
inline std::size_t pbw_count(std::size_t e, std::size_t o, unsigned n)
{
    std::vector<Parity> ps(e, Parity::even);
    ps.insert(ps.end(), o, Parity::odd);
    return detail::exponent_vectors(ps, n).size();
}

/// dim Dist_k(G) against the PBW count for k = 0..n.
inline std::vector<DimensionEntry> dist_dimension_check(const HopfPtr &g, unsigned n)
{
    const auto [e, o] = lie_algebra(g).superdimension();
    std::vector<DimensionEntry> out;
    for (unsigned k = 0; k <= n; ++k) out.push_back({k, JetSpace(g, k).dimension(), pbw_count(e, o, k)});
    return out;
}

} // namespace superhopf

#endif
