#ifndef SUPERHOPF_PRESENTATION_HPP
#define SUPERHOPF_PRESENTATION_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <superhopf/linalg.hpp>
#include <superhopf/morphism.hpp>

namespace superhopf
{

class DegreeOverflow : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class NotLocalizableAtPoint : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Superideal of a presented superalgebra, stored as a generator list.
struct SuperIdeal {
    AlgebraPtr ambient;
    std::vector<LocalizedElement> generators;

    SuperIdeal() = default;
    SuperIdeal(AlgebraPtr alg, std::vector<LocalizedElement> gens) : ambient(std::move(alg)), generators(std::move(gens))
    {
        for (const auto &g : generators) {
            if (!same_algebra(g.algebra(), ambient)) throw RingMismatch("ideal generator in a foreign algebra");
        }
    }

    static SuperIdeal from_strings(const AlgebraPtr &alg, const std::vector<std::string> &gens)
    {
        std::vector<LocalizedElement> els;
        for (const auto &s : gens) els.push_back(parse_element(alg, s));
        return SuperIdeal(alg, std::move(els));
    }

    /// Homogeneous components of the generators followed by those of the
    /// algebra's relations; this is the list certificates refer to.
    std::vector<LocalizedElement> expanded_generators() const
    {
        std::vector<LocalizedElement> out;
        auto push = [&](const LocalizedElement &g) {
            for (Parity p : {Parity::even, Parity::odd}) {
                auto c = g.component(p);
                if (!c.is_zero()) out.push_back(std::move(c));
            }
        };
        for (const auto &g : generators) push(g);
        for (const auto &r : ambient->relations()) push(LocalizedElement(ambient, r));
        return out;
    }
};

struct MembershipOptions {
    unsigned max_denominator_power = 1;
    unsigned degree_cap = 24;
    std::size_t max_rows = 400000;
    bool certificate = true;
};

/// Answer of a bounded membership query. `member == false` only means no
/// combination exists within `bound`.
struct MembershipResult {
    bool member = false;
    unsigned bound = 0;
    unsigned denominator_power = 0;
    std::vector<LocalizedElement> generators;
    std::vector<LocalizedElement> coefficients;

    /// Recombine sum c_i g_i and compare with p exactly.
    bool verify(const LocalizedElement &p) const
    {
        if (!member) return false;
        if (coefficients.size() != generators.size()) return false;
        LocalizedElement sum(p.algebra());
        for (std::size_t i = 0; i < generators.size(); ++i) sum += coefficients[i] * generators[i];
        return sum == p;
    }
};

namespace detail
{

inline SuperPolynomial all_denominators(const PresentedSuperalgebra &alg)
{
    SuperPolynomial d = SuperPolynomial::constant(alg.free(), Rational(1));
    for (const auto &x : alg.denominators()) d = d * x;
    return d;
}

} // namespace detail

/// Degree-truncated span of an ideal: all m * g with deg(m g) <= bound,
/// over numerators (denominators are units and are dropped).
///
/// Monomial ideals are handled by divisibility without building rows.
class IdealReducer
{
public:
    IdealReducer(const SuperIdeal &ideal, unsigned bound, const MembershipOptions &opt = {}, bool track = false)
        : m_ring(ideal.ambient->free()), m_bound(bound), m_echelon(m_ring, track)
    {
        m_generators = ideal.expanded_generators();
        bool all_monomial = true;
        for (const auto &g : m_generators) {
            m_numerators.push_back(g.numerator());
            if (g.numerator().size() != 1) all_monomial = false;
        }
        m_monomial = all_monomial;
        if (m_monomial) return;
        if (bound > opt.degree_cap) {
            throw DegreeOverflow("membership bound " + std::to_string(bound) + " exceeds cap " +
                                 std::to_string(opt.degree_cap));
        }
        // Rows indexed by (generator, multiplier monomial).
        std::vector<std::vector<Monomial>> pools(bound + 1);
        for (std::size_t gi = 0; gi < m_numerators.size(); ++gi) {
            const auto &g = m_numerators[gi];
            const int dg = g.degree();
            if (dg < 0 || dg > static_cast<int>(bound)) continue;
            const unsigned room = bound - static_cast<unsigned>(dg);
            if (pools[room].empty()) pools[room] = monomials_up_to(*m_ring, room);
            for (const auto &m : pools[room]) {
                if (m_rows.size() >= opt.max_rows) {
                    throw DegreeOverflow("membership row budget exhausted at bound " + std::to_string(bound));
                }
                m_rows.emplace_back(gi, m);
                m_echelon.insert(SuperPolynomial::monomial(m_ring, m) * g);
            }
        }
    }

    unsigned bound() const { return m_bound; }
    bool monomial_ideal() const { return m_monomial; }
    const std::vector<LocalizedElement> &generators() const { return m_generators; }

    /// Canonical remainder modulo the truncated span.
    SuperPolynomial normal_form(const SuperPolynomial &p) const
    {
        if (m_monomial) {
            TermMap out;
            for (const auto &[m, c] : p.terms()) {
                if (!divisible(m)) out.emplace_hint(out.end(), m, c);
            }
            return SuperPolynomial(p.ring(), std::move(out));
        }
        return m_echelon.normal_form(p);
    }

    bool contains(const SuperPolynomial &p) const { return normal_form(p).is_zero(); }

    /// Multipliers h_i with p = sum h_i * numerator(g_i), if p is in the span.
    std::optional<std::vector<SuperPolynomial>> express(const SuperPolynomial &p) const
    {
        std::vector<SuperPolynomial> h(m_numerators.size(), SuperPolynomial(m_ring));
        if (m_monomial) {
            for (const auto &[m, c] : p.terms()) {
                bool found = false;
                for (std::size_t gi = 0; gi < m_numerators.size() && !found; ++gi) {
                    const auto &[gm, gc] = *m_numerators[gi].terms().begin();
                    if (!gm.divides(m)) continue;
                    int sign = 0;
                    Monomial q = divide(m, gm, sign);
                    // m = sign * gm * q = sign * q * gm (gm·q vs q·gm differ by Koszul sign)
                    int swap = 0;
                    multiply(q, gm, swap);
                    int fwd = 0;
                    multiply(gm, q, fwd);
                    h[gi].add_term(q, c / gc * Rational(swap * fwd * sign));
                    found = true;
                }
                if (!found) return std::nullopt;
            }
            return h;
        }
        if (!m_echelon.tracking()) throw std::logic_error("reducer built without certificate tracking");
        SuperPolynomial r = p;
        Combination combo;
        m_echelon.reduce_leading(r, &combo);
        if (!r.is_zero()) return std::nullopt;
        for (const auto &[row, c] : combo) {
            const auto &[gi, m] = m_rows[row];
            h[gi].add_term(m, c);
        }
        return h;
    }

private:
    bool divisible(const Monomial &m) const
    {
        for (const auto &g : m_numerators) {
            if (g.terms().begin()->first.divides(m)) return true;
        }
        return false;
    }

    FreeRingPtr m_ring;
    unsigned m_bound;
    SparseEchelon m_echelon;
    bool m_monomial = false;
    std::vector<LocalizedElement> m_generators;
    std::vector<SuperPolynomial> m_numerators;
    std::vector<std::pair<std::size_t, Monomial>> m_rows;
};

/// Numerator degree bound used for a localized query at localized degree d.
inline unsigned membership_bound(const LocalizedElement &p, unsigned d, unsigned power)
{
    const auto &alg = *p.algebra();
    const int dall = detail::all_denominators(alg).degree();
    const int base = std::max<int>(static_cast<int>(d) + (p.numerator().degree() - p.degree()), p.numerator().degree());
    return static_cast<unsigned>(std::max(0, base) + static_cast<int>(power) * dall);
}

/// Is p in I? Tries clearing denominators with powers 0..max_denominator_power.
inline MembershipResult ideal_membership(const LocalizedElement &p, const SuperIdeal &ideal, unsigned d,
                                         const MembershipOptions &opt = {})
{
    if (!same_algebra(p.algebra(), ideal.ambient)) throw RingMismatch("query and ideal live in different algebras");
    MembershipResult res;
    const auto &alg = p.algebra();
    const unsigned max_power = alg->num_denominators() == 0 ? 0 : opt.max_denominator_power;
    const unsigned top = membership_bound(p, d, max_power);
    IdealReducer reducer(ideal, top, opt, opt.certificate);
    res.generators = reducer.generators();
    res.bound = top;
    if (p.is_zero()) {
        res.member = true;
        res.coefficients.assign(res.generators.size(), LocalizedElement(alg));
        return res;
    }
    const SuperPolynomial dall = detail::all_denominators(*alg);
    SuperPolynomial q = p.numerator();
    for (unsigned k = 0; k <= max_power; ++k, q = alg->reduce(q * dall)) {
        if (!reducer.contains(q)) continue;
        res.member = true;
        res.denominator_power = k;
        res.bound = membership_bound(p, d, k);
        if (!opt.certificate) return res;
        auto h = reducer.express(q);
        if (!h) throw std::logic_error("membership certificate extraction failed");
        std::vector<unsigned> den = p.denominator_exponents();
        for (auto &e : den) e += k;
        for (std::size_t i = 0; i < res.generators.size(); ++i) {
            const auto &g = res.generators[i];
            res.coefficients.emplace_back(alg, (*h)[i] * g.denominator(), den);
        }
        return res;
    }
    return res;
}

struct RadicalResult {
    enum class Status { member, unknown } status = Status::unknown;
    unsigned exponent = 0;
    MembershipResult certificate;
};

/// r in the prime radical of I iff r_0^n in I for some n. Tries n = 1..n_max,
/// raising the degree bound to deg(r_0^n) when needed.
inline RadicalResult radical_membership(const LocalizedElement &r, const SuperIdeal &ideal, unsigned d, unsigned n_max,
                                        const MembershipOptions &opt = {})
{
    RadicalResult out;
    const LocalizedElement r0 = r.component(Parity::even);
    LocalizedElement power = r0;
    for (unsigned n = 1; n <= n_max; ++n, power = power * r0) {
        const unsigned bound = std::max<int>(static_cast<int>(d), power.degree());
        auto m = ideal_membership(power, ideal, bound, opt);
        if (m.member) {
            out.status = RadicalResult::Status::member;
            out.exponent = n;
            out.certificate = std::move(m);
            return out;
        }
    }
    out.exponent = n_max;
    return out;
}

/// Expansion at a rational point, in the shifted coordinates y = x - c.
///
/// Only the variables flagged in `mask` are shifted and truncated (at
/// mask-degree `order`); denominators involving only those variables are
/// expanded as series, other denominators are kept.
class TaylorExpander
{
public:
    TaylorExpander(AlgebraPtr alg, std::vector<Rational> point, unsigned order, std::vector<bool> mask = {})
        : m_alg(std::move(alg)), m_point(std::move(point)), m_order(order), m_mask(std::move(mask))
    {
        const auto &ring = *m_alg->free();
        if (m_mask.empty()) m_mask.assign(ring.num_vars(), true);
        if (m_point.size() != ring.num_vars()) throw std::invalid_argument("point has wrong dimension");
        for (std::size_t v = ring.num_even(); v < ring.num_vars(); ++v) {
            if (!is_zero(m_point[v])) throw std::invalid_argument("odd coordinates of a rational point vanish");
        }
        for (std::size_t i = 0; i < m_alg->num_denominators(); ++i) {
            const auto &d = m_alg->denominators()[i];
            bool inside = true, touches = false;
            for (const auto &[m, c] : d.terms()) {
                for (std::size_t v = 0; v < ring.num_vars(); ++v) {
                    if (m.exponent(v) == 0) continue;
                    if (m_mask[v]) {
                        touches = true;
                    } else {
                        inside = false;
                    }
                }
            }
            if (!inside) {
                if (touches) throw std::invalid_argument("denominator mixes expanded and kept variables");
                m_kept.push_back(i);
                m_inverse.emplace_back(m_alg->free());
                continue;
            }
            const SuperPolynomial shifted = shift(d);
            const Rational c0 = shifted.constant_term();
            if (is_zero(c0)) {
                throw NotLocalizableAtPoint("denominator " + to_string(d) + " vanishes at the point");
            }
            const SuperPolynomial e = (shifted - SuperPolynomial::constant(m_alg->free(), c0)) * Rational(-1 / c0);
            SuperPolynomial sum = SuperPolynomial::constant(m_alg->free(), Rational(1));
            SuperPolynomial pw = sum;
            for (unsigned k = 1; k <= m_order; ++k) {
                pw = truncate(pw * e);
                if (pw.is_zero()) break;
                sum += pw;
            }
            m_inverse.push_back(sum * Rational(1 / c0));
        }
    }

    unsigned order() const { return m_order; }
    const std::vector<bool> &mask() const { return m_mask; }
    const std::vector<Rational> &point() const { return m_point; }

    /// p(y + c) truncated.
    SuperPolynomial shift(const SuperPolynomial &p) const
    {
        const auto &ring = *m_alg->free();
        SuperPolynomial out(m_alg->free());
        for (const auto &[m, c] : p.terms()) {
            SuperPolynomial t = SuperPolynomial::constant(m_alg->free(), c);
            for (std::size_t v = 0; v < ring.num_even() && !t.is_zero(); ++v) {
                if (m.even[v] == 0) continue;
                if (!m_mask[v] || is_zero(m_point[v])) {
                    Monomial mm(ring.num_even());
                    mm.even[v] = m.even[v];
                    t = truncate(t * SuperPolynomial::monomial(m_alg->free(), mm));
                } else {
                    t = truncate(t * shifted_power(v, m.even[v]));
                }
            }
            Monomial odd_part(ring.num_even());
            odd_part.odd = m.odd;
            t = truncate(t * SuperPolynomial::monomial(m_alg->free(), odd_part));
            out += t;
        }
        return out;
    }

    /// Expansion of a localized element; kept denominators stay as exponents.
    std::pair<SuperPolynomial, std::vector<unsigned>> expand(const LocalizedElement &x) const
    {
        SuperPolynomial r = shift(m_alg->reduce(x.numerator()));
        std::vector<unsigned> kept(m_alg->num_denominators(), 0);
        const auto &den = x.denominator_exponents();
        for (std::size_t i = 0; i < den.size(); ++i) {
            if (den[i] == 0) continue;
            if (std::find(m_kept.begin(), m_kept.end(), i) != m_kept.end()) {
                kept[i] = den[i];
                continue;
            }
            for (unsigned k = 0; k < den[i]; ++k) r = truncate(r * m_inverse[i]);
        }
        return {r, kept};
    }

    SuperPolynomial truncate(const SuperPolynomial &p) const
    {
        TermMap out;
        for (const auto &[m, c] : p.terms()) {
            if (mask_degree(m) <= m_order) out.emplace_hint(out.end(), m, c);
        }
        return SuperPolynomial(p.ring(), std::move(out));
    }

    unsigned mask_degree(const Monomial &m) const
    {
        unsigned k = 0;
        for (std::size_t v = 0; v < m_mask.size(); ++v) {
            if (m_mask[v]) k += m.exponent(v);
        }
        return k;
    }

private:
    SuperPolynomial shifted_power(std::size_t v, unsigned e) const
    {
        // (y + c)^e truncated, by the binomial theorem.
        SuperPolynomial r(m_alg->free());
        Rational binom(1);
        for (unsigned k = 0; k <= e && k <= m_order; ++k) {
            Monomial mm(m_alg->free()->num_even());
            mm.even[v] = static_cast<std::uint16_t>(k);
            Rational cpow(1);
            for (unsigned i = 0; i < e - k; ++i) cpow *= m_point[v];
            r.add_term(mm, binom * cpow);
            binom = binom * Rational(e - k) / Rational(k + 1);
        }
        return r;
    }

    AlgebraPtr m_alg;
    std::vector<Rational> m_point;
    unsigned m_order;
    std::vector<bool> m_mask;
    std::vector<SuperPolynomial> m_inverse;
    std::vector<std::size_t> m_kept;
};

/// Constants c_v = phi(x_v) of a morphism to the ground field.
inline std::vector<Rational> rational_point(const SuperalgebraMorphism &phi)
{
    std::vector<Rational> c;
    for (const auto &img : phi.images()) {
        auto v = img.constant_value();
        if (!v) throw InvalidMorphism("augmentation must send generators to constants");
        c.push_back(*v);
    }
    return c;
}

/// A / M^{n+1} at a rational point, with a monomial basis in the shifted
/// coordinates (the names of the generators are reused for y = x - c).
class JetQuotient
{
public:
    JetQuotient(AlgebraPtr alg, const SuperalgebraMorphism &augmentation, unsigned order)
        : JetQuotient(alg, rational_point(augmentation), order)
    {
    }

    JetQuotient(AlgebraPtr alg, std::vector<Rational> point, unsigned order)
        : m_alg(std::move(alg)), m_taylor(m_alg, std::move(point), order), m_echelon(m_alg->free())
    {
        const auto &ring = m_alg->free();
        const auto monos = monomials_up_to(*ring, order);
        for (const auto &r : m_alg->relations()) {
            const SuperPolynomial rs = m_taylor.shift(r);
            if (!is_zero(rs.constant_term())) {
                throw InvalidMorphism("augmentation does not kill relation " + to_string(r));
            }
            for (const auto &m : monos) {
                if (m.degree() + 1 > order) continue;
                m_echelon.insert(m_taylor.truncate(SuperPolynomial::monomial(ring, m) * rs));
            }
        }
        for (const auto &m : monos) {
            if (!m_echelon.is_pivot(m)) {
                m_index.emplace(m, m_basis.size());
                m_basis.push_back(m);
            }
        }
    }

    const AlgebraPtr &algebra() const { return m_alg; }
    unsigned order() const { return m_taylor.order(); }
    const std::vector<Monomial> &basis() const { return m_basis; }
    std::size_t dimension() const { return m_basis.size(); }
    const TaylorExpander &taylor() const { return m_taylor; }

    std::optional<std::size_t> index_of(const Monomial &m) const
    {
        auto it = m_index.find(m);
        if (it == m_index.end()) return std::nullopt;
        return it->second;
    }

    /// Coordinates of a shifted polynomial (already truncated) in the basis.
    std::vector<Rational> reduce(const SuperPolynomial &shifted) const
    {
        std::vector<Rational> out(m_basis.size(), Rational(0));
        const SuperPolynomial r = m_echelon.normal_form(m_taylor.truncate(shifted));
        for (const auto &[m, c] : r.terms()) out[m_index.at(m)] = c;
        return out;
    }

    std::vector<Rational> coordinates(const LocalizedElement &x) const
    {
        auto [p, kept] = m_taylor.expand(x);
        return reduce(p);
    }

    std::string basis_name(std::size_t i) const { return to_string(*m_alg->free(), m_basis.at(i)); }

private:
    AlgebraPtr m_alg;
    TaylorExpander m_taylor;
    SparseEchelon m_echelon;
    std::vector<Monomial> m_basis;
    std::map<Monomial, std::size_t, LeadingFirst> m_index;
};

/// Verify that every source relation maps into the target's relation ideal
/// at degree bound d. Returns the first failing relation, if any.
inline std::optional<SuperPolynomial> check_well_defined(const SuperalgebraMorphism &phi, unsigned d,
                                                         const MembershipOptions &opt = {})
{
    const SuperIdeal zero(phi.target(), {});
    MembershipOptions o = opt;
    o.certificate = false;
    for (const auto &r : phi.source()->relations()) {
        const auto img = phi.apply_polynomial(r);
        if (img.is_zero()) continue;
        if (!ideal_membership(img, zero, std::max<int>(static_cast<int>(d), img.degree()), o).member) return r;
    }
    return std::nullopt;
}

} // namespace superhopf

#endif
