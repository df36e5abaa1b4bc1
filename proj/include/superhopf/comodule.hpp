#ifndef SUPERHOPF_COMODULE_HPP
#define SUPERHOPF_COMODULE_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <superhopf/hopf.hpp>
#include <superhopf/linalg.hpp>

namespace superhopf
{

namespace detail
{

/// Numerators of `xs` over their common denominator, reduced modulo the
/// relations of the algebra (general relations through a truncated span).
inline std::vector<SuperPolynomial> common_numerators(const AlgebraPtr &alg, const std::vector<LocalizedElement> &xs)
{
    std::vector<unsigned> top(alg->num_denominators(), 0);
    for (const auto &x : xs) {
        if (!same_algebra(x.algebra(), alg)) throw RingMismatch("element in a foreign algebra");
        const auto &e = x.denominator_exponents();
        for (std::size_t i = 0; i < e.size(); ++i) top[i] = std::max(top[i], e[i]);
    }
    std::vector<SuperPolynomial> out;
    int bound = 0;
    for (const auto &x : xs) {
        std::vector<unsigned> extra(top.size());
        for (std::size_t i = 0; i < top.size(); ++i) extra[i] = top[i] - x.denominator_exponents()[i];
        out.push_back(alg->reduce(x.numerator() * LocalizedElement::denominator_product(*alg, extra)));
        bound = std::max(bound, out.back().degree());
    }
    if (alg->has_general_relations()) {
        MembershipOptions opt;
        const IdealReducer reducer(SuperIdeal(alg, {}), static_cast<unsigned>(std::max(bound, 0)), opt);
        for (auto &p : out) p = reducer.normal_form(p);
    }
    return out;
}

/// Basis of {c : Σ_u c_u vectors[u] = 0} where each vector is a tuple of
/// algebra elements of the same length.
inline std::vector<std::vector<Rational>> tuple_relations(const AlgebraPtr &alg,
                                                          const std::vector<std::vector<LocalizedElement>> &vectors)
{
    if (vectors.empty()) return {};
    const std::size_t width = vectors.front().size();
    std::vector<LocalizedElement> flat;
    for (const auto &v : vectors) {
        if (v.size() != width) throw std::invalid_argument("tuples of different lengths");
        flat.insert(flat.end(), v.begin(), v.end());
    }
    const auto nums = common_numerators(alg, flat);
    std::vector<std::string> tags;
    for (std::size_t j = 0; j < width; ++j) tags.push_back("#" + std::to_string(j));
    TensorSuperalgebra tagged({make_free_algebra(tags, {}), make_algebra(alg->free())});
    std::vector<SuperPolynomial> tagged_vectors;
    for (std::size_t u = 0; u < vectors.size(); ++u) {
        SuperPolynomial acc(tagged.ambient()->free());
        for (std::size_t j = 0; j < width; ++j) {
            const auto &p = nums[u * width + j];
            if (p.is_zero()) continue;
            acc += SuperPolynomial::variable(tagged.ambient()->free(), tagged.ambient_variable(0, j)) *
                   tagged.embed_polynomial(1, p);
        }
        tagged_vectors.push_back(std::move(acc));
    }
    return kernel_basis(tagged.ambient()->free(), tagged_vectors);
}

/// Coordinates of x in the span of `basis`, if it lies there.
inline std::optional<std::vector<Rational>> span_coordinates(const AlgebraPtr &alg,
                                                             const std::vector<LocalizedElement> &basis,
                                                             const LocalizedElement &x)
{
    std::vector<std::vector<LocalizedElement>> vectors;
    for (const auto &b : basis) vectors.push_back({b});
    vectors.push_back({x});
    for (const auto &rel : tuple_relations(alg, vectors)) {
        const Rational &last = rel.back();
        if (is_zero(last)) continue;
        std::vector<Rational> c;
        for (std::size_t i = 0; i < basis.size(); ++i) c.push_back(-rel[i] / last);
        return c;
    }
    return std::nullopt;
}

} // namespace detail

/// Side of a comodule: right τ(v_i) = Σ_j v_j ⊗ r_ji, left τ(w_k) = Σ_l ℓ_lk ⊗ w_l.
enum class ComoduleSide { right, left };

/// Finite-dimensional supercomodule given by its coefficient matrix:
/// `matrix[j][i]` is r_ji (right) or ℓ_ji (left).
struct Supercomodule {
    HopfPtr group;
    std::vector<std::string> names;
    std::vector<Parity> parities;
    std::vector<std::vector<LocalizedElement>> matrix;
    ComoduleSide side = ComoduleSide::right;

    std::size_t dimension() const { return names.size(); }
    const LocalizedElement &coefficient(std::size_t j, std::size_t i) const { return matrix.at(j).at(i); }

    static Supercomodule from_strings(const HopfPtr &g, std::vector<std::string> names, std::vector<Parity> parities,
                                      const std::vector<std::vector<std::string>> &entries,
                                      ComoduleSide side = ComoduleSide::right)
    {
        Supercomodule v{g, std::move(names), std::move(parities), {}, side};
        if (v.parities.size() != v.names.size() || entries.size() != v.names.size()) {
            throw std::invalid_argument("comodule data has inconsistent sizes");
        }
        for (const auto &row : entries) {
            if (row.size() != v.names.size()) throw std::invalid_argument("coaction matrix is not square");
            std::vector<LocalizedElement> r;
            for (const auto &e : row) r.push_back(parse_element(g->algebra(), e));
            v.matrix.push_back(std::move(r));
        }
        return v;
    }
};

/// The natural comodule of GL(m|n): τ(v_i) = Σ_j v_j ⊗ a_ji.
inline Supercomodule natural_comodule(const HopfPtr &gl, std::size_t m, std::size_t n)
{
    const std::size_t s = m + n;
    Supercomodule v{gl, {}, {}, {}, ComoduleSide::right};
    for (std::size_t i = 0; i < s; ++i) {
        v.names.push_back("v" + std::to_string(i + 1));
        v.parities.push_back(i < m ? Parity::even : Parity::odd);
    }
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<LocalizedElement> row;
        for (std::size_t i = 0; i < s; ++i) row.push_back(gl->generator(gl_name(j + 1, i + 1, s)));
        v.matrix.push_back(std::move(row));
    }
    return v;
}

/// Trivial comodule: τ(v) = v ⊗ 1.
inline Supercomodule trivial_comodule(const HopfPtr &g, std::vector<std::string> names, std::vector<Parity> parities,
                                      ComoduleSide side = ComoduleSide::right)
{
    Supercomodule v{g, std::move(names), std::move(parities), {}, side};
    for (std::size_t j = 0; j < v.names.size(); ++j) {
        std::vector<LocalizedElement> row;
        for (std::size_t i = 0; i < v.names.size(); ++i) {
            row.push_back(LocalizedElement::constant(g->algebra(), Rational(i == j ? 1 : 0)));
        }
        v.matrix.push_back(std::move(row));
    }
    return v;
}

/// The span of `basis` ⊆ K[G] as a comodule under Δ (left: a_1 ⊗ a_2 with
/// a_2 in the span; right: a_1 in the span). Throws if not a subcomodule.
inline Supercomodule regular_comodule(const HopfPtr &g, const std::vector<LocalizedElement> &basis, ComoduleSide side)
{
    Supercomodule v{g, {}, {}, {}, side};
    const auto &t2 = g->tensor2();
    const std::size_t n = basis.size();
    v.matrix.assign(n, std::vector<LocalizedElement>(n, LocalizedElement(g->algebra())));
    const std::size_t span_leg = side == ComoduleSide::left ? 1 : 0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto &w = basis[k];
        v.names.push_back(to_string(w));
        const auto p = w.homogeneous_parity();
        if (!p && !w.is_zero()) throw std::invalid_argument("comodule basis elements must be homogeneous");
        v.parities.push_back(p.value_or(Parity::even));
        for (const auto &pt : t2.split(g->delta(w))) {
            const auto coords = detail::span_coordinates(g->algebra(), basis, pt.legs[span_leg]);
            if (!coords) throw std::invalid_argument("span is not a subcomodule: " + to_string(pt.legs[span_leg]));
            const auto &other = pt.legs[1 - span_leg];
            for (std::size_t l = 0; l < n; ++l) {
                if (!is_zero((*coords)[l])) v.matrix[l][k] += other * (pt.coefficient * (*coords)[l]);
            }
        }
    }
    return v;
}

/// Comodule axioms on every basis vector, plus parity compatibility.
inline CheckReport check_coaction(const Supercomodule &v)
{
    CheckReport rep;
    const auto &g = *v.group;
    const auto &t2 = g.tensor2();
    const std::size_t n = v.dimension();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto &r = v.coefficient(j, i);
            const std::string tag = "r" + std::to_string(j + 1) + std::to_string(i + 1);
            if (!r.is_zero()) {
                const auto p = r.homogeneous_parity();
                const bool ok = p && *p == v.parities[i] + v.parities[j];
                rep.add("parity " + tag, ok, ok ? "" : tag + " = " + to_string(r));
            }
            std::vector<LocalizedElement> parts;
            for (std::size_t k = 0; k < n; ++k) {
                parts.push_back(v.side == ComoduleSide::right ? t2.pure({v.coefficient(j, k), v.coefficient(k, i)})
                                                              : t2.pure({v.coefficient(k, i), v.coefficient(j, k)}));
            }
            const auto want = sum_localized(t2.ambient(), parts);
            const auto got = g.delta(r);
            const bool ok = equal_in_algebra(got, want);
            rep.add("coassociativity " + tag, ok, ok ? "" : detail::describe(tag, got, want));
            const Rational e = g.epsilon(r);
            const bool ok2 = e == Rational(i == j ? 1 : 0);
            rep.add("counit " + tag, ok2, ok2 ? "" : tag + ": counit value " + to_string(e));
        }
    }
    return rep;
}

/// Basis of V^G = {v : τ(v) = v ⊗ 1}, as coefficient vectors in reduced form.
inline std::vector<std::vector<Rational>> invariants(const Supercomodule &v)
{
    const auto &alg = v.group->algebra();
    std::vector<std::vector<LocalizedElement>> vectors;
    for (std::size_t i = 0; i < v.dimension(); ++i) {
        std::vector<LocalizedElement> col;
        for (std::size_t j = 0; j < v.dimension(); ++j) {
            col.push_back(v.coefficient(j, i) - LocalizedElement::constant(alg, Rational(i == j ? 1 : 0)));
        }
        vectors.push_back(std::move(col));
    }
    return detail::tuple_relations(alg, vectors);
}

/// Ideal of Stab_G(W) for the coordinate subspace W = span{v_i : i ∈ M}.
inline SuperIdeal stabilizer_ideal(const Supercomodule &v, const std::set<std::size_t> &subspace)
{
    for (auto i : subspace) {
        if (i >= v.dimension()) throw std::out_of_range("basis index " + std::to_string(i) + " out of range");
    }
    std::vector<LocalizedElement> gens;
    for (auto i : subspace) {
        for (std::size_t j = 0; j < v.dimension(); ++j) {
            if (!subspace.count(j) && !v.coefficient(j, i).is_zero()) gens.push_back(v.coefficient(j, i));
        }
    }
    return SuperIdeal(v.group->algebra(), std::move(gens));
}

/// Basis of V □_C W ⊆ V ⊗ W: coefficient vectors indexed by i * dim W + k
/// for v_i ⊗ w_k.
inline std::vector<std::vector<Rational>> cotensor(const Supercomodule &v, const Supercomodule &w)
{
    if (v.side != ComoduleSide::right || w.side != ComoduleSide::left) {
        throw std::invalid_argument("cotensor expects a right and a left comodule");
    }
    if (!same_algebra(v.group->algebra(), w.group->algebra())) throw RingMismatch("comodules over different coalgebras");
    const auto &alg = v.group->algebra();
    const std::size_t nv = v.dimension(), nw = w.dimension();
    std::vector<std::vector<LocalizedElement>> vectors;
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t k = 0; k < nw; ++k) {
            std::vector<LocalizedElement> comps;
            for (std::size_t j = 0; j < nv; ++j) {
                for (std::size_t l = 0; l < nw; ++l) {
                    LocalizedElement c(alg);
                    if (l == k) c += v.coefficient(j, i);
                    if (j == i) c -= w.coefficient(l, k);
                    comps.push_back(std::move(c));
                }
            }
            vectors.push_back(std::move(comps));
        }
    }
    return detail::tuple_relations(alg, vectors);
}

/// ξ(n ⊗ m_k) = Σ_l n ℓ_lk ⊗ m_l and ξ^{-1}(n ⊗ m_k) = Σ_l n S(ℓ_lk) ⊗ m_l
/// for a left comodule M and n in K[G] (acting by right multiplication).
/// Elements of N ⊗ M are coefficient tuples indexed by the basis of M.
struct XiMap {
    Supercomodule module;

    using Tensor = std::vector<LocalizedElement>;

    Tensor pure(const LocalizedElement &n, std::size_t k) const
    {
        Tensor t(module.dimension(), LocalizedElement(module.group->algebra()));
        t.at(k) = n;
        return t;
    }

    Tensor apply(const Tensor &x, bool inverse = false) const
    {
        const std::size_t d = module.dimension();
        const auto &g = *module.group;
        Tensor out(d, LocalizedElement(g.algebra()));
        for (std::size_t k = 0; k < d; ++k) {
            if (x[k].is_zero()) continue;
            for (std::size_t l = 0; l < d; ++l) {
                const auto &c = module.coefficient(l, k);
                if (c.is_zero()) continue;
                out[l] += x[k] * (inverse ? g.s(c) : c);
            }
        }
        return out;
    }

    Tensor forward(const Tensor &x) const { return apply(x, false); }
    Tensor backward(const Tensor &x) const { return apply(x, true); }
};

inline XiMap xi_map(const Supercomodule &m)
{
    if (m.side != ComoduleSide::left) throw std::invalid_argument("xi_map expects a left comodule");
    return XiMap{m};
}

/// ξ^{-1}ξ = id and ξξ^{-1} = id on n ⊗ m_k for every n in `ns` and every k.
inline CheckReport check_xi_roundtrip(const XiMap &xi, const std::vector<LocalizedElement> &ns)
{
    CheckReport rep;
    for (const auto &n : ns) {
        for (std::size_t k = 0; k < xi.module.dimension(); ++k) {
            const auto x = xi.pure(n, k);
            const auto a = xi.backward(xi.forward(x));
            const auto b = xi.forward(xi.backward(x));
            bool ok = true;
            for (std::size_t l = 0; l < x.size(); ++l) {
                ok = ok && equal_in_algebra(a[l], x[l]) && equal_in_algebra(b[l], x[l]);
            }
            const std::string tag = to_string(n) + " (x) " + xi.module.names[k];
            rep.add("xi roundtrip " + tag, ok, ok ? "" : tag);
        }
    }
    return rep;
}

/// Right action of G on X through a comorphism τ: K[X] -> K[X] ⊗ K[G].
class AlgebraCoaction
{
public:
    AlgebraCoaction(AlgebraPtr space, HopfPtr group, std::vector<LocalizedElement> images)
        : m_space(std::move(space)), m_group(std::move(group)), m_xg({m_space, m_group->algebra()}),
          m_xgg({m_space, m_group->algebra(), m_group->algebra()})
    {
        m_tau = SuperalgebraMorphism(m_space, m_xg.ambient(), std::move(images));
    }

    /// Images written with the names of K[X] ⊗ K[G].
    static AlgebraCoaction from_strings(const AlgebraPtr &space, const HopfPtr &group,
                                        const std::vector<std::string> &images)
    {
        TensorSuperalgebra xg({space, group->algebra()});
        std::vector<LocalizedElement> els;
        for (const auto &s : images) els.push_back(parse_element(xg.ambient(), s));
        return AlgebraCoaction(space, group, std::move(els));
    }

    const AlgebraPtr &space() const { return m_space; }
    const HopfPtr &group() const { return m_group; }
    const TensorSuperalgebra &tensor() const { return m_xg; }
    const SuperalgebraMorphism &comorphism() const { return m_tau; }
    LocalizedElement operator()(const LocalizedElement &f) const { return m_tau.apply(f); }

    /// (τ ⊗ id)τ = (id ⊗ Δ)τ and (id ⊗ ε)τ = id on generators.
    CheckReport check(unsigned d = 4) const
    {
        CheckReport rep;
        const auto &ga = m_group->algebra();
        const std::size_t nx = m_space->num_generators(), ng = ga->num_generators();
        const auto i01 = detail::block_inclusion(m_xg, m_xgg, 0);
        const auto &gg = m_group->tensor2();
        std::vector<LocalizedElement> gg_images(gg.ambient()->num_generators());
        for (std::size_t k = 0; k < 2; ++k) {
            for (std::size_t v = 0; v < ng; ++v) {
                gg_images[gg.ambient_variable(k, v)] =
                    LocalizedElement::generator(m_xgg.ambient(), m_xgg.ambient_variable(k + 1, v));
            }
        }
        const SuperalgebraMorphism i12(gg.ambient(), m_xgg.ambient(), std::move(gg_images));
        std::vector<LocalizedElement> left(m_xg.ambient()->num_generators()), right(left.size()),
            counit(left.size());
        const auto c = m_group->identity_point();
        for (std::size_t v = 0; v < nx; ++v) {
            const auto a = m_xg.ambient_variable(0, v);
            left[a] = i01.apply(m_tau.image(v));
            right[a] = LocalizedElement::generator(m_xgg.ambient(), m_xgg.ambient_variable(0, v));
            counit[a] = LocalizedElement::generator(m_space, v);
        }
        for (std::size_t v = 0; v < ng; ++v) {
            const auto a = m_xg.ambient_variable(1, v);
            left[a] = LocalizedElement::generator(m_xgg.ambient(), m_xgg.ambient_variable(2, v));
            right[a] = i12.apply(m_group->comul().image(v));
            counit[a] = LocalizedElement::constant(m_space, c[v]);
        }
        const SuperalgebraMorphism tl(m_xg.ambient(), m_xgg.ambient(), std::move(left));
        const SuperalgebraMorphism tr(m_xg.ambient(), m_xgg.ambient(), std::move(right));
        const SuperalgebraMorphism te(m_xg.ambient(), m_space, std::move(counit));
        for (std::size_t v = 0; v < nx; ++v) {
            const auto &n = m_space->free()->name(v);
            const auto &img = m_tau.image(v);
            const auto l = tl.apply(img), r = tr.apply(img);
            const bool ok = equal_in_algebra(l, r, d);
            rep.add("coaction coassociativity " + n, ok, ok ? "" : detail::describe(n, l, r));
            const auto e = te.apply(img), x = LocalizedElement::generator(m_space, v);
            const bool ok2 = equal_in_algebra(e, x, d);
            rep.add("coaction counit " + n, ok2, ok2 ? "" : detail::describe(n, e, x));
        }
        return rep;
    }

private:
    AlgebraPtr m_space;
    HopfPtr m_group;
    TensorSuperalgebra m_xg;
    TensorSuperalgebra m_xgg;
    SuperalgebraMorphism m_tau;
};

/// Basis of (K[X]^G)_{≤d}: kernel of f ↦ τ(f) - f ⊗ 1 on monomials of
/// degree ≤ d, returned in reduced echelon form.
inline std::vector<LocalizedElement> algebra_invariants(const AlgebraCoaction &x, unsigned d)
{
    const auto &space = x.space();
    std::vector<Monomial> monos;
    for (const auto &m : monomials_up_to(*space->free(), d)) {
        if (!space->reduce(SuperPolynomial::monomial(space->free(), m)).is_zero()) monos.push_back(m);
    }
    std::vector<std::vector<LocalizedElement>> vectors;
    for (const auto &m : monos) {
        const LocalizedElement f(space, SuperPolynomial::monomial(space->free(), m));
        vectors.push_back({x(f) - x.tensor().embed(0, f)});
    }
    std::vector<SuperPolynomial> found;
    for (const auto &rel : detail::tuple_relations(x.tensor().ambient(), vectors)) {
        SuperPolynomial p(space->free());
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if (!is_zero(rel[i])) p.add_term(monos[i], rel[i]);
        }
        found.push_back(std::move(p));
    }
    std::vector<LocalizedElement> out;
    for (auto &p : reduced_span(space->free(), found)) {
        const Rational lc = p.terms().begin()->second;
        out.emplace_back(space, p * (1 / lc));
    }
    return out;
}

} // namespace superhopf

#endif
