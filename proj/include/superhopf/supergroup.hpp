#ifndef SUPERHOPF_SUPERGROUP_HPP
#define SUPERHOPF_SUPERGROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <superhopf/comodule.hpp>

namespace superhopf
{

/// Closed supersubgroup H = V(I_H) of G.
struct Supersubgroup {
    HopfPtr ambient;
    SuperIdeal ideal;
};

/// H = V(gens), checked to be a Hopf superideal at bound d.
inline Supersubgroup make_subgroup(const HopfPtr &g, const std::vector<std::string> &gens, unsigned d = 4)
{
    Supersubgroup h{g, SuperIdeal::from_strings(g->algebra(), gens)};
    if (auto bad = hopf_ideal_violation(*g, h.ideal, d)) {
        throw NotHopfIdeal("not a Hopf superideal: " + bad->second, bad->first);
    }
    return h;
}

/// The trivial subgroup E (I_E = M).
inline Supersubgroup trivial_subgroup(const HopfPtr &g) { return {g, g->augmentation_ideal()}; }

/// H = G (I_H = 0).
inline Supersubgroup whole_group(const HopfPtr &g) { return {g, SuperIdeal(g->algebra(), {})}; }

/// I_H ⊗ K[G] (slot 0) or K[G] ⊗ I_H (slot 1) inside A ⊗ A.
inline SuperIdeal tensor_ideal(const Supersubgroup &h, std::size_t slot)
{
    const auto &t2 = h.ambient->tensor2();
    std::vector<LocalizedElement> gens;
    for (const auto &g : h.ideal.generators) gens.push_back(t2.embed(slot, g));
    return SuperIdeal(t2.ambient(), std::move(gens));
}

namespace detail
{

// Morphism A ⊗ A ⊗ A -> A ⊗ A sending f1 ⊗ f2 ⊗ f3 to the ν-expression.
inline SuperalgebraMorphism nu_map(const HopfSuperalgebra &h, bool left)
{
    const auto &t2 = h.tensor2();
    const auto &t3 = h.tensor3();
    std::vector<LocalizedElement> images(t3.ambient()->num_generators());
    for (std::size_t v = 0; v < h.algebra()->num_generators(); ++v) {
        const auto x = h.generator(v);
        images[t3.ambient_variable(0, v)] = left ? t2.embed(1, h.s(x)) : t2.embed(1, x);
        images[t3.ambient_variable(1, v)] = t2.embed(0, x);
        images[t3.ambient_variable(2, v)] = left ? t2.embed(1, x) : t2.embed(1, h.s(x));
    }
    return SuperalgebraMorphism(t3.ambient(), t2.ambient(), std::move(images));
}

inline LocalizedElement double_comultiplication(const HopfSuperalgebra &h, const LocalizedElement &f)
{
    return coassociativity_maps(h).first.apply(h.delta(f));
}

} // namespace detail

/// ν_l(f) = Σ (-1)^{|f1||f2|} f2 ⊗ S(f1) f3.
inline LocalizedElement nu_l(const HopfSuperalgebra &h, const LocalizedElement &f)
{
    return detail::nu_map(h, true).apply(detail::double_comultiplication(h, f));
}

/// ν_r(f) = Σ (-1)^{|f1||f2|} f2 ⊗ f1 S(f3).
inline LocalizedElement nu_r(const HopfSuperalgebra &h, const LocalizedElement &f)
{
    return detail::nu_map(h, false).apply(detail::double_comultiplication(h, f));
}

struct NormalityResult {
    enum class Status { certified, not_certified } status = Status::not_certified;
    unsigned bound = 0;
    bool nu_agree = true;
    std::vector<std::string> uncertified;

    bool certified() const { return status == Status::certified; }
};

/// Tests ν_l(f) ∈ I_H ⊗ K[G] for every generator f of I_H at bound d, and
/// records whether ν_r gives the same verdict.
inline NormalityResult is_normal(const Supersubgroup &h, unsigned d)
{
    NormalityResult res;
    res.bound = d;
    const auto j = tensor_ideal(h, 0);
    MembershipOptions opt;
    opt.certificate = false;
    bool all = true;
    for (const auto &f : h.ideal.generators) {
        const auto l = nu_l(*h.ambient, f), r = nu_r(*h.ambient, f);
        const bool in_l = ideal_membership(l, j, d, opt).member;
        const bool in_r = ideal_membership(r, j, d, opt).member;
        if (in_l != in_r) res.nu_agree = false;
        if (!in_l) {
            all = false;
            res.uncertified.push_back(to_string(f));
        }
    }
    res.status = all ? NormalityResult::Status::certified : NormalityResult::Status::not_certified;
    return res;
}

struct WitnessResult {
    bool violation = false;
    std::size_t pair = 0;
    std::string generator;
    std::string value;
};

/// Evaluates g h g^{-1} on the generators of I_H for each supplied pair with
/// h ∈ H; a nonzero value certifies that H is not normal.
inline WitnessResult normality_witness(const Supersubgroup &h, const std::vector<std::pair<GroupPoint, GroupPoint>> &points)
{
    WitnessResult out;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto &[g, x] = points[k];
        for (const auto &f : h.ideal.generators) {
            if (!equal_in_algebra(x(f), LocalizedElement(x.target()))) {
                throw std::invalid_argument("second point of pair " + std::to_string(k) + " is not in the subgroup");
            }
        }
        const auto conj = point_convolution(point_convolution(g, x), point_inverse(g));
        for (const auto &f : h.ideal.generators) {
            const auto v = conj(f);
            if (!equal_in_algebra(v, LocalizedElement(v.algebra()))) {
                out.violation = true;
                out.pair = k;
                out.generator = to_string(f);
                out.value = to_string(v);
                return out;
            }
        }
    }
    return out;
}

/// R = K[G]^H up to degree d, with R⁺ = R ∩ ker ε.
struct InvariantSubalgebra {
    HopfPtr ambient;
    unsigned bound = 0;
    std::vector<LocalizedElement> basis;
    std::vector<LocalizedElement> augmentation_part;
};

namespace detail
{

// Polynomial monomials of degree ≤ d not killed by monomial relations.
inline std::vector<Monomial> surviving_monomials(const PresentedSuperalgebra &alg, unsigned d)
{
    std::vector<Monomial> out;
    for (const auto &m : monomials_up_to(*alg.free(), d)) {
        if (!alg.reduce(SuperPolynomial::monomial(alg.free(), m)).is_zero()) out.push_back(m);
    }
    return out;
}

// Normalized echelon basis of the span of the given polynomials.
inline std::vector<LocalizedElement> echelon_elements(const AlgebraPtr &alg, const std::vector<SuperPolynomial> &ps)
{
    std::vector<LocalizedElement> out;
    for (auto &p : reduced_span(alg->free(), ps)) {
        const Rational lc = p.terms().begin()->second;
        out.emplace_back(alg, p * (1 / lc));
    }
    return out;
}

// Combinations of `monos` whose images under `value` vanish modulo `ideal`.
template <class F>
std::vector<SuperPolynomial> kernel_modulo(const AlgebraPtr &space, const std::vector<Monomial> &monos,
                                           const SuperIdeal &ideal, F value)
{
    std::vector<LocalizedElement> images;
    for (const auto &m : monos) images.push_back(value(LocalizedElement(space, SuperPolynomial::monomial(space->free(), m))));
    auto nums = common_numerators(ideal.ambient, images);
    int bound = 0;
    for (const auto &p : nums) bound = std::max(bound, p.degree());
    MembershipOptions opt;
    const IdealReducer reducer(ideal, static_cast<unsigned>(std::max(bound, 0)), opt);
    for (auto &p : nums) p = reducer.normal_form(p);
    std::vector<SuperPolynomial> out;
    for (const auto &rel : kernel_basis(ideal.ambient->free(), nums)) {
        SuperPolynomial p(space->free());
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if (!is_zero(rel[i])) p.add_term(monos[i], rel[i]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace detail

/// Degreewise solution of Δ(f) - f ⊗ 1 ∈ K[G] ⊗ I_H over polynomial
/// monomials of degree ≤ d.
inline InvariantSubalgebra invariant_subalgebra(const Supersubgroup &h, unsigned d)
{
    const auto &g = *h.ambient;
    const auto &alg = g.algebra();
    const auto monos = detail::surviving_monomials(*alg, d);
    const auto ker = detail::kernel_modulo(alg, monos, tensor_ideal(h, 1), [&](const LocalizedElement &f) {
        return g.delta(f) - g.left(f);
    });
    InvariantSubalgebra r{h.ambient, d, detail::echelon_elements(alg, ker), {}};
    for (const auto &f : r.basis) {
        const Rational e = g.epsilon(f);
        const auto plus = f - LocalizedElement::constant(alg, e);
        if (!plus.is_zero()) r.augmentation_part.push_back(plus);
    }
    return r;
}

/// I_H ⊆ K[G]R⁺ and R⁺ ⊆ I_H by certified membership at bound d.
/// Faithful flatness is not decided here.
inline CheckReport quotient_criterion(const Supersubgroup &h, const InvariantSubalgebra &r, unsigned d)
{
    CheckReport rep;
    const SuperIdeal rplus(h.ambient->algebra(), r.augmentation_part);
    for (const auto &f : h.ideal.generators) {
        const auto m = ideal_membership(f, rplus, std::max<int>(static_cast<int>(d), f.degree()));
        const bool ok = m.member && m.verify(f);
        rep.add("I_H in K[G]R+ : " + to_string(f), ok, ok ? "" : to_string(f));
    }
    for (const auto &f : r.augmentation_part) {
        const auto m = ideal_membership(f, h.ideal, std::max<int>(static_cast<int>(d), f.degree()));
        const bool ok = m.member && m.verify(f);
        rep.add("R+ in I_H : " + to_string(f), ok, ok ? "" : to_string(f));
    }
    return rep;
}

/// Morphism of supergroups φ: G -> L given by its comorphism K[L] -> K[G].
struct HopfMorphism {
    HopfPtr source;
    HopfPtr target;
    SuperalgebraMorphism comorphism;
};

inline HopfMorphism make_hopf_morphism(const HopfPtr &g, const HopfPtr &l, const std::vector<std::string> &images)
{
    return {g, l, SuperalgebraMorphism::from_strings(l->algebra(), g->algebra(), images)};
}

/// Δ_G φ* = (φ* ⊗ φ*) Δ_L and ε_G φ* = ε_L on generators of K[L].
inline CheckReport check_hopf_morphism(const HopfMorphism &phi, unsigned d = 4)
{
    CheckReport rep;
    const auto &g = *phi.source;
    const auto &l = *phi.target;
    const auto pp = tensor_morphism(l.tensor2(), g.tensor2(), {phi.comorphism, phi.comorphism});
    for (std::size_t v = 0; v < l.algebra()->num_generators(); ++v) {
        const auto &n = l.algebra()->free()->name(v);
        const auto lhs = g.delta(phi.comorphism.image(v));
        const auto rhs = pp.apply(l.comul().image(v));
        const bool ok = equal_in_algebra(lhs, rhs, d);
        rep.add("comultiplication " + n, ok, ok ? "" : detail::describe(n, lhs, rhs));
        const bool ok2 = g.epsilon(phi.comorphism.image(v)) == l.epsilon(l.generator(v));
        rep.add("counit " + n, ok2, ok2 ? "" : n);
    }
    return rep;
}

/// I_{ker φ} = K[G] φ*(ker ε_L).
inline SuperIdeal kernel_ideal(const HopfMorphism &phi)
{
    std::vector<LocalizedElement> gens;
    for (const auto &y : phi.target->augmentation_ideal().generators) {
        auto x = phi.comorphism.apply(y);
        if (!x.is_zero()) gens.push_back(std::move(x));
    }
    return SuperIdeal(phi.source->algebra(), std::move(gens));
}

/// Basis of ker φ* on polynomial monomials of K[L] of degree ≤ d.
inline std::vector<LocalizedElement> image_kernel(const HopfMorphism &phi, unsigned d)
{
    const auto &l = phi.target->algebra();
    const auto monos = detail::surviving_monomials(*l, d);
    const auto ker = detail::kernel_modulo(l, monos, SuperIdeal(phi.source->algebra(), {}),
                                           [&](const LocalizedElement &f) { return phi.comorphism.apply(f); });
    return detail::echelon_elements(l, ker);
}

/// Im φ* ∩ K[G]_{≤d}, from images of monomials of degree ≤ d.
inline std::vector<LocalizedElement> image_span(const HopfMorphism &phi, unsigned d)
{
    const auto &l = phi.target->algebra();
    const auto &g = phi.source->algebra();
    std::vector<LocalizedElement> images;
    for (const auto &m : detail::surviving_monomials(*l, d)) {
        images.push_back(phi.comorphism.apply(LocalizedElement(l, SuperPolynomial::monomial(l->free(), m))));
    }
    std::vector<SuperPolynomial> nums;
    for (const auto &x : images) {
        if (!x.is_polynomial()) throw std::invalid_argument("image_span needs polynomial images");
        nums.push_back(x.numerator());
    }
    std::vector<LocalizedElement> out;
    for (auto &e : detail::echelon_elements(g, nums)) {
        if (e.degree() <= static_cast<int>(d)) out.push_back(std::move(e));
    }
    return out;
}

/// Companions and the normalizer presentation N_G(H) = V(I + S(I)).
struct NormalizerData {
    std::vector<LocalizedElement> companions;
    SuperIdeal ideal;
};

inline NormalizerData normalizer_data(const Supersubgroup &h, unsigned d)
{
    const auto &g = *h.ambient;
    const auto &alg = g.algebra();
    const auto &t2 = g.tensor2();
    const auto j = tensor_ideal(h, 0);
    NormalizerData out;
    for (const auto &f : h.ideal.generators) {
        const auto nu = nu_l(g, f);
        const IdealReducer reducer(j, std::max<unsigned>(d, static_cast<unsigned>(std::max(0, nu.numerator().degree()))));
        const LocalizedElement rest(t2.ambient(), reducer.normal_form(nu.numerator()), nu.denominator_exponents());
        // Group the remainder by left legs, then make the left legs
        // independent modulo I_H.
        std::vector<LocalizedElement> lefts, rights;
        for (const auto &pt : t2.split(rest)) {
            bool found = false;
            for (std::size_t k = 0; k < lefts.size(); ++k) {
                if (lefts[k] == pt.legs[0]) {
                    rights[k] += pt.legs[1] * pt.coefficient;
                    found = true;
                    break;
                }
            }
            if (!found) {
                lefts.push_back(pt.legs[0]);
                rights.push_back(pt.legs[1] * pt.coefficient);
            }
        }
        if (lefts.empty()) continue;
        auto nums = detail::common_numerators(alg, lefts);
        int bound = static_cast<int>(d);
        for (const auto &p : nums) bound = std::max(bound, p.degree());
        const IdealReducer hred(h.ideal, static_cast<unsigned>(bound));
        for (auto &p : nums) p = hred.normal_form(p);
        // Independent left legs: pivots of a forward elimination.
        SparseEchelon ech(alg->free(), true);
        std::vector<std::size_t> basis_of_input;
        std::vector<Combination> deps(lefts.size());
        std::vector<bool> independent(lefts.size(), false);
        for (std::size_t k = 0; k < lefts.size(); ++k) {
            const std::size_t before = ech.rank();
            ech.insert(nums[k], &deps[k]);
            independent[k] = ech.rank() > before;
        }
        // A dependent leg k satisfies Σ dep_i left_i ∈ I_H with dep_k ≠ 0,
        // so left_k ≡ -Σ_{i≠k} dep_i / dep_k left_i; substitute repeatedly.
        std::vector<LocalizedElement> comp(rights);
        for (std::size_t k = lefts.size(); k-- > 0;) {
            if (independent[k]) continue;
            const Rational ck = deps[k].at(k);
            for (const auto &[i, c] : deps[k]) {
                if (i == k) continue;
                comp[i] += comp[k] * (-c / ck);
            }
            comp[k] = LocalizedElement(alg);
        }
        for (std::size_t k = 0; k < lefts.size(); ++k) {
            if (independent[k] && !comp[k].is_zero()) out.companions.push_back(comp[k]);
        }
    }
    std::vector<LocalizedElement> gens = out.companions;
    for (const auto &c : out.companions) gens.push_back(g.s(c));
    out.ideal = SuperIdeal(alg, std::move(gens));
    return out;
}

/// I and J generate the same ideal (mutual membership at bound d).
inline bool ideals_equal(const SuperIdeal &i, const SuperIdeal &j, unsigned d)
{
    MembershipOptions opt;
    opt.certificate = false;
    for (const auto &f : i.generators) {
        if (!ideal_membership(f, j, std::max<int>(static_cast<int>(d), f.degree()), opt).member) return false;
    }
    for (const auto &f : j.generators) {
        if (!ideal_membership(f, i, std::max<int>(static_cast<int>(d), f.degree()), opt).member) return false;
    }
    return true;
}

/// I_{HN} = K[G](π*(ker ε_L) ∩ I_H), the intersection taken over images of
/// monomials of degree ≤ d.
inline SuperIdeal semidirect_ideal(const Supersubgroup &h, const HopfMorphism &pi, unsigned d)
{
    const auto &l = pi.target->algebra();
    const auto &alg = h.ambient->algebra();
    const auto c = pi.target->identity_point();
    std::vector<Monomial> monos;
    for (const auto &m : detail::surviving_monomials(*l, d)) {
        if (!m.is_one()) monos.push_back(m);
    }
    auto augmented = [&](const LocalizedElement &f) {
        return pi.comorphism.apply(f) - LocalizedElement::constant(alg, pi.target->epsilon(f));
    };
    const auto ker = detail::kernel_modulo(l, monos, h.ideal, augmented);
    std::vector<LocalizedElement> gens;
    for (const auto &p : ker) {
        auto x = augmented(LocalizedElement(l, p));
        if (!x.is_zero()) gens.push_back(std::move(x));
    }
    (void)c;
    return SuperIdeal(alg, std::move(gens));
}

/// The factorization GL(V)_f ≅ U × S and its inverse, the multiplication.
struct LeviFactorization {
    std::size_t m = 0, n = 0, s = 0, t = 0;
    AlgebraPtr big;   // K[GL(m|n)] localized at det A, det D, det A11, det D11
    AlgebraPtr u;     // K[U]: the lower-left block X
    AlgebraPtr stab;  // K[S]: block upper-triangular matrices
    TensorSuperalgebra us;
    SuperalgebraMorphism multiplication;  // K[GL]_f -> K[U] ⊗ K[S]
    SuperalgebraMorphism psi;             // K[U] ⊗ K[S] -> K[GL]_f
};

namespace detail
{

inline std::string entry_name(const std::string &prefix, std::size_t i, std::size_t j, std::size_t size)
{
    return prefix + gl_name(i + 1, j + 1, size).substr(1);
}

inline void push_unique(std::vector<SuperPolynomial> &dens, const SuperPolynomial &d)
{
    if (d.is_constant()) return;
    for (const auto &e : dens) {
        if (e == d) return;
    }
    dens.push_back(d);
}

} // namespace detail

/// Builds both comorphisms of the factorization for GL(m|n) with the
/// stabilized subspace spanned by the first s even and first t odd vectors.
inline LeviFactorization levi_factorization(std::size_t m, std::size_t n, std::size_t s, std::size_t t)
{
    if (s > m || t > n || m + n == 0) throw std::invalid_argument("need s <= m, t <= n");
    const std::size_t size = m + n;
    auto first = [&](std::size_t i) { return i < m ? i < s : i - m < t; };
    auto odd = [&](std::size_t i, std::size_t j) { return (i < m) != (j < m); };
    LeviFactorization lf;
    lf.m = m;
    lf.n = n;
    lf.s = s;
    lf.t = t;

    // Index lists of the two parts, even indices first.
    std::vector<std::size_t> p1, p2;
    for (std::size_t i = 0; i < size; ++i) (first(i) ? p1 : p2).push_back(i);
    const std::size_t p1_even = s, p2_even = m - s;

    auto plain_gl = gl_algebra(m, n);
    using detail::Matrix;
    auto sub = [](const Matrix &x, const std::vector<std::size_t> &rows, const std::vector<std::size_t> &cols) {
        Matrix out;
        for (auto r : rows) {
            std::vector<LocalizedElement> row;
            for (auto c : cols) row.push_back(x[r][c]);
            out.push_back(std::move(row));
        }
        return out;
    };
    auto even_part = [](const std::vector<std::size_t> &idx, std::size_t bound, bool even) {
        std::vector<std::size_t> out;
        for (auto i : idx) {
            if ((i < bound) == even) out.push_back(i);
        }
        return out;
    };

    // K[GL]_f.
    {
        Matrix x(size);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) x[i].push_back(LocalizedElement::generator(plain_gl, gl_name(i + 1, j + 1, size)));
        }
        auto plain = make_algebra(plain_gl->free());
        Matrix xp(size);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) xp[i].push_back(LocalizedElement::generator(plain, gl_name(i + 1, j + 1, size)));
        }
        std::vector<SuperPolynomial> dens;
        for (const auto &d : plain_gl->denominators()) detail::push_unique(dens, d);
        const auto a11 = even_part(p1, m, true), d11 = even_part(p1, m, false);
        if (!a11.empty()) detail::push_unique(dens, detail::determinant(sub(xp, a11, a11), plain).numerator());
        if (!d11.empty()) detail::push_unique(dens, detail::determinant(sub(xp, d11, d11), plain).numerator());
        lf.big = make_algebra(plain_gl->free(), {}, std::move(dens), "GL_f");
    }

    // K[U]: entries (i, j), i in part 2, j in part 1.
    {
        std::vector<std::string> even, oddv;
        for (auto i : p2) {
            for (auto j : p1) (odd(i, j) ? oddv : even).push_back(detail::entry_name("x", i, j, size));
        }
        lf.u = make_free_algebra(std::move(even), std::move(oddv), "U");
    }

    // K[S]: entries (i, j) except i in part 2, j in part 1; even diagonal
    // blocks inverted.
    {
        std::vector<std::string> even, oddv;
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                if (!first(i) && first(j)) continue;
                (odd(i, j) ? oddv : even).push_back(detail::entry_name("s", i, j, size));
            }
        }
        auto ring = make_free_ring(std::move(even), std::move(oddv));
        auto plain = make_algebra(ring);
        auto entry = [&](std::size_t i, std::size_t j) {
            return LocalizedElement::generator(plain, detail::entry_name("s", i, j, size));
        };
        std::vector<SuperPolynomial> dens;
        for (const auto &blk : {even_part(p1, m, true), even_part(p2, m, true), even_part(p1, m, false),
                                even_part(p2, m, false)}) {
            if (blk.empty()) continue;
            Matrix y;
            for (auto i : blk) {
                std::vector<LocalizedElement> row;
                for (auto j : blk) row.push_back(entry(i, j));
                y.push_back(std::move(row));
            }
            detail::push_unique(dens, detail::determinant(y, plain).numerator());
        }
        lf.stab = make_algebra(ring, {}, std::move(dens), "S");
    }
    lf.us = TensorSuperalgebra({lf.u, lf.stab});
    const auto &amb = lf.us.ambient();

    // Multiplication: a_ij -> Σ_k u_ik ⊗ s_kj with u = [[E, 0], [X, E]].
    {
        auto u_entry = [&](std::size_t i, std::size_t k) {
            if (first(i) || !first(k)) return LocalizedElement::constant(amb, Rational(i == k ? 1 : 0));
            return lf.us.embed(0, LocalizedElement::generator(lf.u, detail::entry_name("x", i, k, size)));
        };
        auto s_entry = [&](std::size_t k, std::size_t j) {
            if (!first(k) && first(j)) return LocalizedElement(amb);
            return lf.us.embed(1, LocalizedElement::generator(lf.stab, detail::entry_name("s", k, j, size)));
        };
        std::vector<LocalizedElement> images(lf.big->num_generators());
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                std::vector<LocalizedElement> parts;
                for (std::size_t k = 0; k < size; ++k) {
                    auto a = u_entry(i, k);
                    if (a.is_zero()) continue;
                    auto b = s_entry(k, j);
                    if (b.is_zero()) continue;
                    parts.push_back(a * b);
                }
                images[lf.big->free()->require(gl_name(i + 1, j + 1, size))] = sum_localized(amb, parts);
            }
        }
        lf.multiplication = SuperalgebraMorphism(lf.big, amb, std::move(images));
    }

    // ψ: P = g11, Q = g12, X = g21 g11^{-1}, R = g22 - X g12.
    {
        Matrix g(size);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) g[i].push_back(LocalizedElement::generator(lf.big, gl_name(i + 1, j + 1, size)));
        }
        const auto g11 = sub(g, p1, p1), g12 = sub(g, p1, p2), g21 = sub(g, p2, p1), g22 = sub(g, p2, p2);
        const auto g11inv = detail::invert_supermatrix(g11, p1_even, lf.big);
        const auto x = detail::mat_mul(g21, g11inv, lf.big);
        const auto r = detail::mat_sub(g22, detail::mat_mul(x, g12, lf.big));
        (void)p2_even;
        std::vector<LocalizedElement> images(amb->num_generators());
        for (std::size_t a = 0; a < p2.size(); ++a) {
            for (std::size_t b = 0; b < p1.size(); ++b) {
                const auto v = lf.u->free()->require(detail::entry_name("x", p2[a], p1[b], size));
                images[lf.us.ambient_variable(0, v)] = x[a][b];
            }
        }
        auto pos = [](const std::vector<std::size_t> &idx, std::size_t i) {
            return static_cast<std::size_t>(std::find(idx.begin(), idx.end(), i) - idx.begin());
        };
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                if (!first(i) && first(j)) continue;
                const auto v = lf.stab->free()->require(detail::entry_name("s", i, j, size));
                LocalizedElement val = first(i) ? g[i][j] : r[pos(p2, i)][pos(p2, j)];
                images[lf.us.ambient_variable(1, v)] = std::move(val);
            }
        }
        lf.psi = SuperalgebraMorphism(amb, lf.big, std::move(images));
    }
    return lf;
}

/// ψ* ∘ mult* = id on K[GL]_f and mult* ∘ ψ* = id on K[U] ⊗ K[S].
inline CheckReport levi_psi_check(std::size_t m, std::size_t n, std::size_t s, std::size_t t)
{
    const auto lf = levi_factorization(m, n, s, t);
    CheckReport rep;
    const auto there_back = compose(lf.psi, lf.multiplication);
    for (std::size_t v = 0; v < lf.big->num_generators(); ++v) {
        const auto x = LocalizedElement::generator(lf.big, v);
        const bool ok = there_back.image(v) == x;
        const auto &nm = lf.big->free()->name(v);
        rep.add("psi after multiplication " + nm, ok, ok ? "" : detail::describe(nm, there_back.image(v), x));
    }
    const auto back_there = compose(lf.multiplication, lf.psi);
    for (std::size_t v = 0; v < lf.us.ambient()->num_generators(); ++v) {
        const auto x = LocalizedElement::generator(lf.us.ambient(), v);
        const bool ok = back_there.image(v) == x;
        const auto &nm = lf.us.ambient()->free()->name(v);
        rep.add("multiplication after psi " + nm, ok, ok ? "" : detail::describe(nm, back_there.image(v), x));
    }
    return rep;
}

/// The Levi subgroup L = L_{m, n-1} of GL(m|n) presented with fewer
/// variables, together with π: K[G] -> K[L] and τ = (id ⊗ π)Δ.
struct LeviSubgroup {
    HopfPtr group;
    AlgebraPtr levi;
    SuperalgebraMorphism projection;
    TensorSuperalgebra tensor;
    SuperalgebraMorphism tau;
    SuperIdeal ideal;
};

inline LeviSubgroup levi_subgroup(std::size_t m, std::size_t n)
{
    if (n == 0 || m + n < 2) throw std::invalid_argument("need n >= 1 and m + n >= 2");
    const std::size_t size = m + n, last = size - 1;
    LeviSubgroup ls;
    ls.group = gl_supergroup(m, n);
    const auto &g = *ls.group;
    const auto &ring = *g.algebra()->free();
    auto killed = [&](std::size_t i, std::size_t j) { return (i == last) != (j == last); };
    std::vector<std::string> even, odd;
    for (std::size_t v = 0; v < ring.num_vars(); ++v) {
        const auto &nm = ring.name(v);
        bool drop = false;
        for (std::size_t i = 0; i < size && !drop; ++i) {
            for (std::size_t j = 0; j < size && !drop; ++j) drop = killed(i, j) && gl_name(i + 1, j + 1, size) == nm;
        }
        if (!drop) (ring.parity(v) == Parity::even ? even : odd).push_back(nm);
    }
    auto lring = make_free_ring(even, odd);
    auto plain = make_algebra(lring);
    std::vector<LocalizedElement> proj_plain;
    std::vector<LocalizedElement> ideal;
    for (std::size_t v = 0; v < ring.num_vars(); ++v) {
        const auto &nm = ring.name(v);
        if (lring->index_of(nm)) {
            proj_plain.push_back(LocalizedElement::generator(plain, nm));
        } else {
            proj_plain.push_back(LocalizedElement(plain));
            ideal.push_back(g.generator(v));
        }
    }
    std::vector<SuperPolynomial> dens;
    for (const auto &d : g.algebra()->denominators()) {
        SuperPolynomial acc(lring);
        for (const auto &[mono, c] : d.terms()) {
            SuperPolynomial term = SuperPolynomial::constant(lring, c);
            for (std::size_t v = 0; v < ring.num_vars() && !term.is_zero(); ++v) {
                const auto e = mono.exponent(v);
                if (e) term *= proj_plain[v].numerator().pow(e);
            }
            acc += term;
        }
        dens.push_back(acc);
    }
    ls.levi = make_algebra(lring, {}, std::move(dens), "L");
    std::vector<LocalizedElement> proj;
    for (const auto &p : proj_plain) proj.emplace_back(ls.levi, SuperPolynomial(lring, p.numerator().terms()));
    ls.projection = SuperalgebraMorphism(g.algebra(), ls.levi, std::move(proj));
    ls.tensor = TensorSuperalgebra({g.algebra(), ls.levi});
    const auto idpi =
        tensor_morphism(g.tensor2(), ls.tensor, {SuperalgebraMorphism::identity(g.algebra()), ls.projection});
    ls.tau = compose(idpi, g.comul());
    ls.ideal = SuperIdeal(g.algebra(), std::move(ideal));
    return ls;
}

/// x_ij = a_{i,N} S(a_{N,j}) are coinvariant, a_{i,N} = Σ_j x_ij a_{j,N}
/// and S(a_{N,j}) = Σ_i S(a_{N,i}) x_ij hold exactly, x_NN - 1 ∈ I_L by
/// membership at bound d, and every generator of I_L has an exact
/// certificate in K[G]R⁺.
inline CheckReport levi_invariants_check(std::size_t m, std::size_t n, unsigned d, bool membership = true)
{
    const auto ls = levi_subgroup(m, n);
    const auto &g = *ls.group;
    const std::size_t size = m + n, last = size - 1;
    auto a = [&](std::size_t i, std::size_t j) { return g.generator(gl_name(i + 1, j + 1, size)); };
    std::vector<std::vector<LocalizedElement>> x(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) x[i].push_back(a(i, last) * g.s(a(last, j)));
    }
    CheckReport rep;
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            const std::string tag = "x" + std::to_string(i + 1) + std::to_string(j + 1);
            const auto lhs = ls.tau.apply(x[i][j]);
            const auto rhs = ls.tensor.embed(0, x[i][j]);
            const bool ok = lhs == rhs;
            rep.add("coinvariance " + tag, ok, ok ? "" : detail::describe(tag, lhs, rhs));
        }
    }
    for (std::size_t i = 0; i < size; ++i) {
        std::vector<LocalizedElement> parts, sparts;
        for (std::size_t j = 0; j < size; ++j) {
            parts.push_back(x[i][j] * a(j, last));
            sparts.push_back(g.s(a(last, j)) * x[j][i]);
        }
        const auto lhs = sum_localized(g.algebra(), parts);
        const bool ok = lhs == a(i, last);
        const std::string tag = gl_name(i + 1, size, size);
        rep.add("identity " + tag, ok, ok ? "" : detail::describe(tag, lhs, a(i, last)));
        const auto slhs = sum_localized(g.algebra(), sparts);
        const bool sok = slhs == g.s(a(last, i));
        rep.add("identity S(" + gl_name(size, i + 1, size) + ")", sok, sok ? "" : to_string(slhs));
    }
    if (membership) {
        MembershipOptions opt;
        opt.certificate = false;
        const auto corner = x[last][last] - LocalizedElement::constant(g.algebra(), Rational(1));
        rep.add("x_NN - 1 in I_L", ideal_membership(corner, ls.ideal, std::max<int>(static_cast<int>(d), corner.degree()), opt).member);
    }
    // Exact certificates over the generators x_ik of R+ with k != N:
    // a_iN = Σ_j x_ij a_jN and a_Nj = Σ_{i, k != N} S(a_Ni) x_ik (a_kN a_Nj - a_NN a_kj).
    for (std::size_t i = 0; i < last; ++i) {
        std::vector<LocalizedElement> parts;
        for (std::size_t j = 0; j < size; ++j) parts.push_back(x[i][j] * a(j, last));
        const auto f = a(i, last);
        const bool ok = sum_localized(g.algebra(), parts) == f;
        rep.add("I_L in K[G]R+ : " + to_string(f), ok, ok ? "" : to_string(f));
    }
    for (std::size_t j = 0; j < last; ++j) {
        std::vector<LocalizedElement> parts;
        for (std::size_t k = 0; k < last; ++k) {
            const auto tail = a(k, last) * a(last, j) - a(last, last) * a(k, j);
            for (std::size_t i = 0; i < size; ++i) parts.push_back(g.s(a(last, i)) * x[i][k] * tail);
        }
        const auto f = a(last, j);
        const bool ok = sum_localized(g.algebra(), parts) == f;
        rep.add("I_L in K[G]R+ : " + to_string(f), ok, ok ? "" : to_string(f));
    }
    return rep;
}

} // namespace superhopf

#endif
