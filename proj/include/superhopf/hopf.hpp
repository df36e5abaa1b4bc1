#ifndef SUPERHOPF_HOPF_HPP
#define SUPERHOPF_HOPF_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <superhopf/presentation.hpp>

namespace superhopf
{

class NotHopfIdeal : public std::runtime_error
{
public:
    NotHopfIdeal(const std::string &what, std::string witness) : std::runtime_error(what), m_witness(std::move(witness))
    {
    }
    const std::string &witness() const { return m_witness; }

private:
    std::string m_witness;
};

/// Outcome of one verification step.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

/// Ordered list of check outcomes; passes iff every entry passes.
struct CheckReport {
    std::vector<CheckResult> entries;

    bool pass() const
    {
        for (const auto &e : entries) {
            if (!e.pass) return false;
        }
        return true;
    }

    const CheckResult *first_failure() const
    {
        for (const auto &e : entries) {
            if (!e.pass) return &e;
        }
        return nullptr;
    }

    void add(std::string name, bool ok, std::string witness = {})
    {
        entries.push_back({std::move(name), ok, std::move(witness)});
    }

    void append(const CheckReport &o) { entries.insert(entries.end(), o.entries.begin(), o.entries.end()); }
};

/// Equality in the algebra: exact when the algebra has only monomial
/// relations, otherwise via membership of the difference at bound d.
inline bool equal_in_algebra(const LocalizedElement &a, const LocalizedElement &b, unsigned d = 4)
{
    if (a == b) return true;
    if (!a.algebra()->has_general_relations()) return false;
    const auto diff = a - b;
    MembershipOptions opt;
    opt.certificate = false;
    return ideal_membership(diff, SuperIdeal(a.algebra(), {}), std::max<int>(static_cast<int>(d), diff.degree()), opt)
        .member;
}

/// Hopf superalgebra with structure maps given on generators.
class HopfSuperalgebra
{
public:
    HopfSuperalgebra(AlgebraPtr alg, std::vector<LocalizedElement> comul, std::vector<LocalizedElement> counit,
                     std::vector<LocalizedElement> antipode, std::string name = {})
        : m_alg(std::move(alg)), m_t2({m_alg, m_alg}), m_t3({m_alg, m_alg, m_alg}), m_name(std::move(name))
    {
        m_comul = SuperalgebraMorphism(m_alg, m_t2.ambient(), rebase(m_t2.ambient(), comul));
        m_counit = SuperalgebraMorphism(m_alg, ground_algebra(), rebase(ground_algebra(), counit));
        m_antipode = SuperalgebraMorphism(m_alg, m_alg, rebase(m_alg, antipode));
        for (const auto &c : m_counit.images()) {
            if (!c.constant_value()) throw InvalidMorphism("counit images must be constants");
        }
    }

    /// Build from expression strings; comultiplication images use the names
    /// of A ⊗ A (shared names are qualified as `x@1`, `x@2`).
    static std::shared_ptr<const HopfSuperalgebra> from_strings(const AlgebraPtr &alg,
                                                                const std::vector<std::string> &comul,
                                                                const std::vector<std::string> &counit,
                                                                const std::vector<std::string> &antipode,
                                                                std::string name = {})
    {
        TensorSuperalgebra t2({alg, alg});
        std::vector<LocalizedElement> c, e, s;
        for (const auto &x : comul) c.push_back(parse_element(t2.ambient(), x));
        for (const auto &x : counit) e.push_back(parse_element(ground_algebra(), x));
        for (const auto &x : antipode) s.push_back(parse_element(alg, x));
        return std::make_shared<const HopfSuperalgebra>(alg, std::move(c), std::move(e), std::move(s), std::move(name));
    }

    const AlgebraPtr &algebra() const { return m_alg; }
    const TensorSuperalgebra &tensor2() const { return m_t2; }
    const TensorSuperalgebra &tensor3() const { return m_t3; }
    const SuperalgebraMorphism &comul() const { return m_comul; }
    const SuperalgebraMorphism &counit() const { return m_counit; }
    const SuperalgebraMorphism &antipode() const { return m_antipode; }
    const std::string &name() const { return m_name; }

    LocalizedElement delta(const LocalizedElement &f) const { return m_comul.apply(f); }
    Rational epsilon(const LocalizedElement &f) const { return *m_counit.apply(f).constant_value(); }
    LocalizedElement s(const LocalizedElement &f) const { return m_antipode.apply(f); }

    LocalizedElement generator(std::size_t v) const { return LocalizedElement::generator(m_alg, v); }
    LocalizedElement generator(std::string_view n) const { return LocalizedElement::generator(m_alg, n); }
    LocalizedElement element(std::string_view text) const { return parse_element(m_alg, text); }

    /// Counit values of the generators (the identity point).
    std::vector<Rational> identity_point() const { return rational_point(m_counit); }

    /// M = ker ε generated by x - ε(x).
    SuperIdeal augmentation_ideal() const
    {
        std::vector<LocalizedElement> gens;
        const auto c = identity_point();
        for (std::size_t v = 0; v < m_alg->num_generators(); ++v) {
            gens.push_back(generator(v) - LocalizedElement::constant(m_alg, c[v]));
        }
        return SuperIdeal(m_alg, std::move(gens));
    }

    /// x ⊗ 1 and 1 ⊗ x style embeddings into A ⊗ A.
    LocalizedElement left(const LocalizedElement &x) const { return m_t2.embed(0, x); }
    LocalizedElement right(const LocalizedElement &x) const { return m_t2.embed(1, x); }

private:
    static std::vector<LocalizedElement> rebase(const AlgebraPtr &target, const std::vector<LocalizedElement> &xs)
    {
        std::vector<LocalizedElement> out;
        for (const auto &x : xs) {
            if (same_algebra(x.algebra(), target)) {
                out.push_back(x);
            } else {
                out.emplace_back(target, SuperPolynomial(target->free(), x.numerator().terms()),
                                 x.denominator_exponents());
            }
        }
        return out;
    }

    AlgebraPtr m_alg;
    TensorSuperalgebra m_t2;
    TensorSuperalgebra m_t3;
    SuperalgebraMorphism m_comul;
    SuperalgebraMorphism m_counit;
    SuperalgebraMorphism m_antipode;
    std::string m_name;
};

using HopfPtr = std::shared_ptr<const HopfSuperalgebra>;

namespace detail
{

// Morphism between tensor products sending factor k of `inner` to factor
// offset + k of `outer`.
inline SuperalgebraMorphism block_inclusion(const TensorSuperalgebra &inner, const TensorSuperalgebra &outer,
                                            std::size_t offset)
{
    std::vector<LocalizedElement> images(inner.ambient()->num_generators());
    for (std::size_t k = 0; k < inner.size(); ++k) {
        for (std::size_t v = 0; v < inner.factor(k)->num_generators(); ++v) {
            images[inner.ambient_variable(k, v)] =
                LocalizedElement::generator(outer.ambient(), outer.ambient_variable(offset + k, v));
        }
    }
    return SuperalgebraMorphism(inner.ambient(), outer.ambient(), std::move(images));
}

inline std::string describe(const std::string &gen, const LocalizedElement &lhs, const LocalizedElement &rhs)
{
    return gen + ": " + to_string(lhs) + " != " + to_string(rhs);
}

} // namespace detail

/// Δ ⊗ id and id ⊗ Δ as morphisms A ⊗ A -> A ⊗ A ⊗ A.
inline std::pair<SuperalgebraMorphism, SuperalgebraMorphism> coassociativity_maps(const HopfSuperalgebra &h)
{
    const auto &t2 = h.tensor2();
    const auto &t3 = h.tensor3();
    const auto i01 = detail::block_inclusion(t2, t3, 0);
    const auto i12 = detail::block_inclusion(t2, t3, 1);
    const auto &a = h.algebra();
    std::vector<LocalizedElement> left(t2.ambient()->num_generators()), right(t2.ambient()->num_generators());
    for (std::size_t v = 0; v < a->num_generators(); ++v) {
        const auto d = h.comul().image(v);
        left[t2.ambient_variable(0, v)] = i01.apply(d);
        left[t2.ambient_variable(1, v)] = LocalizedElement::generator(t3.ambient(), t3.ambient_variable(2, v));
        right[t2.ambient_variable(0, v)] = LocalizedElement::generator(t3.ambient(), t3.ambient_variable(0, v));
        right[t2.ambient_variable(1, v)] = i12.apply(d);
    }
    return {SuperalgebraMorphism(t2.ambient(), t3.ambient(), std::move(left)),
            SuperalgebraMorphism(t2.ambient(), t3.ambient(), std::move(right))};
}

inline CheckReport check_coassociativity(const HopfSuperalgebra &h, unsigned d = 4)
{
    CheckReport rep;
    const auto [dl, dr] = coassociativity_maps(h);
    const auto &a = h.algebra();
    for (std::size_t v = 0; v < a->num_generators(); ++v) {
        const auto &img = h.comul().image(v);
        const auto lhs = dl.apply(img), rhs = dr.apply(img);
        const bool ok = equal_in_algebra(lhs, rhs, d);
        rep.add("coassociativity " + a->free()->name(v), ok,
                ok ? std::string{} : detail::describe(a->free()->name(v), lhs, rhs));
    }
    return rep;
}

/// Morphisms A ⊗ A -> A applying `first` to slot 0 and `second` to slot 1
/// (each given as images of generators), followed by multiplication.
inline SuperalgebraMorphism slotwise_to_algebra(const HopfSuperalgebra &h, const std::vector<LocalizedElement> &first,
                                                const std::vector<LocalizedElement> &second)
{
    const auto &t2 = h.tensor2();
    std::vector<LocalizedElement> images(t2.ambient()->num_generators());
    for (std::size_t v = 0; v < h.algebra()->num_generators(); ++v) {
        images[t2.ambient_variable(0, v)] = first[v];
        images[t2.ambient_variable(1, v)] = second[v];
    }
    return SuperalgebraMorphism(t2.ambient(), h.algebra(), std::move(images));
}

inline CheckReport check_counit(const HopfSuperalgebra &h, unsigned d = 4)
{
    CheckReport rep;
    const auto &a = h.algebra();
    const auto c = h.identity_point();
    std::vector<LocalizedElement> eps, id;
    for (std::size_t v = 0; v < a->num_generators(); ++v) {
        eps.push_back(LocalizedElement::constant(a, c[v]));
        id.push_back(h.generator(v));
    }
    const auto left = slotwise_to_algebra(h, eps, id);
    const auto right = slotwise_to_algebra(h, id, eps);
    for (std::size_t v = 0; v < a->num_generators(); ++v) {
        const auto g = h.generator(v);
        const auto l = left.apply(h.comul().image(v)), r = right.apply(h.comul().image(v));
        const bool okl = equal_in_algebra(l, g, d), okr = equal_in_algebra(r, g, d);
        rep.add("counit left " + a->free()->name(v), okl, okl ? "" : detail::describe(a->free()->name(v), l, g));
        rep.add("counit right " + a->free()->name(v), okr, okr ? "" : detail::describe(a->free()->name(v), r, g));
    }
    return rep;
}

inline CheckReport check_antipode(const HopfSuperalgebra &h, unsigned d = 4)
{
    CheckReport rep;
    const auto &a = h.algebra();
    const auto c = h.identity_point();
    std::vector<LocalizedElement> s, id;
    for (std::size_t v = 0; v < a->num_generators(); ++v) {
        s.push_back(h.antipode().image(v));
        id.push_back(h.generator(v));
    }
    const auto left = slotwise_to_algebra(h, s, id);
    const auto right = slotwise_to_algebra(h, id, s);
    for (std::size_t v = 0; v < a->num_generators(); ++v) {
        const auto want = LocalizedElement::constant(a, c[v]);
        const auto l = left.apply(h.comul().image(v)), r = right.apply(h.comul().image(v));
        const bool okl = equal_in_algebra(l, want, d), okr = equal_in_algebra(r, want, d);
        rep.add("antipode left " + a->free()->name(v), okl, okl ? "" : detail::describe(a->free()->name(v), l, want));
        rep.add("antipode right " + a->free()->name(v), okr, okr ? "" : detail::describe(a->free()->name(v), r, want));
    }
    return rep;
}

/// S(S(g)) = g on all generators.
inline CheckReport check_antipode_involution(const HopfSuperalgebra &h, unsigned d = 4)
{
    CheckReport rep;
    const auto ss = compose(h.antipode(), h.antipode());
    for (std::size_t v = 0; v < h.algebra()->num_generators(); ++v) {
        const auto g = h.generator(v);
        const bool ok = equal_in_algebra(ss.image(v), g, d);
        const auto &n = h.algebra()->free()->name(v);
        rep.add("antipode order two " + n, ok, ok ? "" : detail::describe(n, ss.image(v), g));
    }
    return rep;
}

inline CheckReport check_hopf_axioms(const HopfSuperalgebra &h, unsigned d = 4)
{
    CheckReport rep = check_coassociativity(h, d);
    rep.append(check_counit(h, d));
    rep.append(check_antipode(h, d));
    return rep;
}

namespace detail
{

using Matrix = std::vector<std::vector<LocalizedElement>>;

inline Matrix mat_mul(const Matrix &x, const Matrix &y, const AlgebraPtr &alg)
{
    const std::size_t r = x.size(), c = y.empty() ? 0 : y[0].size(), inner = y.size();
    Matrix out(r, std::vector<LocalizedElement>(c, LocalizedElement(alg)));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            std::vector<LocalizedElement> parts;
            for (std::size_t k = 0; k < inner; ++k) parts.push_back(x[i][k] * y[k][j]);
            out[i][j] = sum_localized(alg, parts);
        }
    }
    return out;
}

inline Matrix mat_sub(const Matrix &x, const Matrix &y)
{
    Matrix out = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x[i].size(); ++j) out[i][j] = x[i][j] - y[i][j];
    }
    return out;
}

inline Matrix mat_neg(const Matrix &x)
{
    Matrix out = x;
    for (auto &row : out) {
        for (auto &e : row) e = -e;
    }
    return out;
}

// Determinant of a square matrix with even (commuting) entries.
inline LocalizedElement determinant(const Matrix &x, const AlgebraPtr &alg)
{
    const std::size_t n = x.size();
    if (n == 0) return LocalizedElement::constant(alg, Rational(1));
    if (n == 1) return x[0][0];
    std::vector<LocalizedElement> parts;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<LocalizedElement> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) row.push_back(x[i][k]);
            }
            minor.push_back(std::move(row));
        }
        auto t = x[0][j] * determinant(minor, alg);
        parts.push_back((j % 2) ? -t : t);
    }
    return sum_localized(alg, parts);
}

// Inverse of an even matrix by the adjugate; det^{-1} from invert_unit or a
// supplied value.
inline Matrix invert_even(const Matrix &x, const AlgebraPtr &alg,
                          std::optional<LocalizedElement> det_inverse = std::nullopt)
{
    const std::size_t n = x.size();
    const LocalizedElement dinv = det_inverse ? *det_inverse : invert_unit(determinant(x, alg));
    Matrix out(n, std::vector<LocalizedElement>(n, LocalizedElement(alg)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<LocalizedElement> row;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c != i) row.push_back(x[r][c]);
                }
                minor.push_back(std::move(row));
            }
            auto cof = determinant(minor, alg) * dinv;
            out[i][j] = ((i + j) % 2) ? -cof : cof;
        }
    }
    return out;
}

inline Matrix block(const Matrix &x, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1)
{
    Matrix out;
    for (std::size_t i = r0; i < r1; ++i) out.emplace_back(x[i].begin() + static_cast<std::ptrdiff_t>(c0),
                                                           x[i].begin() + static_cast<std::ptrdiff_t>(c1));
    return out;
}

/// Inverse of a supermatrix whose first m rows and columns are even, by
/// the block formula with Schur complements. Optional inverses of det A and
/// det D can be supplied; otherwise they come from invert_unit.
inline Matrix invert_supermatrix(const Matrix &x, std::size_t m, const AlgebraPtr &alg,
                                 std::optional<LocalizedElement> det_a_inv = std::nullopt,
                                 std::optional<LocalizedElement> det_d_inv = std::nullopt)
{
    const std::size_t s = x.size();
    if (m == s) return invert_even(x, alg, det_a_inv);
    if (m == 0) return invert_even(x, alg, det_d_inv);
    const auto a = block(x, 0, m, 0, m), b = block(x, 0, m, m, s);
    const auto c = block(x, m, s, 0, m), d = block(x, m, s, m, s);
    const auto ainv = invert_even(a, alg, det_a_inv);
    const auto dinv = invert_even(d, alg, det_d_inv);
    const auto sa = invert_even(mat_sub(a, mat_mul(mat_mul(b, dinv, alg), c, alg)), alg);
    const auto sd = invert_even(mat_sub(d, mat_mul(mat_mul(c, ainv, alg), b, alg)), alg);
    const auto sb = mat_neg(mat_mul(mat_mul(ainv, b, alg), sd, alg));
    const auto sc = mat_neg(mat_mul(mat_mul(dinv, c, alg), sa, alg));
    Matrix inv(s, std::vector<LocalizedElement>(s, LocalizedElement(alg)));
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            if (i < m && j < m) inv[i][j] = sa[i][j];
            else if (i < m) inv[i][j] = sb[i][j - m];
            else if (j < m) inv[i][j] = sc[i - m][j];
            else inv[i][j] = sd[i - m][j - m];
        }
    }
    return inv;
}

} // namespace detail

/// Name of the (i, j) generator of GL(m|n), indices from 1.
inline std::string gl_name(std::size_t i, std::size_t j, std::size_t size)
{
    if (size <= 9) return "a" + std::to_string(i) + std::to_string(j);
    return "a" + std::to_string(i) + "_" + std::to_string(j);
}

/// Coordinate superalgebra K[GL(m|n)] with denominators det A, det D.
inline AlgebraPtr gl_algebra(std::size_t m, std::size_t n)
{
    const std::size_t s = m + n;
    std::vector<std::string> even, odd;
    for (std::size_t i = 1; i <= s; ++i) {
        for (std::size_t j = 1; j <= s; ++j) {
            const bool odd_entry = (i > m) != (j > m);
            (odd_entry ? odd : even).push_back(gl_name(i, j, s));
        }
    }
    auto ring = make_free_ring(std::move(even), std::move(odd));
    auto plain = make_algebra(ring);
    detail::Matrix x(s, std::vector<LocalizedElement>());
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) x[i].push_back(LocalizedElement::generator(plain, gl_name(i + 1, j + 1, s)));
    }
    std::vector<SuperPolynomial> dens;
    if (m > 0) dens.push_back(detail::determinant(detail::block(x, 0, m, 0, m), plain).numerator());
    if (n > 0) dens.push_back(detail::determinant(detail::block(x, m, s, m, s), plain).numerator());
    return make_algebra(ring, {}, std::move(dens), "GL(" + std::to_string(m) + "|" + std::to_string(n) + ")");
}

/// GL(m|n): Δ(a_ij) = Σ_k a_ik ⊗ a_kj, ε(a_ij) = δ_ij, S(X) = X^{-1} by the
/// block formula with Schur complements.
inline HopfPtr gl_supergroup(std::size_t m, std::size_t n)
{
    if (m + n == 0) throw std::invalid_argument("GL(0|0) is not supported");
    const std::size_t s = m + n;
    auto alg = gl_algebra(m, n);
    TensorSuperalgebra t2({alg, alg});
    auto gen = [&](std::size_t i, std::size_t j) { return LocalizedElement::generator(alg, gl_name(i + 1, j + 1, s)); };
    const auto &ring = *alg->free();
    std::vector<LocalizedElement> comul(ring.num_vars()), counit(ring.num_vars()), antipode(ring.num_vars());
    detail::Matrix x(s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) x[i].push_back(gen(i, j));
    }
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            const auto v = ring.require(gl_name(i + 1, j + 1, s));
            std::vector<LocalizedElement> parts;
            for (std::size_t k = 0; k < s; ++k) parts.push_back(t2.pure({gen(i, k), gen(k, j)}));
            comul[v] = sum_localized(t2.ambient(), parts);
            counit[v] = LocalizedElement::constant(ground_algebra(), Rational(i == j ? 1 : 0));
        }
    }
    std::optional<LocalizedElement> ainv, dinv;
    if (m > 0) ainv = LocalizedElement::denominator_power(alg, 0, 1);
    if (n > 0) dinv = LocalizedElement::denominator_power(alg, m > 0 ? 1 : 0, 1);
    const auto inv = detail::invert_supermatrix(x, m, alg, ainv, dinv);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) antipode[ring.require(gl_name(i + 1, j + 1, s))] = inv[i][j];
    }
    return std::make_shared<const HopfSuperalgebra>(alg, std::move(comul), std::move(counit), std::move(antipode),
                                                    alg->name());
}

/// G_a = SSp K[x], x primitive.
inline HopfPtr additive_group(const std::string &var = "x")
{
    auto alg = make_free_algebra({var}, {}, "Ga");
    return HopfSuperalgebra::from_strings(alg, {var + "@1 + " + var + "@2"}, {"0"}, {"-" + var}, "Ga");
}

/// G_a^- = SSp K[t] with |t| = 1, t primitive.
inline HopfPtr odd_additive_group(const std::string &var = "t")
{
    auto alg = make_free_algebra({}, {var}, "Ga-");
    return HopfSuperalgebra::from_strings(alg, {var + "@1 + " + var + "@2"}, {"0"}, {"-" + var}, "Ga-");
}

/// G_m = SSp K[u, u^{-1}], u group-like.
inline HopfPtr multiplicative_group(const std::string &var = "u")
{
    auto ring = make_free_ring({var}, {});
    auto alg = make_algebra(ring, {}, {SuperPolynomial::variable(ring, 0)}, "Gm");
    return HopfSuperalgebra::from_strings(alg, {var + "@1*" + var + "@2"}, {"1"}, {var + "^-1"}, "Gm");
}

inline HopfPtr product_group(const HopfPtr &h1, const HopfPtr &h2);

/// G_m^k with coordinates u1, ..., uk.
inline HopfPtr torus(std::size_t k)
{
    if (k == 0) throw std::invalid_argument("torus of rank zero");
    HopfPtr t = multiplicative_group("u1");
    for (std::size_t i = 2; i <= k; ++i) t = product_group(t, multiplicative_group("u" + std::to_string(i)));
    return t;
}

/// The trivial group SSp K.
inline HopfPtr trivial_group()
{
    return std::make_shared<const HopfSuperalgebra>(ground_algebra(), std::vector<LocalizedElement>{},
                                                    std::vector<LocalizedElement>{}, std::vector<LocalizedElement>{},
                                                    "E");
}

/// H1 × H2 with K[H1 × H2] = K[H1] ⊗ K[H2].
inline HopfPtr product_group(const HopfPtr &h1, const HopfPtr &h2)
{
    TensorSuperalgebra p({h1->algebra(), h2->algebra()});
    auto alg = make_algebra(p.ambient()->free(), p.ambient()->relations(), p.ambient()->denominators(),
                            h1->name() + "x" + h2->name());
    TensorSuperalgebra pp({alg, alg});
    const std::vector<HopfPtr> hs{h1, h2};
    const auto &ring = *alg->free();
    std::vector<LocalizedElement> comul(ring.num_vars()), counit(ring.num_vars()), antipode(ring.num_vars());
    for (std::size_t k = 0; k < 2; ++k) {
        const auto &h = *hs[k];
        // Injection of factor k into the product, then into both tensor legs.
        std::vector<LocalizedElement> inj;
        for (std::size_t v = 0; v < h.algebra()->num_generators(); ++v) {
            inj.push_back(LocalizedElement::generator(alg, p.ambient_variable(k, v)));
        }
        const SuperalgebraMorphism iota(h.algebra(), alg, inj);
        const auto ii = tensor_morphism(h.tensor2(), pp, {iota, iota});
        for (std::size_t v = 0; v < h.algebra()->num_generators(); ++v) {
            const std::size_t av = p.ambient_variable(k, v);
            comul[av] = ii.apply(h.comul().image(v));
            counit[av] = h.counit().image(v);
            antipode[av] = iota.apply(h.antipode().image(v));
        }
    }
    return std::make_shared<const HopfSuperalgebra>(alg, std::move(comul), std::move(counit), std::move(antipode),
                                                    alg->name());
}

/// Hopf superideal check at bound d: ε(I) = 0, S(I) ⊆ I, Δ(I) ⊆ I ⊗ A + A ⊗ I.
/// Returns the first failing generator with a reason.
inline std::optional<std::pair<std::string, std::string>> hopf_ideal_violation(const HopfSuperalgebra &h,
                                                                              const SuperIdeal &ideal, unsigned d)
{
    MembershipOptions opt;
    opt.certificate = false;
    const auto &t2 = h.tensor2();
    std::vector<LocalizedElement> tgens;
    for (const auto &g : ideal.generators) {
        tgens.push_back(t2.embed(0, g));
        tgens.push_back(t2.embed(1, g));
    }
    const SuperIdeal tideal(t2.ambient(), tgens);
    for (const auto &g : ideal.generators) {
        const std::string name = to_string(g);
        if (!is_zero(h.epsilon(g))) return std::make_pair(name, "counit does not vanish");
        const auto sg = h.s(g);
        if (!ideal_membership(sg, ideal, std::max<int>(static_cast<int>(d), sg.degree()), opt).member) {
            return std::make_pair(name, "antipode image not in the ideal");
        }
        const auto dg = h.delta(g);
        if (!ideal_membership(dg, tideal, std::max<int>(static_cast<int>(d), dg.degree()), opt).member) {
            return std::make_pair(name, "comultiplication image not in I(x)A + A(x)I");
        }
    }
    return std::nullopt;
}

/// K[G]/I with the induced structure maps.
inline HopfPtr hopf_quotient(const HopfPtr &h, const SuperIdeal &ideal, unsigned d = 4)
{
    if (auto bad = hopf_ideal_violation(*h, ideal, d)) {
        throw NotHopfIdeal("not a Hopf superideal: " + bad->second, bad->first);
    }
    const auto &old = h->algebra();
    std::vector<SuperPolynomial> rels = old->relations();
    for (const auto &g : ideal.generators) {
        for (Parity p : {Parity::even, Parity::odd}) {
            auto c = g.numerator().component(p);
            if (!c.is_zero()) rels.push_back(c);
        }
    }
    auto alg = make_algebra(old->free(), std::move(rels), old->denominators(), h->name() + "/I");
    return std::make_shared<const HopfSuperalgebra>(alg, h->comul().images(), h->counit().images(),
                                                    h->antipode().images(), alg->name());
}

/// Point g ∈ G(A): a superalgebra morphism K[G] -> A.
struct GroupPoint {
    HopfPtr group;
    SuperalgebraMorphism morphism;

    const AlgebraPtr &target() const { return morphism.target(); }
    LocalizedElement operator()(const LocalizedElement &f) const { return morphism.apply(f); }
};

inline GroupPoint make_point(const HopfPtr &g, const AlgebraPtr &target, const std::vector<std::string> &images)
{
    return {g, SuperalgebraMorphism::from_strings(g->algebra(), target, images)};
}

/// The unit ε_G of G(A).
inline GroupPoint unit_point(const HopfPtr &g, const AlgebraPtr &target)
{
    std::vector<LocalizedElement> images;
    for (const auto &c : g->identity_point()) images.push_back(LocalizedElement::constant(target, c));
    return {g, SuperalgebraMorphism(g->algebra(), target, std::move(images))};
}

/// (g1 g2)(f) = m_A (g1 ⊗ g2) Δ(f).
inline GroupPoint point_convolution(const GroupPoint &g1, const GroupPoint &g2)
{
    if (g1.group != g2.group && !same_algebra(g1.group->algebra(), g2.group->algebra())) {
        throw RingMismatch("points of different groups");
    }
    if (!same_algebra(g1.target(), g2.target())) throw RingMismatch("points with different targets");
    const auto &h = *g1.group;
    const auto &t2 = h.tensor2();
    std::vector<LocalizedElement> images(t2.ambient()->num_generators());
    for (std::size_t v = 0; v < h.algebra()->num_generators(); ++v) {
        images[t2.ambient_variable(0, v)] = g1.morphism.image(v);
        images[t2.ambient_variable(1, v)] = g2.morphism.image(v);
    }
    const SuperalgebraMorphism pair(t2.ambient(), g1.target(), std::move(images));
    return {g1.group, compose(pair, h.comul())};
}

/// g^{-1} = g ∘ S.
inline GroupPoint point_inverse(const GroupPoint &g)
{
    return {g.group, compose(g.morphism, g.group->antipode())};
}

inline bool same_point(const GroupPoint &a, const GroupPoint &b, unsigned d = 4)
{
    for (std::size_t v = 0; v < a.group->algebra()->num_generators(); ++v) {
        if (!equal_in_algebra(a.morphism.image(v), b.morphism.image(v), d)) return false;
    }
    return true;
}

/// A[ε0, ε1] = A ⊗ K[eps0 | eps1] / (eps0^2, eps0 eps1); eps1^2 = 0 structurally.
struct DualNumbers {
    AlgebraPtr base;
    TensorSuperalgebra tensor;

    explicit DualNumbers(AlgebraPtr a) : base(a), tensor({a, dual_parameters()}) {}

    static AlgebraPtr dual_parameters()
    {
        static const AlgebraPtr d = [] {
            auto ring = make_free_ring({"eps0"}, {"eps1"});
            return make_algebra(ring, {parse_polynomial(ring, "eps0^2"), parse_polynomial(ring, "eps0*eps1")}, {},
                                "K[eps0|eps1]");
        }();
        return d;
    }

    const AlgebraPtr &algebra() const { return tensor.ambient(); }
    LocalizedElement eps(Parity p) const
    {
        return tensor.embed(1, LocalizedElement::generator(dual_parameters(), p == Parity::even ? "eps0" : "eps1"));
    }
    LocalizedElement lift(const LocalizedElement &a) const { return tensor.embed(0, a); }

    /// p_A: A[ε0, ε1] -> A killing both parameters.
    SuperalgebraMorphism projection() const
    {
        std::vector<LocalizedElement> images(algebra()->num_generators());
        for (std::size_t v = 0; v < base->num_generators(); ++v) {
            images[tensor.ambient_variable(0, v)] = LocalizedElement::generator(base, v);
        }
        images[tensor.ambient_variable(1, 0)] = LocalizedElement(base);
        images[tensor.ambient_variable(1, 1)] = LocalizedElement(base);
        return SuperalgebraMorphism(algebra(), base, std::move(images));
    }
};

/// The point f -> ε(f) + (-1)^{|a||f|} ε_{|v|+|a|} v(f) a of G(A[ε0, ε1]),
/// where v is a functional on M/M^2 given by its values on the shifted
/// generators and both v and a are homogeneous.
inline GroupPoint lie_point(const HopfPtr &g, const std::vector<Rational> &v, Parity v_parity,
                            const DualNumbers &dual, const LocalizedElement &a)
{
    const auto &ring = *g->algebra()->free();
    if (v.size() != ring.num_vars()) throw std::invalid_argument("functional has wrong length");
    const auto pa = a.is_zero() ? std::optional<Parity>(Parity::even) : a.homogeneous_parity();
    if (!pa) throw std::invalid_argument("coefficient must be homogeneous");
    const auto c = g->identity_point();
    const auto eps = dual.eps(v_parity + *pa);
    const auto lifted = dual.lift(a);
    std::vector<LocalizedElement> images;
    for (std::size_t x = 0; x < ring.num_vars(); ++x) {
        LocalizedElement img = LocalizedElement::constant(dual.algebra(), c[x]);
        if (!is_zero(v[x])) {
            if (ring.parity(x) != v_parity) throw std::invalid_argument("functional is not homogeneous");
            const int sign = koszul(*pa, ring.parity(x));
            img += eps * lifted * Rational(sign) * v[x];
        }
        images.push_back(std::move(img));
    }
    return {g, SuperalgebraMorphism(g->algebra(), dual.algebra(), std::move(images))};
}

} // namespace superhopf

#endif
