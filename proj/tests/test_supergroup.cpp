#include <gtest/gtest.h>

#include <algorithm>

#include <superhopf/supergroup.hpp>

using namespace superhopf;

namespace
{

std::vector<std::string> printed(const std::vector<LocalizedElement> &xs)
{
    std::vector<std::string> out;
    for (const auto &x : xs) out.push_back(to_string(x));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> xs)
{
    std::sort(xs.begin(), xs.end());
    return xs;
}

} // namespace

TEST(Conjugation, AdditiveGroupsAreAbelian)
{
    for (const auto &g : {additive_group(), odd_additive_group(), multiplicative_group()}) {
        const auto &t2 = g->tensor2();
        const auto x = g->generator(0);
        EXPECT_EQ(nu_l(*g, x), t2.embed(0, x)) << g->name();
        EXPECT_EQ(nu_r(*g, x), t2.embed(0, x)) << g->name();
    }
}

TEST(Conjugation, GeneralLinearOneZero)
{
    auto g = gl_supergroup(1, 0);
    EXPECT_EQ(nu_l(*g, g->element("a11")), g->left(g->element("a11")));
}

TEST(Conjugation, MatchesPointwiseConjugation)
{
    // ν_l(f) evaluated at (g, h) is f(h^{-1} g h).
    auto g = gl_supergroup(2, 0);
    auto k = ground_algebra();
    const auto x = make_point(g, k, {"1", "2", "0", "1"});
    const auto y = make_point(g, k, {"3", "1", "1", "1"});
    const auto &t2 = g->tensor2();
    std::vector<LocalizedElement> images(t2.ambient()->num_generators());
    for (std::size_t v = 0; v < 4; ++v) {
        images[t2.ambient_variable(0, v)] = x.morphism.image(v);
        images[t2.ambient_variable(1, v)] = y.morphism.image(v);
    }
    const SuperalgebraMorphism pair(t2.ambient(), k, images);
    const auto conj = point_convolution(point_convolution(point_inverse(y), x), y);
    for (const char *f : {"a11", "a12", "a21", "a22", "a11*a22 - a12*a21"}) {
        EXPECT_EQ(pair.apply(nu_l(*g, g->element(f))), conj(g->element(f))) << f;
    }
}

TEST(Normality, RootsOfUnityAndExtremes)
{
    auto g = gl_supergroup(1, 1);
    auto gm = multiplicative_group();
    const auto mu2 = is_normal(make_subgroup(gm, {"u^2 - 1"}), 4);
    EXPECT_TRUE(mu2.certified());
    EXPECT_TRUE(mu2.nu_agree);

    EXPECT_TRUE(is_normal(trivial_subgroup(g), 3).certified());
    EXPECT_TRUE(is_normal(whole_group(g), 3).certified());
}

TEST(Normality, EvenSubgroupOfOneOneIsNotNormal)
{
    // diag(a, d) conjugated by [[1, z], [0, 1]] has (1,2) entry (a - d) z.
    auto g = gl_supergroup(1, 1);
    const auto ev = make_subgroup(g, {"a12", "a21"});
    const auto res = is_normal(ev, 4);
    EXPECT_FALSE(res.certified());
    EXPECT_TRUE(res.nu_agree);
    auto lam = make_free_algebra({}, {"z"});
    const auto w = normality_witness(ev, {{make_point(g, lam, {"1", "1", "z", "0"}), make_point(g, lam, {"2", "1", "0", "0"})}});
    EXPECT_TRUE(w.violation);
    EXPECT_EQ(w.generator, "a12");
    EXPECT_EQ(w.value, "-z");
}

TEST(Normality, BorelIsNotNormal)
{
    auto g = gl_supergroup(2, 0);
    const auto b = make_subgroup(g, {"a21"});
    const auto res = is_normal(b, 3);
    EXPECT_FALSE(res.certified());
    EXPECT_EQ(res.uncertified, std::vector<std::string>{"a21"});

    auto k = ground_algebra();
    const auto swap = make_point(g, k, {"0", "1", "1", "0"});
    const auto h = make_point(g, k, {"1", "1", "0", "1"});
    const auto w = normality_witness(b, {{unit_point(g, k), h}, {swap, h}});
    EXPECT_TRUE(w.violation);
    EXPECT_EQ(w.pair, 1U);
    EXPECT_EQ(w.generator, "a21");
    EXPECT_EQ(w.value, "1");
    EXPECT_THROW(normality_witness(b, {{h, swap}}), std::invalid_argument);
}

TEST(Normality, WitnessFindsNothingForNormalSubgroup)
{
    auto gm = multiplicative_group();
    auto k = ground_algebra();
    const auto mu2 = make_subgroup(gm, {"u^2 - 1"});
    const auto w = normality_witness(mu2, {{make_point(gm, k, {"5"}), make_point(gm, k, {"-1"})}});
    EXPECT_FALSE(w.violation);
}

TEST(Normalizer, BorelNormalizesItself)
{
    auto g = gl_supergroup(2, 0);
    const auto b = make_subgroup(g, {"a21"});
    const auto nd = normalizer_data(b, 3);
    ASSERT_FALSE(nd.companions.empty());
    EXPECT_TRUE(ideals_equal(nd.ideal, b.ideal, 3));
    auto k = ground_algebra();
    auto vanishes = [&](const std::vector<std::string> &pt) {
        const auto p = make_point(g, k, pt);
        for (const auto &f : nd.ideal.generators) {
            if (!p(f).is_zero()) return false;
        }
        return true;
    };
    EXPECT_TRUE(vanishes({"2", "5", "0", "3"}));
    EXPECT_TRUE(vanishes({"1", "0", "0", "-1"}));
    EXPECT_FALSE(vanishes({"0", "1", "1", "0"}));
}

TEST(Normalizer, NormalSubgroupGivesWholeGroup)
{
    auto gm = multiplicative_group();
    const auto nd = normalizer_data(make_subgroup(gm, {"u^2 - 1"}), 4);
    EXPECT_TRUE(nd.companions.empty());
    EXPECT_TRUE(nd.ideal.generators.empty());
    auto g = gl_supergroup(1, 1);
    EXPECT_TRUE(normalizer_data(trivial_subgroup(g), 3).companions.empty());
}

TEST(InvariantSubalgebra, RootsOfUnity)
{
    auto gm = multiplicative_group();
    const auto r = invariant_subalgebra(make_subgroup(gm, {"u^2 - 1"}), 4);
    EXPECT_EQ(printed(r.basis), sorted({"1", "u^2", "u^4"}));
    EXPECT_EQ(printed(r.augmentation_part), sorted({"u^2 - 1", "u^4 - 1"}));
}

TEST(InvariantSubalgebra, OddFactor)
{
    auto g = product_group(additive_group(), odd_additive_group());
    const auto h = make_subgroup(g, {"x"});
    const auto r = invariant_subalgebra(h, 3);
    EXPECT_EQ(printed(r.basis), sorted({"1", "x", "x^2", "x^3"}));
    EXPECT_TRUE(quotient_criterion(h, r, 3).pass());
}

TEST(InvariantSubalgebra, ExtremeSubgroups)
{
    auto g = gl_supergroup(1, 1);
    const auto whole = invariant_subalgebra(whole_group(g), 2);
    EXPECT_EQ(printed(whole.basis), std::vector<std::string>{"1"});
    EXPECT_TRUE(whole.augmentation_part.empty());

    auto ga = additive_group();
    const auto triv = invariant_subalgebra(trivial_subgroup(ga), 3);
    EXPECT_EQ(triv.basis.size(), 4U);
}

TEST(InvariantSubalgebra, QuotientCriterionDetectsMismatch)
{
    auto gm = multiplicative_group();
    const auto mu2 = make_subgroup(gm, {"u^2 - 1"});
    auto r = invariant_subalgebra(mu2, 4);
    EXPECT_TRUE(quotient_criterion(mu2, r, 4).pass());
    r.augmentation_part.push_back(gm->element("u - 1"));
    EXPECT_FALSE(quotient_criterion(mu2, r, 4).pass());
}

TEST(Morphisms, SquaringMap)
{
    auto gm = multiplicative_group();
    const auto phi = make_hopf_morphism(gm, gm, {"u^2"});
    EXPECT_TRUE(check_hopf_morphism(phi).pass());
    const auto ker = kernel_ideal(phi);
    ASSERT_EQ(ker.generators.size(), 1U);
    EXPECT_EQ(to_string(ker.generators[0]), "u^2 - 1");
    EXPECT_TRUE(image_kernel(phi, 4).empty());
    EXPECT_EQ(printed(image_span(phi, 4)), sorted({"1", "u^2", "u^4"}));
    const auto r = invariant_subalgebra(Supersubgroup{gm, ker}, 4);
    EXPECT_EQ(printed(image_span(phi, 4)), printed(r.basis));
}

TEST(Morphisms, ProjectionAndConstantMap)
{
    auto g = product_group(additive_group(), odd_additive_group());
    auto ga = additive_group();
    const auto pi = make_hopf_morphism(g, ga, {"x"});
    EXPECT_TRUE(check_hopf_morphism(pi).pass());
    EXPECT_EQ(printed(kernel_ideal(pi).generators), std::vector<std::string>{"x"});
    EXPECT_EQ(printed(image_span(pi, 3)), sorted({"1", "x", "x^2", "x^3"}));

    auto e = trivial_group();
    auto gm = multiplicative_group();
    const auto c = make_hopf_morphism(e, gm, {"1"});
    EXPECT_TRUE(check_hopf_morphism(c).pass());
    EXPECT_EQ(printed(image_kernel(c, 2)), sorted({"u - 1", "u^2 - 1"}));

    const auto bad = make_hopf_morphism(ga, ga, {"x + 1"});
    EXPECT_FALSE(check_hopf_morphism(bad).pass());
}

TEST(Semidirect, TrivialCases)
{
    auto gm = multiplicative_group();
    const auto mu2 = make_subgroup(gm, {"u^2 - 1"});
    const auto id = make_hopf_morphism(gm, gm, {"u"});
    EXPECT_TRUE(ideals_equal(semidirect_ideal(mu2, id, 4), mu2.ideal, 4));

    auto g = product_group(additive_group(), odd_additive_group());
    const auto pi = make_hopf_morphism(g, additive_group(), {"x"});
    const auto e = trivial_subgroup(g);
    EXPECT_TRUE(ideals_equal(semidirect_ideal(e, pi, 3), kernel_ideal(pi), 3));
    EXPECT_TRUE(semidirect_ideal(make_subgroup(g, {"t"}), pi, 3).generators.empty());
}

TEST(Levi, FactorizationIsInverse)
{
    for (auto [m, n, s, t] : std::vector<std::array<std::size_t, 4>>{
             {1, 1, 1, 0}, {1, 1, 0, 1}, {1, 1, 1, 1}, {2, 0, 1, 0}, {2, 1, 1, 0}, {1, 2, 1, 1}}) {
        const auto rep = levi_psi_check(m, n, s, t);
        EXPECT_TRUE(rep.pass()) << m << n << s << t << " " << rep.first_failure();
    }
}

TEST(Levi, OneOneFormulas)
{
    const auto lf = levi_factorization(1, 1, 1, 0);
    const auto &amb = lf.us.ambient();
    const auto x = lf.psi.image(amb->free()->require("x21"));
    const auto r = lf.psi.image(amb->free()->require("s22"));
    EXPECT_EQ(x, parse_element(lf.big, "a21*a11^-1"));
    EXPECT_EQ(r, parse_element(lf.big, "a22 - a21*a11^-1*a12"));
    EXPECT_EQ(lf.multiplication.image(lf.big->free()->require("a22")),
              parse_element(amb, "x21*s12 + s22"));
}

TEST(Levi, InvariantsOfLeviSubgroup)
{
    for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {0, 2}, {2, 1}, {1, 2}}) {
        const auto rep = levi_invariants_check(m, n, 3);
        EXPECT_TRUE(rep.pass()) << m << n << " " << (rep.first_failure() ? rep.first_failure()->name : "");
        EXPECT_EQ(rep.entries.size(), (m + n) * (m + n) + 2 * (m + n) + 1 + 2 * (m + n - 1));
    }
}
