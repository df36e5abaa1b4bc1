#include <random>

#include <gtest/gtest.h>

#include <superhopf/morphism.hpp>

#include <superhopf/random.hpp>

using namespace superhopf;

TEST(Morphism, IdentityAndSubstitution)
{
    auto a = make_free_algebra({"t1"}, {"z1"});
    auto id = SuperalgebraMorphism::identity(a);
    EXPECT_EQ(id.apply(parse_element(a, "t1*z1")), parse_element(a, "t1*z1"));

    auto b = make_free_algebra({"t"}, {});
    auto sq = SuperalgebraMorphism::from_strings(b, b, {"t^2"});
    EXPECT_EQ(sq.apply(parse_element(b, "t + 1")), parse_element(b, "t^2 + 1"));
}

TEST(Morphism, SwapOddGeneratorsFlipsSign)
{
    auto a = make_free_algebra({}, {"z1", "z2"});
    auto swap = SuperalgebraMorphism::from_strings(a, a, {"z2", "z1"});
    // z1 z2 -> z2 z1, reordered canonically.
    EXPECT_EQ(swap.apply(parse_element(a, "z1*z2")), parse_element(a, "-z1*z2"));
}

TEST(Morphism, Composition)
{
    auto b = make_free_algebra({"t"}, {});
    auto shift = SuperalgebraMorphism::from_strings(b, b, {"t + 1"});
    auto twice = SuperalgebraMorphism::from_strings(b, b, {"2*t"});
    auto id = SuperalgebraMorphism::identity(b);
    auto c = compose(shift, twice);
    EXPECT_EQ(c.image(0), parse_element(b, "2*t + 2"));
    auto c2 = compose(twice, shift);
    EXPECT_EQ(c2.image(0), parse_element(b, "2*t + 1"));
    EXPECT_EQ(compose(id, shift).image(0), shift.image(0));
    EXPECT_EQ(compose(shift, id).image(0), shift.image(0));
}

TEST(Morphism, RejectsParityChange)
{
    auto a = make_free_algebra({"t"}, {"z"});
    EXPECT_THROW(SuperalgebraMorphism::from_strings(a, a, {"z", "t"}), InvalidMorphism);
}

TEST(Morphism, RejectsNonUnitDenominatorImage)
{
    auto ring = make_free_ring({"u"}, {});
    auto gm = make_algebra(ring, {}, {SuperPolynomial::variable(ring, "u")});
    auto k = ground_algebra();
    EXPECT_THROW(SuperalgebraMorphism::from_strings(gm, k, {"0"}), InvalidMorphism);
    auto ok = SuperalgebraMorphism::from_strings(gm, k, {"2"});
    EXPECT_EQ(ok.apply(parse_element(gm, "u^-1")), LocalizedElement::constant(k, make_rational(1, 2)));
}

TEST(Morphism, RejectsBrokenRelation)
{
    auto ring = make_free_ring({"x"}, {});
    auto q = make_algebra(ring, {parse_polynomial(ring, "x^2")});
    auto free = make_free_algebra({"x"}, {});
    EXPECT_THROW(SuperalgebraMorphism::from_strings(q, free, {"x"}), InvalidMorphism);
    EXPECT_NO_THROW(SuperalgebraMorphism::from_strings(q, q, {"2*x"}));
}

TEST(Tensor, KoszulSignBetweenFactors)
{
    auto a = make_free_algebra({}, {"z"});
    TensorSuperalgebra t({a, a});
    const auto z = parse_element(a, "z");
    const auto one = LocalizedElement::constant(a, 1);
    const auto left = t.pure({z, one});
    const auto right = t.pure({one, z});
    EXPECT_EQ(left * right, -(right * left));
    EXPECT_EQ(t.ambient()->free()->name(0), "z@1");
}

TEST(Tensor, ShapesAndGrounds)
{
    auto a = make_free_algebra({"t"}, {});
    auto b = make_free_algebra({}, {"z"});
    auto t = tensor_algebra(a, b);
    EXPECT_EQ(t.ambient()->free()->num_even(), 1U);
    EXPECT_EQ(t.ambient()->free()->num_odd(), 1U);
    EXPECT_EQ(t.ambient()->free()->name(1), "z");

    auto kb = tensor_algebra(ground_algebra(), b);
    EXPECT_EQ(kb.ambient()->free()->odd_names(), b->free()->odd_names());
}

TEST(Tensor, SplitRecombines)
{
    auto ring = make_free_ring({"u"}, {"z"});
    auto a = make_algebra(ring, {}, {SuperPolynomial::variable(ring, "u")});
    TensorSuperalgebra t({a, a, a});
    const auto x = parse_element(t.ambient(), "u@1*z@2*z@3/u@2 - 3*z@1*u@3^2 + z@3*z@1");
    LocalizedElement back(t.ambient());
    for (const auto &pt : t.split(x)) back += t.pure(pt.legs) * pt.coefficient;
    EXPECT_EQ(back, x);
}

TEST(Tensor, TensorMorphismActsFactorwise)
{
    auto a = make_free_algebra({"x"}, {"z"});
    auto phi = SuperalgebraMorphism::from_strings(a, a, {"x^2", "x*z"});
    auto id = SuperalgebraMorphism::identity(a);
    auto pp = tensor_morphism(phi, id);
    TensorSuperalgebra t({a, a});
    const auto g = parse_element(a, "z"), h = parse_element(a, "x + z");
    EXPECT_EQ(pp.apply(t.pure({g, h})), t.pure({phi.apply(g), h}));
    auto idid = tensor_morphism(id, id);
    EXPECT_EQ(idid.apply(t.pure({g, h})), t.pure({g, h}));
}

TEST(Morphism, FunctorialityOnRandomInputs)
{
    auto a = make_free_algebra({"t1", "t2"}, {"z1", "z2"});
    auto phi = SuperalgebraMorphism::from_strings(a, a, {"t1 + z1*z2", "2*t2 - t1^2", "z2 + t1*z1", "z1"});
    auto psi = SuperalgebraMorphism::from_strings(a, a, {"t2", "t1 + 1", "t1*z2", "z1 - z2"});
    auto both = compose(phi, psi);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const LocalizedElement p(a, random_polynomial(a->free(), rng, 3));
        const LocalizedElement q(a, random_polynomial(a->free(), rng, 3));
        ASSERT_EQ(both.apply(p), phi.apply(psi.apply(p)));
        ASSERT_EQ(phi.apply(p * q), phi.apply(p) * phi.apply(q));
    }
}

TEST(Tensor, TermParityIsSumOfLegParities)
{
    auto a = make_free_algebra({"x"}, {"z", "w"});
    TensorSuperalgebra t({a, a});
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const LocalizedElement x(t.ambient(), random_polynomial(t.ambient()->free(), rng, 4));
        for (const auto &pt : t.split(x)) {
            unsigned odd = 0;
            for (const auto &leg : pt.legs) odd += leg.numerator().terms().begin()->first.odd_degree();
            const auto whole = t.pure(pt.legs);
            ASSERT_EQ(parity_of(odd), *whole.homogeneous_parity());
        }
    }
}
