#include <random>

#include <gtest/gtest.h>

#include <superhopf/linalg.hpp>
#include <superhopf/parse.hpp>

#include <superhopf/random.hpp>

using namespace superhopf;

namespace
{

struct Ring23 : ::testing::Test {
    FreeRingPtr ring = make_free_ring({"t1", "t2"}, {"z1", "z2", "z3"});
    SuperPolynomial p(const char *s) const { return parse_polynomial(ring, s); }
    SuperPolynomial var(const char *s) const { return SuperPolynomial::variable(ring, s); }
};

} // namespace

TEST_F(Ring23, OddSquareVanishes)
{
    EXPECT_TRUE((var("z1") * var("z1")).is_zero());
}

TEST_F(Ring23, OddVariablesAnticommute)
{
    EXPECT_EQ(var("z2") * var("z1"), -(var("z1") * var("z2")));
    EXPECT_EQ(to_string(var("z2") * var("z1")), "-z1*z2");
}

TEST_F(Ring23, MixedExpansion)
{
    // (t1 + z1)(t1 + z2) by hand: t1^2 + t1 z2 + z1 t1 + z1 z2, with z1 t1 = t1 z1.
    const auto lhs = (var("t1") + var("z1")) * (var("t1") + var("z2"));
    const auto rhs = var("t1") * var("t1") + var("t1") * var("z2") + var("t1") * var("z1") + var("z1") * var("z2");
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(to_string(lhs), "t1^2 + t1*z1 + t1*z2 + z1*z2");
}

TEST_F(Ring23, ParityDecompose)
{
    auto [e, o] = parity_decompose(p("t1 + z1"));
    EXPECT_EQ(e, var("t1"));
    EXPECT_EQ(o, var("z1"));
    auto [e2, o2] = parity_decompose(p("z1*z2"));
    EXPECT_EQ(e2, p("z1*z2"));
    EXPECT_TRUE(o2.is_zero());
    auto [e3, o3] = parity_decompose(SuperPolynomial(ring));
    EXPECT_TRUE(e3.is_zero() && o3.is_zero());
}

TEST_F(Ring23, InvertNilpotentUnit)
{
    const auto one = SuperPolynomial::constant(ring, 1);
    const auto a = p("1 - z1*z2");
    const auto ai = invert_nilpotent_unit(a);
    EXPECT_EQ(a * ai, one);
    EXPECT_EQ(ai, p("1 + z1*z2"));

    EXPECT_EQ(invert_nilpotent_unit(one), one);

    const auto b = p("2 + z1*z2");
    const auto bi = invert_nilpotent_unit(b);
    EXPECT_EQ(b * bi, one);
    EXPECT_EQ(bi, p("1/2 - 1/4*z1*z2"));
}

TEST_F(Ring23, InvertRejectsNonUnits)
{
    EXPECT_THROW(invert_nilpotent_unit(p("z1")), NonUnit);
    EXPECT_THROW(invert_nilpotent_unit(p("1 + t1")), NonUnit);
}

TEST_F(Ring23, RingMismatchIsReported)
{
    auto other = make_free_ring({"x"}, {});
    EXPECT_THROW(var("t1") * SuperPolynomial::variable(other, "x"), RingMismatch);
}

TEST_F(Ring23, ParsePrintRoundTrip)
{
    for (const char *s : {"3/2*t1^2*z1*z2", "-t1 + 1", "-7/5*t1*z1*z2*z3 + t2^3*z3 + 2", "0", "z1*z2*z3"}) {
        const auto q = p(s);
        EXPECT_EQ(to_string(q), s);
        EXPECT_EQ(p(to_string(q).c_str()), q);
    }
    EXPECT_EQ(p("z2*z1"), p("-z1*z2"));
    EXPECT_EQ(p("(t1 + 1)^2"), p("t1^2 + 2*t1 + 1"));
}

TEST_F(Ring23, ParseErrorsCarryPosition)
{
    try {
        p("t1 + q7");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 1U);
        EXPECT_EQ(e.column(), 6U);
    }
    EXPECT_THROW(p("t1 +"), ParseError);
    EXPECT_THROW(p("(t1"), ParseError);
}

TEST_F(Ring23, RandomLaws)
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_polynomial(ring, rng, 4);
        const auto b = random_polynomial(ring, rng, 4);
        const auto c = random_polynomial(ring, rng, 4);
        ASSERT_EQ((a * b) * c, a * (b * c));
        for (Parity pa : {Parity::even, Parity::odd}) {
            for (Parity pb : {Parity::even, Parity::odd}) {
                const auto x = a.component(pa), y = b.component(pb);
                ASSERT_EQ(x * y, (y * x) * Rational(koszul(pa, pb)));
            }
        }
        ASSERT_TRUE((a.component(Parity::odd) * a.component(Parity::odd)).component(Parity::odd).is_zero());
        ASSERT_EQ(a.renormalized(), a);
        ASSERT_EQ(a.renormalized().renormalized(), a.renormalized());
    }
}

TEST(Localized, FractionArithmetic)
{
    auto ring = make_free_ring({"t"}, {"z1"});
    const auto d = SuperPolynomial::variable(ring, "t") + SuperPolynomial::constant(ring, 1);
    auto alg = make_algebra(ring, {}, {d});
    const auto a = parse_element(alg, "z1");
    const auto b = parse_element(alg, "t^2");
    const auto inv_d = LocalizedElement::denominator_power(alg, 0, 1);
    EXPECT_EQ(a * inv_d + b * inv_d, (a + b) * inv_d);
    EXPECT_EQ(LocalizedElement(alg, d) * inv_d, LocalizedElement::constant(alg, 1));
    EXPECT_TRUE(((a * inv_d) * (a * inv_d)).is_zero());
    EXPECT_EQ(parse_element(alg, "(t+1)^-1") * parse_element(alg, "t + 1"), LocalizedElement::constant(alg, 1));
    EXPECT_EQ(to_string(parse_element(alg, "z1/(t+1)")), "(z1)*(t + 1)^-1");
}

TEST(Localized, UnitInversion)
{
    auto ring = make_free_ring({"u"}, {"z1", "z2"});
    auto alg = make_algebra(ring, {}, {SuperPolynomial::variable(ring, "u")});
    const auto x = parse_element(alg, "2*u^3 + u*z1*z2");
    const auto xi = invert_unit(x);
    EXPECT_EQ(x * xi, LocalizedElement::constant(alg, 1));
    EXPECT_THROW(invert_unit(parse_element(alg, "u + 1")), NonUnit);
    EXPECT_THROW(invert_unit(parse_element(alg, "z1")), NonUnit);
}

TEST(Linalg, KernelBasisIsReduced)
{
    auto ring = make_free_ring({"x"}, {});
    const auto x = SuperPolynomial::variable(ring, "x");
    const auto one = SuperPolynomial::constant(ring, 1);
    // v0 = 1, v1 = x, v2 = 1 + x, v3 = 2: kernel spanned by (1,1,-1,0), (-2,0,0,1)
    const auto k = kernel_basis(ring, {one, x, one + x, one * Rational(2)});
    ASSERT_EQ(k.size(), 2U);
    for (const auto &row : k) {
        SuperPolynomial s(ring);
        const std::vector<SuperPolynomial> vs{one, x, one + x, one * Rational(2)};
        for (std::size_t i = 0; i < row.size(); ++i) s += vs[i] * row[i];
        EXPECT_TRUE(s.is_zero());
    }
}
