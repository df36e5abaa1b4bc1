#include <gtest/gtest.h>

#include <superhopf/presentation.hpp>

using namespace superhopf;

namespace
{

std::vector<std::string> names(const JetQuotient &j)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.dimension(); ++i) {
        const auto s = j.basis_name(i);
        out.push_back(s.empty() ? "1" : s);
    }
    return out;
}

} // namespace

TEST(Membership, SquareOfGenerator)
{
    auto a = make_free_algebra({"t1", "t2"}, {"z1"});
    auto ideal = SuperIdeal::from_strings(a, {"t1"});
    const auto p = parse_element(a, "t1^2");
    auto r = ideal_membership(p, ideal, 2);
    ASSERT_TRUE(r.member);
    ASSERT_EQ(r.coefficients.size(), 1U);
    EXPECT_EQ(r.coefficients[0], parse_element(a, "t1"));
    EXPECT_TRUE(r.verify(p));
}

TEST(Membership, ParityObstruction)
{
    auto a = make_free_algebra({"t1"}, {"z1"});
    auto ideal = SuperIdeal::from_strings(a, {"t1"});
    auto r = ideal_membership(parse_element(a, "z1"), ideal, 5);
    EXPECT_FALSE(r.member);
    EXPECT_EQ(r.bound, 5U);
}

TEST(Membership, GeneralIdealCertificateRecombines)
{
    auto a = make_free_algebra({"x", "y"}, {"z"});
    auto ideal = SuperIdeal::from_strings(a, {"x^2 - y", "x*z + y"});
    const auto p = parse_element(a, "x^3*z - x*y*z + 2*x*z*y + 2*y^2");
    // x (x^2 - y) z + 2 y (x z + y)
    auto r = ideal_membership(p, ideal, 4);
    ASSERT_TRUE(r.member);
    EXPECT_TRUE(r.verify(p));
    EXPECT_FALSE(ideal_membership(parse_element(a, "x"), ideal, 4).member);
}

TEST(Membership, LocalizedQueryClearsDenominators)
{
    auto ring = make_free_ring({"u", "v"}, {});
    auto a = make_algebra(ring, {}, {parse_polynomial(ring, "u")});
    auto ideal = SuperIdeal::from_strings(a, {"u*v"});
    const auto p = parse_element(a, "v/u^2");
    auto r = ideal_membership(p, ideal, 1);
    ASSERT_TRUE(r.member);
    EXPECT_TRUE(r.verify(p));
}

TEST(Membership, QuotientRelationsCount)
{
    auto ring = make_free_ring({"x"}, {});
    auto a = make_algebra(ring, {parse_polynomial(ring, "x^2 - 1")});
    auto ideal = SuperIdeal::from_strings(a, {"x - 1"});
    const auto p = parse_element(a, "x + 1");
    // x + 1 takes the value 2 at x = 1.
    EXPECT_FALSE(ideal_membership(p, ideal, 4).member);
    const auto q = parse_element(a, "x^3 - x");
    auto r = ideal_membership(q, ideal, 4);
    ASSERT_TRUE(r.member);
    EXPECT_TRUE(r.verify(q));
}

TEST(Radical, EvenPartPower)
{
    auto a = make_free_algebra({"t1"}, {"z1"});
    auto ideal = SuperIdeal::from_strings(a, {"t1^4"});
    const auto r = parse_element(a, "t1^2 + z1");
    auto res = radical_membership(r, ideal, 4, 4);
    EXPECT_EQ(res.status, RadicalResult::Status::member);
    EXPECT_EQ(res.exponent, 2U);
    // r^n = r0^n + n r0^{n-1} r1
    const auto r0 = r.component(Parity::even), r1 = r.component(Parity::odd);
    for (unsigned n = 1; n <= 4; ++n) {
        EXPECT_EQ(r.pow(n), r0.pow(n) + r0.pow(n - 1) * r1 * Rational(n));
    }
}

TEST(Radical, OddElementIsNilpotent)
{
    auto a = make_free_algebra({}, {"z1"});
    auto res = radical_membership(parse_element(a, "z1"), SuperIdeal(a, {}), 1, 3);
    EXPECT_EQ(res.status, RadicalResult::Status::member);
    EXPECT_EQ(res.exponent, 1U);
}

TEST(Radical, DistinctVariablesUnknown)
{
    auto a = make_free_algebra({"t1", "t2"}, {});
    auto res = radical_membership(parse_element(a, "t1"), SuperIdeal::from_strings(a, {"t2"}), 4, 4);
    EXPECT_EQ(res.status, RadicalResult::Status::unknown);
    EXPECT_EQ(res.exponent, 4U);
}

TEST(Jets, OddLine)
{
    auto a = make_free_algebra({}, {"t"});
    JetQuotient j(a, std::vector<Rational>{0}, 1);
    EXPECT_EQ(names(j), (std::vector<std::string>{"1", "t"}));
    JetQuotient j3(a, std::vector<Rational>{0}, 3);
    EXPECT_EQ(j3.dimension(), 2U);
}

TEST(Jets, EvenLine)
{
    auto a = make_free_algebra({"t"}, {});
    JetQuotient j(a, std::vector<Rational>{0}, 2);
    EXPECT_EQ(names(j), (std::vector<std::string>{"1", "t", "t^2"}));
}

TEST(Jets, GeneralLinearAtIdentity)
{
    auto ring = make_free_ring({"a11", "a22"}, {"a12", "a21"});
    auto a = make_algebra(ring, {}, {parse_polynomial(ring, "a11"), parse_polynomial(ring, "a22")});
    JetQuotient j(a, std::vector<Rational>{1, 1, 0, 0}, 1);
    EXPECT_EQ(names(j), (std::vector<std::string>{"1", "a11", "a22", "a12", "a21"}));
    // 1/a11 = 1 - y11 + ... at order 1.
    const auto c = j.coordinates(parse_element(a, "a11^-1"));
    EXPECT_EQ(c[0], 1);
    EXPECT_EQ(c[1], -1);
}

TEST(Jets, DenominatorVanishingAtPoint)
{
    auto ring = make_free_ring({"u"}, {});
    auto a = make_algebra(ring, {}, {parse_polynomial(ring, "u")});
    EXPECT_THROW(JetQuotient(a, std::vector<Rational>{0}, 1), NotLocalizableAtPoint);
}

TEST(Jets, RelationsCutDimension)
{
    auto ring = make_free_ring({"x", "y"}, {});
    auto a = make_algebra(ring, {parse_polynomial(ring, "y - x^2")});
    std::size_t prev = 0;
    for (unsigned n = 0; n <= 4; ++n) {
        JetQuotient j(a, std::vector<Rational>{0, 0}, n);
        EXPECT_EQ(j.dimension(), n + 1);
        EXPECT_GE(j.dimension(), prev);
        prev = j.dimension();
    }
}

TEST(Jets, FreeDimensionCountsMonomials)
{
    auto a = make_free_algebra({"x", "y"}, {"s", "t"});
    for (unsigned n = 0; n <= 3; ++n) {
        JetQuotient j(a, std::vector<Rational>{0, 0, 0, 0}, n);
        EXPECT_EQ(j.dimension(), monomials_up_to(*a->free(), n).size());
    }
}
