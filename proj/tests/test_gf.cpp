#include <gtest/gtest.h>

#include <tuple>
#include <vector>

#include "hamspec/gf.hpp"
#include "oracles.hpp"

using namespace hamspec;

TEST(FieldMake, PrimeFieldHasDegreeOneModulus) {
    const auto f = field_make(3, 1);
    EXPECT_EQ(f.modulus(), (std::vector<Residue>{0, 1}));
    EXPECT_EQ(f.q(), 3u);
}

TEST(FieldMake, F9UsesXSquaredPlusOne) {
    // Only x^2+1, x^2+x+2 and x^2+2x+2 are rootless over F_3; x^2+1 is first in index order.
    const auto f = field_make(3, 2);
    EXPECT_EQ(f.modulus(), (std::vector<Residue>{1, 0, 1}));
    EXPECT_EQ(f.q(), 9u);
}

TEST(FieldMake, RejectsBadParameters) {
    EXPECT_THROW(field_make(4, 1), std::invalid_argument);
    EXPECT_THROW(field_make(3, 0), std::invalid_argument);
    EXPECT_THROW(field_make(2, 2), std::invalid_argument);
    EXPECT_NO_THROW(field_make(2, 2, {.allow_characteristic_two = true}));
    EXPECT_FALSE(field_make(2, 1, {.allow_characteristic_two = true}).odd_characteristic());
}

TEST(FieldSpecCtor, RejectsReducibleOrNonMonicModulus) {
    EXPECT_THROW(FieldSpec(3, 2, {1, 2, 1}), std::invalid_argument);  // (x+1)^2
    EXPECT_THROW(FieldSpec(3, 2, {1, 0, 2}), std::invalid_argument);  // not monic
    EXPECT_THROW(FieldSpec(3, 2, {1, 1}), std::invalid_argument);     // wrong degree
    EXPECT_NO_THROW(FieldSpec(3, 2, {2, 1, 1}));                      // x^2+x+2
}

TEST(FieldArithmetic, F9Examples) {
    const auto f = field_make(3, 2);
    const auto beta = f.element(3);
    EXPECT_EQ(beta * beta, f.element(2));
    EXPECT_EQ(f.element(2).inv(), f.element(2));
    for (const auto& a : enumerate_field(f)) EXPECT_EQ(a + f.zero(), a);
}

TEST(FieldArithmetic, F9MatchesHandOracle) {
    const auto f = field_make(3, 2);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) EXPECT_EQ(f.mul(a, b), static_cast<std::uint32_t>(oracle::f9_mul(a, b))) << a << "*" << b;
}

TEST(FieldArithmetic, Errors) {
    const auto f3 = field_make(3, 1);
    const auto f5 = field_make(5, 1);
    EXPECT_THROW(f3.one() + f5.one(), std::invalid_argument);
    EXPECT_THROW(f3.zero().inv(), std::domain_error);
    EXPECT_THROW(f3.element(3), std::out_of_range);
    // Equal parameters built separately are the same field.
    EXPECT_NO_THROW(field_make(3, 1).one() + f3.one());
}

TEST(Trace, F9Examples) {
    const auto f = field_make(3, 2);
    EXPECT_EQ(f.element(3).trace(), 0u);  // beta + beta^3 = beta - beta
    EXPECT_EQ(f.one().trace(), 2u);
    EXPECT_EQ(f.zero().trace(), 0u);
}

TEST(Enumerate, CanonicalOrder) {
    const auto f3 = enumerate_field(field_make(3, 1));
    ASSERT_EQ(f3.size(), 3u);
    for (std::uint32_t i = 0; i < 3; ++i) EXPECT_EQ(f3[i].coeffs(), (std::vector<Residue>{i}));
    const auto f9 = enumerate_field(field_make(3, 2));
    ASSERT_EQ(f9.size(), 9u);
    EXPECT_EQ(f9[3].coeffs(), (std::vector<Residue>{0, 1}));
    EXPECT_EQ(FieldElement::from_coeffs(f9[0].spec(), std::vector<Residue>{2, 1}).index(), 5u);
}

class FieldLaws : public ::testing::TestWithParam<std::tuple<Residue, std::uint32_t>> {};

TEST_P(FieldLaws, AxiomsAndTraceExhaustive) {
    const auto [p, l] = GetParam();
    const auto f = field_make(p, l, {.allow_characteristic_two = true});
    const auto all = enumerate_field(f);
    std::vector<std::uint32_t> trace_hits(p, 0);
    for (const auto& a : all) {
        ++trace_hits[a.trace()];
        EXPECT_EQ(a.pow(p).trace(), a.trace());
        EXPECT_EQ(a + (-a), f.zero());
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inv(), f.one());
        }
        for (const auto& b : all) {
            EXPECT_EQ((a.trace() + b.trace()) % p, (a + b).trace());
            for (const auto& c : all) {
                ASSERT_EQ((a + b) + c, a + (b + c));
                ASSERT_EQ((a * b) * c, a * (b * c));
                ASSERT_EQ(a * (b + c), a * b + a * c);
            }
        }
        for (std::uint32_t c = 0; c < p; ++c) EXPECT_EQ((f.element(c) * a).trace(), c * a.trace() % p);
    }
    for (auto h : trace_hits) EXPECT_EQ(h, f.q() / p);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldLaws,
                         ::testing::Values(std::tuple<Residue, std::uint32_t>{2, 3}, std::tuple<Residue, std::uint32_t>{3, 1},
                                           std::tuple<Residue, std::uint32_t>{3, 2}, std::tuple<Residue, std::uint32_t>{3, 3},
                                           std::tuple<Residue, std::uint32_t>{3, 4}, std::tuple<Residue, std::uint32_t>{5, 2},
                                           std::tuple<Residue, std::uint32_t>{7, 2}, std::tuple<Residue, std::uint32_t>{11, 2}));
