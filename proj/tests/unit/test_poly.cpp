#include "xjac/poly.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "xjac/error.hpp"

namespace xjac {
namespace {

using testing::poly;
using testing::random_element;
using testing::random_poly;

class PolyF7 : public ::testing::Test {
   protected:
    ExtField f7 = ExtField::prime(7);
    Poly x = poly(f7, {0, 1});
};

TEST_F(PolyF7, Arithmetic) {
    EXPECT_EQ((x + poly(f7, {1})) * (x - poly(f7, {1})), poly(f7, {6, 0, 1}));
    const Poly a = poly(f7, {3, 4, 5});
    EXPECT_EQ(a + Poly(f7), a);
    EXPECT_EQ(x * x, poly(f7, {0, 0, 1}));
    EXPECT_EQ((a - a).degree(), -1);
    EXPECT_TRUE((a * Poly(f7)).is_zero());
    EXPECT_EQ((a * x).degree(), a.degree() + 1);
}

TEST_F(PolyF7, DivmodExamples) {
    auto [q1, r1] = divmod(poly(f7, {0, 6, 1}), x);
    EXPECT_EQ(q1, poly(f7, {6, 1}));
    EXPECT_TRUE(r1.is_zero());

    auto [q2, r2] = divmod(x, poly(f7, {0, 0, 1}));
    EXPECT_TRUE(q2.is_zero());
    EXPECT_EQ(r2, x);

    const Poly a = poly(f7, {1, 0, 0, 0, 0, 1});
    const Poly b = poly(f7, {0, 6, 1});
    auto [q3, r3] = divmod(a, b);
    EXPECT_EQ(q3.degree(), 3);
    EXPECT_LE(r3.degree(), 1);
    EXPECT_EQ(q3 * b + r3, a);
}

TEST_F(PolyF7, GcdExamples) {
    EXPECT_EQ(gcd(poly(f7, {6, 0, 1}), poly(f7, {6, 1})), poly(f7, {6, 1}));
    const Poly a = poly(f7, {2, 3, 4});
    EXPECT_EQ(gcd(a, Poly(f7)), a.monic());
    EXPECT_EQ(gcd(Poly(f7), a), a.monic());
    const Poly f = poly(f7, {1, 0, 0, 0, 0, 1});
    const auto g = xgcd(f, poly(f7, {0, 0, 0, 0, 5}));
    EXPECT_TRUE(g.g.is_one());
    EXPECT_EQ(g.s * f + g.t * poly(f7, {0, 0, 0, 0, 5}), g.g);
}

TEST_F(PolyF7, EvalExamples) {
    const Poly f = poly(f7, {1, 0, 0, 0, 0, 1});
    EXPECT_EQ(f.eval(f7.zero()), f7.one());
    EXPECT_EQ(poly(f7, {1, 2}).eval(f7.one()), f7.from_index(3));
    EXPECT_TRUE(f.eval(f7.from_index(6)).is_zero());
}

TEST_F(PolyF7, Squarefree) {
    EXPECT_TRUE(is_squarefree(poly(f7, {1, 0, 0, 0, 0, 1})));
    EXPECT_FALSE(is_squarefree(poly(f7, {1, 5, 1})));  // (x - 1)^2
    EXPECT_TRUE(is_squarefree(poly(ExtField::prime(3), {0, 1})));
    // x^7 - x has derivative -1 and is squarefree; x^7 + 1 = (x + 1)^7 has derivative 0.
    EXPECT_TRUE(is_squarefree(poly(f7, {0, 6, 0, 0, 0, 0, 0, 1})));
    EXPECT_FALSE(is_squarefree(poly(f7, {1, 0, 0, 0, 0, 0, 0, 1})));
}

TEST_F(PolyF7, Errors) {
    const auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ConfigError;
    };
    EXPECT_EQ(code([&] { divmod(x, Poly(f7)); }), ErrorCode::DivisionByZero);
    EXPECT_EQ(code([&] { xgcd(Poly(f7), Poly(f7)); }), ErrorCode::BothZero);
    const auto f11 = ExtField::prime(11);
    EXPECT_EQ(code([&] { (void)(x + poly(f11, {0, 1})); }), ErrorCode::FieldMismatch);
    EXPECT_EQ(code([&] { Poly::parse(f7, "1,,2"); }), ErrorCode::ParseError);
    EXPECT_EQ(code([&] { Poly::parse(f7, "1,7"); }), ErrorCode::ParseError);
    EXPECT_EQ(code([&] { Poly::parse(f7, "1,-2"); }), ErrorCode::ParseError);
}

TEST(PolyText, ParseAndPrint) {
    const auto f7 = ExtField::prime(7);
    const Poly f = Poly::parse(f7, "1,0,0,0,0,1");
    EXPECT_EQ(f, poly(f7, {1, 0, 0, 0, 0, 1}));
    EXPECT_EQ(f.to_string(), "1,0,0,0,0,1");
    EXPECT_EQ(Poly::parse(f7, " 3, 4 ,0").to_string(), "3,4");
    EXPECT_EQ(Poly(f7).to_string(), "0");
    EXPECT_TRUE(Poly::parse(f7, "0").is_zero());
    const auto f27 = ExtField::with_degree(3, 3);
    EXPECT_EQ(Poly::parse(f27, "26,3,1").coeff(1), f27.generator());
}

// Property: a = q b + r, deg r < deg b, and the Bezout identity on every gcd.
TEST(PolyProperties, DivmodAndGcdIdentities) {
    std::mt19937_64 rng(1);
    for (const auto& field : {ExtField::prime(7), ExtField::with_degree(3, 3), ExtField::prime(101)}) {
        for (int i = 0; i < 10000; ++i) {
            const Poly a = random_poly(field, 7, rng);
            Poly b = random_poly(field, 4, rng);
            if (b.is_zero()) b = Poly::constant(field.one());
            const auto [q, r] = divmod(a, b);
            ASSERT_EQ(q * b + r, a);
            ASSERT_LT(r.degree(), b.degree());
            if (a.is_zero() && b.is_zero()) continue;
            const auto g = xgcd(a, b);
            ASSERT_TRUE(g.g.is_monic());
            ASSERT_EQ(g.s * a + g.t * b, g.g);
            ASSERT_TRUE((a % g.g).is_zero());
            ASSERT_TRUE((b % g.g).is_zero());
        }
    }
}

TEST(PolyProperties, EvalIsRingHomomorphism) {
    std::mt19937_64 rng(2);
    for (const auto& field : {ExtField::prime(13), ExtField::with_degree(5, 2)}) {
        for (int i = 0; i < 5000; ++i) {
            const Poly a = random_poly(field, 5, rng);
            const Poly b = random_poly(field, 5, rng);
            const auto x = random_element(field, rng);
            ASSERT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
            ASSERT_EQ((a + b).eval(x), a.eval(x) + b.eval(x));
        }
    }
}

TEST(PolyProperties, TextRoundTrip) {
    std::mt19937_64 rng(3);
    const auto field = ExtField::with_degree(3, 3);
    for (int i = 0; i < 1000; ++i) {
        const Poly a = random_poly(field, 6, rng);
        ASSERT_EQ(Poly::parse(field, a.to_string()), a);
    }
}

}  // namespace
}  // namespace xjac
