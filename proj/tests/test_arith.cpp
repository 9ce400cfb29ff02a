#include "scf/arith.hpp"

#include "gtest/gtest.h"

#include <random>

namespace scf {
namespace {

TEST(Factorize, One) {
    const auto f = factorize(1);
    EXPECT_EQ(f.value, 1);
    EXPECT_TRUE(f.factors.empty());
    EXPECT_EQ(f.product(), 1);
}

TEST(Factorize, KnownDiscriminants) {
    using F = std::vector<std::pair<Int, int>>;
    EXPECT_EQ(factorize(56889).factors, (F{{3, 3}, {7, 2}, {43, 1}}));
    EXPECT_EQ(factorize(8379).factors, (F{{3, 2}, {7, 2}, {19, 1}}));
}

TEST(Factorize, RejectsNonPositive) {
    EXPECT_THROW(factorize(0), std::invalid_argument);
    EXPECT_THROW(factorize(-6), std::invalid_argument);
}

TEST(Factorize, LargeSemiprimeBeyondTrialCap) {
    const Int p("1000003"), q("1000033");
    ASSERT_TRUE(is_prime(p));
    ASSERT_TRUE(is_prime(q));
    const auto f = factorize(p * q * 9);
    EXPECT_EQ(f.factors, (std::vector<std::pair<Int, int>>{{3, 2}, {p, 1}, {q, 1}}));
}

TEST(Factorize, RemultiplicationAndPrimality) {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<long long> dist(2, 50000000);
    for (int i = 0; i < 200; ++i) {
        const Int n(dist(rng));
        const auto f = factorize(n);
        EXPECT_EQ(f.product(), n);
        Int prev = 1;
        for (const auto& [p, e] : f.factors) {
            EXPECT_TRUE(is_prime(p)) << p;
            EXPECT_GT(p, prev);
            EXPECT_GE(e, 1);
            prev = p;
        }
    }
}

TEST(IsPrime, SmallValues) {
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(3));
    EXPECT_FALSE(is_prime(4));
    EXPECT_TRUE(is_prime(43));
    EXPECT_FALSE(is_prime(561));   // Carmichael
    EXPECT_FALSE(is_prime(3215031751LL));  // strong pseudoprime to bases 2,3,5,7
}

TEST(DeltaDecompose, PaperValues) {
    const auto d237 = delta_decompose(237);
    EXPECT_EQ(d237.delta, 56889);
    EXPECT_EQ(d237.b, 2107);
    EXPECT_EQ(d237.c, 3);
    EXPECT_EQ(d237.d, 43);
    EXPECT_EQ(d237.e, 7);

    const auto d54 = delta_decompose(54);
    EXPECT_EQ(d54.delta, 3087);
    EXPECT_EQ(d54.b, 9);
    EXPECT_EQ(d54.c, 7);
    EXPECT_EQ(d54.d, 1);
    EXPECT_EQ(d54.e, 3);

    const auto d1 = delta_decompose(1);
    EXPECT_EQ(d1.delta, 13);
    EXPECT_EQ(d1.b, 13);
    EXPECT_EQ(d1.c, 1);
    EXPECT_EQ(d1.d, 13);
    EXPECT_EQ(d1.e, 1);
}

TEST(DeltaDecompose, ZeroAndNegative) {
    const auto d0 = delta_decompose(0);
    EXPECT_EQ(d0.delta, 9);
    EXPECT_EQ(d0.e, 3);
    EXPECT_EQ(d0.d, 1);
    EXPECT_EQ(d0.c, 1);

    const auto dm3 = delta_decompose(-3);
    EXPECT_EQ(dm3.delta, 9);
    EXPECT_EQ(dm3.e, 3);
}

bool squarefree(const Int& v) {
    for (const auto& [p, e] : factorize(v).factors)
        if (e > 1) return false;
    return true;
}

bool cubefree(const Int& v) {
    for (const auto& [p, e] : factorize(v).factors)
        if (e > 2) return false;
    return true;
}

TEST(DeltaDecompose, ShapeInvariantsOverRange) {
    for (long long n = -250; n <= 250; ++n) {
        const auto d = delta_decompose(n);
        EXPECT_EQ(d.delta, Int(n) * n + 3 * n + 9);
        EXPECT_GT(d.delta, 0);
        EXPECT_EQ(d.b * d.c * d.c * d.c, d.delta) << "n=" << n;
        EXPECT_EQ(d.d * d.e * d.e * d.c * d.c * d.c, d.delta) << "n=" << n;
        EXPECT_TRUE(cubefree(d.b)) << "n=" << n;
        EXPECT_TRUE(squarefree(d.d)) << "n=" << n;
        EXPECT_TRUE(squarefree(d.e)) << "n=" << n;
        EXPECT_EQ(boost::multiprecision::gcd(d.d, d.e), 1) << "n=" << n;
    }
}

// delta is symmetric under n -> -n-3, matching L_n = L_{-n-3}.
TEST(DeltaDecompose, MirrorSymmetry) {
    for (long long n = -250; n <= 250; ++n) {
        const auto a = delta_decompose(n);
        const auto b = delta_decompose(-n - 3);
        EXPECT_EQ(a.delta, b.delta);
        EXPECT_EQ(a.d, b.d);
        EXPECT_EQ(a.e, b.e);
        EXPECT_EQ(a.c, b.c);
    }
}

TEST(Legendre3, Values) {
    EXPECT_EQ(legendre3(1), 1);
    EXPECT_EQ(legendre3(2), -1);
    EXPECT_EQ(legendre3(-4), -1);
    EXPECT_EQ(legendre3(7), 1);
    EXPECT_EQ(legendre3(-1), -1);
}

TEST(Legendre3, RejectsMultiplesOfThree) {
    EXPECT_THROW(legendre3(0), std::domain_error);
    EXPECT_THROW(legendre3(6), std::domain_error);
    EXPECT_THROW(legendre3(-9), std::domain_error);
}

TEST(MathMod, NegativeArguments) {
    EXPECT_EQ(math_mod(-1, 3), 2);
    EXPECT_EQ(math_mod(-27, 27), 0);
    EXPECT_EQ(math_mod(-15, 27), 12);
}

}  // namespace
}  // namespace scf
