#include "scf/lattice.hpp"

#include "gtest/gtest.h"

#include <algorithm>
#include <random>
#include <vector>

namespace scf {
namespace {

TEST(Hnf, Identity) {
    const std::vector<Vec3> id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    EXPECT_EQ(hnf(id), id);
}

TEST(Hnf, GcdRowReduction) {
    EXPECT_EQ(hnf({{2, 0, 0}, {3, 0, 0}}), (std::vector<Vec3>{{1, 0, 0}}));
}

TEST(Hnf, RedundantGeneratorsDropped) {
    const std::vector<Vec3> gens{{1, 1, 0}, {0, 3, 0}, {0, 0, 1}, {1, 4, 0}};
    EXPECT_EQ(hnf(gens), (std::vector<Vec3>{{1, 1, 0}, {0, 3, 0}, {0, 0, 1}}));
}

TEST(Hnf, ZeroRowsAndEmpty) {
    EXPECT_TRUE(hnf({}).empty());
    EXPECT_TRUE(hnf({{0, 0, 0}, {0, 0, 0}}).empty());
    EXPECT_EQ(hnf({{0, 0, 0}, {0, 5, 0}}), (std::vector<Vec3>{{0, 5, 0}}));
}

TEST(Hnf, NegativePivotsNormalized) {
    EXPECT_EQ(hnf({{-2, 1, 0}}), (std::vector<Vec3>{{2, -1, 0}}));
    // entries above a pivot are reduced into [0, pivot)
    EXPECT_EQ(hnf({{1, -1, 0}, {0, 3, 0}}), (std::vector<Vec3>{{1, 2, 0}, {0, 3, 0}}));
}

std::vector<Vec3> random_rows(std::mt19937_64& rng, int count, long long bound) {
    std::uniform_int_distribution<long long> dist(-bound, bound);
    std::vector<Vec3> rows(count);
    for (auto& r : rows) r = {dist(rng), dist(rng), dist(rng)};
    return rows;
}

TEST(Hnf, IdempotentAndOrderIndependent) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        auto rows = random_rows(rng, 1 + int(rng() % 5), 40);
        const auto h = hnf(rows);
        EXPECT_EQ(hnf(h), h);
        std::shuffle(rows.begin(), rows.end(), rng);
        EXPECT_EQ(hnf(rows), h);
    }
}

// Unimodular row operations do not change the span.
TEST(Hnf, InvariantUnderRowOperations) {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<long long> coef(-3, 3);
    for (int i = 0; i < 300; ++i) {
        auto rows = random_rows(rng, 3, 30);
        const auto h = hnf(rows);
        for (int op = 0; op < 6; ++op) {
            const std::size_t src = rng() % rows.size(), dst = rng() % rows.size();
            if (src == dst) continue;
            const Int q(coef(rng));
            for (int k = 0; k < 3; ++k) rows[dst][k] += q * rows[src][k];
        }
        EXPECT_EQ(hnf(rows), h);
    }
}

// For a full-rank triple the product of the HNF pivots is |det|.
TEST(Hnf, PivotProductIsAbsDet) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 300; ++i) {
        const auto rows = random_rows(rng, 3, 25);
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int k = 0; k < 3; ++k) m[r][k] = Rat(rows[r][k]);
        const Rat det = det3(m);
        if (det == 0) continue;
        const auto h = hnf(rows);
        ASSERT_EQ(h.size(), 3u);
        EXPECT_EQ(Rat(h[0][0] * h[1][1] * h[2][2]), abs(det));
    }
}

TEST(LatticeEqual, SelfAndScaled) {
    const RationalLattice L{2, {{1, 0, 0}, {0, 1, 0}}};
    EXPECT_TRUE(lattice_equal(L, L));
    const RationalLattice L4{4, {{2, 0, 0}, {0, 2, 0}}};
    EXPECT_TRUE(lattice_equal(L, L4));
}

TEST(LatticeEqual, DetectsIndex) {
    const RationalLattice Z3{1, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    const RationalLattice twoZ3{1, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}};
    EXPECT_FALSE(lattice_equal(Z3, twoZ3));
}

TEST(LatticeEqual, RedundantGenerators) {
    const RationalLattice L1{1, {{1, 0, 0}, {0, 1, 0}}};
    const RationalLattice L2{1, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}};
    EXPECT_TRUE(lattice_equal(L1, L2));
    const RationalLattice L3{1, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    EXPECT_FALSE(lattice_equal(L1, L3));
}

TEST(LatticeEqual, RejectsBadDenominator) {
    const RationalLattice bad{0, {{1, 0, 0}}};
    const RationalLattice ok{1, {{1, 0, 0}}};
    EXPECT_THROW(lattice_equal(bad, ok), std::invalid_argument);
}

TEST(Det3, Examples) {
    const Mat3 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    EXPECT_EQ(det3(id), 1);
    const Mat3 gram{{{3, 1, 1}, {1, 9, -4}, {1, -4, 9}}};
    EXPECT_EQ(det3(gram), 169);
    const Mat3 singular{{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}};
    EXPECT_EQ(det3(singular), 0);
    const Mat3 rational{{{Rat(1, 2), 0, 0}, {0, Rat(2, 3), 0}, {0, 0, 3}}};
    EXPECT_EQ(det3(rational), 1);
}

}  // namespace
}  // namespace scf
