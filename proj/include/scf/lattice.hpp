#pragma once

#include "scf/arith.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace scf {

using Vec3 = std::array<Int, 3>;
using Mat3 = std::array<std::array<Rat, 3>, 3>;

// floor division, b > 0
inline Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// Row-style Hermite normal form: the unique echelon basis of the Z-span of
// the input rows with positive pivots and entries above each pivot reduced
// into [0, pivot). Zero rows are dropped, so equality of spans is equality
// of the returned bases.
inline std::vector<Vec3> hnf(std::vector<Vec3> rows) {
    constexpr std::size_t npos = std::size_t(-1);
    std::size_t r = 0;
    for (int col = 0; col < 3 && r < rows.size(); ++col) {
        // gcd-eliminate column col among rows r..end
        bool have_pivot = false;
        for (;;) {
            std::size_t best = npos;
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][col] != 0 &&
                    (best == npos || abs(rows[i][col]) < abs(rows[best][col])))
                    best = i;
            if (best == npos) break;
            have_pivot = true;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[r][col];
                for (int k = 0; k < 3; ++k) rows[i][k] -= q * rows[r][k];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (!have_pivot) continue;
        if (rows[r][col] < 0)
            for (int k = 0; k < 3; ++k) rows[r][k] = -rows[r][k];
        for (std::size_t i = 0; i < r; ++i) {
            Int q = fdiv(rows[i][col], rows[r][col]);
            if (q != 0)
                for (int k = 0; k < 3; ++k) rows[i][k] -= q * rows[r][k];
        }
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i] != Vec3{0, 0, 0})
            throw std::logic_error("hnf: nonzero row survived elimination");
    rows.resize(r);
    return rows;
}

// A finitely generated subgroup of (1/den) Z^3: the span of gens[i]/den.
struct RationalLattice {
    Int den{1};
    std::vector<Vec3> gens;
};

inline bool lattice_equal(const RationalLattice& L1, const RationalLattice& L2) {
    if (L1.den <= 0 || L2.den <= 0)
        throw std::invalid_argument("lattice_equal: denominators must be positive");
    const Int D = boost::multiprecision::lcm(L1.den, L2.den);
    auto scaled_hnf = [&](const RationalLattice& L) {
        const Int f = D / L.den;
        std::vector<Vec3> v = L.gens;
        for (auto& row : v)
            for (auto& x : row) x *= f;
        return hnf(std::move(v));
    };
    return scaled_hnf(L1) == scaled_hnf(L2);
}

inline Rat det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace scf
