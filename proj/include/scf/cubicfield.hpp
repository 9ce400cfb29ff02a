#pragma once

#include "scf/arith.hpp"
#include "scf/lattice.hpp"

#include <array>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace scf {

// Element x0 + x1*rho + x2*rho' of the simplest cubic field attached to the
// Shanks cubic X^3 - n X^2 - (n+3) X - 1; rho is a fixed root, rho' = sigma(rho)
// for the Galois generator sigma with sigma(rho) = -1/(1+rho), and
// rho'' = n - rho - rho'. Elements with different n never mix.
struct FieldElement {
    Int n{};
    Rat x0{}, x1{}, x2{};

    bool is_rational() const { return x1 == 0 && x2 == 0; }
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    return os << "(n=" << x.n << "; " << x.x0 << ", " << x.x1 << ", " << x.x2 << ")";
}

inline FieldElement fe_rho(const Int& n) { return {n, 0, 1, 0}; }
inline FieldElement fe_rho_prime(const Int& n) { return {n, 0, 0, 1}; }
inline FieldElement fe_constant(const Int& n, const Rat& q) { return {n, q, 0, 0}; }
inline FieldElement fe_one(const Int& n) { return {n, 1, 0, 0}; }

inline void require_same_field(const FieldElement& x, const FieldElement& y) {
    if (x.n != y.n) throw std::invalid_argument("field parameter mismatch");
}

inline FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    return {x.n, x.x0 + y.x0, x.x1 + y.x1, x.x2 + y.x2};
}

inline FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    return {x.n, x.x0 - y.x0, x.x1 - y.x1, x.x2 - y.x2};
}

inline FieldElement operator-(const FieldElement& x) { return {x.n, -x.x0, -x.x1, -x.x2}; }

inline FieldElement operator*(const Rat& c, const FieldElement& x) {
    return {x.n, c * x.x0, c * x.x1, c * x.x2};
}

// Bilinear product through the structure table
//   rho  * rho  = 2 + (n+1) rho + rho'
//   rho  * rho' = -1 - rho'
//   rho' * rho' = (n+2) - rho + n rho'
inline FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    const Rat n(x.n);
    const Rat s11 = x.x1 * y.x1;
    const Rat s22 = x.x2 * y.x2;
    const Rat s12 = x.x1 * y.x2 + x.x2 * y.x1;
    return {x.n,
            x.x0 * y.x0 + 2 * s11 - s12 + (n + 2) * s22,
            x.x0 * y.x1 + x.x1 * y.x0 + (n + 1) * s11 - s22,
            x.x0 * y.x2 + x.x2 * y.x0 + s11 - s12 + n * s22};
}

// sigma(rho) = rho', sigma(rho') = n - rho - rho'.
inline FieldElement apply_sigma(const FieldElement& x) {
    return {x.n, x.x0 + Rat(x.n) * x.x2, -x.x2, x.x1 - x.x2};
}

// Tr(1) = 3, Tr(rho) = Tr(rho') = n.
inline Rat trace(const FieldElement& x) { return 3 * x.x0 + Rat(x.n) * (x.x1 + x.x2); }

// Monic cubic X^3 + c2 X^2 + c1 X + c0 annihilating x, from the matrix of
// multiplication by x in the basis {1, rho, rho'}.
inline std::array<Rat, 3> char_poly(const FieldElement& x) {
    const std::array<FieldElement, 3> cols = {x, x * fe_rho(x.n), x * fe_rho_prime(x.n)};
    Mat3 m;
    for (int j = 0; j < 3; ++j) {
        m[0][j] = cols[j].x0;
        m[1][j] = cols[j].x1;
        m[2][j] = cols[j].x2;
    }
    const Rat tr = m[0][0] + m[1][1] + m[2][2];
    const Rat minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] +
                       m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                       m[1][1] * m[2][2] - m[1][2] * m[2][1];
    return {-tr, minors, -det3(m)};
}

inline bool is_integral(const FieldElement& x) {
    for (const Rat& c : char_poly(x))
        if (denominator(c) != 1) return false;
    return true;
}

// det(Tr(x_i x_j)), the discriminant of the triple; zero iff the triple is
// linearly dependent over Q.
inline Rat gram_disc(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    require_same_field(a, b);
    require_same_field(a, c);
    const std::array<FieldElement, 3> v = {a, b, c};
    Mat3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) t[i][j] = t[j][i] = trace(v[i] * v[j]);
    return det3(t);
}

// Coordinates as a reduced fraction vector: numerators over one positive
// common denominator, with no factor shared by all four values.
inline std::pair<std::array<Int, 3>, Int> reduced_coordinates(const FieldElement& x) {
    using boost::multiprecision::lcm;
    Int den = lcm(lcm(denominator(x.x0), denominator(x.x1)), denominator(x.x2));
    auto scale = [&](const Rat& q) { return Int(numerator(q) * (den / denominator(q))); };
    return {{scale(x.x0), scale(x.x1), scale(x.x2)}, den};
}

}  // namespace scf
