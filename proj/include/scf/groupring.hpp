#pragma once

#include "scf/arith.hpp"
#include "scf/cubicfield.hpp"
#include "scf/eisenstein.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

namespace scf {

// Element c0 + c1*sigma + c2*sigma^2 of Q[G], G the cyclic Galois group of
// order 3. Multiplication is cyclic convolution.
struct GroupRingElement {
    Rat c0{}, c1{}, c2{};

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const GroupRingElement& g) {
    return os << "(" << g.c0 << ", " << g.c1 << ", " << g.c2 << ")";
}

inline GroupRingElement gr_one() { return {1, 0, 0}; }
inline GroupRingElement gr_sigma() { return {0, 1, 0}; }
inline GroupRingElement gr_sigma_sq() { return {0, 0, 1}; }

inline GroupRingElement operator+(const GroupRingElement& g, const GroupRingElement& h) {
    return {g.c0 + h.c0, g.c1 + h.c1, g.c2 + h.c2};
}

inline GroupRingElement operator-(const GroupRingElement& g, const GroupRingElement& h) {
    return {g.c0 - h.c0, g.c1 - h.c1, g.c2 - h.c2};
}

inline GroupRingElement operator-(const GroupRingElement& g) { return {-g.c0, -g.c1, -g.c2}; }

inline GroupRingElement operator*(const Rat& q, const GroupRingElement& g) {
    return {q * g.c0, q * g.c1, q * g.c2};
}

inline GroupRingElement operator*(const GroupRingElement& g, const GroupRingElement& h) {
    return {g.c0 * h.c0 + g.c1 * h.c2 + g.c2 * h.c1,
            g.c0 * h.c1 + g.c1 * h.c0 + g.c2 * h.c2,
            g.c0 * h.c2 + g.c1 * h.c1 + g.c2 * h.c0};
}

// g.x = c0 x + c1 sigma(x) + c2 sigma^2(x)
inline FieldElement act(const GroupRingElement& g, const FieldElement& x) {
    const FieldElement sx = apply_sigma(x);
    const FieldElement ssx = apply_sigma(sx);
    return g.c0 * x + g.c1 * sx + g.c2 * ssx;
}

// The two idempotents of Q[G]: the primary branch (2 - sigma - sigma^2)/3
// kills rationals and fixes trace-zero elements; the trivial branch
// (1 + sigma + sigma^2)/3 is the trace projector. They sum to 1.
enum class Branch { primary, trivial };

inline GroupRingElement idempotent(Branch which) {
    if (which == Branch::primary) return {Rat(2, 3), Rat(-1, 3), Rat(-1, 3)};
    return {Rat(1, 3), Rat(1, 3), Rat(1, 3)};
}

inline const std::array<GroupRingElement, 6>& group_ring_units() {
    static const std::array<GroupRingElement, 6> u = {{
        {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1},
    }};
    return u;
}

// The ring map Z[G] -> Z[zeta] with sigma -> zeta; kernel (1 + sigma + sigma^2).
// Deliberately restricted to integral coordinates.
inline Eisenstein nu(const GroupRingElement& g) {
    if (denominator(g.c0) != 1 || denominator(g.c1) != 1 || denominator(g.c2) != 1)
        throw std::domain_error("nu: integral coordinates required");
    return {Int(numerator(g.c0) - numerator(g.c2)), Int(numerator(g.c1) - numerator(g.c2))};
}

}  // namespace scf
