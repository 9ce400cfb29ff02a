#pragma once

#include "scf/arith.hpp"

#include <array>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace scf {

// Element a + b*zeta of Z[zeta], zeta a primitive cube root of unity
// (zeta^2 = -1 - zeta). Euclidean domain with norm a^2 - ab + b^2; the six
// units are +-1, +-zeta, +-zeta^2.
struct Eisenstein {
    Int a{};
    Int b{};

    bool is_zero() const { return a == 0 && b == 0; }
    friend bool operator==(const Eisenstein&, const Eisenstein&) = default;
};

inline Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) {
    return {x.a + y.a, x.b + y.b};
}

inline Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
    return {x.a - y.a, x.b - y.b};
}

inline Eisenstein operator-(const Eisenstein& x) { return {-x.a, -x.b}; }

// (a + b z)(c + d z) = (ac - bd) + (ad + bc - bd) z
inline Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

inline Int norm(const Eisenstein& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

inline std::ostream& operator<<(std::ostream& os, const Eisenstein& x) {
    return os << x.a << (x.b < 0 ? "-" : "+") << abs(x.b) << "z";
}

// zeta -> zeta^2, i.e. a + b zeta -> (a - b) - b zeta.
inline Eisenstein conj(const Eisenstein& x) { return {x.a - x.b, -x.b}; }

inline const std::array<Eisenstein, 6>& eisenstein_units() {
    static const std::array<Eisenstein, 6> u = {{
        {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1},
    }};
    return u;
}

inline Eisenstein epow(const Eisenstein& base, unsigned e) {
    Eisenstein r{1, 0};
    while (e--) r = r * base;
    return r;
}

// Round p/q to the nearest integer, halves away from zero; q > 0.
inline Int round_div(const Int& p, const Int& q) {
    Int quo = p / q;
    Int rem = p % q;
    if (2 * abs(rem) >= q) quo += (rem < 0 ? -1 : 1);
    return quo;
}

// x = q*y + r with norm(r) < norm(y). The quotient is the nearest lattice
// point to the exact rational coordinates of x/y, which keeps both
// fractional parts <= 1/2 and hence norm(r) <= (3/4) norm(y).
inline std::pair<Eisenstein, Eisenstein> divrem(const Eisenstein& x, const Eisenstein& y) {
    if (y.is_zero()) throw std::domain_error("divrem: division by zero");
    const Int ny = norm(y);
    const Eisenstein t = x * conj(y);  // x/y = t/ny exactly
    const Eisenstein q{round_div(t.a, ny), round_div(t.b, ny)};
    return {q, x - q * y};
}

inline bool divides(const Eisenstein& w, const Eisenstein& x) {
    if (w.is_zero()) return x.is_zero();
    return divrem(x, w).second.is_zero();
}

inline std::vector<Eisenstein> associates(const Eisenstein& x) {
    if (x.is_zero()) return {x};
    std::vector<Eisenstein> out;
    out.reserve(6);
    for (const auto& u : eisenstein_units()) out.push_back(u * x);
    return out;
}

// The unique associate inside the half-open 60-degree sector around the
// positive real axis: a + b >= 0 and a > 2b. This is the representative
// reported by gcds and divisor searches; callers that only care about the
// ideal accept any associate.
inline Eisenstein canonical_associate(const Eisenstein& x) {
    if (x.is_zero()) return x;
    for (const auto& u : eisenstein_units()) {
        Eisenstein y = u * x;
        if (y.a + y.b >= 0 && y.a > 2 * y.b) return y;
    }
    throw std::logic_error("canonical_associate: no associate in the canonical sector");
}

inline Eisenstein gcd(Eisenstein x, Eisenstein y) {
    if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    while (!y.is_zero()) {
        auto [q, r] = divrem(x, y);
        x = y;
        y = r;
    }
    return canonical_associate(x);
}

struct NoDivisorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// A prime element above p = 1 (mod 3), found as gcd(p, r - zeta) with r a
// primitive cube root of unity mod p.
inline Eisenstein prime_above(const Int& p) {
    for (Int g = 2;; ++g) {
        Int r = boost::multiprecision::powm(g, (p - 1) / 3, p);
        if (r != 1 && math_mod(r * r + r + 1, p) == 0)
            return gcd(Eisenstein{p, 0}, Eisenstein{r, -1});
    }
}

}  // namespace detail

// A divisor w of A with norm(w) = t (canonical associate), assembled prime
// by prime: the ramified prime 3 contributes powers of 1 - zeta, split
// primes p = 1 (mod 3) contribute the prime above p sharing a factor with
// A, and inert primes p = 2 (mod 3) must occur to an even power. The result
// is checked against both requirements before returning; failure means no
// divisor exists along this decomposition.
inline Eisenstein divisor_with_norm(const Eisenstein& A, const Int& t) {
    if (t <= 0) throw std::invalid_argument("divisor_with_norm: target norm must be positive");
    Eisenstein w{1, 0};
    for (const auto& [p, v] : factorize(t).factors) {
        if (p == 3) {
            w = w * epow({1, -1}, unsigned(v));
        } else if (p % 3 == 1) {
            Eisenstein pi = gcd(A, Eisenstein{p, 0});
            if (norm(pi) == p * p) pi = detail::prime_above(p);  // p itself divides A
            if (norm(pi) != p)
                throw NoDivisorError("divisor_with_norm: no prime of norm " + p.str() +
                                     " divides " + A.a.str() + "+" + A.b.str() + "z");
            w = w * epow(pi, unsigned(v));
        } else {
            if (v % 2)
                throw NoDivisorError("divisor_with_norm: inert prime " + p.str() +
                                     " occurs to an odd power in " + t.str());
            w = w * Eisenstein{ipow(p, unsigned(v / 2)), 0};
        }
    }
    if (norm(w) != t || !divides(w, A))
        throw NoDivisorError("divisor_with_norm: no divisor of norm " + t.str());
    return canonical_associate(w);
}

}  // namespace scf
