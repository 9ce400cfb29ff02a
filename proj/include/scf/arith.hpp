#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace scf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// x mod m with result in [0, m), independent of the sign of x.
inline Int math_mod(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

inline Int ipow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

// Prime decomposition; primes strictly increasing.
struct Factorization {
    Int value;
    std::vector<std::pair<Int, int>> factors;

    Int product() const {
        Int p = 1;
        for (const auto& [q, e] : factors) p *= ipow(q, unsigned(e));
        return p;
    }
};

// Deterministic Miller-Rabin. The fixed base set certifies primality for all
// n < 3.3e24, far beyond any discriminant this library factors.
inline bool is_prime(const Int& n) {
    static const int bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (int p : bases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int a : bases) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

// Floyd-cycle Pollard rho with a deterministic retry schedule; n odd,
// composite, not divisible by 3.
inline Int pollard_rho(const Int& n) {
    for (Int c = 1;; ++c) {
        auto step = [&](const Int& v) { return (v * v + c) % n; };
        Int x = 2, y = 2, d = 1;
        do {
            x = step(x);
            y = step(step(y));
            d = boost::multiprecision::gcd(abs(x - y), n);
        } while (d == 1);
        if (d != n) return d;
    }
}

}  // namespace detail

inline Factorization factorize(Int n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    Factorization out;
    out.value = n;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel; anything that survives the cap is split by rho below
    const Int trial_cap = 1000000;
    Int p = 5;
    int step = 2;
    while (p <= trial_cap && p * p <= n) {
        strip(p);
        p += step;
        step = 6 - step;
    }
    if (n > 1) {
        std::map<Int, int> big;
        std::vector<Int> pending{n};
        while (!pending.empty()) {
            Int m = pending.back();
            pending.pop_back();
            if (is_prime(m)) {
                ++big[m];
                continue;
            }
            Int d = detail::pollard_rho(m);
            pending.push_back(d);
            pending.push_back(m / d);
        }
        for (const auto& [q, e] : big) out.factors.emplace_back(q, e);
    }
    return out;
}

// Both canonical shapes of delta = n^2 + 3n + 9 at once: delta = b c^3 with
// b cube-free, and delta = d e^2 c^3 with d, e squarefree and coprime. Each
// prime exponent v contributes v mod 3 to b (1 -> d, 2 -> e) and floor(v/3)
// to c, so the same c appears in both shapes.
struct DeltaDecomposition {
    Int n;
    Int delta;
    Int b{1}, c{1};
    Int d{1}, e{1};
};

inline DeltaDecomposition delta_decompose(const Int& n) {
    DeltaDecomposition out;
    out.n = n;
    out.delta = n * n + 3 * n + 9;
    if (out.delta <= 0) throw std::logic_error("delta_decompose: delta must be positive");
    for (const auto& [p, v] : factorize(out.delta).factors) {
        out.c *= ipow(p, unsigned(v / 3));
        if (v % 3 == 1) out.d *= p;
        if (v % 3 == 2) out.e *= p;
    }
    out.b = out.d * out.e * out.e;
    return out;
}

// Legendre symbol (x/3): +1 for x = 1 (mod 3), -1 for x = 2 (mod 3).
inline int legendre3(const Int& x) {
    Int r = math_mod(x, 3);
    if (r == 0) throw std::domain_error("legendre3: argument divisible by 3");
    return r == 1 ? +1 : -1;
}

}  // namespace scf
