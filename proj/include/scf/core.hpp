#pragma once

#include "scf/arith.hpp"
#include "scf/cubicfield.hpp"
#include "scf/eisenstein.hpp"
#include "scf/groupring.hpp"
#include "scf/lattice.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace scf {

// Ramification type of the degree-3 extension: only 3 can ramify wildly,
// governed by n mod 27.
//   tame-i   : 3 does not divide n, or n = 12 (mod 27); conductor de
//   wild-ii  : n = 3 (mod 9) and n != 12 (mod 27);      conductor 9de
//   wild-iii : n = 0, 6 (mod 9);                        conductor 3de
enum class CaseLabel { tame_i, wild_ii, wild_iii };

inline const char* to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::tame_i: return "tame-i";
        case CaseLabel::wild_ii: return "wild-ii";
        default: return "wild-iii";
    }
}

struct FieldProfile {
    Int n{};
    DeltaDecomposition decomposition;
    CaseLabel case_label{CaseLabel::tame_i};
    Int conductor{};
    Int field_disc{};
    std::vector<Int> branch_moduli;

    bool tame() const { return case_label == CaseLabel::tame_i; }
};

struct NonIntegralMError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A_n = n + 3(1 + zeta); norm(A_n) = delta.
inline Eisenstein shanks_A(const Int& n) { return {n + 3, 3}; }

inline std::vector<Int> branch_moduli(CaseLabel label, const Int& d, const Int& e) {
    const Int de = d * e;
    switch (label) {
        case CaseLabel::tame_i: return {de};
        case CaseLabel::wild_ii: return {9 * de, 3 * de};
        default: return {3 * de, de};
    }
}

inline FieldProfile profile(const Int& n) {
    FieldProfile p;
    p.n = n;
    p.decomposition = delta_decompose(n);
    const auto& dec = p.decomposition;
    const Int n3 = math_mod(n, 3), n9 = math_mod(n, 9), n27 = math_mod(n, 27);
    if (n3 != 0 || n27 == 12)
        p.case_label = CaseLabel::tame_i;
    else if (n9 == 3)
        p.case_label = CaseLabel::wild_ii;
    else
        p.case_label = CaseLabel::wild_iii;  // n9 in {0, 6}

    const Int de = dec.d * dec.e;
    switch (p.case_label) {
        case CaseLabel::tame_i: p.conductor = de; break;
        case CaseLabel::wild_ii: p.conductor = 9 * de; break;
        case CaseLabel::wild_iii: p.conductor = 3 * de; break;
    }

    // Independent route: gamma times the odd part of rad(b); the two
    // formulas agreeing for every n is a standing consistency check.
    Int cond2 = (n3 != 0 || n27 == 12) ? 1 : 9;
    for (const auto& [q, v] : factorize(dec.b).factors)
        if (q != 3) cond2 *= q;
    if (cond2 != p.conductor)
        throw std::logic_error("profile: conductor formulas disagree at n = " + n.str());

    // ramification shape of d, e, c per case
    bool shape_ok = dec.d % 3 != 0;
    switch (p.case_label) {
        case CaseLabel::tame_i:
            shape_ok = shape_ok && dec.e % 3 != 0;
            break;
        case CaseLabel::wild_ii:
            shape_ok = shape_ok && dec.e % 3 != 0 && dec.c % 3 == 0 && dec.c % 9 != 0;
            break;
        case CaseLabel::wild_iii:
            shape_ok = shape_ok && dec.e % 3 == 0 && dec.c % 3 != 0;
            break;
    }
    if (!shape_ok)
        throw std::logic_error("profile: ramification shape violated at n = " + n.str());

    p.field_disc = p.conductor * p.conductor;
    p.branch_moduli = branch_moduli(p.case_label, dec.d, dec.e);
    return p;
}

inline std::vector<Int> branch_moduli(const FieldProfile& p) {
    return branch_moduli(p.case_label, p.decomposition.d, p.decomposition.e);
}

// Z-basis of the associated order inside Q[G]: the full group ring when
// tame; adjoining the trace idempotent (1 + sigma + sigma^2)/3 when wild
// (sigma^2 is then redundant: sigma^2 = 3e - 1 - sigma).
inline std::vector<GroupRingElement> associated_order_basis(const FieldProfile& p) {
    if (p.tame()) return {gr_one(), gr_sigma(), gr_sigma_sq()};
    return {gr_one(), gr_sigma(), idempotent(Branch::trivial)};
}

// The canonical pair (a0, a1) with a0 + a1 zeta dividing A_n and
// a0^2 - a0 a1 + a1^2 equal to ec (cases i, ii) or ec/3 (case iii).
inline std::pair<Int, Int> find_pair(const FieldProfile& p) {
    Int target = p.decomposition.e * p.decomposition.c;
    if (p.case_label == CaseLabel::wild_iii) target /= 3;
    const Eisenstein w = divisor_with_norm(shanks_A(p.n), target);
    return {w.a, w.b};
}

struct EpsilonM {
    int epsilon;
    Int m;
};

// Tame case only: epsilon is the Legendre symbol of n(a0+a1) (or of a0 when
// n = 12 mod 27), and m = (epsilon e c^2 - n(a0+a1))/3 must land in Z. Both
// conditions can fail for an individual associate of the pair; callers then
// move on to the next associate.
inline EpsilonM epsilon_and_m(const Int& n, const Int& a0, const Int& a1,
                              const FieldProfile& p) {
    if (!p.tame()) throw std::invalid_argument("epsilon_and_m: tame case only");
    const Int arg = math_mod(n, 3) != 0 ? Int(n * (a0 + a1)) : a0;
    if (math_mod(arg, 3) == 0)
        throw NonIntegralMError("epsilon_and_m: Legendre argument divisible by 3");
    const int eps = legendre3(arg);
    const Int ec2 = p.decomposition.e * p.decomposition.c * p.decomposition.c;
    const Int num = eps * ec2 - n * (a0 + a1);
    if (num % 3 != 0)
        throw NonIntegralMError("epsilon_and_m: m is not an integer");
    return {eps, num / 3};
}

struct CheckResult {
    std::string name;
    bool passed{};
    std::string witness;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

struct GeneratorCertificate {
    FieldProfile profile;
    Int a0{}, a1{};
    std::optional<int> epsilon;  // tame only
    std::optional<Int> m;        // tame only
    FieldElement alpha;
    VerificationReport checks;  // empty until verified
};

// Generator from an explicit pair (a0, a1):
//   tame : alpha = (a0 rho + a1 rho' + m) / (e c^2)
//   wild : alpha = (3 a0 rho + 3 a1 rho' - n(a0+a1)) / (e c^2)
inline GeneratorCertificate alpha_from_pair(const FieldProfile& p, const Int& a0,
                                            const Int& a1) {
    GeneratorCertificate cert;
    cert.profile = p;
    cert.a0 = a0;
    cert.a1 = a1;
    const Int ec2 = p.decomposition.e * p.decomposition.c * p.decomposition.c;
    if (p.tame()) {
        const EpsilonM em = epsilon_and_m(p.n, a0, a1, p);
        cert.epsilon = em.epsilon;
        cert.m = em.m;
        cert.alpha = {p.n, Rat(em.m, ec2), Rat(a0, ec2), Rat(a1, ec2)};
    } else {
        cert.alpha = {p.n, Rat(-p.n * (a0 + a1), ec2), Rat(3 * a0, ec2), Rat(3 * a1, ec2)};
    }
    return cert;
}

inline GeneratorCertificate alpha(const FieldProfile& p) {
    const auto [a0, a1] = find_pair(p);
    if (!p.tame()) return alpha_from_pair(p, a0, a1);
    // The canonical associate can fail the epsilon/m integrality
    // preconditions; any valid associate certifies the same lattice.
    for (const Eisenstein& w : associates({a0, a1})) {
        try {
            return alpha_from_pair(p, w.a, w.b);
        } catch (const NonIntegralMError&) {
        }
    }
    throw NonIntegralMError("alpha: no associate of the pair yields an integral m at n = " +
                            p.n.str());
}

// Wild integral basis {1, phi, psi}:
//   phi = (3 rho - n)/c   (wild-ii)   or (3 rho - n)/(3c)   (wild-iii)
//   psi = (9 rho^2 - 6n rho - 2n^2 - 9n - 27) / (3 e c^2)
// In the {1, rho, rho'} coordinates 9 rho^2 = 18 + 9(n+1) rho + 9 rho'.
inline std::pair<FieldElement, FieldElement> integral_basis(const FieldProfile& p) {
    if (p.tame()) throw std::invalid_argument("integral_basis: wild cases only");
    const Int& n = p.n;
    const Int& c = p.decomposition.c;
    const Int den_phi = p.case_label == CaseLabel::wild_ii ? c : Int(3 * c);
    const FieldElement phi{n, Rat(-n, den_phi), Rat(3, den_phi), 0};
    const Int l = 3 * p.decomposition.e * c * c;
    const FieldElement psi{n, Rat(-2 * n * n - 9 * n - 9, l), Rat(3 * n + 9, l), Rat(9, l)};
    return {phi, psi};
}

// (s, a, t) with s = c/3, a = 3e (wild-ii) or s = c, a = e/3 (wild-iii),
// t = n/3; the inputs under which hw_check certifies {1, phi, psi}.
struct HwParameters {
    Int s, a, t;
};

inline HwParameters hw_parameters(const FieldProfile& p) {
    if (p.tame()) throw std::invalid_argument("hw_parameters: wild cases only");
    const Int& c = p.decomposition.c;
    const Int& e = p.decomposition.e;
    if (p.case_label == CaseLabel::wild_ii) return {c / 3, 3 * e, p.n / 3};
    return {c, e / 3, p.n / 3};
}

// Integral-basis criterion for a monic cubic g = X^3 + b1 X^2 + c1 X + d1
// with root rho generating a field of discriminant D:
//   (i)  disc(g) = s^6 a^2 D
//   (ii) g''(t)/2 = 0 (mod s), g'(t) = 0 (mod s^2 a), g(t) = 0 (mod s^3 a^2)
// When both hold, {1, (rho-t)/s, (rho^2 + (t+b1) rho + t^2 + b1 t + c1)/(s^2 a)}
// is an integral basis.
inline bool hw_check(const Int& b1, const Int& c1, const Int& d1, const Int& s,
                     const Int& a, const Int& t, const Int& D) {
    if (s == 0 || a == 0) throw std::domain_error("hw_check: s and a must be nonzero");
    const Int disc = 18 * b1 * c1 * d1 - 4 * b1 * b1 * b1 * d1 + b1 * b1 * c1 * c1 -
                     4 * c1 * c1 * c1 - 27 * d1 * d1;
    if (disc != ipow(s, 6) * a * a * D) return false;
    const Int half_g2 = 3 * t + b1;
    const Int g1 = 3 * t * t + 2 * b1 * t + c1;
    const Int g0 = t * t * t + b1 * t * t + c1 * t + d1;
    return half_g2 % s == 0 && g1 % (s * s * a) == 0 && g0 % (s * s * s * a * a) == 0;
}

// The Z-span of a set of field elements as an explicit lattice in the
// {1, rho, rho'} coordinates.
inline RationalLattice element_span(const std::vector<FieldElement>& xs) {
    using boost::multiprecision::lcm;
    RationalLattice L;
    for (const auto& x : xs)
        for (const Rat* q : {&x.x0, &x.x1, &x.x2}) L.den = lcm(L.den, denominator(*q));
    for (const auto& x : xs) {
        auto scale = [&](const Rat& q) { return Int(numerator(q) * (L.den / denominator(q))); };
        L.gens.push_back({scale(x.x0), scale(x.x1), scale(x.x2)});
    }
    return L;
}

namespace detail {

inline std::string lattice_str(const RationalLattice& L) {
    std::ostringstream os;
    os << "den=" << L.den << " hnf=[";
    bool first = true;
    for (const auto& row : hnf(L.gens)) {
        if (!first) os << ",";
        first = false;
        os << "[" << row[0] << "," << row[1] << "," << row[2] << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace detail

// Certification of O = Z[G].alpha (tame) resp. O = Z[G].alpha + Z =
// A.(alpha+1) (wild) through the sublattice-of-equal-discriminant
// criterion: an integral triple spanning a lattice of discriminant equal to
// the field discriminant spans the full ring of integers.
inline VerificationReport verify(const GeneratorCertificate& cert) {
    VerificationReport rep;
    auto add = [&rep](std::string name, bool ok, std::string witness) {
        rep.checks.push_back({std::move(name), ok, std::move(witness)});
    };

    const FieldProfile& p = cert.profile;
    const FieldElement& al = cert.alpha;
    const Rat D(p.field_disc);

    const auto cp = char_poly(al);
    const bool v1 = denominator(cp[0]) == 1 && denominator(cp[1]) == 1 && denominator(cp[2]) == 1;
    add("alpha_integral", v1,
        "char_poly=[" + cp[0].str() + "," + cp[1].str() + "," + cp[2].str() + "]");

    const FieldElement one = fe_one(p.n);
    const FieldElement sal = apply_sigma(al);
    const FieldElement ssal = apply_sigma(sal);

    bool v2;
    if (p.tame()) {
        // {alpha, sigma alpha, sigma^2 alpha} is a Z-basis of O iff it is
        // integral with discriminant equal to the field discriminant
        const Rat disc = gram_disc(al, sal, ssal);
        v2 = disc == D;
        add("conjugate_disc", v2, "disc=" + disc.str() + " expected=" + p.field_disc.str());
    } else {
        const Rat tr = trace(al);
        const bool trace_zero = tr == 0;
        add("alpha_trace_zero", trace_zero, "trace=" + tr.str());

        // trace-zero alpha makes Z[G].alpha = Z alpha + Z sigma(alpha), so
        // {1, alpha, sigma alpha} spans Z[G].alpha + Z
        const Rat disc = gram_disc(one, al, sal);
        const bool disc_ok = disc == D;
        add("unit_alpha_disc", disc_ok, "disc=" + disc.str() + " expected=" + p.field_disc.str());
        v2 = trace_zero && disc_ok;

        const RationalLattice order_lattice = element_span({one, al, sal});

        // the associated order applied to alpha + 1 spans the same lattice
        std::vector<FieldElement> gens;
        const FieldElement ap1 = al + one;
        for (const auto& g : associated_order_basis(p)) gens.push_back(act(g, ap1));
        const RationalLattice assoc_lattice = element_span(gens);
        const bool v3 = lattice_equal(assoc_lattice, order_lattice);
        add("associated_order_span", v3,
            detail::lattice_str(assoc_lattice) + " vs " + detail::lattice_str(order_lattice));

        // agreement with the independent integral basis {1, phi, psi}
        const auto [phi, psi] = integral_basis(p);
        const Rat disc_ib = gram_disc(one, phi, psi);
        const bool v4a = is_integral(phi) && is_integral(psi) && disc_ib == D;
        add("integral_basis_disc", v4a,
            "disc=" + disc_ib.str() + " expected=" + p.field_disc.str());
        const RationalLattice ib_lattice = element_span({one, phi, psi});
        const bool v4 = lattice_equal(order_lattice, ib_lattice);
        add("integral_basis_span", v4,
            detail::lattice_str(order_lattice) + " vs " + detail::lattice_str(ib_lattice));
    }

    const bool v5 = p.conductor * p.conductor == p.field_disc;
    add("conductor_squared_disc", v5,
        "conductor=" + p.conductor.str() + " disc=" + p.field_disc.str());

    // equal discriminant on a non-integral triple would be a contradiction
    add("disc_implies_integral", !(v2 && !v1), "");
    return rep;
}

inline GeneratorCertificate certify(const Int& n) {
    GeneratorCertificate cert = alpha(profile(n));
    cert.checks = verify(cert);
    return cert;
}

// Certify every n in [from, to]. Work items are independent; with jobs > 1
// they are distributed over threads but the returned order (and therefore
// any serialized output) is identical to the serial run.
inline std::vector<GeneratorCertificate> scan(const Int& from, const Int& to, int jobs = 1) {
    if (from > to) throw std::invalid_argument("scan: empty range");
    const std::size_t count = Int(to - from + 1).convert_to<std::size_t>();
    std::vector<GeneratorCertificate> out(count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = certify(from + Int(i));
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = certify(from + Int(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

struct ScanSummary {
    std::size_t total{};
    std::size_t tame{};
    std::size_t wild_ii{};
    std::size_t wild_iii{};
    std::vector<Int> failures;  // n values with a failed check
};

inline ScanSummary summarize(const std::vector<GeneratorCertificate>& items) {
    ScanSummary s;
    s.total = items.size();
    for (const auto& cert : items) {
        switch (cert.profile.case_label) {
            case CaseLabel::tame_i: ++s.tame; break;
            case CaseLabel::wild_ii: ++s.wild_ii; break;
            case CaseLabel::wild_iii: ++s.wild_iii; break;
        }
        if (!cert.checks.all_passed()) s.failures.push_back(cert.profile.n);
    }
    return s;
}

}  // namespace scf
