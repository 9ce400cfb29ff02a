#pragma once

#include "scf/core.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace scf {

using json = nlohmann::ordered_json;

// Flat, serializable view of a profile or certificate. Field order is fixed
// across JSON and CSV; the two formats carry identical data.
struct OutputRecord {
    Int n, delta, d, e, c;
    std::string case_label;
    Int conductor, disc;
    std::vector<Int> branch_moduli;
    std::optional<Int> a0, a1;
    std::optional<int> epsilon;
    std::optional<Int> m;
    std::optional<std::array<Int, 3>> alpha_num;  // constant, rho, rho' numerators
    std::optional<Int> alpha_den;
    std::vector<std::pair<std::string, bool>> checks;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline OutputRecord record_from_profile(const FieldProfile& p) {
    OutputRecord r{p.n,
                   p.decomposition.delta,
                   p.decomposition.d,
                   p.decomposition.e,
                   p.decomposition.c,
                   to_string(p.case_label),
                   p.conductor,
                   p.field_disc,
                   p.branch_moduli,
                   {}, {}, {}, {}, {}, {}, {}};
    return r;
}

inline OutputRecord record_from_certificate(const GeneratorCertificate& cert) {
    OutputRecord r = record_from_profile(cert.profile);
    r.a0 = cert.a0;
    r.a1 = cert.a1;
    r.epsilon = cert.epsilon;
    r.m = cert.m;
    auto [num, den] = reduced_coordinates(cert.alpha);
    r.alpha_num = num;
    r.alpha_den = den;
    for (const auto& c : cert.checks.checks) r.checks.emplace_back(c.name, c.passed);
    return r;
}

namespace detail {

inline json int_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<std::int64_t>());
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

inline json to_json(const OutputRecord& r) {
    using detail::int_json;
    json j;
    j["n"] = int_json(r.n);
    j["delta"] = int_json(r.delta);
    j["d"] = int_json(r.d);
    j["e"] = int_json(r.e);
    j["c"] = int_json(r.c);
    j["case"] = r.case_label;
    j["conductor"] = int_json(r.conductor);
    j["disc"] = int_json(r.disc);
    json moduli = json::array();
    for (const auto& m : r.branch_moduli) moduli.push_back(int_json(m));
    j["branch_moduli"] = moduli;
    j["a0"] = r.a0 ? int_json(*r.a0) : json();
    j["a1"] = r.a1 ? int_json(*r.a1) : json();
    j["epsilon"] = r.epsilon ? json(*r.epsilon) : json();
    j["m"] = r.m ? int_json(*r.m) : json();
    if (r.alpha_num) {
        json num = json::array();
        for (const auto& v : *r.alpha_num) num.push_back(int_json(v));
        j["alpha_numerator"] = num;
    } else {
        j["alpha_numerator"] = json();
    }
    j["alpha_denominator"] = r.alpha_den ? int_json(*r.alpha_den) : json();
    json checks = json::object();
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    j["checks"] = checks;
    return j;
}

inline OutputRecord record_from_json(const json& j) {
    using detail::int_from_json;
    OutputRecord r{int_from_json(j.at("n")),
                   int_from_json(j.at("delta")),
                   int_from_json(j.at("d")),
                   int_from_json(j.at("e")),
                   int_from_json(j.at("c")),
                   j.at("case").get<std::string>(),
                   int_from_json(j.at("conductor")),
                   int_from_json(j.at("disc")),
                   {}, {}, {}, {}, {}, {}, {}, {}};
    for (const auto& m : j.at("branch_moduli")) r.branch_moduli.push_back(int_from_json(m));
    if (!j.at("a0").is_null()) r.a0 = int_from_json(j.at("a0"));
    if (!j.at("a1").is_null()) r.a1 = int_from_json(j.at("a1"));
    if (!j.at("epsilon").is_null()) r.epsilon = j.at("epsilon").get<int>();
    if (!j.at("m").is_null()) r.m = int_from_json(j.at("m"));
    if (!j.at("alpha_numerator").is_null()) {
        const auto& num = j.at("alpha_numerator");
        r.alpha_num = {int_from_json(num.at(0)), int_from_json(num.at(1)),
                       int_from_json(num.at(2))};
    }
    if (!j.at("alpha_denominator").is_null())
        r.alpha_den = int_from_json(j.at("alpha_denominator"));
    for (const auto& [name, ok] : j.at("checks").items()) r.checks.emplace_back(name, ok.get<bool>());
    return r;
}

inline std::string csv_header() {
    return "n,delta,d,e,c,case,conductor,disc,branch_moduli,a0,a1,epsilon,m,"
           "alpha_num_const,alpha_num_rho,alpha_num_rho_prime,alpha_den,checks";
}

inline std::string to_csv_row(const OutputRecord& r) {
    std::ostringstream os;
    auto opt = [](const std::optional<Int>& v) { return v ? v->str() : std::string(); };
    os << r.n << ',' << r.delta << ',' << r.d << ',' << r.e << ',' << r.c << ','
       << r.case_label << ',' << r.conductor << ',' << r.disc << ',';
    for (std::size_t i = 0; i < r.branch_moduli.size(); ++i)
        os << (i ? ";" : "") << r.branch_moduli[i];
    os << ',' << opt(r.a0) << ',' << opt(r.a1) << ','
       << (r.epsilon ? std::to_string(*r.epsilon) : std::string()) << ',' << opt(r.m) << ',';
    if (r.alpha_num)
        os << (*r.alpha_num)[0] << ',' << (*r.alpha_num)[1] << ',' << (*r.alpha_num)[2];
    else
        os << ",,";
    os << ',' << opt(r.alpha_den) << ',';
    for (std::size_t i = 0; i < r.checks.size(); ++i)
        os << (i ? ";" : "") << r.checks[i].first << '=' << (r.checks[i].second ? 1 : 0);
    return os.str();
}

inline OutputRecord record_from_csv_row(const std::string& row) {
    const auto f = detail::split(row, ',');
    if (f.size() != 18) throw std::invalid_argument("csv row: expected 18 fields");
    OutputRecord r{Int(f[0]), Int(f[1]), Int(f[2]), Int(f[3]), Int(f[4]),
                   f[5],      Int(f[6]), Int(f[7]), {},        {},
                   {},        {},        {},        {},        {},
                   {}};
    if (!f[8].empty())
        for (const auto& m : detail::split(f[8], ';')) r.branch_moduli.emplace_back(m);
    if (!f[9].empty()) r.a0 = Int(f[9]);
    if (!f[10].empty()) r.a1 = Int(f[10]);
    if (!f[11].empty()) r.epsilon = std::stoi(f[11]);
    if (!f[12].empty()) r.m = Int(f[12]);
    if (!f[13].empty()) r.alpha_num = {Int(f[13]), Int(f[14]), Int(f[15])};
    if (!f[16].empty()) r.alpha_den = Int(f[16]);
    if (!f[17].empty())
        for (const auto& c : detail::split(f[17], ';')) {
            const auto eq = c.find('=');
            r.checks.emplace_back(c.substr(0, eq), c.substr(eq + 1) == "1");
        }
    return r;
}

// "(4*rho - rho' - 237)/21" style rendering of the reduced fraction vector;
// terms ordered rho, rho', constant.
inline std::string alpha_to_string(const std::array<Int, 3>& num, const Int& den) {
    struct Term {
        Int coef;
        const char* sym;
    };
    const Term terms[] = {{num[1], "rho"}, {num[2], "rho'"}, {num[0], ""}};
    std::string body;
    int printed = 0;
    for (const auto& [coef, sym] : terms) {
        if (coef == 0) continue;
        const Int mag = abs(coef);
        if (printed)
            body += coef < 0 ? " - " : " + ";
        else if (coef < 0)
            body += "-";
        if (*sym) {
            if (mag != 1) body += mag.str() + "*";
            body += sym;
        } else {
            body += mag.str();
        }
        ++printed;
    }
    if (!printed) return "0";
    if (den == 1) return body;
    if (printed > 1) body = "(" + body + ")";
    return body + "/" + den.str();
}

inline std::string human_line(const OutputRecord& r) {
    std::ostringstream os;
    os << "n=" << r.n << " case=" << r.case_label << " delta=" << r.delta << " d=" << r.d
       << " e=" << r.e << " c=" << r.c << " conductor=" << r.conductor << " disc=" << r.disc;
    os << " branch={";
    for (std::size_t i = 0; i < r.branch_moduli.size(); ++i)
        os << (i ? "," : "") << r.branch_moduli[i];
    os << "}";
    if (r.a0) {
        os << " pair=(" << *r.a0 << "," << *r.a1 << ")";
        if (r.epsilon) os << " epsilon=" << (*r.epsilon > 0 ? "+1" : "-1");
        if (r.m) os << " m=" << *r.m;
        os << " alpha=" << alpha_to_string(*r.alpha_num, *r.alpha_den);
    }
    if (!r.checks.empty()) {
        std::string failed;
        for (const auto& [name, ok] : r.checks)
            if (!ok) failed += (failed.empty() ? "" : ",") + name;
        os << " checks=" << (failed.empty() ? "PASS" : "FAIL[" + failed + "]");
    }
    return os.str();
}

}  // namespace scf
