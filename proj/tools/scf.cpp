#include "scf/scf.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using scf::Int;
using scf::Rat;

enum class Format { human, jsonl, csv };

const std::map<std::string, Format> format_names{
    {"human", Format::human}, {"json", Format::jsonl}, {"csv", Format::csv}};

// "a..b" -> [a, b]
bool parse_range(const std::string& s, long long& lo, long long& hi) {
    const auto pos = s.find("..");
    if (pos == std::string::npos) return false;
    try {
        std::size_t used = 0;
        lo = std::stoll(s.substr(0, pos), &used);
        if (used != pos) return false;
        const std::string rest = s.substr(pos + 2);
        hi = std::stoll(rest, &used);
        if (used != rest.size() || rest.empty()) return false;
    } catch (const std::exception&) {
        return false;
    }
    return lo <= hi;
}

void emit(const std::vector<scf::OutputRecord>& records, Format fmt) {
    if (fmt == Format::csv) std::cout << scf::csv_header() << "\n";
    for (const auto& r : records) {
        switch (fmt) {
            case Format::human: std::cout << scf::human_line(r) << "\n"; break;
            case Format::jsonl: std::cout << scf::to_json(r).dump() << "\n"; break;
            case Format::csv: std::cout << scf::to_csv_row(r) << "\n"; break;
        }
    }
}

void emit_summary(const scf::ScanSummary& s) {
    std::cerr << "scanned " << s.total << " fields: tame=" << s.tame
              << " wild-ii=" << s.wild_ii << " wild-iii=" << s.wild_iii;
    if (s.failures.empty()) {
        std::cerr << "; all checks passed\n";
    } else {
        std::cerr << "; FAILURES at n =";
        for (const auto& n : s.failures) std::cerr << " " << n;
        std::cerr << "\n";
    }
}

int run_classify(long long n, Format fmt) {
    emit({scf::record_from_profile(scf::profile(Int(n)))}, fmt);
    return 0;
}

int run_alpha(long long n, Format fmt) {
    emit({scf::record_from_certificate(scf::certify(Int(n)))}, fmt);
    return 0;
}

int run_verify(long long lo, long long hi, int jobs, Format fmt) {
    const auto items = scf::scan(Int(lo), Int(hi), jobs);
    std::vector<scf::OutputRecord> records;
    records.reserve(items.size());
    for (const auto& cert : items) records.push_back(scf::record_from_certificate(cert));
    emit(records, fmt);
    const auto summary = scf::summarize(items);
    emit_summary(summary);
    return summary.failures.empty() ? 0 : 1;
}

int run_scan(long long lo, long long hi, int jobs, Format fmt) {
    const auto items = scf::scan(Int(lo), Int(hi), jobs);
    std::vector<scf::OutputRecord> records;
    records.reserve(items.size());
    for (const auto& cert : items) records.push_back(scf::record_from_certificate(cert));
    emit(records, fmt);
    emit_summary(scf::summarize(items));
    const auto summary = scf::summarize(items);
    return summary.failures.empty() ? 0 : 1;
}

// The two infinite-looking generator families plus the three sporadic n
// where the norm pair jumps, each recomputed and cross-checked before
// printing, so the output doubles as a self-test.
int run_examples() {
    bool ok = true;
    auto complain = [&ok](const std::string& msg) {
        std::cerr << "examples: " << msg << "\n";
        ok = false;
    };

    // family 1: wild-ii range [1, 300] without the sporadic 237
    {
        std::vector<long long> members;
        for (long long n = 1; n <= 300; ++n)
            if (n % 9 == 3 && n % 27 != 12 && n != 237) members.push_back(n);
        std::size_t good = 0;
        for (long long n : members) {
            const auto cert = scf::certify(Int(n));
            const auto [num, den] = scf::reduced_coordinates(cert.alpha);
            const bool match = cert.profile.decomposition.e == 1 &&
                               cert.profile.decomposition.c == 3 && cert.a0 == 1 &&
                               cert.a1 == -1 && num == std::array<Int, 3>{0, 1, -1} &&
                               den == 3 && cert.checks.all_passed();
            if (match)
                ++good;
            else
                complain("family wild-ii deviates at n=" + std::to_string(n));
        }
        if (members.size() != 22 || good != 22)
            complain("family wild-ii: expected 22 members");
        std::cout << "family wild-ii: 1 <= n <= 300, n = 3 (mod 9), n != 12 (mod 27), n != 237\n"
                  << "  members=" << members.size()
                  << " e=1 c=3 pair=(1,-1) alpha=(rho - rho')/3\n";
    }

    // sporadic n = 237
    std::cout << "sporadic "
              << scf::human_line(scf::record_from_certificate(scf::certify(Int(237)))) << "\n";

    // family 2: wild-iii range [1, 100] without the sporadic 54, 90
    {
        std::vector<long long> members;
        for (long long n = 1; n <= 100; ++n)
            if ((n % 9 == 0 || n % 9 == 6) && n != 54 && n != 90) members.push_back(n);
        std::size_t good = 0;
        for (long long n : members) {
            const auto cert = scf::certify(Int(n));
            const scf::FieldElement expected{Int(n), Rat(-n, 3), 1, 0};
            const bool match = cert.profile.decomposition.e == 3 &&
                               cert.profile.decomposition.c == 1 && cert.a0 == 1 &&
                               cert.a1 == 0 && cert.alpha == expected &&
                               cert.checks.all_passed();
            if (match)
                ++good;
            else
                complain("family wild-iii deviates at n=" + std::to_string(n));
        }
        if (members.size() != 20 || good != 20)
            complain("family wild-iii: expected 20 members");
        std::cout << "family wild-iii: 1 <= n <= 100, n = 0,6 (mod 9), n not in {54, 90}\n"
                  << "  members=" << members.size() << " e=3 c=1 pair=(1,0) alpha=rho - n/3\n";
    }

    for (long long n : {54LL, 90LL})
        std::cout << "sporadic "
                  << scf::human_line(scf::record_from_certificate(scf::certify(Int(n)))) << "\n";

    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generators of rings of integers of simplest cubic fields "
                 "over their associated orders, with exact certification"};
    app.require_subcommand(1);
    app.fallthrough();  // global --format/--jobs may follow the subcommand

    Format fmt = Format::human;
    app.add_option("--format", fmt, "output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
        ->default_val("human");
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for range scans")
        ->envname("SCF_JOBS")
        ->check(CLI::PositiveNumber);

    long long n_classify = 0, n_alpha = 0;
    auto* cmd_classify = app.add_subcommand("classify", "ramification case and conductor");
    cmd_classify->add_option("n", n_classify, "field parameter")->required();

    auto* cmd_alpha = app.add_subcommand("alpha", "construct and certify the generator");
    cmd_alpha->add_option("n", n_alpha, "field parameter")->required();

    std::optional<long long> n_verify;
    std::string verify_range;
    auto* cmd_verify = app.add_subcommand("verify", "run every certification check");
    cmd_verify->add_option("n", n_verify, "field parameter");
    cmd_verify->add_option("--range", verify_range, "inclusive range a..b");

    std::string scan_range;
    auto* cmd_scan = app.add_subcommand("scan", "certify a whole range of n");
    cmd_scan->add_option("range", scan_range, "inclusive range a..b")->required();

    auto* cmd_examples =
        app.add_subcommand("examples", "reproduce the known generator families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_classify->parsed()) return run_classify(n_classify, fmt);
        if (cmd_alpha->parsed()) return run_alpha(n_alpha, fmt);
        if (cmd_verify->parsed()) {
            long long lo, hi;
            if (n_verify && verify_range.empty()) {
                lo = hi = *n_verify;
            } else if (!n_verify && !verify_range.empty()) {
                if (!parse_range(verify_range, lo, hi)) {
                    std::cerr << "verify: malformed range '" << verify_range << "'\n";
                    return 2;
                }
            } else {
                std::cerr << "verify: give exactly one of n or --range\n";
                return 2;
            }
            return run_verify(lo, hi, jobs, fmt);
        }
        if (cmd_scan->parsed()) {
            long long lo, hi;
            if (!parse_range(scan_range, lo, hi)) {
                std::cerr << "scan: malformed range '" << scan_range << "'\n";
                return 2;
            }
            return run_scan(lo, hi, jobs, fmt);
        }
        if (cmd_examples->parsed()) return run_examples();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
