#include "scf/report.hpp"

#include "gtest/gtest.h"

#include <string>
#include <vector>

namespace scf {
namespace {

TEST(AlphaToString, Forms) {
    EXPECT_EQ(alpha_to_string({-237, 4, -1}, 21), "(4*rho - rho' - 237)/21");
    EXPECT_EQ(alpha_to_string({0, 1, -1}, 3), "(rho - rho')/3");
    EXPECT_EQ(alpha_to_string({-2, 1, 0}, 1), "rho - 2");
    EXPECT_EQ(alpha_to_string({0, 1, 0}, 1), "rho");
    EXPECT_EQ(alpha_to_string({0, 1, 0}, 3), "rho/3");
    EXPECT_EQ(alpha_to_string({0, 0, 0}, 1), "0");
    EXPECT_EQ(alpha_to_string({-120, 3, 1}, 7), "(3*rho + rho' - 120)/7");
}

TEST(Records, ProfileOnlyHasNoGeneratorFields) {
    const auto rec = record_from_profile(profile(237));
    EXPECT_EQ(rec.n, 237);
    EXPECT_EQ(rec.case_label, "wild-ii");
    EXPECT_EQ(rec.conductor, 2709);
    EXPECT_FALSE(rec.a0.has_value());
    EXPECT_FALSE(rec.alpha_den.has_value());
    EXPECT_TRUE(rec.checks.empty());
}

TEST(Records, CertificateRecord) {
    const auto rec = record_from_certificate(certify(54));
    EXPECT_EQ(rec.case_label, "wild-iii");
    ASSERT_TRUE(rec.alpha_num.has_value());
    EXPECT_EQ(*rec.alpha_num, (std::array<Int, 3>{-18, 2, -1}));
    EXPECT_EQ(*rec.alpha_den, 49);
    EXPECT_FALSE(rec.epsilon.has_value());
    EXPECT_FALSE(rec.checks.empty());
    for (const auto& [name, ok] : rec.checks) EXPECT_TRUE(ok) << name;
}

TEST(Records, JsonRoundTrip) {
    for (const auto& cert : scan(-15, 15)) {
        const auto rec = record_from_certificate(cert);
        EXPECT_EQ(record_from_json(to_json(rec)), rec) << "n=" << cert.profile.n;
    }
    const auto prof = record_from_profile(profile(-7));
    EXPECT_EQ(record_from_json(to_json(prof)), prof);
}

TEST(Records, CsvRoundTrip) {
    for (const auto& cert : scan(-15, 15)) {
        const auto rec = record_from_certificate(cert);
        EXPECT_EQ(record_from_csv_row(to_csv_row(rec)), rec) << "n=" << cert.profile.n;
    }
    const auto prof = record_from_profile(profile(-7));
    EXPECT_EQ(record_from_csv_row(to_csv_row(prof)), prof);
}

// The two machine formats carry identical data.
TEST(Records, JsonAndCsvAgree) {
    for (const auto& cert : scan(230, 240)) {
        const auto rec = record_from_certificate(cert);
        EXPECT_EQ(record_from_json(to_json(rec)), record_from_csv_row(to_csv_row(rec)));
    }
}

TEST(Records, CsvHeaderMatchesRowWidth) {
    const auto header = csv_header();
    const auto row = to_csv_row(record_from_certificate(certify(12)));
    const auto count = [](const std::string& s) {
        std::size_t c = 1;
        for (char ch : s) c += ch == ',';
        return c;
    };
    EXPECT_EQ(count(header), 18u);
    EXPECT_EQ(count(row), 18u);
}

TEST(Records, JsonFieldOrderFixed) {
    const auto j = to_json(record_from_certificate(certify(1)));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    const std::vector<std::string> want{
        "n", "delta", "d", "e", "c", "case", "conductor", "disc", "branch_moduli",
        "a0", "a1", "epsilon", "m", "alpha_numerator", "alpha_denominator", "checks"};
    EXPECT_EQ(keys, want);
}

TEST(Records, BigValuesSurviveJson) {
    OutputRecord rec = record_from_profile(profile(5));
    rec.disc = Int("123456789012345678901234567890");
    EXPECT_EQ(record_from_json(to_json(rec)).disc, rec.disc);
    EXPECT_EQ(record_from_csv_row(to_csv_row(rec)).disc, rec.disc);
}

TEST(HumanLine, KeyFields) {
    const auto line = human_line(record_from_certificate(certify(237)));
    EXPECT_NE(line.find("n=237"), std::string::npos);
    EXPECT_NE(line.find("case=wild-ii"), std::string::npos);
    EXPECT_NE(line.find("pair=(4,-1)"), std::string::npos);
    EXPECT_NE(line.find("(4*rho - rho' - 237)/21"), std::string::npos);
    EXPECT_NE(line.find("checks=PASS"), std::string::npos);
}

}  // namespace
}  // namespace scf
