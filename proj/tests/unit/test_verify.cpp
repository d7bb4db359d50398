#include <gtest/gtest.h>

#include <cmath>

#include "omgci/errors.hpp"
#include "omgci/verify.hpp"

using namespace omgci;

namespace {

VerifyConfig small_config() {
    VerifyConfig cfg;
    cfg.samples = 2000;
    return cfg;
}

}  // namespace

TEST(Verify, SmallRunPasses) {
    const auto report = run_verification(small_config());
    EXPECT_TRUE(report.passed());
    EXPECT_FALSE(report.properties.empty());
    for (const auto& p : report.properties) {
        EXPECT_TRUE(p.passed()) << p.name << " worst " << p.worst << " tol " << p.tolerance;
        EXPECT_GT(p.samples, 0u) << p.name;
    }
}

TEST(Verify, ReportIsDeterministic) {
    const auto a = run_verification(small_config());
    const auto b = run_verification(small_config());
    ASSERT_EQ(a.properties.size(), b.properties.size());
    for (std::size_t i = 0; i < a.properties.size(); ++i) {
        EXPECT_EQ(a.properties[i].name, b.properties[i].name);
        EXPECT_EQ(a.properties[i].samples, b.properties[i].samples);
        EXPECT_EQ(a.properties[i].violations, b.properties[i].violations);
        if (!std::isnan(a.properties[i].worst)) {
            EXPECT_EQ(a.properties[i].worst, b.properties[i].worst);
        }
    }
}

TEST(Verify, UnknownToleranceIsRejected) {
    auto cfg = small_config();
    cfg.tolerances["no_such_check"] = 1.0;
    EXPECT_THROW(run_verification(cfg), DomainError);
}

TEST(Verify, ZeroToleranceExposesRoundoff) {
    auto cfg = small_config();
    cfg.tolerances["saturation"] = 0.0;
    const auto report = run_verification(cfg);
    EXPECT_FALSE(report.passed());
}

TEST(Verify, DefaultTolerancesAreNamed) {
    const auto& tol = default_tolerances();
    EXPECT_EQ(tol.at("saturation"), 1e-9);
    EXPECT_EQ(tol.at("oracle_spectrum"), 1e-9);
    EXPECT_EQ(tol.at("oracle_cohinfo"), 1e-8);
    EXPECT_EQ(tol.at("finite_difference"), 1e-5);
    EXPECT_EQ(tol.at("supremum"), 1e-3);
}
