#include <gtest/gtest.h>

#include <cmath>

#include "omgci/channel.hpp"
#include "omgci/errors.hpp"

using namespace omgci;

TEST(CpCheck, AcceptsPointsAboveTheBoundary) {
    EXPECT_TRUE(cp_check(2.0 / 3.0, 0.5));
    EXPECT_TRUE(cp_check(1.0, 0.0));
    EXPECT_TRUE(cp_check(2.0 / 3.0, 1.0 / 3.0));
}

TEST(CpCheck, RejectsPointsBelowTheBoundary) {
    EXPECT_FALSE(cp_check(2.0 / 3.0, 0.2));
    EXPECT_FALSE(cp_check(3.0, 1.5));
    EXPECT_FALSE(cp_check(1.0, -0.1));
    EXPECT_FALSE(cp_check(std::nan(""), 1.0));
}

TEST(KFromY, SubtractsGapAndHalves) {
    EXPECT_NEAR(k_from_y(2.0 / 3.0, 1.0 / 3.0), 0.0, 1e-16);
    EXPECT_NEAR(k_from_y(2.0 / 3.0, 0.5), 1.0 / 12.0, 1e-16);
    EXPECT_NEAR(k_from_y(1.5, 0.9), 0.2, 1e-15);
    EXPECT_THROW(k_from_y(2.0 / 3.0, 0.2), DomainError);
}

TEST(KFromY, RoundTripsThroughY) {
    for (double tau : {0.1, 0.6, 0.99, 1.01, 2.0, 9.0}) {
        for (double k : {0.0, 1e-6, 0.3, 7.0}) {
            const double y = std::abs(tau - 1.0) + 2.0 * k;
            EXPECT_NEAR(k_from_y(tau, y), k, 1e-15 * (1.0 + k)) << tau << " " << k;
        }
    }
}

TEST(NbarFromK, DividesByGap) {
    EXPECT_NEAR(nbar_from_k(2.0 / 3.0, 1.0 / 12.0), 0.25, 1e-15);
    EXPECT_DOUBLE_EQ(nbar_from_k(2.0, 0.5), 0.5);
    EXPECT_THROW(nbar_from_k(1.0, 0.2), DomainError);
    EXPECT_THROW(nbar_from_k(0.5, -1.0), DomainError);
}

TEST(ClassForTau, SplitsTheAxis) {
    EXPECT_EQ(class_for_tau(-0.5), ChannelClass::ConjugateAmp);
    EXPECT_EQ(class_for_tau(0.5), ChannelClass::Loss);
    EXPECT_EQ(class_for_tau(1.0), ChannelClass::B2);
    EXPECT_EQ(class_for_tau(1.5), ChannelClass::Amp);
    EXPECT_THROW(class_for_tau(0.0), DomainError);
    EXPECT_THROW(class_for_tau(INFINITY), DomainError);
}

TEST(ChannelSpec, RejectsInconsistentClass) {
    EXPECT_THROW(ChannelSpec(ChannelClass::Loss, 1.5, 0.1), DomainError);
    EXPECT_THROW(ChannelSpec(ChannelClass::Amp, 0.5, 0.1), DomainError);
    EXPECT_THROW(ChannelSpec(ChannelClass::B2, 0.9, 0.1), DomainError);
    EXPECT_THROW(ChannelSpec(ChannelClass::Loss, 0.5, -0.1), DomainError);
    EXPECT_NO_THROW(ChannelSpec(ChannelClass::ConjugateAmp, -1.0, 0.1));
}

TEST(ChannelSpec, DerivedViews) {
    const auto loss = ChannelSpec::from_tau_k(2.0 / 3.0, 1.0 / 12.0);
    EXPECT_EQ(loss.cls(), ChannelClass::Loss);
    EXPECT_NEAR(loss.y(), 0.5, 1e-15);
    EXPECT_NEAR(loss.nbar(), 0.25, 1e-15);

    const auto from_y = ChannelSpec::from_tau_y(2.0 / 3.0, 0.5);
    EXPECT_EQ(from_y.cls(), ChannelClass::Loss);
    EXPECT_NEAR(from_y.k(), 1.0 / 12.0, 1e-16);
    EXPECT_THROW(ChannelSpec::from_tau_y(2.0 / 3.0, 0.2), DomainError);

    const auto b2 = ChannelSpec::from_tau_k(1.0, 0.15);
    EXPECT_EQ(b2.cls(), ChannelClass::B2);
    EXPECT_NEAR(b2.nbar(), 0.3, 1e-16);
}

TEST(CanonicalForm, MatchesReferenceRepresentatives) {
    const auto loss = canonical_form(ChannelSpec(ChannelClass::Loss, 0.5, 0.0), 0.0);
    EXPECT_NEAR(loss.t_scale, std::sqrt(0.5), 1e-16);
    EXPECT_NEAR(loss.n_scale, 0.5, 1e-16);
    EXPECT_EQ(loss.delta[0], 0.0);
    EXPECT_EQ(loss.delta[1], 0.0);

    const auto b2 = canonical_form(ChannelSpec(ChannelClass::B2, 1.0, 0.15), 0.3);
    EXPECT_DOUBLE_EQ(b2.t_scale, 1.0);
    EXPECT_DOUBLE_EQ(b2.n_scale, 0.3);

    const auto amp = canonical_form(ChannelSpec(ChannelClass::Amp, 2.0, 0.0), 0.0);
    EXPECT_NEAR(amp.t_scale, std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(amp.n_scale, 1.0, 1e-15);

    EXPECT_THROW(canonical_form(ChannelSpec(ChannelClass::ConjugateAmp, -1.0, 0.1)), DomainError);
    EXPECT_THROW(canonical_form(ChannelSpec(ChannelClass::Loss, 0.5, 0.0), -1.0), DomainError);
}

TEST(CanonicalForm, NoiseScaleEqualsY) {
    for (double tau : {0.2, 0.7, 1.3, 4.0}) {
        for (double k : {0.0, 0.05, 2.0}) {
            const auto spec = ChannelSpec::from_tau_k(tau, k);
            EXPECT_NEAR(canonical_form(spec).n_scale, spec.y(), 1e-14 * (1.0 + spec.y()));
        }
    }
}
