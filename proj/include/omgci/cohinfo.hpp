#pragma once

namespace omgci {

/// Spectral data of the channel output at input photon number N.
///
/// eta is the output occupation, f and ell the symplectic occupations of the
/// joint output/reference state, p the square-root discriminant and q the
/// auxiliary polynomial used by the derivative identities.
struct SpectralParams {
    double eta = 0.0;
    double f = 0.0;
    double ell = 0.0;
    double p = 1.0;
    double q = 0.0;
};

/// One point of a coherent-information curve, in nats.
struct CohInfoSample {
    double n = 0.0;
    double value = 0.0;
    double slope = 0.0;
};

/// The three chain-rule contributions to dG/dN:
/// dG/dN = eta_term - f_term - ell_term.
struct SlopeTerms {
    double eta_term = 0.0;
    double f_term = 0.0;
    double ell_term = 0.0;
};

/// Requires n >= 0, k >= 0, tau > 0. tau < 1 uses the lossy branch; tau >= 1
/// the amplifier branch (tau == 1 is the additive-noise limit).
SpectralParams spectral_params(double n, double k, double tau);

/// G(N, K, tau) = g(eta) - g(f) - g(ell), in nats.
double coherent_info(double n, double k, double tau);

/// df/dN, the closed form h of the stationarity analysis.
double df_dn(double n, double k, double tau);

/// Chain-rule pieces of dG/dN. A term whose occupation vanishes identically
/// in N (f for loss at K = 0, ell for amp at K = 0) contributes 0.
SlopeTerms slope_terms(double n, double k, double tau);

/// dG/dN in nats. At N = 0 with K > 0 this returns -inf; at N = 0 with K = 0
/// it returns the one-sided limit (+inf for 1/2 < tau < 1).
double dG_dN(double n, double k, double tau);

/// G and dG/dN together.
CohInfoSample sample(double n, double k, double tau);

/// lim_{N->inf} G(N, K, tau). At tau == 1 delegates to b2_closed_form; with
/// K = 0 and tau == 1 the value is +inf (identity channel).
double limit_inf(double k, double tau);

/// -1 - log K: the infinite-power value of the additive noise channel.
/// Returns +inf at K = 0; throws for K < 0.
double b2_closed_form(double k);

/// One-sided N -> 0 limits of d g(eta)/dN, d g(ell)/dN and d g(f)/dN.
struct ZeroNLimits {
    double d_eta = 0.0;
    double d_ell = 0.0;
    double d_f = 0.0;
};
ZeroNLimits limits_at_zero(double k, double tau);

/// K -> inf limits of the same three slopes at fixed N > 0:
/// (0, log((1+N)/N), 0).
ZeroNLimits limits_at_kinf(double n);

}  // namespace omgci
