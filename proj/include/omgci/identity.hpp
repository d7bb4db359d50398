#pragma once

namespace omgci {

/// Auxiliary quantities of the uniqueness argument for stationary points.
///
/// big_f = f ell / (f + ell + 1), h = df/dN, and the K-derivatives of F, h and
/// ell. Loss branch for 0 < tau < 1, amplifier branch for tau >= 1.
struct IdentityTerms {
    double big_f = 0.0;
    double h = 0.0;
    double h_over_hk = 0.0;
    double df_dk = 0.0;
    double dh_dk = 0.0;
    double dell_dk = 0.0;
};

/// Closed-form evaluation of every field. Requires n > 0, k >= 0, tau > 0.
IdentityTerms identity_terms(double n, double k, double tau);

/// d/dK of the left side of the stationarity condition, eta' g'(eta). Always < 0.
double lhs_dk(double n, double k, double tau);

/// Left side of the stationarity condition dG/dN = 0: (d eta/dN) g'(eta).
double stationary_lhs(double n, double k, double tau);

/// Right side: h g'(F) + (1 - tau) g'(ell), i.e. (df/dN) g'(f) + (dell/dN) g'(ell).
double stationary_rhs(double n, double k, double tau);

/// Normalised residual of the saturated identity
///   2F/(2F+1) = (h/h_K) F_K/(1+F) + (1-tau) (F/h_K) ell_K/((1+ell) ell).
/// The ell -> 0 case uses F/ell = f/(f+ell+1).
double saturation_residual(double n, double k, double tau);

/// F g'(F) - 2F/(2F+1); strictly positive for F > 0, 0 at F = 0.
double tight_bound_gap(double n, double k, double tau);

/// stationary_rhs(n, k2, tau) >= stationary_rhs(n, k1, tau). Requires 0 <= k1 < k2.
bool rhs_monotone_check(double n, double k1, double k2, double tau);

}  // namespace omgci
