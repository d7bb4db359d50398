#include "omgci/identity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "omgci/cohinfo.hpp"
#include "omgci/entropy.hpp"
#include "omgci/errors.hpp"

namespace omgci {

namespace {

void check_args(double n, double k, double tau, const char* op) {
    if (!(n > 0.0) || !(k >= 0.0) || !(tau > 0.0) || !std::isfinite(n) || !std::isfinite(k) ||
        !std::isfinite(tau)) {
        throw DomainError(std::string(op) + ": requires N > 0, K >= 0, tau > 0 (finite)");
    }
}

// F g'(F) - 2F/(2F+1) as a series in u = 1/F; the direct form loses all
// digits once the gap (~ 1/(12 F^2)) drops below rounding of terms near 1.
double large_f_gap(double big_f) {
    const double u = 1.0 / big_f;
    double sum = 0.0;
    double power = u * u;
    for (int m = 2; m <= 8; ++m) {
        const double coeff = 1.0 / (m + 1) - std::ldexp(1.0, -m);
        sum += (m % 2 == 0 ? coeff : -coeff) * power;
        power *= u;
    }
    return sum;
}

}  // namespace

IdentityTerms identity_terms(double n, double k, double tau) {
    check_args(n, k, tau, "identity_terms");
    const SpectralParams s = spectral_params(n, k, tau);
    const double p = s.p;
    const double p3 = p * p * p;
    const double s1 = tau - 1.0;
    IdentityTerms t;
    t.h = df_dn(n, k, tau);
    if (tau < 1.0) {
        const double c = k + 1.0 - tau;
        // (1 + q - p)/(2p); (1+q)^2 - p^2 = 4 K N (N+1)(K + 1 - tau)
        t.big_f = 2.0 * k * n * (n + 1.0) * c / (p * (1.0 + s.q + p));
        // K(1+tau) + (tau-1)(-1 + N(tau-1) + p), with
        // p - 1 - N(1-tau) = K(2 + K + 2N(1+tau)) / (p + 1 + N(1-tau))
        const double excess = k * (2.0 + k + 2.0 * n * (1.0 + tau)) / (p + 1.0 - n * s1);
        t.h_over_hk = p * p / (2.0 * tau * (1.0 + s.q)) * (k * (1.0 + tau) + s1 * excess);
        t.df_dk = n * (1.0 + n) / p3 * ((-1.0 + n * s1) * s1 + k * (1.0 + tau));
        t.dh_dk = tau * (s.q + 1.0) / p3;
        // (1 + K + N + N tau - p) / (2p)
        const double b1 = 1.0 + k + n + n * tau;
        t.dell_dk = 2.0 * tau * n * (n + 1.0) / (p * (b1 + p));
#ifdef OMGCI_INJECT_FAULT
        t.df_dk = -t.df_dk;
#endif
    } else {
        const double c = k + tau - 1.0;
        // (q - p)/(2p); q^2 - p^2 = 4 K N (N+1)(K + tau - 1)
        t.big_f = 2.0 * k * n * (n + 1.0) * c / (p * (s.q + p));
        t.h_over_hk = p * p / (2.0 * tau * s.q) * (k * (1.0 + tau) + s1 * (n * s1 + tau + p));
        t.df_dk = n * (1.0 + n) / p3 * (k * (1.0 + tau) + s1 * (n * s1 + tau));
        t.dh_dk = tau * s.q / p3;
        // (K + N + tau + N tau - p) / (2p)
        const double b = k + n + tau + n * tau;
        t.dell_dk = 2.0 * tau * n * (n + 1.0) / (p * (b + p));
    }
    return t;
}

double lhs_dk(double n, double k, double tau) {
    check_args(n, k, tau, "lhs_dk");
    // eta = K + N tau (loss) or -1 + tau + K + N tau (amp)
    const double eta = spectral_params(n, k, tau).eta;
    return -tau / (eta * (1.0 + eta));
}

double stationary_lhs(double n, double k, double tau) {
    check_args(n, k, tau, "stationary_lhs");
    return tau * g_prime(spectral_params(n, k, tau).eta);
}

double stationary_rhs(double n, double k, double tau) {
    check_args(n, k, tau, "stationary_rhs");
    // h g'(F) + (1 - tau) g'(ell) regrouped as h g'(f) + (h + 1 - tau) g'(ell);
    // the amp branch would otherwise cancel h against tau - 1.
    const SlopeTerms t = slope_terms(n, k, tau);
    return t.f_term + t.ell_term;
}

double saturation_residual(double n, double k, double tau) {
    const IdentityTerms t = identity_terms(n, k, tau);
    const SpectralParams s = spectral_params(n, k, tau);
    const double lhs = 2.0 * t.big_f / (2.0 * t.big_f + 1.0);
    double rhs = 0.0;
    if (tau < 1.0) {
        const double first = t.h_over_hk * t.df_dk / (1.0 + t.big_f);
        // (F / h_K) ell_K / ((1 + ell) ell) with F / ell = f / (f + ell + 1)
        const double second = (1.0 - tau) / t.dh_dk * (s.f / (s.f + s.ell + 1.0)) * t.dell_dk /
                              (1.0 + s.ell);
        rhs = first + second;
    } else {
        // Both summands grow like N^2 while their sum stays below 1. With
        // h = (tau - 1) + delta the bracket collapses to
        //   delta F_K/(1+F) + (tau - 1) f_K ell / ((f + ell + 1)(f + 1)),
        // where every factor is nonnegative.
        const double s1 = tau - 1.0;
        const double c = k + tau - 1.0;
        const double d = k * (1.0 + tau) + tau * s1 + n * s1 * s1;
        const double delta = 2.0 * k * tau * c / (s.p * (d + s1 * s.p));
        const double b = k + n + tau + n * tau;
        const double f_k = (b + s.p) / (2.0 * s.p);
        const double bracket = delta * t.df_dk / (1.0 + t.big_f) +
                               s1 * f_k * s.ell / ((s.f + s.ell + 1.0) * (s.f + 1.0));
        rhs = bracket / t.dh_dk;
    }
    return (lhs - rhs) / std::max(1.0, std::abs(lhs));
}

double tight_bound_gap(double n, double k, double tau) {
    const double big_f = identity_terms(n, k, tau).big_f;
    if (big_f == 0.0) return 0.0;
    if (big_f > 1e3) return large_f_gap(big_f);
    return big_f * g_prime(big_f) - 2.0 * big_f / (2.0 * big_f + 1.0);
}

bool rhs_monotone_check(double n, double k1, double k2, double tau) {
    if (!(k1 >= 0.0) || !(k2 > k1)) {
        throw DomainError("rhs_monotone_check: requires 0 <= k1 < k2");
    }
    return stationary_rhs(n, k2, tau) >= stationary_rhs(n, k1, tau);
}

}  // namespace omgci
