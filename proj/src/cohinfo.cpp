#include "omgci/cohinfo.hpp"

#include <cmath>
#include <limits>

#include "omgci/entropy.hpp"
#include "omgci/errors.hpp"

namespace omgci {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRoundoffClamp = 1e-12;

void check_args(double n, double k, double tau, const char* op) {
    if (!(n >= 0.0) || !(k >= 0.0) || !(tau > 0.0) || !std::isfinite(n) || !std::isfinite(k) ||
        !std::isfinite(tau)) {
        throw DomainError(std::string(op) + ": requires N >= 0, K >= 0, tau > 0 (finite)");
    }
}

double clamp_roundoff(double x) { return (x < 0.0 && x > -kRoundoffClamp) ? 0.0 : x; }

// Half the N-derivative of p^2; every summand is non-negative on both branches.
double half_dp2_dn(double n, double k, double tau) {
    const double s = tau - 1.0;
    return tau < 1.0 ? k * (1.0 + tau) - s + n * s * s : k * (1.0 + tau) + tau * s + n * s * s;
}

// K + 1 - tau (loss) or K + tau - 1 (amp).
double noise_gap(double k, double tau) { return tau < 1.0 ? k + 1.0 - tau : k + tau - 1.0; }

// w * g'(x) with 0 * inf taken as 0: a zero weight means the occupation is
// constant in N.
double weighted_g_prime(double w, double x) { return w == 0.0 ? 0.0 : w * g_prime(x); }

// d ell / dN. Loss: h + 1 - tau. Amp: written without the h - (tau - 1)
// cancellation using D^2 - (tau-1)^2 p^2 = 4 K tau (K + tau - 1).
double dell_dn(double n, double k, double tau, double p) {
    if (tau < 1.0) return df_dn(n, k, tau) + (1.0 - tau);
    const double d = half_dp2_dn(n, k, tau);
    return 2.0 * k * tau * noise_gap(k, tau) / (p * (d + (tau - 1.0) * p));
}

// log1p(x) / x, continuous at 0.
double log1p_ratio(double x) { return x == 0.0 ? 1.0 : std::log1p(x) / x; }

// (g(a) - g(b)) / d for a = b + d, a > 0, b > 0. From y log y:
// a log a - b log b = d log a + b log1p(d / b).
double g_divided_difference(double a, double b, double d) {
    return std::log1p(1.0 / a) + log1p_ratio(d / (1.0 + b)) - log1p_ratio(d / b);
}

}  // namespace

SpectralParams spectral_params(double n, double k, double tau) {
    check_args(n, k, tau, "spectral_params");
    SpectralParams s;
    const bool loss = tau < 1.0;
    const double s1 = tau - 1.0;
    double p2 = 0.0;
    if (loss) {
        s.eta = tau * n + k;
        p2 = (1.0 + k) * (1.0 + k) + 2.0 * n * (k * (1.0 + tau) - s1) + n * n * s1 * s1;
        s.q = k + n + 2.0 * k * n - n * tau;
    } else {
        s.eta = tau * n + s1 + k;
        p2 = (tau + k) * (tau + k) + 2.0 * n * (tau * s1 + k * (1.0 + tau)) + n * n * s1 * s1;
        s.q = k + 2.0 * k * n + n * s1 + tau;
    }
    s.p = std::sqrt(p2);

    // f = (p - A)/2 and ell = (p - B)/2 with
    //   p^2 - A^2 = 4 (N+1)(eta - tau N),   p^2 - B^2 = 4 N (eta + 1 - tau (N+1)).
    const double eta_minus_tau_n = loss ? k : s1 + k;
    const double a = n + 1.0 - s.eta;
    s.f = a > 0.0 ? 2.0 * (n + 1.0) * eta_minus_tau_n / (s.p + a) : 0.5 * (s.p - a);
    const double b = s.eta - n + 1.0;
    const double ell_gap = loss ? k + 1.0 - tau : k;
    s.ell = b > 0.0 ? 2.0 * n * ell_gap / (s.p + b) : 0.5 * (s.p - b);

    s.f = clamp_roundoff(s.f);
    s.ell = clamp_roundoff(s.ell);
    if (n == 0.0) {
        // exact: f = eta and ell = 0 without input photons
        s.f = s.eta;
        s.ell = 0.0;
    }
    return s;
}

double coherent_info(double n, double k, double tau) {
    const SpectralParams s = spectral_params(n, k, tau);
    // eta - f = N - ell. When eta and f nearly coincide g(eta) - g(f) cancels,
    // so it is taken as (N - ell) times the divided difference instead.
    const double gap = n - s.ell;
    if (s.f > 0.0 && s.eta > 0.0 && std::abs(gap) <= 1e-3 * s.f) {
        return gap * g_divided_difference(s.eta, s.f, gap) - g(s.ell);
    }
    return g(s.eta) - g(s.f) - g(s.ell);
}

double df_dn(double n, double k, double tau) {
    check_args(n, k, tau, "df_dn");
    const SpectralParams s = spectral_params(n, k, tau);
    const double d = half_dp2_dn(n, k, tau);
    if (tau < 1.0) {
        // (D - (1-tau) p) / (2p) with D^2 - (1-tau)^2 p^2 = 4 K tau (K + 1 - tau).
        return 2.0 * k * tau * noise_gap(k, tau) / (s.p * (d + (1.0 - tau) * s.p));
    }
    return (d + (tau - 1.0) * s.p) / (2.0 * s.p);
}

SlopeTerms slope_terms(double n, double k, double tau) {
    check_args(n, k, tau, "slope_terms");
    const SpectralParams s = spectral_params(n, k, tau);
    SlopeTerms t;
    t.eta_term = weighted_g_prime(tau, s.eta);
    t.f_term = s.f == 0.0 ? 0.0 : weighted_g_prime(df_dn(n, k, tau), s.f);
    t.ell_term = weighted_g_prime(dell_dn(n, k, tau, s.p), s.ell);
    return t;
}

double dG_dN(double n, double k, double tau) {
    check_args(n, k, tau, "dG_dN");
    if (n == 0.0) {
        if (k > 0.0) return -kInf;
        if (tau < 1.0) {
            // tau log(1/(tau N)) - (1-tau) log(1/((1-tau) N)) as N -> 0
            if (tau == 0.5) return 0.0;
            return tau > 0.5 ? kInf : -kInf;
        }
    }
    const SlopeTerms t = slope_terms(n, k, tau);
    return t.eta_term - t.f_term - t.ell_term;
}

CohInfoSample sample(double n, double k, double tau) {
    return {n, coherent_info(n, k, tau), dG_dN(n, k, tau)};
}

double b2_closed_form(double k) {
    if (!(k >= 0.0)) throw DomainError("b2_closed_form: K must be >= 0");
    if (k == 0.0) return kInf;
    return -1.0 - std::log(k);
}

double limit_inf(double k, double tau) {
    if (!(k >= 0.0) || !(tau > 0.0) || !std::isfinite(k) || !std::isfinite(tau)) {
        throw DomainError("limit_inf: requires K >= 0 and tau > 0");
    }
    if (tau == 1.0) return b2_closed_form(k);
    const double gap = std::abs(1.0 - tau);
    // x log x - (1+x) log(1+x) = -g(x) with x = K / |1 - tau|.
    return std::log(tau / gap) - g(k / gap);
}

ZeroNLimits limits_at_zero(double k, double tau) {
    check_args(0.0, k, tau, "limits_at_zero");
    ZeroNLimits z;
    if (tau < 1.0) {
        z.d_eta = tau * g_prime(k);
        z.d_ell = kInf;
        z.d_f = k == 0.0 ? 0.0 : k * tau / (1.0 + k) * g_prime(k);
        return z;
    }
    const double m = k + tau - 1.0;  // eta = f at N = 0
    z.d_eta = tau * g_prime(m);
    z.d_ell = k > 0.0 ? kInf : 0.0;
    z.d_f = m == 0.0 ? 0.0 : tau * m / (k + tau) * g_prime(m);
    return z;
}

ZeroNLimits limits_at_kinf(double n) {
    if (!(n > 0.0)) throw DomainError("limits_at_kinf: N must be > 0");
    return {0.0, g_prime(n), 0.0};
}

}  // namespace omgci
