#include "omgci/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <string>

#include <quadmath.h>

#include "omgci/analysis.hpp"
#include "omgci/channel.hpp"
#include "omgci/cohinfo.hpp"
#include "omgci/dilation.hpp"
#include "omgci/entropy.hpp"
#include "omgci/errors.hpp"
#include "omgci/identity.hpp"
#include "omgci/parallel.hpp"

namespace omgci {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Portable draws: the engine is fully specified by the standard, the
// conversion to doubles is done here rather than by a distribution.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    // (0, 1)
    double unit() { return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    double log_uniform(double lo, double hi) {
        return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * unit());
    }
    bool coin() { return (rng_() >> 63) != 0; }

private:
    std::mt19937_64 rng_;
};

struct Draw {
    double n = 0.0;
    double k = 0.0;
    double tau = 0.0;
    double extra = 0.0;
};

enum class Branch { Loss, Amp, Either };

double draw_tau(Sampler& s, Branch b) {
    if (b == Branch::Either) b = s.coin() ? Branch::Loss : Branch::Amp;
    return b == Branch::Loss ? s.uniform(0.5, 1.0) : s.uniform(1.0, 10.0);
}

struct Outcome {
    double metric = kNan;
    bool ok = false;
};

enum class Worst { Max, Min };

// Separate stream per property so adding a property never shifts the draws
// of another one.
std::uint64_t stream_seed(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    return seed ^ h;
}

class Suite {
public:
    Suite(const VerifyConfig& cfg) : cfg_(cfg), tol_(default_tolerances()) {
        for (const auto& [name, value] : cfg.tolerances) {
            auto it = tol_.find(name);
            if (it == tol_.end()) throw DomainError("verify: unknown tolerance '" + name + "'");
            it->second = value;
        }
    }

    double tol(const std::string& name) const { return tol_.at(name); }

    std::size_t count(double fraction, std::size_t minimum) const {
        const auto scaled = static_cast<std::size_t>(std::ceil(static_cast<double>(cfg_.samples) * fraction));
        return std::max(minimum, scaled);
    }

    void run(const std::string& name, const std::string& metric, double tolerance, std::size_t count,
             const std::function<Draw(Sampler&)>& draw, const std::function<Outcome(const Draw&)>& eval,
             Worst worst_mode) {
        Sampler sampler(stream_seed(cfg_.seed, name));
        std::vector<Draw> draws(count);
        for (auto& d : draws) d = draw(sampler);
        std::vector<Outcome> outcomes(count);
        parallel_for(count, [&](std::size_t i) {
            try {
                outcomes[i] = eval(draws[i]);
            } catch (const std::exception&) {
                outcomes[i] = Outcome{kNan, false};
            }
        });
        PropertyResult r;
        r.name = name;
        r.metric = metric;
        r.samples = count;
        r.tolerance = tolerance;
        r.worst = worst_mode == Worst::Max ? -std::numeric_limits<double>::infinity()
                                           : std::numeric_limits<double>::infinity();
        for (const Outcome& o : outcomes) {
            if (!o.ok) ++r.violations;
            if (std::isnan(o.metric)) continue;
            r.worst = worst_mode == Worst::Max ? std::max(r.worst, o.metric) : std::min(r.worst, o.metric);
        }
        if (std::isinf(r.worst)) r.worst = kNan;
        report_.properties.push_back(std::move(r));
    }

    VerifyReport take() { return std::move(report_); }

private:
    const VerifyConfig& cfg_;
    std::map<std::string, double> tol_;
    VerifyReport report_;
};

double rel_err(double a, double b, double scale) {
    return std::abs(a - b) / std::max({std::abs(b), scale, std::numeric_limits<double>::min()});
}

double central_diff(const std::function<double(double)>& fn, double x, double step) {
    return (fn(x + step) - fn(x - step)) / (2.0 * step);
}

// Reference for the derivative suite: the unsimplified textbook expressions,
// evaluated in binary128 so that central differences with a 1e-6 relative
// step keep about 20 significant digits. In double, h(K) on the amplifier
// branch sits near tau - 1 and its K-dependence drowns in rounding.
using Quad = __float128;

struct QuadSpectrum {
    Quad eta;
    Quad f;
    Quad ell;
    Quad p;
    Quad h;  // df/dN by the chain rule
};

QuadSpectrum quad_spectrum(Quad n, Quad k, Quad tau) {
    QuadSpectrum s;
    s.eta = tau < 1 ? tau * n + k : tau * n + tau - 1 + k;
    const Quad u = n + s.eta + 1;
    s.p = sqrtq(u * u - 4 * tau * n * (n + 1));
    s.f = (s.p + s.eta - n - 1) / 2;
    s.ell = (s.p - s.eta + n - 1) / 2;
    const Quad dp2 = 2 * u * (1 + tau) - 4 * tau * (2 * n + 1);
    s.h = (dp2 / (2 * s.p) + tau - 1) / 2;
    return s;
}

template <typename Fn>
double quad_central_diff(Fn fn, double x, double rel_step) {
    const Quad xq = x;
    const Quad step = xq * Quad(rel_step);
    return static_cast<double>((fn(xq + step) - fn(xq - step)) / (2 * step));
}

// Draw generators -----------------------------------------------------------

std::function<Draw(Sampler&)> domain_draw(Branch b, double n_lo, double n_hi, double k_lo, double k_hi) {
    return [=](Sampler& s) {
        Draw d;
        d.tau = draw_tau(s, b);
        d.n = s.log_uniform(n_lo, n_hi);
        d.k = s.log_uniform(k_lo, k_hi);
        return d;
    };
}

void identity_properties(Suite& suite) {
    const std::size_t n_main = suite.count(1.0, 4);
    const double sat_tol = suite.tol("saturation");
    auto saturation = [&](Branch b, const std::string& name) {
        suite.run(name, "max |normalised residual|", sat_tol, n_main, domain_draw(b, 1e-6, 1e4, 1e-6, 10.0),
                  [=](const Draw& d) {
                      const double r = std::abs(saturation_residual(d.n, d.k, d.tau));
                      return Outcome{r, r <= sat_tol};
                  },
                  Worst::Max);
    };
    saturation(Branch::Loss, "saturation_loss");
    saturation(Branch::Amp, "saturation_amp");

    suite.run("tight_bound_gap", "min F g'(F) - 2F/(2F+1)", 0.0, n_main,
              domain_draw(Branch::Either, 1e-6, 1e4, 1e-6, 10.0),
              [](const Draw& d) {
                  const double gap = tight_bound_gap(d.n, d.k, d.tau);
                  return Outcome{gap, gap > 0.0};
              },
              Worst::Min);

    suite.run("sign_ledger", "min slack over -lhs_dk, dh_dk, F, f, ell", 0.0, n_main,
              domain_draw(Branch::Either, 1e-6, 1e4, 1e-6, 10.0),
              [](const Draw& d) {
                  const IdentityTerms t = identity_terms(d.n, d.k, d.tau);
                  const SpectralParams s = spectral_params(d.n, d.k, d.tau);
                  const double neg_lhs = -lhs_dk(d.n, d.k, d.tau);
                  const double slack = std::min({neg_lhs, t.dh_dk, t.big_f, s.f, s.ell});
                  return Outcome{slack, neg_lhs > 0.0 && t.dh_dk >= 0.0 && t.big_f >= 0.0 && s.f >= 0.0 &&
                                            s.ell >= 0.0};
              },
              Worst::Min);

    // LHS of the stationarity condition decreasing in K, RHS increasing.
    suite.run("rhs_increasing_in_k", "min relative RHS increase", 0.0, n_main,
              [](Sampler& s) {
                  Draw d;
                  d.tau = draw_tau(s, Branch::Either);
                  d.n = s.log_uniform(1e-6, 1e4);
                  double k1 = s.log_uniform(1e-6, 10.0);
                  double k2 = s.log_uniform(1e-6, 10.0);
                  if (k1 > k2) std::swap(k1, k2);
                  if (s.unit() < 0.05) k1 = 0.0;
                  d.k = k1;
                  d.extra = k2;
                  return d;
              },
              [](const Draw& d) {
                  if (!(d.extra > d.k)) return Outcome{0.0, true};
                  const double r1 = stationary_rhs(d.n, d.k, d.tau);
                  const double r2 = stationary_rhs(d.n, d.extra, d.tau);
                  const bool lhs_down = stationary_lhs(d.n, d.extra, d.tau) < stationary_lhs(d.n, d.k, d.tau);
                  const bool rhs_up = rhs_monotone_check(d.n, d.k, d.extra, d.tau);
                  const double rel = std::isinf(r1) ? 1.0 : (r2 - r1) / std::max(std::abs(r1), 1e-300);
                  return Outcome{rel, lhs_down && rhs_up};
              },
              Worst::Min);

    // At most one crossing of LHS(K) and RHS(K) for fixed (N, tau).
    suite.run("single_crossing_in_k", "max sign changes of LHS - RHS over K", 1.0, suite.count(0.01, 2),
              domain_draw(Branch::Either, 1e-4, 1e4, 1.0, 1.0),
              [](const Draw& d) {
                  int changes = 0;
                  int prev = 0;
                  std::vector<double> ks{0.0};
                  for (double k : log_grid(1e-8, 1e3, 240)) ks.push_back(k);
                  for (double k : ks) {
                      const double diff = stationary_lhs(d.n, k, d.tau) - stationary_rhs(d.n, k, d.tau);
                      if (std::isnan(diff) || diff == 0.0) continue;
                      const int sign = diff > 0.0 ? 1 : -1;
                      if (prev != 0 && sign != prev) ++changes;
                      prev = sign;
                  }
                  return Outcome{static_cast<double>(changes), changes <= 1};
              },
              Worst::Max);
}

void inequality_properties(Suite& suite) {
    const std::size_t n_main = suite.count(1.0, 4);

    suite.run("log_inequality_chain", "min relative slack of g'(x) > 2/(2x+1) > 1/(x+1)", 0.0, n_main,
              [](Sampler& s) { return Draw{s.log_uniform(1e-6, 1e6), 0.0, 0.0, 0.0}; },
              [](const Draw& d) {
                  const LogMeanBounds b = log_mean_bounds(d.n);
                  const double gp = g_prime(d.n);
                  const double slack = std::min((gp - b.lower_tight) / b.lower_tight,
                                                (b.lower_tight - b.lower_loose) / b.lower_loose);
                  return Outcome{slack, gp > b.lower_tight && b.lower_tight > b.lower_loose};
              },
              Worst::Min);

    suite.run("x_gprime_monotone", "min y g'(y) - x g'(x)", 0.0, n_main,
              [](Sampler& s) {
                  double x = s.log_uniform(1e-6, 1e6);
                  double y = s.log_uniform(1e-6, 1e6);
                  if (x > y) std::swap(x, y);
                  return Draw{x, 0.0, 0.0, y};
              },
              [](const Draw& d) {
                  const double gap = d.extra * g_prime(d.extra) - d.n * g_prime(d.n);
                  return Outcome{gap, gap >= 0.0};
              },
              Worst::Min);

    // b1 >= p, b2 >= p, eta >= ell on 1/2 <= tau < 1. The comparisons allow
    // 8 ulp of p for the rounding of the two sides.
    suite.run("p_upper_bounds", "min relative slack of b1 - p, b2 - p, eta - ell", 0.0, n_main,
              domain_draw(Branch::Loss, 1e-6, 1e4, 1e-6, 10.0),
              [](const Draw& d) {
                  const SpectralParams s = spectral_params(d.n, d.k, d.tau);
                  const double b1 = 1.0 + d.k + d.n + d.n * d.tau;
                  const double b2 = (1.0 - d.tau) * d.n + (1.0 + d.k - d.tau + d.k * d.tau) / (1.0 - d.tau);
                  const double allow = 8.0 * kEps * s.p;
                  const double slack = std::min({(b1 - s.p) / s.p, (b2 - s.p) / s.p,
                                                 (s.eta - s.ell) / std::max(s.eta, 1e-300)});
                  return Outcome{slack, b1 - s.p >= -allow && b2 - s.p >= -allow &&
                                            s.eta - s.ell >= -8.0 * kEps * s.eta};
              },
              Worst::Min);

    // Second central difference of p(N) in extended precision, next to the
    // closed form -4 K tau (K - tau + 1) / p^3.
    suite.run("p_concavity", "max second difference of p / |closed form|", 0.0, n_main,
              domain_draw(Branch::Loss, 1e-3, 1e3, 1e-6, 10.0),
              [](const Draw& d) {
                  const long double k = d.k;
                  const long double tau = d.tau;
                  auto p_of = [&](long double n) {
                      return std::sqrt((1 + k) * (1 + k) + 2 * n * (k * tau + k - tau + 1) +
                                       n * n * (1 - tau) * (1 - tau));
                  };
                  const long double n = d.n;
                  const long double step = 1e-2L * n;
                  const long double second = (p_of(n + step) - 2 * p_of(n) + p_of(n - step)) / (step * step);
                  const long double p = p_of(n);
                  const long double closed = -4 * k * tau * (k - tau + 1) / (p * p * p);
                  const double ratio = static_cast<double>(second / std::abs(closed));
                  return Outcome{ratio, second < 0 && closed < 0};
              },
              Worst::Max);

    suite.run("k0_monotone", "min increment of G(N, 0, tau) along the N grid", 0.0, suite.count(0.002, 2),
              [](Sampler& s) { return Draw{0.0, 0.0, draw_tau(s, Branch::Either), 0.0}; },
              [](const Draw& d) {
                  double prev = coherent_info(0.0, 0.0, d.tau);
                  double min_step = std::numeric_limits<double>::infinity();
                  for (double n : log_grid(kGridNMin, 1e6, 400)) {
                      const double v = coherent_info(n, 0.0, d.tau);
                      min_step = std::min(min_step, v - prev);
                      prev = v;
                  }
                  const bool sup_ok = std::abs(supremum(0.0, d.tau).value - limit_inf(0.0, d.tau)) == 0.0;
                  return Outcome{min_step, min_step > 0.0 && sup_ok};
              },
              Worst::Min);

    // sup_{N >= eps} tau |g'(tau N) - g'(K + tau N)| shrinks with K and stays
    // below K / eps.
    suite.run("uniform_convergence", "max sup-norm / (K / eps) at the smallest K", 1.0, suite.count(0.01, 2),
              [](Sampler& s) {
                  Draw d;
                  d.tau = s.coin() ? s.uniform(0.5, 1.0) : s.uniform(0.01, 0.5);
                  d.extra = s.log_uniform(1e-4, 1.0);  // eps
                  return d;
              },
              [](const Draw& d) {
                  const auto grid = log_grid(d.extra, 1e6, 200);
                  double prev = std::numeric_limits<double>::infinity();
                  bool ok = true;
                  double ratio = 0.0;
                  for (double k : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
                      double sup = 0.0;
                      for (double n : grid) {
                          sup = std::max(sup, d.tau * std::abs(g_prime(d.tau * n) - g_prime(k + d.tau * n)));
                      }
                      ok = ok && sup < prev && sup <= k / d.extra;
                      ratio = sup / (k / d.extra);
                      prev = sup;
                  }
                  return Outcome{ratio, ok};
              },
              Worst::Max);

    // The approach is O(1/N) with a constant that grows like K/|1 - tau|, so
    // the check is scale-free: monotone decay over the tail and at least a
    // thousandfold drop over five decades.
    suite.run("tail_convergence", "max |G(1e8) - limit_inf| / |G(1e3) - limit_inf|", 1e-3,
              suite.count(0.01, 2),
              [](Sampler& s) {
                  Draw d;
                  d.tau = draw_tau(s, Branch::Either);
                  d.k = s.log_uniform(1e-4, 10.0);
                  return d;
              },
              [](const Draw& d) {
                  const double lim = limit_inf(d.k, d.tau);
                  double prev = std::numeric_limits<double>::infinity();
                  bool ok = true;
                  double first = kNan;
                  double last = 0.0;
                  for (double n : log_grid(1e3, 1e8, 26)) {
                      last = std::abs(coherent_info(n, d.k, d.tau) - lim);
                      if (std::isnan(first)) first = last;
                      // rounding allowance of the G evaluation at large N
                      ok = ok && last <= prev + 64.0 * kEps * (1.0 + std::log(n));
                      prev = last;
                  }
                  const double ratio = last / first;
                  return Outcome{ratio, ok && ratio <= 1e-3};
              },
              Worst::Max);
}

void dilation_properties(Suite& suite) {
    const double spec_tol = suite.tol("oracle_spectrum");
    const double ci_tol = suite.tol("oracle_cohinfo");
    const std::size_t per_class = suite.count(0.1, 2);
    auto draw = [](Sampler& s) {
        // loss, amp and the additive-noise boundary in a 4:4:1 mix
        Draw d;
        const double u = s.unit();
        d.tau = u < 4.0 / 9.0 ? s.uniform(0.0, 1.0) : (u < 8.0 / 9.0 ? s.uniform(1.0, 10.0) : 1.0);
        d.n = s.log_uniform(1e-6, 1e4);
        d.k = s.log_uniform(1e-6, 10.0);
        return d;
    };
    const std::size_t count = per_class * 9 / 4;
    suite.run("dilation_spectrum", "max relative error of (eta, f, ell)", spec_tol, count, draw,
              [=](const Draw& d) {
                  const auto spec = ChannelSpec::from_tau_k(d.tau, d.k);
                  const DilationSpectrum o = dilation_spectrum(d.n, spec);
                  const SpectralParams s = spectral_params(d.n, d.k, d.tau);
                  const double err = std::max({rel_err(o.eta, s.eta, 1.0), rel_err(o.f, s.f, 1.0),
                                               rel_err(o.ell, s.ell, 1.0)});
                  return Outcome{err, err <= spec_tol};
              },
              Worst::Max);
    suite.run("dilation_cohinfo", "max |H(B) - H(BR) - G|", ci_tol, count, draw,
              [=](const Draw& d) {
                  const auto spec = ChannelSpec::from_tau_k(d.tau, d.k);
                  const double err = std::abs(coherent_info_oracle(d.n, spec) - coherent_info(d.n, d.k, d.tau));
                  return Outcome{err, err <= ci_tol};
              },
              Worst::Max);
}

void derivative_properties(Suite& suite) {
    const double fd_tol = suite.tol("finite_difference");
    const std::size_t count = suite.count(0.02, 4);
    const auto draw = domain_draw(Branch::Either, 1e-2, 1e2, 1e-2, 10.0);

    suite.run("derivative_dG_dN", "max relative error vs central difference", fd_tol, count, draw,
              [=](const Draw& d) {
                  const double fd = central_diff([&](double n) { return coherent_info(n, d.k, d.tau); }, d.n,
                                                 1e-6 * d.n);
                  const SlopeTerms t = slope_terms(d.n, d.k, d.tau);
                  // relative to the largest chain-rule term: dG/dN itself vanishes at N*
                  const double err = rel_err(t.eta_term - t.f_term - t.ell_term, fd,
                                             std::max({t.eta_term, t.f_term, t.ell_term}));
                  return Outcome{err, err <= fd_tol};
              },
              Worst::Max);

    suite.run("derivative_identity_terms", "max relative error of h, F_K, h_K, ell_K, LHS_K", fd_tol, count,
              draw,
              [=](const Draw& d) {
                  const IdentityTerms t = identity_terms(d.n, d.k, d.tau);
                  const Quad n = d.n;
                  const Quad tau = d.tau;
                  auto at_k = [&](Quad k) { return quad_spectrum(n, k, tau); };
                  const double h = quad_central_diff([&](Quad x) { return quad_spectrum(x, d.k, tau).f; }, d.n, 1e-6);
                  const double fk = quad_central_diff(
                      [&](Quad k) {
                          const QuadSpectrum q = at_k(k);
                          return q.f * q.ell / (q.f + q.ell + 1);
                      },
                      d.k, 1e-6);
                  const double hk = quad_central_diff([&](Quad k) { return at_k(k).h; }, d.k, 1e-6);
                  const double lk = quad_central_diff([&](Quad k) { return at_k(k).ell; }, d.k, 1e-6);
                  const double lhs =
                      quad_central_diff([&](Quad k) { return tau * log1pq(1 / at_k(k).eta); }, d.k, 1e-6);
                  const double err = std::max({rel_err(t.h, h, 0.0), rel_err(t.df_dk, fk, 0.0),
                                               rel_err(t.dh_dk, hk, 0.0), rel_err(t.dell_dk, lk, 0.0),
                                               rel_err(lhs_dk(d.n, d.k, d.tau), lhs, 0.0)});
                  return Outcome{err, err <= fd_tol};
              },
              Worst::Max);

    const double zero_tol = suite.tol("zero_limit");
    suite.run("limits_n_to_zero", "max relative error of slopes at N = 1e-8", zero_tol, count,
              domain_draw(Branch::Either, 1.0, 1.0, 1e-2, 10.0),
              [=](const Draw& d) {
                  const ZeroNLimits z = limits_at_zero(d.k, d.tau);
                  const SlopeTerms t = slope_terms(1e-8, d.k, d.tau);
                  const double err = std::max(rel_err(t.eta_term, z.d_eta, 0.0), rel_err(t.f_term, z.d_f, 0.0));
                  // d g(ell)/dN diverges only like log(1/N): check that it
                  // still grows towards 0 and that dG/dN(0) is -inf.
                  const bool diverges = std::isinf(z.d_ell) &&
                                        t.ell_term > slope_terms(1e-6, d.k, d.tau).ell_term &&
                                        dG_dN(0.0, d.k, d.tau) == -std::numeric_limits<double>::infinity();
                  return Outcome{err, err <= zero_tol && diverges};
              },
              Worst::Max);

    const double kinf_tol = suite.tol("kinf_limit");
    suite.run("limits_k_to_inf", "max |slope - limit| at K = 1e8", kinf_tol, count,
              domain_draw(Branch::Either, 1e-2, 1e2, 1.0, 1.0),
              [=](const Draw& d) {
                  const ZeroNLimits z = limits_at_kinf(d.n);
                  const SlopeTerms t = slope_terms(d.n, 1e8, d.tau);
                  const double err = std::max({std::abs(t.eta_term - z.d_eta), std::abs(t.ell_term - z.d_ell),
                                               std::abs(t.f_term - z.d_f)});
                  return Outcome{err, err <= kinf_tol};
              },
              Worst::Max);
}

void analysis_properties(Suite& suite) {
    const double sup_tol = suite.tol("supremum");
    suite.run("supremum_grid", "max |grid max - max(limit_inf, 0)|", sup_tol, suite.count(0.002, 2),
              [](Sampler& s) {
                  Draw d;
                  d.tau = draw_tau(s, Branch::Either);
                  d.k = s.log_uniform(1e-4, 1.0);
                  return d;
              },
              [=](const Draw& d) {
                  const double lim = limit_inf(d.k, d.tau);
                  const GridMax gm = grid_oracle(d.k, d.tau, 1e6, 4000);
                  const double err = std::abs(gm.max_value - std::max(lim, 0.0));
                  const bool edge_ok = lim > 0.0 ? gm.argmax_n == 1e6 : gm.argmax_n == 0.0;
                  const bool sup_ok = std::abs(supremum(d.k, d.tau).value - std::max(lim, 0.0)) == 0.0;
                  return Outcome{err, err <= sup_tol && edge_ok && sup_ok};
              },
              Worst::Max);

    // limit_inf > 0 with K > 0: a negative minimum, then exactly one zero
    // crossing of G on the way up.
    suite.run("shape_taxonomy", "max G(N*) over positive-limit draws", 0.0, suite.count(0.01, 2),
              [](Sampler& s) {
                  Draw d;
                  d.tau = draw_tau(s, Branch::Either);
                  d.k = k_threshold(d.tau) * s.log_uniform(1e-4, 0.999);
                  return d;
              },
              [](const Draw& d) {
                  const StationaryReport r = stationary_point(d.k, d.tau);
                  if (r.exists && r.shape == CurveShape::DipThenPositive && !r.n_star) {
                      // minimum below the smallest normal double: shape only
                      return Outcome{kNan, true};
                  }
                  if (!r.exists || r.shape != CurveShape::DipThenPositive || !(*r.value < 0.0)) {
                      return Outcome{r.value.value_or(kNan), false};
                  }
                  int crossings = 0;
                  double prev = *r.value;
                  for (double n : log_grid(*r.n_star, 1e12, 400)) {
                      const double v = coherent_info(n, d.k, d.tau);
                      if ((prev < 0.0) != (v < 0.0)) ++crossings;
                      prev = v;
                  }
                  return Outcome{*r.value, crossings == 1};
              },
              Worst::Max);

    const double offset = suite.tol("threshold_offset");
    suite.run("threshold_coherence", "min |limit_inf| at K_th (1 -/+ offset)", offset, suite.count(0.01, 2),
              [](Sampler& s) { return Draw{0.0, 0.0, draw_tau(s, Branch::Either), 0.0}; },
              [=](const Draw& d) {
                  const double kth = k_threshold(d.tau);
                  const double below = limit_inf(kth * (1.0 - offset), d.tau);
                  const double above = limit_inf(kth * (1.0 + offset), d.tau);
                  return Outcome{std::min(below, -above), below > 0.0 && above < 0.0};
              },
              Worst::Min);

    const double seam_tol = suite.tol("seam");
    suite.run("b2_seam", "max |limit_inf(K, 1 +/- 1e-6) - (-1 - ln K)|", seam_tol, suite.count(0.01, 8),
              [](Sampler& s) { return Draw{0.0, s.log_uniform(1e-2, 10.0), 0.0, 0.0}; },
              [=](const Draw& d) {
                  const double ref = b2_closed_form(d.k);
                  const double err = std::max(std::abs(limit_inf(d.k, 1.0 + 1e-6) - ref),
                                              std::abs(limit_inf(d.k, 1.0 - 1e-6) - ref));
                  return Outcome{err, err <= seam_tol};
              },
              Worst::Max);
}

}  // namespace

const std::map<std::string, double>& default_tolerances() {
    static const std::map<std::string, double> defaults{
        {"saturation", 1e-9},        {"oracle_spectrum", 1e-9}, {"oracle_cohinfo", 1e-8},
        {"finite_difference", 1e-5}, {"zero_limit", 1e-5},      {"kinf_limit", 1e-5},
        {"supremum", 1e-3},          {"seam", 1e-3},            {"threshold_offset", 1e-3},
    };
    return defaults;
}

bool VerifyReport::passed() const {
    return !properties.empty() &&
           std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

VerifyReport run_verification(const VerifyConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    Suite suite(config);
    identity_properties(suite);
    inequality_properties(suite);
    dilation_properties(suite);
    derivative_properties(suite);
    analysis_properties(suite);
    VerifyReport report = suite.take();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace omgci
