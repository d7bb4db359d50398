#include "omgci/analysis.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "omgci/channel.hpp"
#include "omgci/errors.hpp"
#include "omgci/parallel.hpp"

namespace omgci {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Sign of dG/dN, or 0 when the value is inside the rounding floor of its
// chain-rule terms.
int resolved_slope_sign(double n, double k, double tau, double* slope = nullptr) {
    const SlopeTerms t = slope_terms(n, k, tau);
    const double d = t.eta_term - t.f_term - t.ell_term;
    if (slope != nullptr) *slope = d;
    const double floor = 64.0 * kEps * (std::abs(t.eta_term) + std::abs(t.f_term) + std::abs(t.ell_term));
    if (std::abs(d) <= floor) return 0;
    return d > 0.0 ? 1 : -1;
}

// Root of dG/dN in [lo, hi] with slope(lo) < 0 < slope(hi); lo may be 0.
// With K small the root can sit hundreds of decades below the grid, so a zero
// lower end is first replaced by stepping down geometrically. Empty when the
// root lies below the smallest normal double.
std::optional<double> bisect_slope(double k, double tau, double lo, double hi, double slope_tol) {
    double slope = 0.0;
    while (lo == 0.0) {
        const double probe = hi * 0x1p-64;
        if (probe < std::numeric_limits<double>::min()) return std::nullopt;
        const int sign = resolved_slope_sign(probe, k, tau, &slope);
        if (sign == 0 || std::abs(slope) <= slope_tol) return probe;
        if (sign < 0) {
            lo = probe;
        } else {
            hi = probe;
        }
    }
    double mid = hi;
    for (int iter = 0; iter < 200; ++iter) {
        mid = std::sqrt(lo) * std::sqrt(hi);
        if (mid <= lo || mid >= hi) break;
        const int sign = resolved_slope_sign(mid, k, tau, &slope);
        if (sign == 0 || std::abs(slope) <= slope_tol) break;
        if (sign < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 4.0 * kEps * hi) {
            mid = 0.5 * (lo + hi);
            break;
        }
    }
    return mid;
}

void check_noise(double k, const char* op) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw DomainError(std::string(op) + ": K must be finite and >= 0");
    }
}

}  // namespace

std::string_view to_string(CurveShape s) {
    switch (s) {
        case CurveShape::MonotoneIncreasingK0: return "MonotoneIncreasingK0";
        case CurveShape::DipThenPositive: return "DipThenPositive";
        case CurveShape::DipAllNegative: return "DipAllNegative";
        case CurveShape::MonotoneDecreasing: return "MonotoneDecreasing";
        case CurveShape::Unresolved: return "Unresolved";
    }
    return "?";
}

std::string_view to_string(Region r) {
    switch (r) {
        case Region::Unphysical: return "Unphysical";
        case Region::PositiveCI: return "PositiveCI";
        case Region::ZeroCI: return "ZeroCI";
    }
    return "?";
}

std::string_view to_string(RegionNote n) {
    switch (n) {
        case RegionNote::None: return "None";
        case RegionNote::ZeroNoiseBoundary: return "ZeroNoiseBoundary";
        case RegionNote::LowTau: return "LowTau";
        case RegionNote::ConjugateAmp: return "ConjugateAmp";
    }
    return "?";
}

Supremum supremum(double k, double tau) {
    check_noise(k, "supremum");
    if (std::isnan(tau)) throw DomainError("supremum: tau is NaN");
    // tau <= 1/2: antidegradable or entanglement breaking
    if (tau <= 0.5) return {0.0, AttainedAt::ZeroN};
    const double lim = limit_inf(k, tau);
    if (lim > 0.0) return {lim, AttainedAt::InfiniteN};
    return {0.0, AttainedAt::ZeroN};
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2 || !std::isfinite(hi)) {
        throw DomainError("log_grid: requires 0 < lo < hi and at least 2 points");
    }
    std::vector<double> grid(points);
    const double a = std::log(lo);
    const double step = (std::log(hi) - a) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) grid[i] = std::exp(a + step * static_cast<double>(i));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<CohInfoSample> scan(double k, double tau, double n_min, double n_max,
                                std::size_t points) {
    std::vector<CohInfoSample> out;
    out.reserve(points);
    for (double n : log_grid(n_min, n_max, points)) out.push_back(sample(n, k, tau));
    return out;
}

GridMax grid_oracle(double k, double tau, double n_max, std::size_t points) {
    if (points < 16) throw DomainError("grid_oracle: need at least 16 points");
    if (!(n_max > kGridNMin)) throw DomainError("grid_oracle: n_max must exceed 1e-6");
    GridMax best{coherent_info(0.0, k, tau), 0.0};
    for (double n : log_grid(kGridNMin, n_max, points)) {
        const double v = coherent_info(n, k, tau);
        if (v > best.max_value) best = {v, n};
    }
    return best;
}

StationaryReport stationary_point(double k, double tau, const StationaryOptions& opts) {
    check_noise(k, "stationary_point");
    if (!(tau > 0.5) || !std::isfinite(tau)) {
        throw DomainError("stationary_point: requires tau in (1/2, 1) or tau >= 1");
    }
    if (opts.points < 16 || !(opts.n_max > kGridNMin)) {
        throw DomainError("stationary_point: grid needs >= 16 points and n_max > 1e-6");
    }

    // dG/dN -> -inf at N = 0 when K > 0, +inf when K = 0.
    int prev_sign = k > 0.0 ? -1 : 1;
    double prev_n = 0.0;
    int changes = 0;
    double lo = 0.0;
    double hi = 0.0;
    int last_sign = 0;
    for (double n : log_grid(kGridNMin, opts.n_max, opts.points)) {
        last_sign = resolved_slope_sign(n, k, tau);
        if (last_sign == 0) continue;
        if (last_sign != prev_sign) {
            ++changes;
            if (changes > 1) {
                throw MultipleStationaryPoints("stationary_point: dG/dN changes sign more than once (K = " +
                                               std::to_string(k) + ", tau = " + std::to_string(tau) + ")");
            }
            lo = prev_n;
            hi = n;
        }
        prev_sign = last_sign;
        prev_n = n;
    }

    StationaryReport report;
    if (changes == 0) {
        if (k == 0.0) {
            report.shape = CurveShape::MonotoneIncreasingK0;
        } else if (last_sign < 0 && limit_inf(k, tau) <= 0.0) {
            report.shape = CurveShape::MonotoneDecreasing;
        } else {
            report.shape = CurveShape::Unresolved;
        }
        return report;
    }

    // A single change from + to - would be a maximum after a monotone rise.
    const bool minimum = k > 0.0;
    const std::optional<double> n_star =
        minimum ? bisect_slope(k, tau, lo, hi, opts.slope_tol) : std::optional<double>(0.5 * (lo + hi));
    report.exists = true;
    if (n_star) {
        report.n_star = n_star;
        report.value = coherent_info(*n_star, k, tau);
    }
    if (!minimum) {
        report.shape = CurveShape::Unresolved;
    } else if (limit_inf(k, tau) > 0.0) {
        report.shape = CurveShape::DipThenPositive;
    } else {
        report.shape = CurveShape::DipAllNegative;
    }
    return report;
}

double k_threshold(double tau, double k_tol) {
    if (!std::isfinite(tau)) throw DomainError("k_threshold: tau must be finite");
    if (tau == 1.0) return std::exp(-1.0);
    if (tau <= 0.5) {
        throw NoThreshold("k_threshold: limit_inf(0, tau) <= 0, no positive region");
    }
    // limit_inf is strictly decreasing in K and positive at K = 0.
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 2000 && limit_inf(hi, tau) > 0.0; ++i) hi *= 2.0;
    while (hi - lo > k_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (limit_inf(mid, tau) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

RegionLabel classify(double tau, double y) {
    RegionLabel out;
    if (!std::isfinite(tau) || !std::isfinite(y) || !cp_check(tau, y)) return out;
    const double k = k_from_y(tau, y);
    out.label = Region::ZeroCI;
    if (tau <= 0.0) {
        out.sub = RegionNote::ConjugateAmp;
        return out;
    }
    out.limit_value = limit_inf(k, tau);
    if (tau <= 0.5) {
        out.sub = RegionNote::LowTau;
        return out;
    }
    if (*out.limit_value > 0.0) out.label = Region::PositiveCI;
    if (k == 0.0) out.sub = RegionNote::ZeroNoiseBoundary;
    return out;
}

RegionMap region_map(Range tau, Range y, std::size_t tau_points, std::size_t y_points) {
    if (tau_points == 0 || y_points == 0) throw DomainError("region_map: resolution must be positive");
    if (!(tau.hi >= tau.lo) || !(y.hi >= y.lo) || !std::isfinite(tau.lo) || !std::isfinite(tau.hi) ||
        !std::isfinite(y.lo) || !std::isfinite(y.hi)) {
        throw DomainError("region_map: ranges must be finite with lo <= hi");
    }
    auto axis = [](Range r, std::size_t points, std::size_t i) {
        if (points == 1) return r.lo;
        if (i + 1 == points) return r.hi;
        return r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    };
    RegionMap map;
    map.tau_points = tau_points;
    map.y_points = y_points;
    map.cells.resize(tau_points * y_points);
    parallel_for(map.cells.size(), [&](std::size_t idx) {
        const std::size_t row = idx / tau_points;
        const std::size_t col = idx % tau_points;
        RegionCell& cell = map.cells[idx];
        cell.tau = axis(tau, tau_points, col);
        cell.y = axis(y, y_points, row);
        cell.label = classify(cell.tau, cell.y);
        if (cell.label.label != Region::Unphysical) cell.k = k_from_y(cell.tau, cell.y);
    });
    return map;
}

}  // namespace omgci
