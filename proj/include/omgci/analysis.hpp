#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "omgci/cohinfo.hpp"

namespace omgci {

enum class AttainedAt { InfiniteN, ZeroN };

struct Supremum {
    double value = 0.0;  // nats
    AttainedAt attained_at = AttainedAt::ZeroN;
};

/// sup_N G(N, K, tau). For tau in (1/2, 1) or tau >= 1 this is
/// max(limit_inf, 0); for tau <= 1/2 (including the conjugate amplifier,
/// tau <= 0) it is 0 at N = 0. Throws DomainError for k < 0.
Supremum supremum(double k, double tau);

/// Log-spaced points from lo to hi inclusive. Requires 0 < lo < hi, points >= 2.
std::vector<double> log_grid(double lo, double hi, std::size_t points);

/// Lower end of every log-spaced N grid in this module.
inline constexpr double kGridNMin = 1e-6;

/// G and dG/dN on log_grid(n_min, n_max, points).
std::vector<CohInfoSample> scan(double k, double tau, double n_min, double n_max,
                                std::size_t points);

struct GridMax {
    double max_value = 0.0;
    double argmax_n = 0.0;
};

/// Brute-force maximum of G over {0} plus `points` log-spaced N in
/// [1e-6, n_max]. The first maximum wins ties. Requires points >= 16.
GridMax grid_oracle(double k, double tau, double n_max, std::size_t points);

enum class CurveShape {
    MonotoneIncreasingK0,
    DipThenPositive,
    DipAllNegative,
    MonotoneDecreasing,
    Unresolved,
};

std::string_view to_string(CurveShape s);

struct StationaryReport {
    bool exists = false;
    // Both stay empty when a minimum exists but lies below the smallest
    // normal double, which happens for amplifiers with very small K.
    std::optional<double> n_star;
    std::optional<double> value;  // G(n_star), nats
    CurveShape shape = CurveShape::Unresolved;
};

struct StationaryOptions {
    double n_max = 1e8;
    std::size_t points = 1200;
    double slope_tol = 1e-10;
};

/// Locates the stationary point of G in N by scanning the sign of dG/dN on a
/// log grid and bisecting. Requires k >= 0 and tau in (1/2, 1) or tau > 1.
/// Throws MultipleStationaryPoints if more than one sign change is seen.
StationaryReport stationary_point(double k, double tau, const StationaryOptions& opts = {});

/// The K at which limit_inf(K, tau) changes sign. tau == 1 gives 1/e.
/// Throws NoThreshold for tau <= 1/2.
double k_threshold(double tau, double k_tol = 1e-12);

enum class Region { Unphysical, PositiveCI, ZeroCI };
enum class RegionNote { None, ZeroNoiseBoundary, LowTau, ConjugateAmp };

std::string_view to_string(Region r);
std::string_view to_string(RegionNote n);

struct RegionLabel {
    Region label = Region::Unphysical;
    RegionNote sub = RegionNote::None;
    std::optional<double> limit_value;  // nats
};

/// Total classification of a (tau, y) point.
RegionLabel classify(double tau, double y);

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

struct RegionCell {
    double tau = 0.0;
    double y = 0.0;
    std::optional<double> k;  // absent when unphysical
    RegionLabel label;
};

/// Row-major grid: rows run over y, columns over tau, both linearly spaced
/// with inclusive endpoints. Cells are evaluated concurrently.
struct RegionMap {
    std::size_t tau_points = 0;
    std::size_t y_points = 0;
    std::vector<RegionCell> cells;

    const RegionCell& at(std::size_t y_index, std::size_t tau_index) const {
        return cells[y_index * tau_points + tau_index];
    }
};

RegionMap region_map(Range tau, Range y, std::size_t tau_points, std::size_t y_points);

inline RegionMap region_map(Range tau, Range y, std::size_t resolution) {
    return region_map(tau, y, resolution, resolution);
}

}  // namespace omgci
