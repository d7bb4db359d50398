#include "omgci/entropy.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "omgci/errors.hpp"

namespace omgci {

namespace {
// Below this the two-term series is exact to double precision.
constexpr double kSeriesCutoff = 1e-8;
}  // namespace

double to_base(double nats, LogBase base) {
    return base == LogBase::Two ? nats * std::numbers::log2e : nats;
}

double g(double x) {
    if (!(x >= 0.0)) throw DomainError("g: argument must be >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;
    if (x < kSeriesCutoff) return x * (1.0 - std::log(x)) + 0.5 * x * x;
    // (1+x)log(1+x) - x log x, regrouped so no large terms cancel.
    return std::log1p(x) + x * std::log1p(1.0 / x);
}

double g_prime(double x) {
    if (!(x >= 0.0)) throw DomainError("g_prime: argument must be >= 0");
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    return std::log1p(1.0 / x);
}

LogMeanBounds log_mean_bounds(double x) {
    return {2.0 / (2.0 * x + 1.0), 1.0 / (x + 1.0)};
}

}  // namespace omgci
