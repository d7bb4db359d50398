#pragma once

namespace omgci {

/// Presentation base for entropic quantities. Everything is computed in nats.
enum class LogBase { Natural, Two };

/// Converts a value in nats to the requested base (a single multiplication).
double to_base(double nats, LogBase base);

/// Entropy of a thermal mode with mean occupation x:
/// g(x) = (1+x) log(1+x) - x log x, g(0) = 0. Throws DomainError for x < 0.
double g(double x);

/// g'(x) = log((1+x)/x). Returns +inf at x = 0; throws for x < 0.
double g_prime(double x);

struct LogMeanBounds {
    double lower_tight;  // 2 / (2x + 1)
    double lower_loose;  // 1 / (x + 1)
};

/// Lower bounds with g_prime(x) > lower_tight > lower_loose for x > 0.
LogMeanBounds log_mean_bounds(double x);

}  // namespace omgci
