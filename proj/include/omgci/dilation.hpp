#pragma once

#include "omgci/channel.hpp"

namespace omgci {

/// Real 2x2 matrix [[xx, xp], [px, pp]].
struct Mat2 {
    double xx = 0.0;
    double xp = 0.0;
    double px = 0.0;
    double pp = 0.0;

    static Mat2 identity(double s = 1.0) { return {s, 0.0, 0.0, s}; }
    double det() const { return xx * pp - xp * px; }
};

/// Two-mode covariance matrix [[a, c], [c^T, b]] with mode B first and the
/// purifying reference R second. Vacuum is the identity.
struct Cov2 {
    Mat2 a;
    Mat2 b;
    Mat2 c;

    /// Determinant of the full 4x4 matrix via det(a) det(b - c^T a^{-1} c).
    double det() const;
};

struct SymplecticPair {
    double plus = 1.0;
    double minus = 1.0;
};

/// Symplectic eigenvalues from Delta = det a + det b + 2 det c and det V,
/// evaluated in extended precision.
SymplecticPair symplectic_eigenvalues(const Cov2& cov);

/// Two-mode squeezed vacuum whose reduced state has mean photon number n.
Cov2 tmsv_cov(double n);

/// Channel on mode B: a -> t^2 a + n_scale 1, c -> t c, b untouched.
Cov2 apply_channel(const Cov2& cov, const CanonicalForm& form);

/// (eta, f, ell) recovered from symplectic data of the channel output.
struct DilationSpectrum {
    double eta = 0.0;
    double f = 0.0;
    double ell = 0.0;
};

DilationSpectrum dilation_spectrum(double n, const ChannelSpec& spec);

/// H(B) - H(BR) for a TMSV input through the channel, in nats.
/// Rejects ConjugateAmp.
double coherent_info_oracle(double n, const ChannelSpec& spec);

}  // namespace omgci
