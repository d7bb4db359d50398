#pragma once

#include <array>
#include <string_view>

namespace omgci {

/// Phase-insensitive one-mode Gaussian channel classes.
enum class ChannelClass { Loss, Amp, B2, ConjugateAmp };

std::string_view to_string(ChannelClass c);

/// Class implied by the transmissivity/gain: tau < 0 conjugate amplifier,
/// (0,1) lossy, 1 additive noise, > 1 amplifier. tau == 0 is rejected.
ChannelClass class_for_tau(double tau);

/// A channel stored as (class, tau, K). y and nbar are derived views.
class ChannelSpec {
public:
    /// Throws DomainError if k < 0 or the class does not match tau.
    ChannelSpec(ChannelClass cls, double tau, double k);

    /// Class inferred from tau.
    static ChannelSpec from_tau_k(double tau, double k);
    /// Requires cp_check(tau, y).
    static ChannelSpec from_tau_y(double tau, double y);

    ChannelClass cls() const { return cls_; }
    double tau() const { return tau_; }
    double k() const { return k_; }

    /// sqrt(det N) = |tau - 1| + 2K.
    double y() const;
    /// Environment thermal photons. For B2 this is the noise scale of
    /// N = nbar * 1, which equals y.
    double nbar() const;

    friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;

private:
    ChannelClass cls_;
    double tau_;
    double k_;
};

/// Representative (T, N) = (t_scale * 1, n_scale * 1) with zero displacement.
struct CanonicalForm {
    double t_scale = 1.0;
    double n_scale = 0.0;
    std::array<double, 2> delta{0.0, 0.0};
};

/// Complete positivity: y >= |tau - 1| and y >= 0. Points within a few ulps
/// of the boundary count as on it.
bool cp_check(double tau, double y);

/// K = (y - |tau - 1|) / 2, exactly 0 on the (rounded) boundary. Throws
/// DomainError when cp_check fails.
double k_from_y(double tau, double y);

/// nbar = K / |tau - 1|. Throws DomainError at tau == 1 or k < 0.
double nbar_from_k(double tau, double k);

/// Loss: (sqrt(tau), (1-tau)(2nbar+1)); Amp: (sqrt(tau), (tau-1)(2nbar+1));
/// B2: (1, nbar). ConjugateAmp is rejected.
CanonicalForm canonical_form(const ChannelSpec& spec, double nbar);

/// canonical_form(spec, spec.nbar()).
CanonicalForm canonical_form(const ChannelSpec& spec);

}  // namespace omgci
