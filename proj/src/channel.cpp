#include "omgci/channel.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "omgci/errors.hpp"

namespace omgci {

std::string_view to_string(ChannelClass c) {
    switch (c) {
        case ChannelClass::Loss: return "loss";
        case ChannelClass::Amp: return "amp";
        case ChannelClass::B2: return "b2";
        case ChannelClass::ConjugateAmp: return "conjugate-amp";
    }
    return "?";
}

ChannelClass class_for_tau(double tau) {
    if (!std::isfinite(tau) || tau == 0.0) {
        throw DomainError("class_for_tau: tau must be finite and nonzero");
    }
    if (tau < 0.0) return ChannelClass::ConjugateAmp;
    if (tau < 1.0) return ChannelClass::Loss;
    if (tau == 1.0) return ChannelClass::B2;
    return ChannelClass::Amp;
}

ChannelSpec::ChannelSpec(ChannelClass cls, double tau, double k) : cls_(cls), tau_(tau), k_(k) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw DomainError("ChannelSpec: K must be finite and >= 0");
    }
    if (!std::isfinite(tau)) throw DomainError("ChannelSpec: tau must be finite");
    bool consistent = false;
    switch (cls) {
        case ChannelClass::Loss: consistent = tau > 0.0 && tau < 1.0; break;
        case ChannelClass::Amp: consistent = tau > 1.0; break;
        case ChannelClass::B2: consistent = tau == 1.0; break;
        case ChannelClass::ConjugateAmp: consistent = tau < 0.0; break;
    }
    if (!consistent) {
        throw DomainError("ChannelSpec: tau = " + std::to_string(tau) + " is outside the " +
                          std::string(to_string(cls)) + " class");
    }
}

ChannelSpec ChannelSpec::from_tau_k(double tau, double k) {
    return ChannelSpec(class_for_tau(tau), tau, k);
}

ChannelSpec ChannelSpec::from_tau_y(double tau, double y) {
    return from_tau_k(tau, k_from_y(tau, y));
}

double ChannelSpec::y() const { return std::abs(tau_ - 1.0) + 2.0 * k_; }

double ChannelSpec::nbar() const {
    if (cls_ == ChannelClass::B2) return y();
    return nbar_from_k(tau_, k_);
}

namespace {

// Decimal inputs such as tau = 2/3, y = 1/3 land a few ulps either side of
// the boundary; points that close are treated as lying on it.
double boundary_slack(double tau) { return 4.0 * DBL_EPSILON * std::max(1.0, std::abs(tau)); }

}  // namespace

bool cp_check(double tau, double y) {
    return y >= 0.0 && y >= std::abs(tau - 1.0) - boundary_slack(tau);
}

double k_from_y(double tau, double y) {
    if (!cp_check(tau, y)) {
        throw DomainError("k_from_y: (tau, y) violates complete positivity y >= |tau - 1|");
    }
    const double gap = y - std::abs(tau - 1.0);
    if (gap <= boundary_slack(tau)) return 0.0;
    return 0.5 * gap;
}

double nbar_from_k(double tau, double k) {
    if (tau == 1.0) throw DomainError("nbar_from_k: undefined at tau = 1");
    if (!(k >= 0.0)) throw DomainError("nbar_from_k: K must be >= 0");
    return k / std::abs(tau - 1.0);
}

CanonicalForm canonical_form(const ChannelSpec& spec, double nbar) {
    if (!(nbar >= 0.0)) throw DomainError("canonical_form: nbar must be >= 0");
    const double tau = spec.tau();
    switch (spec.cls()) {
        case ChannelClass::Loss: return {std::sqrt(tau), (1.0 - tau) * (2.0 * nbar + 1.0)};
        case ChannelClass::Amp: return {std::sqrt(tau), (tau - 1.0) * (2.0 * nbar + 1.0)};
        case ChannelClass::B2: return {1.0, nbar};
        case ChannelClass::ConjugateAmp: break;
    }
    throw DomainError("canonical_form: conjugate amplifier channels are not supported");
}

CanonicalForm canonical_form(const ChannelSpec& spec) {
    if (spec.cls() == ChannelClass::ConjugateAmp) {
        throw DomainError("canonical_form: conjugate amplifier channels are not supported");
    }
    return canonical_form(spec, spec.nbar());
}

}  // namespace omgci
