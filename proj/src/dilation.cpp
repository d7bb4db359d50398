#include "omgci/dilation.hpp"

#include <algorithm>
#include <cmath>

#include <quadmath.h>

#include "omgci/entropy.hpp"
#include "omgci/errors.hpp"

namespace omgci {

namespace {

Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x.xx * y.xx + x.xp * y.px, x.xx * y.xp + x.xp * y.pp,
            x.px * y.xx + x.pp * y.px, x.px * y.xp + x.pp * y.pp};
}

Mat2 transpose(const Mat2& x) { return {x.xx, x.px, x.xp, x.pp}; }

Mat2 scaled(const Mat2& x, double s) { return {s * x.xx, s * x.xp, s * x.px, s * x.pp}; }

Mat2 inverse(const Mat2& x) {
    const double d = x.det();
    return {x.pp / d, -x.xp / d, -x.px / d, x.xx / d};
}

Mat2 minus(const Mat2& x, const Mat2& y) {
    return {x.xx - y.xx, x.xp - y.xp, x.px - y.px, x.pp - y.pp};
}

Mat2 plus(const Mat2& x, const Mat2& y) {
    return {x.xx + y.xx, x.xp + y.xp, x.px + y.px, x.pp + y.pp};
}

}  // namespace

namespace {

// The spectrum is recovered in binary128. In double, Delta^2 - 4 det V loses
// half its digits when the two symplectic eigenvalues nearly coincide, and the
// Schur complement b - c^T a^{-1} c cancels like N^2 for large inputs.
using Quad = __float128;

// Negative round-off is clamped.
double quad_occupation(Quad nu) { return std::max(0.0, static_cast<double>((nu - 1) / 2)); }

struct QMat2 {
    Quad xx, xp, px, pp;
};

QMat2 widen(const Mat2& m) { return {m.xx, m.xp, m.px, m.pp}; }

Quad qdet(const QMat2& m) { return m.xx * m.pp - m.xp * m.px; }

QMat2 qmul(const QMat2& x, const QMat2& y) {
    return {x.xx * y.xx + x.xp * y.px, x.xx * y.xp + x.xp * y.pp,
            x.px * y.xx + x.pp * y.px, x.px * y.xp + x.pp * y.pp};
}

QMat2 qinverse(const QMat2& m) {
    const Quad d = qdet(m);
    return {m.pp / d, -m.xp / d, -m.px / d, m.xx / d};
}

}  // namespace

double Cov2::det() const {
    const Mat2 schur = minus(b, mul(transpose(c), mul(inverse(a), c)));
    return a.det() * schur.det();
}

SymplecticPair symplectic_eigenvalues(const Cov2& cov) {
    // Same invariants as Cov2::det, carried in binary128 so that nearly pure
    // states keep their digits.
    const QMat2 a = widen(cov.a), b = widen(cov.b), c = widen(cov.c);
    const QMat2 ct{c.xx, c.px, c.xp, c.pp};
    const Quad det_a = qdet(a);
    const QMat2 ct_ainv_c = qmul(ct, qmul(qinverse(a), c));
    const QMat2 schur{b.xx - ct_ainv_c.xx, b.xp - ct_ainv_c.xp, b.px - ct_ainv_c.px, b.pp - ct_ainv_c.pp};
    const Quad det_v = det_a * qdet(schur);
    const Quad delta = det_a + qdet(b) + 2 * qdet(c);
    Quad disc = delta * delta - 4 * det_v;
    if (disc < 0) disc = 0;
    const Quad plus_sq = (delta + sqrtq(disc)) / 2;
    // nu_+^2 nu_-^2 = det V; avoids the small-root cancellation
    Quad minus_sq = det_v / plus_sq;
    if (minus_sq < 0) minus_sq = 0;
    return {static_cast<double>(sqrtq(plus_sq)), static_cast<double>(sqrtq(minus_sq))};
}

Cov2 tmsv_cov(double n) {
    if (!(n >= 0.0)) throw DomainError("tmsv_cov: N must be >= 0");
    const double s = 2.0 * n + 1.0;
    const double c = 2.0 * std::sqrt(n * (n + 1.0));
    return {Mat2::identity(s), Mat2::identity(s), Mat2{c, 0.0, 0.0, -c}};
}

Cov2 apply_channel(const Cov2& cov, const CanonicalForm& form) {
    const double t = form.t_scale;
    return {plus(scaled(cov.a, t * t), Mat2::identity(form.n_scale)), cov.b, scaled(cov.c, t)};
}

DilationSpectrum dilation_spectrum(double n, const ChannelSpec& spec) {
    if (!(n >= 0.0) || !std::isfinite(n)) throw DomainError("dilation_spectrum: N must be finite and >= 0");
    const CanonicalForm form = canonical_form(spec);
    // tmsv_cov followed by apply_channel. Every block stays in standard form,
    // a * 1, b * 1 and diag(c, -c), so each 2x2 determinant is a product.
    const Quad nq = n;
    const Quad s = 2 * nq + 1;
    const Quad t = form.t_scale;
    const Quad a = t * t * s + Quad(form.n_scale);
    const Quad b = s;
    const Quad c = t * 2 * sqrtq(nq * (nq + 1));

    const Quad det_a = a * a;
    const Quad det_b = b * b;
    const Quad det_c = -c * c;
    // det V = det a * det(b - c^T a^{-1} c)
    const Quad schur = b - c * c / a;
    const Quad det_v = det_a * schur * schur;
    const Quad delta = det_a + det_b + 2 * det_c;
    Quad disc = delta * delta - 4 * det_v;
    if (disc < 0) disc = 0;
    const Quad plus_sq = (delta + sqrtq(disc)) / 2;
    Quad minus_sq = det_v / plus_sq;
    if (minus_sq < 0) minus_sq = 0;

    DilationSpectrum d;
    d.eta = quad_occupation(sqrtq(det_a));
    const double big = quad_occupation(sqrtq(plus_sq));
    const double small = quad_occupation(sqrtq(minus_sq));
    // f - ell = eta - N decides which joint mode is which.
    if (d.eta >= n) {
        d.f = big;
        d.ell = small;
    } else {
        d.f = small;
        d.ell = big;
    }
    return d;
}

double coherent_info_oracle(double n, const ChannelSpec& spec) {
    const DilationSpectrum d = dilation_spectrum(n, spec);
    return g(d.eta) - (g(d.f) + g(d.ell));
}

}  // namespace omgci
