#pragma once

#include <complex>
#include <vector>

#include "support.hpp"

namespace holopack {

// A point's homogeneous lift F(z) together with F'(z). The lift is defined up
// to a nonvanishing holomorphic gauge; fs_density is gauge invariant.
template <typename Real = double>
struct CurveJetT {
    std::vector<std::complex<Real>> lift;
    std::vector<std::complex<Real>> derivative;

    int dim() const { return static_cast<int>(lift.size()) - 1; }
};

using CurveJet = CurveJetT<double>;

enum class MetricNormalization {
    FubiniStudy,    // omega_FS, projective line has area 1
    RescaledSphere, // dw dwbar / (1+|w|^2)^2, dim 1 only; equals pi * omega_FS
    Euclidean,      // flat targets (C^n, torus)
};

// Pullback energy density |df|^2 against Lebesgue measure dx dy, computed from
// the closed form (|F|^2 |F'|^2 - |<F,F'>|^2) / (pi |F|^4). Nonnegative by
// Cauchy-Schwarz. Throws ZeroLift when the lift vanishes.
template <typename Real = double>
Real fs_density_t(const CurveJetT<Real>& jet);

double fs_density(const CurveJet& jet);

// Flat-target density: sum of |F_i'|^2 (the lift holds affine values).
double euclidean_density(const CurveJet& jet);

// Density under the requested normalization. RescaledSphere requires dim 1 and
// equals pi * (Fubini-Study density).
double density(const CurveJet& jet, MetricNormalization norm);

// Norm |df|(z) of a dim-1 curve from chart data (f, f'). When |f| > 1 the
// evaluation switches to the inverted chart w = 1/f, w' = -f'/f^2, which this
// helper performs internally; callers pass whichever chart they have.
// FubiniStudy value = RescaledSphere value / sqrt(pi). Throws ChartOverflow if
// both charts are degenerate.
double spherical_norm(const cplx& f_val, const cplx& f_deriv, MetricNormalization norm);

// Gauge re-lift: divides lift and derivative by the largest-magnitude lift
// component (a constant gauge; density unchanged). Used to keep intermediates
// in range when components exceed ~1e100.
template <typename Real>
void relift_largest(CurveJetT<Real>& jet);

} // namespace holopack
