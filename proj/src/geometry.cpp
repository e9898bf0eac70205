#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace holopack {

namespace {

template <typename Real>
bool lift_is_zero(const CurveJetT<Real>& jet) {
    for (const auto& c : jet.lift)
        if (c != std::complex<Real>(0)) return false;
    return true;
}

} // namespace

template <typename Real>
void relift_largest(CurveJetT<Real>& jet) {
    Real best = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < jet.lift.size(); ++i) {
        Real m = std::abs(jet.lift[i]);
        if (m > best) {
            best = m;
            k = i;
        }
    }
    if (best == Real(0)) return;
    std::complex<Real> s = jet.lift[k];
    for (auto& c : jet.lift) c /= s;
    for (auto& c : jet.derivative) c /= s;
}

template void relift_largest<double>(CurveJetT<double>&);
template void relift_largest<long double>(CurveJetT<long double>&);

template <typename Real>
Real fs_density_t(const CurveJetT<Real>& jet) {
    require(jet.lift.size() == jet.derivative.size(), ErrorCode::InvalidArgument,
            "jet lift and derivative must have equal length");
    require(jet.lift.size() >= 2, ErrorCode::InvalidArgument, "jet needs at least two homogeneous components");
    if (lift_is_zero(jet)) fail(ErrorCode::ZeroLift, "all lift components are zero; caller must re-lift");

    // Work on a rescaled copy when components are large so |F|^4 stays finite.
    CurveJetT<Real> local;
    const CurveJetT<Real>* j = &jet;
    Real biggest = 0;
    for (const auto& c : jet.lift) biggest = std::max(biggest, std::abs(c));
    if (biggest > Real(1e100)) {
        local = jet;
        relift_largest(local);
        j = &local;
    }

    Real f2 = 0, d2 = 0;
    std::complex<Real> inner(0);
    for (std::size_t i = 0; i < j->lift.size(); ++i) {
        f2 += std::norm(j->lift[i]);
        d2 += std::norm(j->derivative[i]);
        inner += j->lift[i] * std::conj(j->derivative[i]);
    }
    Real num = f2 * d2 - std::norm(inner);
    if (num < Real(0)) num = 0; // Cauchy-Schwarz; negative only through rounding
    return num / (Real(std::numbers::pi) * f2 * f2);
}

template double fs_density_t<double>(const CurveJetT<double>&);
template long double fs_density_t<long double>(const CurveJetT<long double>&);

double fs_density(const CurveJet& jet) { return fs_density_t<double>(jet); }

double euclidean_density(const CurveJet& jet) {
    require(jet.lift.size() == jet.derivative.size(), ErrorCode::InvalidArgument,
            "jet lift and derivative must have equal length");
    CompensatedSum<double> acc;
    for (const auto& d : jet.derivative) acc.add(std::norm(d));
    return acc.value();
}

double density(const CurveJet& jet, MetricNormalization norm) {
    switch (norm) {
        case MetricNormalization::FubiniStudy: return fs_density(jet);
        case MetricNormalization::RescaledSphere:
            require(jet.dim() == 1, ErrorCode::InvalidArgument, "RescaledSphere is defined for dim 1 only");
            return std::numbers::pi * fs_density(jet);
        case MetricNormalization::Euclidean: return euclidean_density(jet);
    }
    fail(ErrorCode::Internal, "unknown metric normalization");
}

double spherical_norm(const cplx& f_val, const cplx& f_deriv, MetricNormalization norm) {
    require(norm != MetricNormalization::Euclidean, ErrorCode::InvalidArgument,
            "spherical_norm expects a spherical normalization");
    double af = std::abs(f_val);
    double value;
    if (!std::isfinite(af)) {
        // A pole must arrive as inverted chart data (w = 0, w' = c).
        fail(ErrorCode::ChartOverflow, "chart value not finite; supply the inverted chart data");
    } else if (af > 1.0) {
        // Inverted chart w = 1/f, w' = -f'/f^2.
        cplx w = 1.0 / f_val;
        cplx wp = -f_deriv / (f_val * f_val);
        if (!is_finite(w) || !is_finite(wp)) fail(ErrorCode::ChartOverflow, "both charts numerically degenerate");
        value = std::abs(wp) / (1.0 + std::norm(w));
    } else {
        value = std::abs(f_deriv) / (1.0 + af * af);
    }
    if (!std::isfinite(value)) fail(ErrorCode::ChartOverflow, "spherical norm not finite in either chart");
    if (norm == MetricNormalization::FubiniStudy) value /= std::sqrt(std::numbers::pi);
    return value;
}

} // namespace holopack
