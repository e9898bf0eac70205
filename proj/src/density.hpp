#pragma once

#include <vector>

#include "curves.hpp"

namespace holopack {

struct RadiusSchedule {
    std::vector<double> radii;

    // R_k = r0 * 2^k for k = 0..doublings.
    static RadiusSchedule doubling(double r0, int doublings);
    void validate() const; // strictly increasing, positive
};

struct DensityProfileRow {
    double radius = 0;
    double average = 0;
    double quad_error = 0;
};

struct DensityProfile {
    std::vector<DensityProfileRow> samples;
    int window = 3;
    double tail_estimate = 0; // max average over the last `window` samples
};

struct DiskQuadConfig {
    double radial_cell = 0.5;     // annulus width target
    int radial_order = 12;        // Gauss nodes per annulus
    double angular_step = 0.25;   // target arc-length spacing at radius r
    int min_angular = 64;
    double diverge_tol = 1e-9;    // QuadratureDiverged when doubling fails to shrink above this
};

struct DiskAverage {
    double average = 0;
    double error_estimate = 0;
};

// (1/(pi R^2)) * integral of |df|^2 over |z| <= R by polar tensor quadrature
// (Gauss-Legendre radially per annulus, uniform in angle). The error estimate
// comes from node-count doubling.
DiskAverage disk_average(const CurveSpec& spec, double R, const DiskQuadConfig& cfg = {});

// Same rule for a raw density functor (used by the growth functionals).
DiskAverage disk_average_fn(const std::function<double(cplx)>& density, double R,
                            const DiskQuadConfig& cfg = {});

// Disk energy (the integral itself, not the average).
double disk_energy(const CurveSpec& spec, double R, const DiskQuadConfig& cfg = {});

// Profile of disk averages over the schedule. tail_estimate is the windowed
// max standing in for the limsup; the profile is the primary output.
DensityProfile density_estimate(const CurveSpec& spec, const RadiusSchedule& schedule, int window = 3,
                                const DiskQuadConfig& cfg = {});

// E / (sup|df|^2 * vol) for an elliptic source; in (0, 1]. ConstantCurve when
// the energy is below 1e-12.
double elliptic_lower_bound(const CurveSpec& spec);

// sup|df|^2 * vol / deg for an elliptic source with projective target; >= 1.
double gap_ratio(const CurveSpec& spec);

struct TilingReport {
    double R = 0;
    double side = 0;
    long long count = 0;
    std::vector<double> per_square_averages;
    double max_average = 0;
    bool sandwich_holds = false; // pi (R - sqrt2 side)^2 <= N side^2 <= pi R^2
};

// Axis-aligned squares of the origin-anchored tiling fully inside the closed
// disk of radius R, with per-square quadrature averages of |df|^2.
TilingReport tiling_report(const CurveSpec& spec, double R, double side, int square_order = 8);

} // namespace holopack
