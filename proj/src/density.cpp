#include "density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadrature.hpp"

namespace holopack {

RadiusSchedule RadiusSchedule::doubling(double r0, int doublings) {
    require(r0 > 0, ErrorCode::InvalidArgument, "schedule base radius must be positive");
    require(doublings >= 0, ErrorCode::InvalidArgument, "doublings must be nonnegative");
    RadiusSchedule s;
    double r = r0;
    for (int k = 0; k <= doublings; ++k) {
        s.radii.push_back(r);
        r *= 2.0;
    }
    return s;
}

void RadiusSchedule::validate() const {
    require(!radii.empty(), ErrorCode::InvalidArgument, "radius schedule is empty");
    double prev = 0;
    for (double r : radii) {
        require(r > prev, ErrorCode::InvalidArgument, "radius schedule must be strictly increasing and positive");
        prev = r;
    }
}

namespace {

// One pass of the polar tensor rule at a given resolution scale (scale = 1
// for the base node counts, 2 for doubled).
double polar_integral(const std::function<double(cplx)>& density, double R, const DiskQuadConfig& cfg,
                      int scale) {
    int n_annuli = std::max(1, static_cast<int>(std::ceil(R / cfg.radial_cell))) * scale;
    int radial_order = cfg.radial_order;
    std::vector<double> annulus_vals(n_annuli, 0.0);
    run_chunks(n_annuli, [&](std::size_t k) {
        double r_lo = R * static_cast<double>(k) / n_annuli;
        double r_hi = R * static_cast<double>(k + 1) / n_annuli;
        MappedRule radial = gauss_legendre_on(radial_order, r_lo, r_hi);
        CompensatedSum<double> acc;
        for (int i = 0; i < radial_order; ++i) {
            double r = radial.x[i];
            int m = std::max(cfg.min_angular,
                             static_cast<int>(std::ceil(2.0 * std::numbers::pi * r / cfg.angular_step))) *
                    scale;
            double dtheta = 2.0 * std::numbers::pi / m;
            CompensatedSum<double> ring;
            for (int j = 0; j < m; ++j) {
                double theta = (j + 0.5) * dtheta;
                ring.add(density(cplx(r * std::cos(theta), r * std::sin(theta))));
            }
            acc.add(radial.w[i] * r * ring.value() * dtheta);
        }
        annulus_vals[k] = acc.value();
    });
    CompensatedSum<double> total;
    for (double v : annulus_vals) total.add(v);
    return total.value();
}

} // namespace

DiskAverage disk_average_fn(const std::function<double(cplx)>& density, double R, const DiskQuadConfig& cfg) {
    require(R > 0, ErrorCode::InvalidArgument, "disk radius must be positive");
    double area = std::numbers::pi * R * R;
    double coarse = polar_integral(density, R, cfg, 1);
    double fine = polar_integral(density, R, cfg, 2);
    double err = std::abs(fine - coarse) / area;
    if (err > cfg.diverge_tol) {
        double finer = polar_integral(density, R, cfg, 4);
        double err2 = std::abs(finer - fine) / area;
        if (err2 > 0.9 * err && err2 > cfg.diverge_tol)
            fail(ErrorCode::QuadratureDiverged,
                 "disk quadrature error did not shrink under node doubling (pole in the wrong chart?)");
        return {finer / area, err2};
    }
    return {fine / area, err};
}

DiskAverage disk_average(const CurveSpec& spec, double R, const DiskQuadConfig& cfg) {
    return disk_average_fn([&](cplx z) { return spec.density(z); }, R, cfg);
}

double disk_energy(const CurveSpec& spec, double R, const DiskQuadConfig& cfg) {
    DiskAverage avg = disk_average(spec, R, cfg);
    return avg.average * std::numbers::pi * R * R;
}

DensityProfile density_estimate(const CurveSpec& spec, const RadiusSchedule& schedule, int window,
                                const DiskQuadConfig& cfg) {
    schedule.validate();
    require(window >= 1, ErrorCode::InvalidArgument, "window must be >= 1");
    DensityProfile profile;
    profile.window = window;
    for (double R : schedule.radii) {
        DiskAverage avg = disk_average(spec, R, cfg);
        profile.samples.push_back({R, avg.average, avg.error_estimate});
    }
    std::size_t first = profile.samples.size() > static_cast<std::size_t>(window)
                            ? profile.samples.size() - window
                            : 0;
    double tail = 0;
    for (std::size_t i = first; i < profile.samples.size(); ++i)
        tail = std::max(tail, profile.samples[i].average);
    profile.tail_estimate = tail;
    return profile;
}

double elliptic_lower_bound(const CurveSpec& spec) {
    EllipticEnergyReport report = energy_over_fundamental_domain(spec);
    if (report.energy < 1e-12) fail(ErrorCode::ConstantCurve, "energy below threshold; curve is constant");
    return report.energy / (report.sup_df * report.sup_df * report.vol);
}

double gap_ratio(const CurveSpec& spec) {
    require(spec.normalization() == MetricNormalization::FubiniStudy, ErrorCode::InvalidArgument,
            "gap ratio is defined for projective targets");
    EllipticEnergyReport report = energy_over_fundamental_domain(spec);
    if (report.energy < 1e-12) fail(ErrorCode::ConstantCurve, "energy below threshold; curve is constant");
    return report.gap_ratio;
}

TilingReport tiling_report(const CurveSpec& spec, double R, double side, int square_order) {
    require(side > 0, ErrorCode::InvalidArgument, "tile side must be positive");
    require(R > 2.0 * side, ErrorCode::InvalidArgument, "tiling needs R > 2 * side");
    TilingReport report;
    report.R = R;
    report.side = side;

    long long imax = static_cast<long long>(std::ceil(R / side)) + 1;
    MappedRule cell = gauss_legendre_on(square_order, 0.0, 1.0);
    for (long long i = -imax; i < imax; ++i) {
        for (long long j = -imax; j < imax; ++j) {
            // Square [i s, (i+1) s] x [j s, (j+1) s]; inside iff its farthest
            // corner is within R.
            double x0 = i * side, x1 = (i + 1) * side;
            double y0 = j * side, y1 = (j + 1) * side;
            double xm = std::max(std::abs(x0), std::abs(x1));
            double ym = std::max(std::abs(y0), std::abs(y1));
            if (xm * xm + ym * ym > R * R) continue;
            CompensatedSum<double> acc;
            for (int a = 0; a < square_order; ++a)
                for (int b = 0; b < square_order; ++b)
                    acc.add(cell.w[a] * cell.w[b] *
                            spec.density(cplx(x0 + cell.x[a] * side, y0 + cell.x[b] * side)));
            report.per_square_averages.push_back(acc.value());
        }
    }
    report.count = static_cast<long long>(report.per_square_averages.size());
    report.max_average = report.per_square_averages.empty()
                             ? 0.0
                             : *std::max_element(report.per_square_averages.begin(),
                                                 report.per_square_averages.end());
    const double pi = std::numbers::pi;
    double lower = pi * (R - std::numbers::sqrt2 * side) * (R - std::numbers::sqrt2 * side);
    double covered = static_cast<double>(report.count) * side * side;
    report.sandwich_holds = lower <= covered && covered <= pi * R * R;
    return report;
}

} // namespace holopack
