#pragma once

#include <functional>
#include <string>
#include <vector>

#include "curves.hpp"
#include "density.hpp"

namespace holopack {

// A nonconstant entire function presented through the data the growth
// functionals need: log|f| (stable for huge moduli), the Fubini-Study density
// of [1 : f], and optionally the logarithmic derivative f'/f.
struct EntireFunction {
    std::string name;
    std::function<double(cplx)> log_abs;
    std::function<double(cplx)> fs_density;
    std::function<cplx(cplx)> log_deriv; // may be null

    static EntireFunction exp_poly(Poly g); // f = e^{g(z)}
    static EntireFunction exp_sine();       // f = e^{sin z}
    static EntireFunction poly(Poly p);     // f = p(z)
};

struct ProximityValue {
    double value = 0;
    double error_estimate = 0;
    int nodes = 0;
};

// m(r, f) = (1/2pi) int log+ |f(r e^{i theta})| d theta, trapezoid in theta
// with node doubling (NodeLimit on failure to converge).
ProximityValue proximity_m(const EntireFunction& f, double r, double tol = 1e-8);

// T(r, f) = int_1^r (dt/t) (disk energy at t), outer Gauss rule in log t over
// inner polar disk quadrature.
double characteristic_T(const EntireFunction& f, double r, int outer_order = 48,
                        const DiskQuadConfig& cfg = {});

struct GrowthRow {
    double r = 0;
    double m = 0;
    double T = 0;
    double defect = 0; // T - m
};

std::vector<GrowthRow> growth_profile(const EntireFunction& f, const std::vector<double>& r_values);

struct LogDerivativeRow {
    double r = 0;
    double m_log_deriv = 0; // m(r, f'/f)
    double T_f = 0;
    double ratio = 0; // m(r, f'/f) / (log+ T(r,f) + log r)
};

// Numeric sanity check of the logarithmic-derivative estimate; reports the
// ratio per radius, no universal constant claimed. ZeroOnCircle when f'/f is
// singular on a sampled circle.
std::vector<LogDerivativeRow> log_derivative_check(const EntireFunction& f,
                                                   const std::vector<double>& r_values);

struct ExpPolyGrowth {
    double m_value = 0;
    double lower_bound = 0; // a0 r^n/(2 pi n) - C1 r^{n-1}/(4n)
    double r_threshold = 0; // smallest r >= 1 with a positive bound
    bool holds = false;
};

// m(r, e^g) against the explicit lower bound, for deg g = n >= 1 with real
// positive leading coefficient (pre-rotated). DegreeZero otherwise.
ExpPolyGrowth exp_poly_growth(const Poly& g, double r);

struct ExpLinearEnergy {
    double energy = 0;
    double bound = 0; // |a| R / pi
    bool holds = false;
};

// Disk energy of [1 : e^{a z + b}] with the strip bound |a| R / pi.
ExpLinearEnergy exp_linear_energy(cplx a, cplx b, double R, const DiskQuadConfig& cfg = {});

struct ExceptionalSet {
    std::vector<std::pair<double, double>> intervals; // open angular intervals in [0, 2pi]
    double measure() const;
    bool contains(double theta) const;
};

struct QuadraticSectorResult {
    ExceptionalSet excluded;
    double integral = 0;     // finite total over the complement
    double radial_cut = 0;   // truncation radius (bound tail < 1e-12 beyond)
    double per_theta_bound = 0; // closed-form bound C on each radial integral
};

// For f = e^{a z^2 + b z + c} (a real positive after rotation): builds the
// four delta-intervals around the pi/4 diagonals and integrates |df|^2 r dr
// d theta over the complement, truncated where the Gaussian bound tail drops
// below 1e-12. ZeroLeadingCoefficient when a = 0.
QuadraticSectorResult exp_quadratic_sector(double a, cplx b, cplx c, double delta);

// Measured distortion constant of the projective-linear map A: grid sup of
// |dA(u)|/|u| over unit jets at deterministically sampled base points.
double matrix_distortion(const CMatrix& a, int samples = 200);

struct HyperplaneProfile {
    DensityProfile profile;
    double distortion = 0; // measured C for the coefficient matrix
};

// Density profile of A^{-1} [1 : e^{a_1 z + b_1} : ...] over the schedule.
HyperplaneProfile hyperplane_density(const CMatrix& coefficients, const std::vector<cplx>& a,
                                     const std::vector<cplx>& b, const RadiusSchedule& schedule,
                                     const DiskQuadConfig& cfg = {});

// Least-squares slope of log(average) vs log(R) for a profile.
double profile_loglog_slope(const DensityProfile& profile);

} // namespace holopack
