#pragma once

#include <functional>
#include <string>
#include <vector>

#include "curves.hpp"

namespace holopack {

struct ScalarJet {
    cplx f;
    cplx fp;
};

// Scalar meromorphic curve into CP^1, evaluated in the affine chart. Used by
// the small-disk estimates, which run against the rescaled spherical metric
// |df| = |f'| / (1 + |f|^2).
struct ScalarCurve {
    std::string name;
    std::function<ScalarJet(cplx)> eval;

    static ScalarCurve identity();      // f(z) = z
    static ScalarCurve scale(cplx c);   // f(z) = c z
    static ScalarCurve sine();          // f(z) = sin z
    static ScalarCurve from_spec(const CurveSpec& spec); // dim-1 spec, f = F1/F0
};

// |df|^2(z) in the rescaled spherical metric.
double spherical_density(const ScalarCurve& f, cplx z);

struct TaylorData {
    std::vector<cplx> coeffs; // a_1 .. a_N
    std::vector<double> args; // theta_n = arg a_n, 0 when a_n = 0

    cplx a(int n) const { return coeffs.at(n - 1); }
    double theta(int n) const { return args.at(n - 1); }
};

// Taylor coefficients a_1..a_N of f at 0 via the Cauchy integral on |z| =
// radius, trapezoidal contour quadrature (spectrally accurate). Requires
// f(0) = 0 (NotVanishingAtOrigin).
TaylorData taylor_from_cauchy(const ScalarCurve& f, int N, double radius, int nodes = 0);

// max(0, 1 - |a_1|): the effective admissibility slack of a concrete curve.
double effective_epsilon(const ScalarCurve& f, double radius = 0.25);

struct AdmissibilityResult {
    bool admissible = false;
    cplx first_violation{0, 0};
    double worst_norm = 0; // largest |df| seen on the grid
};

// True iff |df| <= 1 + 1e-12 on the polar grid over |z| <= r_max and
// f(0) = 0 with 1 - epsilon <= |df|(0) <= 1 + 1e-12.
AdmissibilityResult admissibility_scan(const ScalarCurve& f, double epsilon, double r_max = 1.0,
                                       int n_radial = 24, int n_angular = 64);

struct LemmaCheck {
    std::string name;
    bool holds = false;
    double min_margin = 0;  // min over the grid of (rhs - lhs)
    double worst_lhs = 0;
    double worst_rhs = 0;
    bool degenerate = false; // bound additive terms below binary64 resolution
};

struct LemmaSuiteReport {
    double epsilon_eff = 0;
    double r0_eff = 0;
    std::vector<LemmaCheck> checks;
    bool all_hold = false;
};

// Pointwise verification of the small-disk inequality chain on a polar grid
// of the disk r <= r0_eff (r0_eff <= 0.3): apriori |f| <= tan r, coefficient
// bounds, denominator/numerator estimates, and the assembled density bound.
LemmaSuiteReport lemma_suite(const ScalarCurve& f, double r0_eff, int n_radial = 12, int n_angular = 32,
                             int taylor_terms = 24);

struct SectorAverageResult {
    double average = 0;
    double bound = 0; // 1 - r0^2/4 + sqrt(epsilon_eff)
    bool holds = false;
};

// Quadrature average of |df|^2 over the sector {r <= r0, alpha <= theta <=
// alpha + pi/2} against the sector bound.
SectorAverageResult sector_average(const ScalarCurve& f, double r0, double alpha, double epsilon_eff,
                                   int order = 48);

struct SquareAverageResult {
    double average = 0;
    double bound_epsilon = 0; // 1 - epsilon_eff
    double bound_sector = 0;  // 1 - (pi/16)(r0^2/4 - sqrt(epsilon_eff))
    bool holds = false;       // average <= both bounds
};

// Tensor quadrature average of |df|^2 over the side-2r0 square centered at
// `center`, against both square bounds.
SquareAverageResult square_average(const ScalarCurve& f, double r0, cplx center, double epsilon_eff,
                                   int order = 64);

} // namespace holopack
