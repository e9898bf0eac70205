#pragma once

#include <array>
#include <complex>
#include <vector>

#include "geometry.hpp"
#include "support.hpp"

namespace holopack {

// Certified truncation for theta(z) = sum_n exp(pi i n^2 tau + 2 pi i n z) and
// its first three z-derivatives on the strip |Im z| <= y_max. The stored N
// guarantees absolute truncation error < tol for every order up to 3.
struct ThetaParams {
    cplx tau;
    double t = 0; // Im tau
    double tol = 1e-12;
    double y_max = 0;
    std::array<int, 4> trunc{}; // N per derivative order

    static ThetaParams build(cplx tau, double tol, double y_max);
    int max_trunc() const { return trunc[3]; }
};

struct Characteristic {
    double a = 0;
    double b = 0;
};

// theta and derivatives up to max_order (<= 3) in one pass. Enforces the
// certified strip: throws WindowExceeded outside |Im z| <= y_max.
std::vector<cplx> theta_derivs(cplx z, const ThetaParams& params, int max_order);
cplx theta(cplx z, const ThetaParams& params);
cplx theta_deriv(cplx z, const ThetaParams& params);

// theta_{a,b}(z) = exp(pi i a^2 tau + 2 pi i a (z+b)) theta(z + a tau + b),
// with derivatives assembled from the shifted series. The widened argument
// z + a tau + b must stay inside the certified strip.
std::vector<cplx> theta_ab_derivs(cplx z, const Characteristic& ch, const ThetaParams& params, int max_order);
cplx theta_ab(cplx z, const Characteristic& ch, const ThetaParams& params);

struct MeanSquareResult {
    double numeric = 0;    // tensor Gauss quadrature of |theta_{a,b}(z)|^2 over [0,1]^2
    double closed_form = 0; // sqrt(1/(2t)) exp(2 pi y^2 / t)
    double abs_difference = 0;
};

// Mean square of theta_{a,b}(z) over the characteristic square, against the
// closed form. quad_order is the Gauss order per axis (>= 32).
MeanSquareResult mean_square_characteristics(cplx z, const ThetaParams& params, int quad_order);

// The l^2 characteristics (1/l Z)^2 cap [0,1)^2 in row-major order (a outer,
// b inner) and the theta data needed to evaluate phi_l jets.
struct EmbeddingSpec {
    ThetaParams params;
    int l = 2;
    std::vector<Characteristic> grid;

    static EmbeddingSpec build(cplx tau, int l, double tol = 1e-12);
};

// Jet of phi_l : C/lLambda -> CP^{l^2-1} at z. The argument is reduced modulo
// Z + Z tau and the jet is returned in the reduced gauge with unit phases
// applied, so the lift is projectively the correct point and its density is
// exact for every z in the plane.
CurveJet phi_l_jet(cplx z, const EmbeddingSpec& emb);
CurveJetT<long double> phi_l_jet_ld(cplx z, const EmbeddingSpec& emb);

// Density |dphi_l|^2 at z (Fubini-Study pullback).
double phi_l_density(cplx z, const EmbeddingSpec& emb);

struct TianScan {
    double sup_defect = 0;      // grid max of | |dphi_l|^2 - 1/t |
    double sup_density = 0;     // grid max of |dphi_l|^2
    double min_density = 0;     // grid min of |dphi_l|^2 (immersion check)
    double grid_spacing = 0;
    double capacity_lower_bound = 0; // 1 / (t * sup_density); approximate, not certified
};

// Scans the fundamental domain K = {x + y tau : 0 <= x,y <= 1} of the Z^2
// symmetry inside C/lLambda. The density is evaluated in extended precision:
// for l >= 5 the true defect sits below the binary64 noise floor.
TianScan tian_scan(const EmbeddingSpec& emb, int resolution = 64);

double tian_sup_defect(const EmbeddingSpec& emb, int resolution = 64);
double capacity_lower_bound(const EmbeddingSpec& emb, int resolution = 64);

// z = z0 + alpha*tau + beta with alpha, beta integers and z0 in the centered
// fundamental cell of Z + Z tau.
struct ReducedPoint {
    cplx z0;
    long alpha = 0;
    long beta = 0;
};
ReducedPoint reduce_mod_lattice(cplx z, cplx tau);

} // namespace holopack
