#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geometry.hpp"
#include "linalg.hpp"
#include "scan.hpp"
#include "theta.hpp"

namespace holopack {

struct Lattice {
    cplx omega1{1, 0};
    cplx omega2{0, 1};
    cplx tau{0, 1}; // omega2/omega1 after orientation normalization
    double t = 1;   // Im tau
    double vol = 1; // |Im(conj(omega1) * omega2)|

    // Swaps the basis orientation if needed so Im(omega2/omega1) > 0.
    static Lattice from_basis(cplx w1, cplx w2);
    static Lattice square() { return from_basis({1, 0}, {0, 1}); }
    static Lattice from_tau(cplx tau) { return from_basis({1, 0}, tau); }

    // Nearest lattice point to z.
    cplx nearest_point(cplx z) const;
    double diameter() const { return std::abs(omega1 + omega2) > std::abs(omega1 - omega2)
                                  ? std::abs(omega1 + omega2)
                                  : std::abs(omega1 - omega2); }
};

// Ascending-coefficient polynomial over C.
struct Poly {
    std::vector<cplx> c;

    cplx eval(cplx z) const;
    cplx eval_deriv(cplx z) const;
    bool is_zero() const;
    static Poly mul(const Poly& p, const Poly& q);
    static Poly one() { return Poly{{cplx(1, 0)}}; }
};

struct JetOptions {
    bool allow_chart_flip = true;
};

class CurveSpec;
using CurveSpecPtr = std::shared_ptr<const CurveSpec>;

struct RationalData {
    std::vector<Poly> num; // one per homogeneous component
    std::vector<Poly> den; // same length; {1} when omitted
    std::vector<Poly> cleared; // num_i * prod_{j != i} den_j, built on construction
};

struct ExpLinearData {
    std::vector<cplx> a; // component i is exp(a_i z + b_i); flat targets use a_i z + b_i itself
    std::vector<cplx> b;
    std::optional<Lattice> source; // declared source lattice for torus maps
};

struct WeierstrassData {
    Lattice lattice;
    double tol = 1e-12;
    // theta backend on the normalized lattice Z + Z tau
    ThetaParams params;
    cplx series_c0; // S'''(0) / (3 S'(0)) for S = theta_{1/2,1/2}
};

struct ThetaEmbeddingData {
    EmbeddingSpec emb;
};

struct ScaledData {
    CurveSpecPtr inner;
    double m = 1;
};

// Curve into the complement of n+1 independent hyperplanes: the homogeneous
// lift is A^{-1} [1 : exp(a_1 z + b_1) : ... : exp(a_n z + b_n)].
struct HyperplaneData {
    CMatrix coefficients;  // the (n+1)x(n+1) matrix A
    CMatrix inverse;
    std::vector<cplx> a; // exponents, length n (leading 1 implicit)
    std::vector<cplx> b;
};

struct IncludedData {
    CurveSpecPtr inner;
    int target_dim = 2;
};

// Closed-world registry of holomorphic curve families with analytic jet
// evaluation. Specs are immutable and safely shareable across threads.
class CurveSpec {
public:
    using Data = std::variant<RationalData, ExpLinearData, WeierstrassData, ThetaEmbeddingData, ScaledData,
                              IncludedData, HyperplaneData>;

    static CurveSpec rational(std::vector<Poly> numerators, std::vector<Poly> denominators = {},
                              MetricNormalization target = MetricNormalization::FubiniStudy);
    static CurveSpec exp_linear(std::vector<cplx> a, std::vector<cplx> b,
                                MetricNormalization target = MetricNormalization::FubiniStudy,
                                std::optional<Lattice> source = {});
    static CurveSpec weierstrass_p(const Lattice& lattice, double tol = 1e-12);
    static CurveSpec theta_embedding(cplx tau, int l, double tol = 1e-12);
    static CurveSpec scaled(CurveSpec inner, double m);
    static CurveSpec included(CurveSpec inner, int target_dim);
    static CurveSpec constant(cplx value);
    static CurveSpec hyperplane_complement(CMatrix coefficients, std::vector<cplx> a, std::vector<cplx> b);

    int dim() const { return dim_; }
    MetricNormalization normalization() const { return norm_; }
    const Data& data() const { return data_; }
    std::string family_name() const;

    // Period lattice for elliptic sources (Weierstrass, theta embeddings,
    // declared torus maps); empty for entire non-periodic families.
    std::optional<Lattice> periods() const;

    // (F(z), F'(z)) with F != 0; derivatives are term-wise analytic. The lift
    // may come back in a z-local holomorphic gauge (exp re-centering, theta
    // reduction phases, chart flips); density is unaffected.
    CurveJet jet(cplx z, const JetOptions& opts = {}) const;

    // |df|^2 and |df| at z under this spec's target normalization.
    double density(cplx z) const;
    double df_norm(cplx z) const;

private:
    CurveSpec(Data data, MetricNormalization norm, int dim)
        : data_(std::move(data)), norm_(norm), dim_(dim) {}

    Data data_;
    MetricNormalization norm_;
    int dim_ = 1;
};

// Rescaling transform z -> f(z/m): density at z equals (1/m^2) * density of f
// at z/m. Throws NonpositiveScale.
CurveSpec rescale_curve(const CurveSpec& spec, double m);

// Weierstrass p and p' on the spec's lattice (for tests and cross-checks).
cplx weierstrass_p_value(const CurveSpec& wp_spec, cplx z);
cplx weierstrass_p_deriv(const CurveSpec& wp_spec, cplx z);

// Grid sup of |df| over the parallelogram {origin + s e1 + t e2}, two local
// refinement rounds; a lower bound on the true sup with spacing attached.
ScanResult sup_norm_df(const CurveSpec& spec, cplx origin, cplx e1, cplx e2, int resolution = 64);

// Domain defaults: one period parallelogram for elliptic sources, otherwise a
// centered square of half-width 5.
ScanResult sup_norm_df(const CurveSpec& spec, int resolution = 64);

struct EllipticEnergyReport {
    double energy = 0;   // E(f) over one period parallelogram
    double vol = 0;      // period-domain area
    double sup_df = 0;   // grid sup of |df|
    double gap_ratio = 0; // sup_df^2 * vol / energy
    double sup_spacing = 0;
};

struct EnergyOptions {
    int quad_order = 160;     // tensor Gauss-Legendre nodes per axis
    cplx base_point{0, 0};    // z0 of the period parallelogram
    double periodicity_tol = 1e-8;
    bool check_periodicity = true;
};

// Tensor quadrature of the pullback density over one period parallelogram.
// Verifies double periodicity projectively on boundary samples (NotPeriodic).
EllipticEnergyReport energy_over_fundamental_domain(const CurveSpec& spec, const EnergyOptions& opts = {});

// Projective (chordal) distance between the points cut out by two jets.
double projective_distance(const CurveJet& a, const CurveJet& b);

} // namespace holopack
