#include "curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "quadrature.hpp"

namespace holopack {

// ---------------------------------------------------------------------------
// Lattice

Lattice Lattice::from_basis(cplx w1, cplx w2) {
    require(w1 != cplx(0) && w2 != cplx(0), ErrorCode::InvalidArgument, "lattice basis vectors must be nonzero");
    cplx ratio = w2 / w1;
    if (ratio.imag() < 0) std::swap(w1, w2);
    ratio = w2 / w1;
    require(ratio.imag() > 0, ErrorCode::InvalidArgument, "lattice basis is degenerate (real ratio)");
    Lattice lat;
    lat.omega1 = w1;
    lat.omega2 = w2;
    lat.tau = ratio;
    lat.t = ratio.imag();
    lat.vol = std::abs(std::imag(std::conj(w1) * w2));
    return lat;
}

cplx Lattice::nearest_point(cplx z) const {
    // Coordinates of z in the basis (omega1, omega2).
    double det = omega1.real() * omega2.imag() - omega1.imag() * omega2.real();
    double s = (z.real() * omega2.imag() - z.imag() * omega2.real()) / det;
    double t_coord = (omega1.real() * z.imag() - omega1.imag() * z.real()) / det;
    return static_cast<double>(std::lround(s)) * omega1 + static_cast<double>(std::lround(t_coord)) * omega2;
}

// ---------------------------------------------------------------------------
// Poly

cplx Poly::eval(cplx z) const {
    cplx acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

cplx Poly::eval_deriv(cplx z) const {
    cplx acc(0);
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + static_cast<double>(i) * c[i];
    return acc;
}

bool Poly::is_zero() const {
    for (const auto& v : c)
        if (v != cplx(0)) return false;
    return true;
}

Poly Poly::mul(const Poly& p, const Poly& q) {
    if (p.c.empty() || q.c.empty()) return Poly{};
    Poly out;
    out.c.assign(p.c.size() + q.c.size() - 1, cplx(0));
    for (std::size_t i = 0; i < p.c.size(); ++i)
        for (std::size_t j = 0; j < q.c.size(); ++j) out.c[i + j] += p.c[i] * q.c[j];
    return out;
}

// ---------------------------------------------------------------------------
// Spec construction

CurveSpec CurveSpec::rational(std::vector<Poly> numerators, std::vector<Poly> denominators,
                              MetricNormalization target) {
    require(numerators.size() >= 2 || target == MetricNormalization::Euclidean, ErrorCode::InvalidArgument,
            "projective rational curve needs at least two homogeneous components");
    require(!numerators.empty(), ErrorCode::InvalidArgument, "rational curve needs components");
    if (denominators.empty()) denominators.assign(numerators.size(), Poly::one());
    require(denominators.size() == numerators.size(), ErrorCode::InvalidArgument,
            "numerator/denominator counts differ");
    bool all_zero = true;
    for (const auto& p : numerators) all_zero = all_zero && p.is_zero();
    require(!all_zero, ErrorCode::InvalidArgument, "rational components must not all vanish identically");
    for (const auto& d : denominators)
        require(!d.is_zero(), ErrorCode::InvalidArgument, "denominator polynomial is identically zero");

    RationalData data;
    data.num = std::move(numerators);
    data.den = std::move(denominators);
    // Clear denominators once: F_i = num_i * prod_{j != i} den_j.
    data.cleared.resize(data.num.size());
    for (std::size_t i = 0; i < data.num.size(); ++i) {
        Poly acc = data.num[i];
        for (std::size_t j = 0; j < data.den.size(); ++j)
            if (j != i) acc = Poly::mul(acc, data.den[j]);
        data.cleared[i] = std::move(acc);
    }
    int dim = static_cast<int>(data.num.size()) - 1;
    if (target == MetricNormalization::Euclidean) dim = static_cast<int>(data.num.size());
    return CurveSpec(Data(std::move(data)), target, dim);
}

CurveSpec CurveSpec::exp_linear(std::vector<cplx> a, std::vector<cplx> b, MetricNormalization target,
                                std::optional<Lattice> source) {
    require(!a.empty() && a.size() == b.size(), ErrorCode::InvalidArgument,
            "exp-linear data must be nonempty pairs (a_i, b_i)");
    int dim;
    if (target == MetricNormalization::Euclidean) {
        dim = static_cast<int>(a.size());
    } else {
        require(a.size() >= 2, ErrorCode::InvalidArgument,
                "projective exp-linear curve needs >= 2 components (leading one included)");
        dim = static_cast<int>(a.size()) - 1;
    }
    require(dim >= 1, ErrorCode::InvalidArgument, "exp-linear dimension must be >= 1");
    ExpLinearData data{std::move(a), std::move(b), std::move(source)};
    return CurveSpec(Data(std::move(data)), target, dim);
}

CurveSpec CurveSpec::weierstrass_p(const Lattice& lattice, double tol) {
    WeierstrassData data;
    data.lattice = lattice;
    data.tol = tol;
    // S = theta_{1/2,1/2} on the normalized lattice Z + Z tau; arguments are
    // lattice-reduced before use, so a one-cell strip plus margin suffices.
    data.params = ThetaParams::build(lattice.tau, tol, lattice.t + 1.0);
    auto s0 = theta_ab_derivs(cplx(0, 0), Characteristic{0.5, 0.5}, data.params, 3);
    require(std::abs(s0[1]) > 0, ErrorCode::Internal, "theta_{1/2,1/2} derivative vanished at 0");
    data.series_c0 = s0[3] / (3.0 * s0[1]);
    return CurveSpec(Data(std::move(data)), MetricNormalization::FubiniStudy, 1);
}

CurveSpec CurveSpec::theta_embedding(cplx tau, int l, double tol) {
    ThetaEmbeddingData data{EmbeddingSpec::build(tau, l, tol)};
    int dim = l * l - 1;
    return CurveSpec(Data(std::move(data)), MetricNormalization::FubiniStudy, dim);
}

CurveSpec CurveSpec::scaled(CurveSpec inner, double m) {
    require(m > 0 && std::isfinite(m), ErrorCode::NonpositiveScale, "rescale factor must be positive");
    int dim = inner.dim();
    MetricNormalization norm = inner.normalization();
    ScaledData data{std::make_shared<CurveSpec>(std::move(inner)), m};
    return CurveSpec(Data(std::move(data)), norm, dim);
}

CurveSpec CurveSpec::included(CurveSpec inner, int target_dim) {
    require(inner.normalization() == MetricNormalization::FubiniStudy, ErrorCode::InvalidArgument,
            "inclusion is defined for projective targets");
    require(target_dim > inner.dim(), ErrorCode::InvalidArgument, "inclusion target dim must exceed inner dim");
    IncludedData data{std::make_shared<CurveSpec>(std::move(inner)), target_dim};
    return CurveSpec(Data(std::move(data)), MetricNormalization::FubiniStudy, target_dim);
}

CurveSpec CurveSpec::constant(cplx value) {
    return rational({Poly::one(), Poly{{value}}}, {}, MetricNormalization::FubiniStudy);
}

CurveSpec CurveSpec::hyperplane_complement(CMatrix coefficients, std::vector<cplx> a, std::vector<cplx> b) {
    require(!a.empty() && a.size() == b.size(), ErrorCode::InvalidArgument,
            "hyperplane curve needs exponent pairs (a_i, b_i), i = 1..n");
    require(coefficients.size() == a.size() + 1, ErrorCode::InvalidArgument,
            "coefficient matrix must be (n+1)x(n+1) for n exponent pairs");
    HyperplaneData data;
    data.inverse = invert_matrix(coefficients); // SingularMatrix when degenerate
    data.coefficients = std::move(coefficients);
    data.a = std::move(a);
    data.b = std::move(b);
    int dim = static_cast<int>(data.a.size());
    return CurveSpec(Data(std::move(data)), MetricNormalization::FubiniStudy, dim);
}

std::string CurveSpec::family_name() const {
    struct Visitor {
        std::string operator()(const RationalData&) const { return "rational"; }
        std::string operator()(const ExpLinearData&) const { return "exp_linear"; }
        std::string operator()(const WeierstrassData&) const { return "weierstrass_p"; }
        std::string operator()(const ThetaEmbeddingData&) const { return "theta_embedding"; }
        std::string operator()(const ScaledData&) const { return "scaled"; }
        std::string operator()(const IncludedData&) const { return "included"; }
        std::string operator()(const HyperplaneData&) const { return "hyperplane_complement"; }
    };
    return std::visit(Visitor{}, data_);
}

std::optional<Lattice> CurveSpec::periods() const {
    if (const auto* wp = std::get_if<WeierstrassData>(&data_)) return wp->lattice;
    if (const auto* th = std::get_if<ThetaEmbeddingData>(&data_)) {
        double l = th->emb.l;
        return Lattice::from_basis(cplx(l, 0), l * th->emb.params.tau);
    }
    if (const auto* el = std::get_if<ExpLinearData>(&data_)) return el->source;
    if (const auto* sc = std::get_if<ScaledData>(&data_)) {
        auto inner = sc->inner->periods();
        if (!inner) return {};
        return Lattice::from_basis(sc->m * inner->omega1, sc->m * inner->omega2);
    }
    if (const auto* inc = std::get_if<IncludedData>(&data_)) return inc->inner->periods();
    return {};
}

// ---------------------------------------------------------------------------
// Weierstrass evaluation (theta backend)

namespace {

// p and p' on the normalized lattice Z + Z tau via logarithmic derivatives of
// S = theta_{1/2,1/2}: p = -(log S)'' + S'''(0)/(3 S'(0)), p' = -(log S)'''.
void wp_normalized(const WeierstrassData& d, cplx zeta0, cplx& p, cplx& pp) {
    auto s = theta_ab_derivs(zeta0, Characteristic{0.5, 0.5}, d.params, 3);
    cplx l1 = s[1] / s[0];
    cplx l2 = s[2] / s[0] - l1 * l1;
    cplx l3 = s[3] / s[0] - 3.0 * (s[2] / s[0]) * l1 + 2.0 * l1 * l1 * l1;
    p = -l2 + d.series_c0;
    pp = -l3;
}

// Near-pole threshold in normalized coordinates: below this, the inverted
// chart is the exact quadratic 1/p = u^2 (1 + O(u^4)) to full precision.
constexpr double kPoleSeries = 1e-4;
constexpr double kPoleExact = 1e-9;

CurveJet weierstrass_jet(const WeierstrassData& d, cplx z, const JetOptions& opts) {
    cplx w1 = d.lattice.omega1;
    ReducedPoint red = reduce_mod_lattice(z / w1, d.lattice.tau);
    cplx zeta0 = red.z0;
    CurveJet jet;
    if (std::abs(zeta0) <= kPoleSeries) {
        if (!opts.allow_chart_flip && std::abs(zeta0) <= kPoleExact)
            fail(ErrorCode::PoleAtLatticePoint, "Weierstrass pole at a lattice point in the naive chart");
        // Inverted chart: w = 1/p = omega1^2 zeta0^2, w' = 2 omega1 zeta0.
        jet.lift = {w1 * w1 * zeta0 * zeta0, cplx(1, 0)};
        jet.derivative = {2.0 * w1 * zeta0, cplx(0, 0)};
        return jet;
    }
    cplx p, pp;
    wp_normalized(d, zeta0, p, pp);
    p /= w1 * w1;
    pp /= w1 * w1 * w1;
    if (std::abs(p) <= 1.0 || !opts.allow_chart_flip) {
        jet.lift = {cplx(1, 0), p};
        jet.derivative = {cplx(0, 0), pp};
    } else {
        jet.lift = {1.0 / p, cplx(1, 0)};
        jet.derivative = {-pp / (p * p), cplx(0, 0)};
    }
    return jet;
}

CurveJet exp_linear_jet(const ExpLinearData& d, cplx z, MetricNormalization norm) {
    CurveJet jet;
    std::size_t n = d.a.size();
    jet.lift.resize(n);
    jet.derivative.resize(n);
    if (norm == MetricNormalization::Euclidean) {
        // Flat targets use the exponent lines themselves (torus maps).
        for (std::size_t i = 0; i < n; ++i) {
            jet.lift[i] = d.a[i] * z + d.b[i];
            jet.derivative[i] = d.a[i];
        }
        return jet;
    }
    // Gauge by the dominant exponent so every component has modulus <= 1.
    std::size_t k = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double re = (d.a[i] * z + d.b[i]).real();
        if (re > best) {
            best = re;
            k = i;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        cplx da = d.a[i] - d.a[k];
        cplx g = da * z + (d.b[i] - d.b[k]);
        cplx v = std::exp(g);
        jet.lift[i] = v;
        jet.derivative[i] = da * v;
    }
    return jet;
}

CurveJet hyperplane_jet(const HyperplaneData& d, cplx z) {
    std::size_t n1 = d.a.size() + 1;
    // Exponents g_0 = 0, g_i = a_i z + b_i; gauge by the dominant one.
    std::vector<cplx> a(n1, cplx(0)), b(n1, cplx(0));
    for (std::size_t i = 1; i < n1; ++i) {
        a[i] = d.a[i - 1];
        b[i] = d.b[i - 1];
    }
    std::size_t kdom = 0;
    double best = 0;
    for (std::size_t i = 0; i < n1; ++i) {
        double re = (a[i] * z + b[i]).real();
        if (re > best || i == 0) {
            best = re;
            kdom = i;
        }
    }
    std::vector<cplx> v(n1), dv(n1);
    for (std::size_t i = 0; i < n1; ++i) {
        cplx da = a[i] - a[kdom];
        v[i] = std::exp(da * z + (b[i] - b[kdom]));
        dv[i] = da * v[i];
    }
    CurveJet jet;
    jet.lift = matrix_apply(d.inverse, v);
    jet.derivative = matrix_apply(d.inverse, dv);
    return jet;
}

CurveJet rational_jet(const RationalData& d, cplx z) {
    CurveJet jet;
    jet.lift.resize(d.cleared.size());
    jet.derivative.resize(d.cleared.size());
    for (std::size_t i = 0; i < d.cleared.size(); ++i) {
        jet.lift[i] = d.cleared[i].eval(z);
        jet.derivative[i] = d.cleared[i].eval_deriv(z);
    }
    double biggest = 0;
    for (const auto& c : jet.lift) biggest = std::max(biggest, std::abs(c));
    if (biggest == 0.0) fail(ErrorCode::ZeroLift, "rational lift vanished in every chart at this point");
    if (biggest > 1e100) relift_largest(jet);
    return jet;
}

} // namespace

CurveJet CurveSpec::jet(cplx z, const JetOptions& opts) const {
    require(is_finite(z), ErrorCode::InvalidArgument, "evaluation point must be finite");
    struct Visitor {
        cplx z;
        const JetOptions& opts;
        MetricNormalization norm;
        CurveJet operator()(const RationalData& d) const { return rational_jet(d, z); }
        CurveJet operator()(const ExpLinearData& d) const { return exp_linear_jet(d, z, norm); }
        CurveJet operator()(const WeierstrassData& d) const { return weierstrass_jet(d, z, opts); }
        CurveJet operator()(const ThetaEmbeddingData& d) const { return phi_l_jet(z, d.emb); }
        CurveJet operator()(const ScaledData& d) const {
            CurveJet inner = d.inner->jet(z / d.m, opts);
            for (auto& c : inner.derivative) c /= d.m;
            return inner;
        }
        CurveJet operator()(const IncludedData& d) const {
            CurveJet inner = d.inner->jet(z, opts);
            inner.lift.resize(d.target_dim + 1, cplx(0, 0));
            inner.derivative.resize(d.target_dim + 1, cplx(0, 0));
            return inner;
        }
        CurveJet operator()(const HyperplaneData& d) const { return hyperplane_jet(d, z); }
    };
    return std::visit(Visitor{z, opts, norm_}, data_);
}

double CurveSpec::density(cplx z) const { return holopack::density(jet(z), norm_); }

double CurveSpec::df_norm(cplx z) const { return std::sqrt(density(z)); }

CurveSpec rescale_curve(const CurveSpec& spec, double m) { return CurveSpec::scaled(spec, m); }

cplx weierstrass_p_value(const CurveSpec& wp_spec, cplx z) {
    const auto* d = std::get_if<WeierstrassData>(&wp_spec.data());
    require(d != nullptr, ErrorCode::InvalidArgument, "spec is not a Weierstrass curve");
    ReducedPoint red = reduce_mod_lattice(z / d->lattice.omega1, d->lattice.tau);
    require(std::abs(red.z0) > kPoleExact, ErrorCode::PoleAtLatticePoint, "p has a pole at this lattice point");
    cplx p, pp;
    wp_normalized(*d, red.z0, p, pp);
    return p / (d->lattice.omega1 * d->lattice.omega1);
}

cplx weierstrass_p_deriv(const CurveSpec& wp_spec, cplx z) {
    const auto* d = std::get_if<WeierstrassData>(&wp_spec.data());
    require(d != nullptr, ErrorCode::InvalidArgument, "spec is not a Weierstrass curve");
    ReducedPoint red = reduce_mod_lattice(z / d->lattice.omega1, d->lattice.tau);
    require(std::abs(red.z0) > kPoleExact, ErrorCode::PoleAtLatticePoint, "p' has a pole at this lattice point");
    cplx p, pp;
    wp_normalized(*d, red.z0, p, pp);
    cplx w1 = d->lattice.omega1;
    return pp / (w1 * w1 * w1);
}

// ---------------------------------------------------------------------------
// Sup-norm scans and fundamental-domain energy

ScanResult sup_norm_df(const CurveSpec& spec, cplx origin, cplx e1, cplx e2, int resolution) {
    require(resolution >= 64, ErrorCode::InvalidArgument, "scan resolution must be at least 64x64");
    return scan_parallelogram_max(origin, e1, e2, resolution, resolution,
                                  [&](cplx z) { return spec.df_norm(z); });
}

ScanResult sup_norm_df(const CurveSpec& spec, int resolution) {
    if (auto lat = spec.periods())
        return sup_norm_df(spec, cplx(0, 0), lat->omega1, lat->omega2, resolution);
    return sup_norm_df(spec, cplx(-5, -5), cplx(10, 0), cplx(0, 10), resolution);
}

double projective_distance(const CurveJet& a, const CurveJet& b) {
    require(a.lift.size() == b.lift.size(), ErrorCode::InvalidArgument, "jets have different dimensions");
    cplx inner(0);
    double na = 0, nb = 0;
    for (std::size_t i = 0; i < a.lift.size(); ++i) {
        inner += a.lift[i] * std::conj(b.lift[i]);
        na += std::norm(a.lift[i]);
        nb += std::norm(b.lift[i]);
    }
    double cos2 = std::norm(inner) / (na * nb);
    return std::sqrt(std::max(0.0, 1.0 - cos2));
}

namespace {

void check_periodicity(const CurveSpec& spec, const Lattice& lat, cplx base, double tol) {
    const int samples = 7;
    for (int dir = 0; dir < 2; ++dir) {
        cplx along = dir == 0 ? lat.omega1 : lat.omega2;
        cplx across = dir == 0 ? lat.omega2 : lat.omega1;
        for (int k = 1; k <= samples; ++k) {
            double s = static_cast<double>(k) / (samples + 1);
            cplx z = base + s * along + 0.013 * across; // off the edge to dodge chart seams
            double defect;
            if (spec.normalization() == MetricNormalization::Euclidean) {
                CurveJet j1 = spec.jet(z), j2 = spec.jet(z + across);
                defect = 0;
                for (std::size_t i = 0; i < j1.derivative.size(); ++i)
                    defect = std::max(defect, std::abs(j1.derivative[i] - j2.derivative[i]));
            } else {
                defect = projective_distance(spec.jet(z), spec.jet(z + across));
            }
            if (defect > tol)
                fail(ErrorCode::NotPeriodic, "periodicity defect " + std::to_string(defect) +
                                                 " beyond tolerance on boundary samples");
        }
    }
}

} // namespace

EllipticEnergyReport energy_over_fundamental_domain(const CurveSpec& spec, const EnergyOptions& opts) {
    auto lat = spec.periods();
    if (!lat) fail(ErrorCode::NotPeriodic, "curve family has no declared period lattice");
    if (opts.check_periodicity) check_periodicity(spec, *lat, opts.base_point, opts.periodicity_tol);

    const int n = opts.quad_order;
    MappedRule rule = gauss_legendre_on(n, 0.0, 1.0);
    std::vector<double> row_sums(n, 0.0);
    run_chunks(n, [&](std::size_t i) {
        CompensatedSum<double> acc;
        for (int j = 0; j < n; ++j) {
            cplx z = opts.base_point + rule.x[i] * lat->omega1 + rule.x[j] * lat->omega2;
            acc.add(rule.w[i] * rule.w[j] * spec.density(z));
        }
        row_sums[i] = acc.value();
    });
    CompensatedSum<double> total;
    for (double r : row_sums) total.add(r);

    EllipticEnergyReport report;
    report.vol = lat->vol;
    report.energy = total.value() * lat->vol;
    ScanResult sup = sup_norm_df(spec, opts.base_point, lat->omega1, lat->omega2);
    report.sup_df = sup.max_value;
    report.sup_spacing = sup.spacing;
    report.gap_ratio = report.energy > 0
                           ? report.sup_df * report.sup_df * report.vol / report.energy
                           : std::numeric_limits<double>::infinity();
    return report;
}

} // namespace holopack
