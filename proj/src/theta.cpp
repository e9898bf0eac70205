#include "theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadrature.hpp"
#include "scan.hpp"

namespace holopack {

namespace {

// Smallest N with certified tail 4*M(N+1) < tol and geometric ratio <= 1/2,
// where M(n) = (2 pi n)^k exp(-pi t n^2 + 2 pi n y_max) majorizes order-k
// terms on the strip. Worked in log space.
int truncation_for_order(double t, double y_max, double tol, int k) {
    auto logM = [&](double n) {
        return k * std::log(2.0 * std::numbers::pi * n) - std::numbers::pi * t * n * n +
               2.0 * std::numbers::pi * n * y_max;
    };
    int n_min = std::max(1, static_cast<int>(std::ceil(y_max / t)) + 1);
    double log_tol = std::log(tol);
    for (int N = n_min; N <= 200000; ++N) {
        double m1 = logM(N + 1.0);
        double ratio = logM(N + 2.0) - m1;
        if (ratio <= std::log(0.5) && m1 + std::log(4.0) < log_tol) return N;
    }
    fail(ErrorCode::TruncationTooLoose, "theta truncation bound does not reach tol inside the declared window");
}

template <typename Real>
std::array<std::complex<Real>, 4> theta_series(std::complex<Real> z, std::complex<Real> tau, int N, int max_order) {
    using C = std::complex<Real>;
    const Real pi = std::numbers::pi_v<Real>;
    const C two_pi_i(0, 2 * pi);

    C q = std::exp(C(0, pi) * tau); // exp(pi i tau)
    C q2 = q * q;
    C w = std::exp(two_pi_i * z);
    C winv = Real(1) / w;

    std::array<CompensatedSum<Real>, 4> re_acc, im_acc;
    re_acc[0].add(Real(1)); // n = 0 term

    C qn2 = q;   // q^{n^2} at n = 1
    C qodd = q2 * q; // q^{2n+1} at n = 1
    C wn = w, wninv = winv;
    for (int n = 1; n <= N; ++n) {
        C plus = qn2 * wn;
        C minus = qn2 * wninv;
        C d_plus(1), d_minus(1);
        for (int k = 0; k <= max_order; ++k) {
            C term = d_plus * plus + d_minus * minus;
            re_acc[k].add(term.real());
            im_acc[k].add(term.imag());
            d_plus *= two_pi_i * Real(n);
            d_minus *= -two_pi_i * Real(n);
        }
        qn2 *= qodd;
        qodd *= q2;
        wn *= w;
        wninv *= winv;
    }
    std::array<C, 4> out{};
    for (int k = 0; k <= max_order; ++k) out[k] = C(re_acc[k].value(), im_acc[k].value());
    return out;
}

template <typename Real>
std::array<std::complex<Real>, 4> theta_ab_series(std::complex<Real> z, Real a, Real b,
                                                  const ThetaParams& params, int max_order) {
    using C = std::complex<Real>;
    const Real pi = std::numbers::pi_v<Real>;
    C tau(static_cast<Real>(params.tau.real()), static_cast<Real>(params.tau.imag()));
    C shifted = z + a * tau + b;
    auto inner = theta_series<Real>(shifted, tau, params.trunc[std::min(max_order, 3)], max_order);
    C pref = std::exp(C(0, pi) * (a * a * tau) + C(0, 2 * pi) * (a * (z + b)));
    C factor(0, 2 * pi * a); // d/dz of the prefactor exponent
    std::array<C, 4> out{};
    // Leibniz rule on pref(z) * inner(z); pref^{(j)} = factor^j * pref.
    static const int binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    for (int k = 0; k <= max_order; ++k) {
        C sum(0);
        C fj(1);
        for (int j = 0; j <= k; ++j) {
            sum += Real(binom[k][j]) * fj * inner[k - j];
            fj *= factor;
        }
        out[k] = pref * sum;
    }
    return out;
}

void check_window(cplx z, const ThetaParams& params) {
    if (std::abs(z.imag()) > params.y_max * (1.0 + 1e-12) + 1e-300)
        fail(ErrorCode::WindowExceeded, "Im z outside the certified strip |Im z| <= " + std::to_string(params.y_max));
}

} // namespace

ThetaParams ThetaParams::build(cplx tau, double tol, double y_max) {
    require(tau.imag() > 0, ErrorCode::InvalidArgument, "tau must lie in the upper half-plane");
    require(tol > 0, ErrorCode::InvalidArgument, "tol must be positive");
    require(y_max >= 0, ErrorCode::InvalidArgument, "y_max must be nonnegative");
    ThetaParams p;
    p.tau = tau;
    p.t = tau.imag();
    p.tol = tol;
    p.y_max = y_max;
    for (int k = 0; k <= 3; ++k) p.trunc[k] = truncation_for_order(p.t, y_max, tol, k);
    return p;
}

std::vector<cplx> theta_derivs(cplx z, const ThetaParams& params, int max_order) {
    require(max_order >= 0 && max_order <= 3, ErrorCode::InvalidArgument, "derivative order must be in 0..3");
    check_window(z, params);
    auto vals = theta_series<double>(z, params.tau, params.trunc[max_order], max_order);
    return std::vector<cplx>(vals.begin(), vals.begin() + max_order + 1);
}

cplx theta(cplx z, const ThetaParams& params) { return theta_derivs(z, params, 0)[0]; }
cplx theta_deriv(cplx z, const ThetaParams& params) { return theta_derivs(z, params, 1)[1]; }

std::vector<cplx> theta_ab_derivs(cplx z, const Characteristic& ch, const ThetaParams& params, int max_order) {
    require(max_order >= 0 && max_order <= 3, ErrorCode::InvalidArgument, "derivative order must be in 0..3");
    check_window(z + ch.a * params.tau + ch.b, params);
    auto vals = theta_ab_series<double>(z, ch.a, ch.b, params, max_order);
    return std::vector<cplx>(vals.begin(), vals.begin() + max_order + 1);
}

cplx theta_ab(cplx z, const Characteristic& ch, const ThetaParams& params) {
    return theta_ab_derivs(z, ch, params, 0)[0];
}

MeanSquareResult mean_square_characteristics(cplx z, const ThetaParams& params, int quad_order) {
    require(quad_order >= 32, ErrorCode::InvalidArgument, "quad_order must be at least 32 per axis");
    MappedRule rule = gauss_legendre_on(quad_order, 0.0, 1.0);
    CompensatedSum<double> acc;
    for (int i = 0; i < quad_order; ++i) {
        for (int j = 0; j < quad_order; ++j) {
            Characteristic ch{rule.x[i], rule.x[j]};
            cplx v = theta_ab(z, ch, params);
            acc.add(rule.w[i] * rule.w[j] * std::norm(v));
        }
    }
    MeanSquareResult out;
    out.numeric = acc.value();
    double y = z.imag();
    out.closed_form = std::sqrt(0.5 / params.t) * std::exp(2.0 * std::numbers::pi * y * y / params.t);
    out.abs_difference = std::abs(out.numeric - out.closed_form);
    return out;
}

EmbeddingSpec EmbeddingSpec::build(cplx tau, int l, double tol) {
    require(l >= 2, ErrorCode::InvalidArgument, "embedding requires l >= 2");
    EmbeddingSpec emb;
    double t = tau.imag();
    require(t > 0, ErrorCode::InvalidArgument, "tau must lie in the upper half-plane");
    // Jet arguments are lattice-reduced, then shifted by a*tau with a < 1;
    // margin 2(|tau|+1) keeps raw theta_ab usable over one fundamental domain.
    double y_max = 1.5 * t + 2.0 * (std::abs(tau) + 1.0);
    emb.params = ThetaParams::build(tau, tol, y_max);
    emb.l = l;
    emb.grid.reserve(static_cast<std::size_t>(l) * l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            emb.grid.push_back(Characteristic{static_cast<double>(i) / l, static_cast<double>(j) / l});
    return emb;
}

ReducedPoint reduce_mod_lattice(cplx z, cplx tau) {
    ReducedPoint r;
    double t = tau.imag();
    r.alpha = std::lround(z.imag() / t);
    cplx z1 = z - static_cast<double>(r.alpha) * tau;
    r.beta = std::lround(z1.real());
    r.z0 = z1 - static_cast<double>(r.beta);
    return r;
}

namespace {

template <typename Real>
CurveJetT<Real> phi_l_jet_t(cplx z, const EmbeddingSpec& emb) {
    using C = std::complex<Real>;
    const Real two_pi = 2 * std::numbers::pi_v<Real>;
    ReducedPoint red = reduce_mod_lattice(z, emb.params.tau);
    C z0(static_cast<Real>(red.z0.real()), static_cast<Real>(red.z0.imag()));
    CurveJetT<Real> jet;
    jet.lift.reserve(emb.grid.size());
    jet.derivative.reserve(emb.grid.size());
    for (const auto& ch : emb.grid) {
        auto vals = theta_ab_series<Real>(z0, static_cast<Real>(ch.a), static_cast<Real>(ch.b), emb.params, 1);
        // Quasi-periodicity phase exp(-2 pi i alpha b + 2 pi i a beta); the
        // common holomorphic factor is dropped (gauge; density unchanged).
        C phase = std::exp(C(0, two_pi * (static_cast<Real>(ch.a) * red.beta - static_cast<Real>(ch.b) * red.alpha)));
        jet.lift.push_back(phase * vals[0]);
        jet.derivative.push_back(phase * vals[1]);
    }
    return jet;
}

} // namespace

CurveJet phi_l_jet(cplx z, const EmbeddingSpec& emb) { return phi_l_jet_t<double>(z, emb); }
CurveJetT<long double> phi_l_jet_ld(cplx z, const EmbeddingSpec& emb) { return phi_l_jet_t<long double>(z, emb); }

double phi_l_density(cplx z, const EmbeddingSpec& emb) { return fs_density(phi_l_jet(z, emb)); }

TianScan tian_scan(const EmbeddingSpec& emb, int resolution) {
    require(resolution >= 64, ErrorCode::InvalidArgument, "scan resolution must be at least 64x64");
    const long double inv_t = 1.0L / static_cast<long double>(emb.params.t);
    auto dens = [&](cplx z) { return fs_density_t<long double>(phi_l_jet_ld(z, emb)); };
    auto defect = [&](cplx z) { return static_cast<double>(std::fabs(dens(z) - inv_t)); };
    auto dmax = [&](cplx z) { return static_cast<double>(dens(z)); };
    auto dmin = [&](cplx z) { return -static_cast<double>(dens(z)); };

    cplx origin(0, 0), e1(1, 0), e2 = emb.params.tau;
    ScanResult s_def = scan_parallelogram_max(origin, e1, e2, resolution, resolution, defect);
    ScanResult s_max = scan_parallelogram_max(origin, e1, e2, resolution, resolution, dmax);
    ScanResult s_min = scan_parallelogram_max(origin, e1, e2, resolution, resolution, dmin);

    TianScan out;
    out.sup_defect = s_def.max_value;
    out.sup_density = s_max.max_value;
    out.min_density = -s_min.max_value;
    out.grid_spacing = s_def.spacing;
    out.capacity_lower_bound = 1.0 / (emb.params.t * out.sup_density);
    return out;
}

double tian_sup_defect(const EmbeddingSpec& emb, int resolution) { return tian_scan(emb, resolution).sup_defect; }

double capacity_lower_bound(const EmbeddingSpec& emb, int resolution) {
    return tian_scan(emb, resolution).capacity_lower_bound;
}

} // namespace holopack
