#include "taylor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "quadrature.hpp"

namespace holopack {

ScalarCurve ScalarCurve::identity() {
    return {"identity", [](cplx z) { return ScalarJet{z, cplx(1, 0)}; }};
}

ScalarCurve ScalarCurve::scale(cplx c) {
    return {"scale", [c](cplx z) { return ScalarJet{c * z, c}; }};
}

ScalarCurve ScalarCurve::sine() {
    return {"sine", [](cplx z) { return ScalarJet{std::sin(z), std::cos(z)}; }};
}

ScalarCurve ScalarCurve::from_spec(const CurveSpec& spec) {
    require(spec.dim() == 1, ErrorCode::InvalidArgument, "scalar curve adapter needs a dim-1 spec");
    auto holder = std::make_shared<CurveSpec>(spec);
    return {"spec:" + spec.family_name(), [holder](cplx z) {
                CurveJet jet = holder->jet(z);
                // f = F1/F0, f' = (F1' F0 - F1 F0') / F0^2.
                cplx f0 = jet.lift[0], f1 = jet.lift[1];
                cplx d0 = jet.derivative[0], d1 = jet.derivative[1];
                cplx f = f1 / f0;
                cplx fp = (d1 * f0 - f1 * d0) / (f0 * f0);
                return ScalarJet{f, fp};
            }};
}

double spherical_density(const ScalarCurve& f, cplx z) {
    ScalarJet j = f.eval(z);
    double v = spherical_norm(j.f, j.fp, MetricNormalization::RescaledSphere);
    return v * v;
}

TaylorData taylor_from_cauchy(const ScalarCurve& f, int N, double radius, int nodes) {
    require(N >= 1, ErrorCode::InvalidArgument, "need at least one coefficient");
    require(radius > 0, ErrorCode::InvalidArgument, "contour radius must be positive");
    cplx f0 = f.eval(cplx(0, 0)).f;
    if (std::abs(f0) > 1e-10)
        fail(ErrorCode::NotVanishingAtOrigin, "curve must satisfy f(0) = 0 (|f(0)| = " + std::to_string(std::abs(f0)) + ")");
    int M = nodes > 0 ? nodes : std::max(256, 8 * N);
    std::vector<cplx> samples(M);
    for (int k = 0; k < M; ++k) {
        double th = 2.0 * std::numbers::pi * k / M;
        samples[k] = f.eval(radius * cplx(std::cos(th), std::sin(th))).f;
    }
    TaylorData data;
    data.coeffs.resize(N);
    data.args.resize(N);
    for (int n = 1; n <= N; ++n) {
        CompensatedSum<double> re, im;
        for (int k = 0; k < M; ++k) {
            double th = -2.0 * std::numbers::pi * k * n / M;
            cplx rot(std::cos(th), std::sin(th));
            cplx term = samples[k] * rot;
            re.add(term.real());
            im.add(term.imag());
        }
        cplx a = cplx(re.value(), im.value()) / (static_cast<double>(M) * std::pow(radius, n));
        data.coeffs[n - 1] = a;
        data.args[n - 1] = std::abs(a) > 1e-14 ? std::arg(a) : 0.0;
    }
    return data;
}

double effective_epsilon(const ScalarCurve& f, double radius) {
    TaylorData t = taylor_from_cauchy(f, 1, radius);
    return std::max(0.0, 1.0 - std::abs(t.a(1)));
}

AdmissibilityResult admissibility_scan(const ScalarCurve& f, double epsilon, double r_max, int n_radial,
                                       int n_angular) {
    AdmissibilityResult res;
    ScalarJet origin = f.eval(cplx(0, 0));
    double df0 = spherical_norm(origin.f, origin.fp, MetricNormalization::RescaledSphere);
    res.worst_norm = df0;
    if (std::abs(origin.f) > 1e-12 || df0 < 1.0 - epsilon || df0 > 1.0 + 1e-12) {
        res.admissible = false;
        res.first_violation = cplx(0, 0);
        return res;
    }
    for (int i = 1; i <= n_radial; ++i) {
        double r = r_max * i / n_radial;
        for (int j = 0; j < n_angular; ++j) {
            double th = 2.0 * std::numbers::pi * j / n_angular;
            cplx z = r * cplx(std::cos(th), std::sin(th));
            ScalarJet jet = f.eval(z);
            double v = spherical_norm(jet.f, jet.fp, MetricNormalization::RescaledSphere);
            res.worst_norm = std::max(res.worst_norm, v);
            if (v > 1.0 + 1e-12) {
                res.admissible = false;
                res.first_violation = z;
                return res;
            }
        }
    }
    res.admissible = true;
    return res;
}

namespace {

double cos_plus(double x) { return std::max(0.0, std::cos(x)); }

// E(r) = sum_{n >= 4} n |a_n| r^{n-1}, computed terms plus the admissible-tail
// majorant |a_n| <= 2^n beyond the available coefficients.
double error_term(const TaylorData& t, double r) {
    CompensatedSum<double> acc;
    int N = static_cast<int>(t.coeffs.size());
    for (int n = 4; n <= N; ++n) acc.add(n * std::abs(t.a(n)) * std::pow(r, n - 1));
    double term = (N + 1) * std::pow(2.0, N + 1) * std::pow(r, N);
    for (int n = N + 1; term > 1e-18 && n < N + 400; ++n) {
        acc.add(term);
        term *= 2.0 * r * (n + 1.0) / n;
    }
    return acc.value();
}

struct RunningCheck {
    LemmaCheck check;
    RunningCheck(std::string name) {
        check.name = std::move(name);
        check.min_margin = std::numeric_limits<double>::infinity();
        check.holds = true;
    }
    void record(double lhs, double rhs) {
        double margin = rhs - lhs;
        if (margin < check.min_margin) {
            check.min_margin = margin;
            check.worst_lhs = lhs;
            check.worst_rhs = rhs;
        }
        if (margin < -1e-14) check.holds = false;
    }
};

} // namespace

LemmaSuiteReport lemma_suite(const ScalarCurve& f, double r0_eff, int n_radial, int n_angular,
                             int taylor_terms) {
    require(r0_eff > 0 && r0_eff <= 0.3, ErrorCode::InvalidArgument,
            "r0_eff must lie in (0, 0.3] so binary64 resolves the bounds");
    const double delta = 1e-5;
    TaylorData taylor = taylor_from_cauchy(f, taylor_terms, std::numbers::pi / 4.0);
    double eps = std::max(0.0, 1.0 - std::abs(taylor.a(1)));
    double sqrt_eps = std::sqrt(eps);
    double th1 = taylor.theta(1), th3 = taylor.theta(3);

    LemmaSuiteReport report;
    report.epsilon_eff = eps;
    report.r0_eff = r0_eff;

    RunningCheck apriori("apriori_f_bound");       // |f| <= tan r
    RunningCheck coeff("taylor_coefficient_bound"); // |a_n| <= (4/pi)^n
    RunningCheck denom("denominator_bound");       // 1/(1+|f|^2)^2 <= 1 - 2r^2 + 30r^3 + eps
    RunningCheck a2("a2_bound");                   // 2|a_2| <= 30 sqrt(eps)
    RunningCheck err("error_term_bound");          // E(r) <= 65 r^3
    RunningCheck a3("a3_bound");                   // 3|a_3| r^2 <= r^2 + 100 r^3 + delta sqrt(eps)
    RunningCheck numer("numerator_bound");         // |f'|^2 <= 1 + 2r^2 cos+ + 500 r^3 + sqrt(eps)/2
    RunningCheck dens("density_bound");            // |df|^2 <= 1 - 2r^2(1-cos+) + 600r^3 + sqrt(eps)

    for (std::size_t n = 1; n <= taylor.coeffs.size(); ++n)
        coeff.record(std::abs(taylor.coeffs[n - 1]), std::pow(4.0 / std::numbers::pi, double(n)));
    a2.record(2.0 * std::abs(taylor.a(2)), 30.0 * sqrt_eps);

    for (int i = 1; i <= n_radial; ++i) {
        double r = r0_eff * i / n_radial;
        err.record(error_term(taylor, r), 65.0 * r * r * r);
        a3.record(3.0 * std::abs(taylor.a(3)) * r * r, r * r + 100.0 * r * r * r + delta * sqrt_eps);
        for (int j = 0; j < n_angular; ++j) {
            double th = 2.0 * std::numbers::pi * j / n_angular;
            cplx z = r * cplx(std::cos(th), std::sin(th));
            ScalarJet jet = f.eval(z);
            double af = std::abs(jet.f);
            double afp2 = std::norm(jet.fp);
            double density = spherical_density(f, z);
            double cp = cos_plus(2.0 * th - th1 + th3);
            apriori.record(af, std::tan(r));
            denom.record(1.0 / ((1.0 + af * af) * (1.0 + af * af)),
                         1.0 - 2.0 * r * r + 30.0 * r * r * r + eps);
            numer.record(afp2, 1.0 + 2.0 * r * r * cp + 500.0 * r * r * r + 0.5 * sqrt_eps);
            dens.record(density, 1.0 - 2.0 * r * r * (1.0 - cp) + 600.0 * r * r * r + sqrt_eps);
        }
    }

    // Flag bounds whose additive terms sit below binary64 resolution around 1.
    double scale = 2.0 * r0_eff * r0_eff + 600.0 * r0_eff * r0_eff * r0_eff + sqrt_eps;
    bool degenerate = scale < 1e-15;
    for (RunningCheck* c : {&apriori, &coeff, &denom, &a2, &err, &a3, &numer, &dens}) {
        c->check.degenerate = degenerate;
        report.checks.push_back(c->check);
    }
    report.all_hold = true;
    for (const auto& c : report.checks) report.all_hold = report.all_hold && c.holds;
    return report;
}

SectorAverageResult sector_average(const ScalarCurve& f, double r0, double alpha, double epsilon_eff,
                                   int order) {
    require(r0 > 0, ErrorCode::InvalidArgument, "sector radius must be positive");
    MappedRule radial = gauss_legendre_on(order, 0.0, r0);
    MappedRule angular = gauss_legendre_on(order, alpha, alpha + std::numbers::pi / 2.0);
    CompensatedSum<double> acc;
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            cplx z = radial.x[i] * cplx(std::cos(angular.x[j]), std::sin(angular.x[j]));
            acc.add(radial.w[i] * angular.w[j] * radial.x[i] * spherical_density(f, z));
        }
    double vol = std::numbers::pi * r0 * r0 / 4.0;
    SectorAverageResult res;
    res.average = acc.value() / vol;
    res.bound = 1.0 - 0.25 * r0 * r0 + std::sqrt(epsilon_eff);
    res.holds = res.average <= res.bound;
    return res;
}

SquareAverageResult square_average(const ScalarCurve& f, double r0, cplx center, double epsilon_eff,
                                   int order) {
    require(r0 > 0, ErrorCode::InvalidArgument, "square half-side must be positive");
    MappedRule rx = gauss_legendre_on(order, center.real() - r0, center.real() + r0);
    MappedRule ry = gauss_legendre_on(order, center.imag() - r0, center.imag() + r0);
    CompensatedSum<double> acc;
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) acc.add(rx.w[i] * ry.w[j] * spherical_density(f, cplx(rx.x[i], ry.x[j])));
    double vol = 4.0 * r0 * r0;
    SquareAverageResult res;
    res.average = acc.value() / vol;
    res.bound_epsilon = 1.0 - epsilon_eff;
    res.bound_sector = 1.0 - std::numbers::pi / 16.0 * (0.25 * r0 * r0 - std::sqrt(epsilon_eff));
    res.holds = res.average <= res.bound_epsilon && res.average <= res.bound_sector;
    return res;
}

} // namespace holopack
