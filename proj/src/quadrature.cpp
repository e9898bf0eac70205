#include "quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace holopack {

namespace {

QuadRule compute_gauss_legendre(int n) {
    require(n >= 1, ErrorCode::InvalidArgument, "quadrature order must be >= 1");
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

std::map<int, QuadRule> g_rules;
std::mutex g_rules_mutex;

} // namespace

const QuadRule& gauss_legendre(int n) {
    std::lock_guard<std::mutex> lock(g_rules_mutex);
    auto it = g_rules.find(n);
    if (it == g_rules.end()) it = g_rules.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

MappedRule gauss_legendre_on(int n, double a, double b) {
    const QuadRule& rule = gauss_legendre(n);
    MappedRule out;
    out.x.resize(n);
    out.w.resize(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        out.x[i] = mid + half * rule.nodes[i];
        out.w[i] = half * rule.weights[i];
    }
    return out;
}

double gl_integrate(int n, double a, double b, const std::function<double(double)>& f) {
    MappedRule r = gauss_legendre_on(n, a, b);
    CompensatedSum<double> acc;
    for (int i = 0; i < n; ++i) acc.add(r.w[i] * f(r.x[i]));
    return acc.value();
}

TrapezoidResult periodic_trapezoid(const std::function<double(double)>& f, double tol, int n0, int max_nodes) {
    const double two_pi = 2.0 * std::numbers::pi;
    int n = n0;
    auto eval = [&](int nodes) {
        CompensatedSum<double> acc;
        double h = two_pi / nodes;
        for (int i = 0; i < nodes; ++i) acc.add(f(i * h));
        return acc.value() * h;
    };
    double prev = eval(n);
    while (n < max_nodes) {
        n *= 2;
        double cur = eval(n);
        double err = std::abs(cur - prev);
        if (err < tol) return {cur, err, n};
        prev = cur;
    }
    fail(ErrorCode::NodeLimit, "periodic trapezoid rule did not reach tolerance at " + std::to_string(max_nodes) +
                                   " nodes");
}

} // namespace holopack
