#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "support.hpp"

namespace holopack {

struct QuadRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights; // sum to 2
};

// Gauss-Legendre rule of order n (exact for polynomials of degree 2n-1).
// Rules are cached; lookup is thread-safe.
const QuadRule& gauss_legendre(int n);

// Nodes/weights mapped to [a, b].
struct MappedRule {
    std::vector<double> x;
    std::vector<double> w;
};
MappedRule gauss_legendre_on(int n, double a, double b);

// Integral of f over [a, b] with an n-point Gauss-Legendre rule.
double gl_integrate(int n, double a, double b, const std::function<double(double)>& f);

struct TrapezoidResult {
    double value = 0;
    double error_estimate = 0;
    int nodes = 0;
};

// Uniform trapezoid rule for a 2*pi-periodic integrand, doubling the node
// count until two consecutive levels agree to tol (absolute). Starts at
// n0 nodes; throws NodeLimit when max_nodes is reached without convergence.
TrapezoidResult periodic_trapezoid(const std::function<double(double)>& f, double tol, int n0 = 64,
                                   int max_nodes = (1 << 22));

} // namespace holopack
