#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

#include "errors.hpp"

namespace holopack {

using cplx = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Neumaier-compensated accumulator. Summation order is fixed by the caller,
// so results are bit-stable for a fixed node count.
template <typename Real = double>
struct CompensatedSum {
    Real sum = 0;
    Real comp = 0;

    void add(Real x) {
        Real t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    Real value() const { return sum + comp; }
};

// Global worker cap for grid scans and quadrature (0 = hardware concurrency).
void set_worker_cap(int n);
int worker_cap();

// Runs chunk_fn(chunk_index) for chunks 0..n_chunks-1 on up to worker_cap()
// threads. Each chunk writes into its own slot; the caller combines slots in
// index order, so the result does not depend on the thread count.
void run_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& chunk_fn);

// Sum of term(i) for i in [0, n) accumulated per fixed-size chunk and combined
// in chunk order with compensated addition.
double parallel_sum(std::size_t n, std::size_t chunk_size, const std::function<double(std::size_t)>& term);

} // namespace holopack
