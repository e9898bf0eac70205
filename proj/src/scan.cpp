#include "scan.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace holopack {

namespace {

struct CellMax {
    double value = -1;
    int i = 0, j = 0;
};

CellMax grid_max(cplx origin, cplx e1, cplx e2, double s0, double s1, double t0, double t1, int n1, int n2,
                 const std::function<double(cplx)>& f) {
    std::vector<CellMax> rows(static_cast<std::size_t>(n2) + 1);
    run_chunks(static_cast<std::size_t>(n2) + 1, [&](std::size_t j) {
        double t = t0 + (t1 - t0) * static_cast<double>(j) / n2;
        CellMax best;
        for (int i = 0; i <= n1; ++i) {
            double s = s0 + (s1 - s0) * static_cast<double>(i) / n1;
            double v = f(origin + s * e1 + t * e2);
            if (v > best.value) best = {v, i, static_cast<int>(j)};
        }
        rows[j] = best;
    });
    CellMax best;
    for (const auto& r : rows)
        if (r.value > best.value) best = r;
    return best;
}

} // namespace

ScanResult scan_parallelogram_max(cplx origin, cplx e1, cplx e2, int n1, int n2,
                                  const std::function<double(cplx)>& f, int refine_rounds, int refine_factor) {
    require(n1 >= 1 && n2 >= 1, ErrorCode::InvalidArgument, "scan grid must be at least 1x1 cells");
    double s0 = 0, s1 = 1, t0 = 0, t1 = 1;
    CellMax best = grid_max(origin, e1, e2, s0, s1, t0, t1, n1, n2, f);
    for (int round = 0; round < refine_rounds; ++round) {
        double ds = (s1 - s0) / n1, dt = (t1 - t0) / n2;
        double cs = s0 + best.i * ds, ct = t0 + best.j * dt;
        s0 = std::max(0.0, cs - ds);
        s1 = std::min(1.0, cs + ds);
        t0 = std::max(0.0, ct - dt);
        t1 = std::min(1.0, ct + dt);
        n1 = 2 * refine_factor;
        n2 = 2 * refine_factor;
        best = grid_max(origin, e1, e2, s0, s1, t0, t1, n1, n2, f);
    }
    ScanResult out;
    out.max_value = best.value;
    out.argmax = origin + (s0 + best.i * (s1 - s0) / n1) * e1 + (t0 + best.j * (t1 - t0) / n2) * e2;
    out.spacing = std::max(std::abs(e1) * (s1 - s0) / n1, std::abs(e2) * (t1 - t0) / n2);
    return out;
}

} // namespace holopack
