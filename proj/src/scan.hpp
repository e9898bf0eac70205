#pragma once

#include <functional>

#include "support.hpp"

namespace holopack {

struct ScanResult {
    double max_value = 0;
    cplx argmax{0, 0};
    double spacing = 0; // final grid spacing (Euclidean step length bound)
};

// Grid maximum of f over the closed parallelogram {origin + s*e1 + t*e2},
// s,t in [0,1], on an (n1+1) x (n2+1) grid, then refine_rounds local
// refinements that re-scan a +-1 cell window around the winner at
// refine_factor times the resolution. The reported value is a lower bound on
// the true sup; spacing is attached so callers can judge it.
ScanResult scan_parallelogram_max(cplx origin, cplx e1, cplx e2, int n1, int n2,
                                  const std::function<double(cplx)>& f, int refine_rounds = 2,
                                  int refine_factor = 8);

} // namespace holopack
