#pragma once

#include <functional>
#include <vector>

namespace partrend {

// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

// The design grid {t/T : t = 1..T}.
std::vector<double> design_grid(int T);

// n equispaced points spanning [0, 1] (endpoints included).
std::vector<double> uniform_grid(int n);

// Riemann quadrature over an evaluation grid of [0,1]: the average of the
// values. Exact convention used for every integral over u in this library.
inline double grid_quadrature(const std::vector<double>& values) {
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

}  // namespace partrend
