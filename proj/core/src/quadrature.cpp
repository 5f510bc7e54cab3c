#include "partrend/quadrature.hpp"

#include <cmath>

namespace partrend {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                double fa, double fm, double fb, double whole, double tol,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15.0 * tol) {
        return left + right + diff / 15.0;
    }
    return adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = simpson(fa, fm, fb, b - a);
    return adaptive(f, a, b, fa, fm, fb, whole, tol, 48);
}

std::vector<double> design_grid(int T) {
    std::vector<double> g(static_cast<size_t>(T));
    for (int t = 1; t <= T; ++t) g[t - 1] = static_cast<double>(t) / T;
    return g;
}

std::vector<double> uniform_grid(int n) {
    if (n <= 1) return {0.5};
    std::vector<double> g(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) g[j] = static_cast<double>(j) / (n - 1);
    return g;
}

}  // namespace partrend
