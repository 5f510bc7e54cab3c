#include "partrend/smoothing.hpp"

#include <cmath>
#include <limits>

#include "partrend/errors.hpp"

namespace partrend {

namespace {

// Conservative 1-based index window for |u - t/T| <= b.
struct Window {
    int lo;
    int hi;
};

Window design_window(int T, double b, double u) {
    int lo = static_cast<int>(std::ceil((u - b) * T - 1e-12));
    int hi = static_cast<int>(std::floor((u + b) * T + 1e-12));
    if (lo < 1) lo = 1;
    if (hi > T) hi = T;
    return {lo, hi};
}

double weight_denominator(const MomentSums& m) {
    return m.s2 * m.s0 - m.s1 * m.s1;
}

void check_nonsingular(const MomentSums& m, double u) {
    const double denom = weight_denominator(m);
    const double scale = m.s2 * m.s0 + m.s1 * m.s1;
    if (!(denom > 256.0 * std::numeric_limits<double>::epsilon() * scale) ||
        !std::isfinite(denom)) {
        throw NumericError("singular local design at u=" + std::to_string(u) +
                           " (fewer than two distinct design points carry weight)");
    }
}

}  // namespace

void validate_bandwidth(int T, double b) {
    if (!(b > 0.0) || b > 1.0) {
        throw ConfigError("bandwidth must lie in (0, 1], got " + std::to_string(b));
    }
    if (static_cast<double>(T) * b < 2.0) {
        throw ConfigError("bandwidth too small: T*b = " + std::to_string(T * b) +
                          " < 2");
    }
}

MomentSums moment_sums(Kernel kernel, int T, double b, double u) {
    validate_bandwidth(T, b);
    const Window w = design_window(T, b, u);
    MomentSums m;
    for (int t = w.lo; t <= w.hi; ++t) {
        const double d = u - static_cast<double>(t) / T;
        const double k = kernel_value(kernel, d / b);
        m.s0 += k;
        m.s1 += d * k;
        m.s2 += d * d * k;
    }
    return m;
}

SmootherWeights local_linear_weights(Kernel kernel, int T, double b, double u) {
    const MomentSums m = moment_sums(kernel, T, b, u);
    check_nonsingular(m, u);
    const double denom = weight_denominator(m);

    SmootherWeights out;
    out.u = u;
    out.moments = m;
    out.weights = Eigen::VectorXd::Zero(T);
    const Window w = design_window(T, b, u);
    for (int t = w.lo; t <= w.hi; ++t) {
        const double d = u - static_cast<double>(t) / T;
        const double k = kernel_value(kernel, d / b);
        out.weights[t - 1] = k * (m.s2 - d * m.s1) / denom;
    }
    return out;
}

double smooth_at(Kernel kernel, int T, double b,
                 const Eigen::Ref<const Eigen::VectorXd>& series, double u) {
    const MomentSums m = moment_sums(kernel, T, b, u);
    check_nonsingular(m, u);
    const double denom = weight_denominator(m);
    const Window w = design_window(T, b, u);
    double acc = 0.0;
    for (int t = w.lo; t <= w.hi; ++t) {
        const double d = u - static_cast<double>(t) / T;
        const double k = kernel_value(kernel, d / b);
        acc += k * (m.s2 - d * m.s1) * series[t - 1];
    }
    return acc / denom;
}

std::vector<double> smooth_series(Kernel kernel, int T, double b,
                                  const Eigen::Ref<const Eigen::VectorXd>& series,
                                  const std::vector<double>& grid) {
    if (series.size() != T) {
        throw ConfigError("series length does not match T");
    }
    std::vector<double> out(grid.size());
    for (size_t j = 0; j < grid.size(); ++j) {
        out[j] = smooth_at(kernel, T, b, series, grid[j]);
    }
    return out;
}

Eigen::MatrixXd grid_weight_matrix(Kernel kernel, int T, double b,
                                   const std::vector<double>& grid) {
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(grid.size()), T);
    for (size_t j = 0; j < grid.size(); ++j) {
        const SmootherWeights sw = local_linear_weights(kernel, T, b, grid[j]);
        W.row(static_cast<Eigen::Index>(j)) = sw.weights.transpose();
    }
    return W;
}

HatMatrix hat_matrix(Kernel kernel, int T, double b) {
    HatMatrix h;
    h.entries = grid_weight_matrix(kernel, T, b, design_grid_points(T));
    h.trace = h.entries.trace();
    return h;
}

Eigen::VectorXd design_average_weights(Kernel kernel, int T, double b) {
    Eigen::VectorXd wbar = Eigen::VectorXd::Zero(T);
    for (int tp = 1; tp <= T; ++tp) {
        const SmootherWeights sw =
            local_linear_weights(kernel, T, b, static_cast<double>(tp) / T);
        wbar += sw.weights;
    }
    return wbar / static_cast<double>(T);
}

}  // namespace partrend
