#pragma once

#include <Eigen/Dense>
#include <vector>

#include "partrend/kernel.hpp"

namespace partrend {

// Local moment sums S_{b,j}(u) = sum_t (u - t/T)^j K((u - t/T)/b), j = 0,1,2.
struct MomentSums {
    double s0 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
};

// Local linear weights w_b(t, u) at a single evaluation point, together
// with the moment sums they were built from.
//
// Invariants: sum_t w(t) = 1, sum_t (u - t/T) w(t) = 0, and w(t) = 0
// whenever |u - t/T| > b.
struct SmootherWeights {
    double u = 0.0;
    Eigen::VectorXd weights;  // length T
    MomentSums moments;
};

// T x T smoothing ("hat") matrix: row t' holds the weights w_b(., t'/T).
struct HatMatrix {
    Eigen::MatrixXd entries;
    double trace = 0.0;
};

// Checks b in (0, 1] and T*b >= 2; throws ConfigError otherwise.
void validate_bandwidth(int T, double b);

// Evaluation points are allowed slightly beyond [0, 1]: the covariance
// estimator smooths products over a shortened design where u = t/(T-k)
// can exceed one. The weight identities hold for any u with a
// non-degenerate local design.
MomentSums moment_sums(Kernel kernel, int T, double b, double u);

SmootherWeights local_linear_weights(Kernel kernel, int T, double b, double u);

// Fitted value sum_t w_b(t, u) y_t at one point.
double smooth_at(Kernel kernel, int T, double b,
                 const Eigen::Ref<const Eigen::VectorXd>& series, double u);

// Fitted values on an evaluation grid.
std::vector<double> smooth_series(Kernel kernel, int T, double b,
                                  const Eigen::Ref<const Eigen::VectorXd>& series,
                                  const std::vector<double>& grid);

HatMatrix hat_matrix(Kernel kernel, int T, double b);

// G x T matrix whose row j holds the weights w_b(., grid[j]).
Eigen::MatrixXd grid_weight_matrix(Kernel kernel, int T, double b,
                                   const std::vector<double>& grid);

// Design-averaged weights wbar(t) = T^{-1} sum_{t'} w_b(t, t'/T). The
// intercept of a series against the pooled trend is <wbar, series - pooled>.
Eigen::VectorXd design_average_weights(Kernel kernel, int T, double b);

}  // namespace partrend
