#pragma once

#include <string>

namespace partrend {

// Symmetric kernels supported for local linear smoothing. Both integrate
// to one over their support [-1, 1].
enum class Kernel {
    Epanechnikov,      // K(v) = 3(1 - v^2)/4 on [-1, 1]
    TruncatedGaussian  // standard normal density restricted to [-1, 1],
                       // renormalized to integrate to one
};

Kernel kernel_from_string(const std::string& name);
std::string to_string(Kernel k);

// K(v); zero outside [-1, 1].
double kernel_value(Kernel k, double v);

// Kernel self-convolution K*(x) = int_{-1}^{1-2|x|} K(v) K(v + 2|x|) dv,
// zero for |x| >= 1. Evaluated by adaptive quadrature.
double kstar(Kernel k, double x);

// K2* = int_{-1}^{1} (K*(v))^2 dv. Cached per kernel after first use.
double kstar2(Kernel k);

}  // namespace partrend
