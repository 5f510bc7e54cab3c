#include "partrend/kernel.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "partrend/errors.hpp"
#include "partrend/quadrature.hpp"

namespace partrend {

namespace {

// 1 / (sqrt(2*pi) * (Phi(1) - Phi(-1))): truncated-Gaussian normalizer.
const double kTruncGaussScale = [] {
    const double mass = std::erf(1.0 / std::sqrt(2.0));
    return 1.0 / (std::sqrt(2.0 * M_PI) * mass);
}();

}  // namespace

Kernel kernel_from_string(const std::string& name) {
    if (name == "epanechnikov") return Kernel::Epanechnikov;
    if (name == "gaussian" || name == "truncated-gaussian")
        return Kernel::TruncatedGaussian;
    throw ConfigError("unknown kernel: " + name);
}

std::string to_string(Kernel k) {
    return k == Kernel::Epanechnikov ? "epanechnikov" : "truncated-gaussian";
}

double kernel_value(Kernel k, double v) {
    if (std::abs(v) > 1.0) return 0.0;
    switch (k) {
        case Kernel::Epanechnikov:
            return 0.75 * (1.0 - v * v);
        case Kernel::TruncatedGaussian:
            return kTruncGaussScale * std::exp(-0.5 * v * v);
    }
    return 0.0;
}

double kstar(Kernel k, double x) {
    const double c = 2.0 * std::abs(x);
    const double upper = 1.0 - c;
    if (upper <= -1.0) return 0.0;
    return integrate(
        [k, c](double v) { return kernel_value(k, v) * kernel_value(k, v + c); },
        -1.0, upper, 1e-10);
}

double kstar2(Kernel k) {
    static std::array<double, 2> cache{-1.0, -1.0};
    static std::mutex mu;
    const size_t idx = k == Kernel::Epanechnikov ? 0 : 1;
    std::lock_guard<std::mutex> lock(mu);
    if (cache[idx] < 0.0) {
        cache[idx] = integrate(
            [k](double v) {
                const double s = kstar(k, v);
                return s * s;
            },
            -1.0, 1.0, 1e-10);
    }
    return cache[idx];
}

}  // namespace partrend
