#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace spo::detail {

using LogFn = std::function<std::complex<double>(std::complex<double>)>;

/// Laurent coefficients of exp(log_g[i]) on |z| = radius, sampled on a common
/// FFT grid that doubles from 256 until the modes in the outer quarter band
/// fall below threshold times the largest (all functions at once).
struct LaurentModes {
    int max_mode = 0;   // coefficients for n in [-max_mode, max_mode]
    double edge = 0.0;  // largest relative edge magnitude seen
    bool converged = false;
    std::vector<std::vector<std::complex<double>>> coeffs;  // coeffs[i][n + max_mode]
};

LaurentModes laurent_modes(const std::vector<LogFn>& log_g, double radius, double threshold, int max_size);

} // namespace spo::detail
