#pragma once

#include <string>
#include <vector>

#include "spo/kernels.hpp"
#include "spo/special.hpp"

namespace spo {

enum class AirySign { Plus, Minus };
AirySign parse_airy_sign(const std::string& name);
std::string to_string(AirySign s);
/// sp pairs with A+, o with A-.
AirySign edge_sign(KernelFamily f);

/// A±(x, y) = int_0^inf Ai(x+s) Ai(y+s) ds ± int_0^inf Ai(x-s) Ai(y+s) ds for
/// x, y in [-10, 10]. The integrals are cut where Ai(y+s) < 1e-20 and summed
/// with composite Gauss-Legendre, halving the panels until two passes agree.
double airy_2to1(AirySign sign, double x, double y);
/// Double contour form
///   (2 pi i)^{-2} int dw int dz exp(z^3/3 - x z) / exp(w^3/3 - y w) [1/(z - w) -+ 1/(z + w)]
/// with z on rays from 1/2 at angles ±pi/3 and w on rays from -1 at ±2pi/3.
double airy_2to1_contour(AirySign sign, double x, double y);

/// phi_+ for bulk position alpha: arccos(alpha/2) inside (-2, 2), 0 above, pi below.
double bulk_phi(double alpha);

/// Lattice site (lambda_i - i) of a position in the edge/bulk coordinates:
/// the symplectic kernel's natural coordinate is lambda_i - i + 1.
int lattice_site(KernelFamily f, int position);

struct ScanRow {
    double param = 0.0;  // theta (scans) or s (CDF)
    double x = 0.0, y = 0.0;
    double discrete = 0.0, limit = 0.0, abs_error = 0.0;
};

/// K(a, b) at a = floor(alpha theta) + a', b = floor(alpha theta) + b' against
/// the discrete sine kernel, for all offset pairs.
std::vector<ScanRow> bulk_scan(KernelFamily f, const std::vector<double>& thetas, double alpha,
                               const std::vector<int>& offsets);

/// theta^{1/3} K(a, b) at a = floor(2 theta + x theta^{1/3}) against A±(x, y);
/// the rounding residual stays in the error. With lattice_coordinates the
/// limit is taken at ((a - 2 theta) / theta^{1/3}, ...) instead.
std::vector<ScanRow> edge_scan(KernelFamily f, const std::vector<double>& thetas, const std::vector<double>& grid,
                               bool lattice_coordinates = false);

/// theta^{1/3} J_n(2 theta), n = floor(2 theta + x theta^{1/3}), against Ai at
/// the lattice coordinate (y column unused).
std::vector<ScanRow> nicholson_scan(const std::vector<double>& thetas, const std::vector<double>& xs);

/// Largest error over rows with the given parameter value.
double max_error(const std::vector<ScanRow>& rows, double param);
/// Least-squares slope of log(err) against log(theta).
double fit_exponent(const std::vector<double>& thetas, const std::vector<double>& errors);

struct TWConfig {
    double length = 0.0;      // section [s, s + length]; 0 picks max(16 - s, 8)
    double panel_width = 1.0;  // Gauss-Legendre panels on the section
    int order = 12;
    bool check = false;        // also run with doubled length and node density
    double tolerance = 1e-7;
};

struct TWResult {
    double value = 0.0;
    double refined = 0.0;    // doubled discretization (when checked)
    double est_error = 0.0;  // |value - refined| when checked
    int nodes = 0;
};

/// det(I - A±)_{L^2(s, inf)} by Nystrom. With check set, TruncationInsufficient
/// if doubling length and node density moves the value by more than tolerance.
TWResult tw_2to1(AirySign sign, double s, const TWConfig& cfg = {});
double tw_2to1_cdf(AirySign sign, double s);

/// P(lambda_1 <= 2 theta + s theta^{1/3}) for the Plancherel-type measure,
/// det(I - K) on sites >= m with m = floor(2 theta + s theta^{1/3}), the section
/// ending ceil(8 theta^{1/3}) beyond the spectral edge 2 theta.
struct DiscreteEdgeCdf {
    double value = 0.0;
    int m = 0;
    int window = 0;
};
DiscreteEdgeCdf discrete_edge_cdf(KernelFamily f, double theta, double s);

} // namespace spo
