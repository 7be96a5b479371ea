#include "spo/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "spo/errors.hpp"
#include "spo/linalg.hpp"
#include "spo/parallel.hpp"

namespace spo {

AirySign parse_airy_sign(const std::string& name) {
    if (name == "+" || name == "plus") return AirySign::Plus;
    if (name == "-" || name == "minus") return AirySign::Minus;
    throw ConfigError("unknown Airy sign '" + name + "' (expected + or -)");
}

std::string to_string(AirySign s) { return s == AirySign::Plus ? "+" : "-"; }

AirySign edge_sign(KernelFamily f) { return f == KernelFamily::Sp ? AirySign::Plus : AirySign::Minus; }

namespace {

// Ai(x) is below 1e-70 past 40
double ai(double x) { return x > 40.0 ? 0.0 : airy_ai(x); }

void check_window(double x, double y) {
    if (!(std::abs(x) <= 10.0 && std::abs(y) <= 10.0))
        throw PreconditionViolation("Airy 2->1 kernel is evaluated for x, y in [-10, 10]");
}

} // namespace

double airy_2to1(AirySign sign, double x, double y) {
    check_window(x, y);
    const double pm = sign == AirySign::Plus ? 1.0 : -1.0;
    const double s_max = 17.0 - y;  // Ai(17) ~ 1e-20
    auto g = [&](double s) { return ai(y + s) * (ai(x + s) + pm * ai(x - s)); };
    int panels = static_cast<int>(std::ceil(s_max));
    double prev = integrate(g, 0.0, s_max, panels, 16);
    for (int pass = 0; pass < 5; ++pass) {
        panels *= 2;
        const double cur = integrate(g, 0.0, s_max, panels, 16);
        if (std::abs(cur - prev) < 1e-13) return cur;
        prev = cur;
    }
    throw QuadratureNotConverged("Airy 2->1 product integral did not settle");
}

namespace {

struct ContourNodes {
    std::vector<std::complex<double>> point, weight;
};

// two rays from `vertex` at angles ±angle, oriented upward
ContourNodes ray_pair(double vertex, double angle, double length, int panels, int order) {
    const GaussRule rule = composite_gauss(0.0, length, panels, order);
    ContourNodes c;
    const auto up = std::polar(1.0, angle), down = std::polar(1.0, -angle);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = rule.nodes[i], w = rule.weights[i];
        c.point.push_back(vertex + t * up);
        c.weight.push_back(w * up);
        c.point.push_back(vertex + t * down);
        c.weight.push_back(-w * down);
    }
    return c;
}

double contour_pass(AirySign sign, double x, double y, int panels, int order) {
    const double third = std::numbers::pi / 3;
    const ContourNodes zr = ray_pair(0.5, third, 8.0, panels, order);
    const ContourNodes wl = ray_pair(-1.0, 2 * third, 8.0, panels, order);
    const double pm = sign == AirySign::Plus ? -1.0 : 1.0;
    std::vector<std::complex<double>> fz(zr.point.size()), fw(wl.point.size());
    for (std::size_t i = 0; i < fz.size(); ++i) {
        const auto z = zr.point[i];
        fz[i] = zr.weight[i] * std::exp(z * z * z / 3.0 - x * z);
    }
    for (std::size_t j = 0; j < fw.size(); ++j) {
        const auto w = wl.point[j];
        fw[j] = wl.weight[j] * std::exp(-w * w * w / 3.0 + y * w);
    }
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < fz.size(); ++i) {
        std::complex<double> row = 0.0;
        const auto z = zr.point[i];
        for (std::size_t j = 0; j < fw.size(); ++j) {
            const auto w = wl.point[j];
            row += fw[j] * (1.0 / (z - w) + pm / (z + w));
        }
        acc += fz[i] * row;
    }
    const std::complex<double> two_pi_i(0.0, 2 * std::numbers::pi);
    return (acc / (two_pi_i * two_pi_i)).real();
}

} // namespace

double airy_2to1_contour(AirySign sign, double x, double y) {
    check_window(x, y);
    int panels = 16;
    double prev = contour_pass(sign, x, y, panels, 20);
    for (int pass = 0; pass < 3; ++pass) {
        panels *= 2;
        const double cur = contour_pass(sign, x, y, panels, 20);
        if (std::abs(cur - prev) < 1e-12) return cur;
        prev = cur;
    }
    throw QuadratureNotConverged("Airy 2->1 contour integral did not settle");
}

double bulk_phi(double alpha) {
    if (alpha >= 2.0) return 0.0;
    if (alpha <= -2.0) return std::numbers::pi;
    return std::acos(alpha / 2.0);
}

int lattice_site(KernelFamily f, int position) { return f == KernelFamily::Sp ? position - 1 : position; }

std::vector<ScanRow> bulk_scan(KernelFamily f, const std::vector<double>& thetas, double alpha,
                               const std::vector<int>& offsets) {
    if (std::abs(alpha) == 2.0) throw PreconditionViolation("alpha = +-2 is the edge, not the bulk");
    if (offsets.empty()) return {};
    const double phi = bulk_phi(alpha);
    const std::size_t per = offsets.size() * offsets.size();
    std::vector<ScanRow> rows(thetas.size() * per);
    parallel_for(thetas.size(), [&](std::size_t t) {
        const double theta = thetas[t];
        const int base = static_cast<int>(std::floor(alpha * theta));
        const auto [lo, hi] = std::minmax_element(offsets.begin(), offsets.end());
        const BesselKernel k(theta, f, lattice_site(f, base + *lo), lattice_site(f, base + *hi));
        std::size_t r = t * per;
        for (int a : offsets)
            for (int b : offsets) {
                ScanRow& row = rows[r++];
                row.param = theta;
                row.x = a;
                row.y = b;
                row.discrete = k(lattice_site(f, base + a), lattice_site(f, base + b));
                row.limit = sine_kernel(phi, b - a);
                row.abs_error = std::abs(row.discrete - row.limit);
            }
    });
    return rows;
}

std::vector<ScanRow> edge_scan(KernelFamily f, const std::vector<double>& thetas, const std::vector<double>& grid,
                               bool lattice_coordinates) {
    const AirySign sign = edge_sign(f);
    const std::size_t per = grid.size() * grid.size();
    std::vector<ScanRow> rows(thetas.size() * per);
    parallel_for(rows.size(), [&](std::size_t i) {
        const double theta = thetas[i / per];
        const double x = grid[(i % per) / grid.size()], y = grid[i % grid.size()];
        const double c = std::cbrt(theta);
        if (2 * theta + std::min(x, y) * c <= 0) throw PreconditionViolation("edge point below the origin");
        const int a = static_cast<int>(std::floor(2 * theta + x * c));
        const int b = static_cast<int>(std::floor(2 * theta + y * c));
        const int sa = lattice_site(f, a), sb = lattice_site(f, b);
        ScanRow& row = rows[i];
        row.param = theta;
        row.x = x;
        row.y = y;
        row.discrete = c * BesselKernel(theta, f, std::min(sa, sb), std::max(sa, sb))(sa, sb);
        row.limit = lattice_coordinates ? airy_2to1(sign, (a - 2 * theta) / c, (b - 2 * theta) / c)
                                        : airy_2to1(sign, x, y);
        row.abs_error = std::abs(row.discrete - row.limit);
    });
    return rows;
}

std::vector<ScanRow> nicholson_scan(const std::vector<double>& thetas, const std::vector<double>& xs) {
    std::vector<ScanRow> rows;
    for (double theta : thetas)
        for (double x : xs) {
            const double c = std::cbrt(theta);
            const int n = static_cast<int>(std::floor(2 * theta + x * c));
            ScanRow row;
            row.param = theta;
            row.x = x;
            row.y = std::nan("");
            row.discrete = c * bessel_j(n, 2 * theta);
            row.limit = airy_ai((n - 2 * theta) / c);
            row.abs_error = std::abs(row.discrete - row.limit);
            rows.push_back(row);
        }
    return rows;
}

double max_error(const std::vector<ScanRow>& rows, double param) {
    double m = 0.0;
    for (const auto& r : rows)
        if (r.param == param) m = std::max(m, r.abs_error);
    return m;
}

double fit_exponent(const std::vector<double>& thetas, const std::vector<double>& errors) {
    if (thetas.size() != errors.size() || thetas.size() < 2) throw PreconditionViolation("need two or more points");
    const auto n = static_cast<double>(thetas.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const double lx = std::log(thetas[i]), ly = std::log(errors[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

double tw_det(AirySign sign, double s, double length, double width, int order, int* nodes) {
    const double pm = sign == AirySign::Plus ? 1.0 : -1.0;
    const GaussRule xr = composite_gauss(s, s + length, static_cast<int>(std::ceil(length / width)), order);
    // A(x, y) = int_0^U (Ai(x+u) ± Ai(x-u)) Ai(y+u) du with Ai(y + U) negligible for y >= s
    const double u_max = std::max(17.0 - s, 1.0);
    const GaussRule ur = composite_gauss(0.0, u_max, static_cast<int>(std::ceil(u_max / (width / 2))), order);
    const auto n = static_cast<Eigen::Index>(xr.nodes.size());
    const auto m = static_cast<Eigen::Index>(ur.nodes.size());
    Eigen::MatrixXd p(n, m), q(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = xr.nodes[static_cast<std::size_t>(i)];
        const double sw = std::sqrt(xr.weights[static_cast<std::size_t>(i)]);
        for (Eigen::Index k = 0; k < m; ++k) {
            const double u = ur.nodes[static_cast<std::size_t>(k)];
            const double vu = ur.weights[static_cast<std::size_t>(k)];
            p(i, k) = sw * vu * (ai(x + u) + pm * ai(x - u));
            q(i, k) = sw * ai(x + u);
        }
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - p * q.transpose();
    *nodes = static_cast<int>(n);
    return determinant(a);
}

} // namespace

TWResult tw_2to1(AirySign sign, double s, const TWConfig& cfg) {
    if (!(s >= -8.0 && s <= 12.0)) throw PreconditionViolation("tw_2to1 is evaluated for s in [-8, 12]");
    if (!(cfg.panel_width > 0.0) || cfg.order < 2) throw PreconditionViolation("bad discretization");
    const double length = cfg.length > 0.0 ? cfg.length : std::max(16.0 - s, 8.0);
    TWResult out;
    out.value = tw_det(sign, s, length, cfg.panel_width, cfg.order, &out.nodes);
    if (cfg.check) {
        int refined_nodes = 0;
        out.refined = tw_det(sign, s, 2 * length, cfg.panel_width / 2, cfg.order, &refined_nodes);
        out.est_error = std::abs(out.refined - out.value);
        if (out.est_error > cfg.tolerance)
            throw TruncationInsufficient("Airy 2->1 Fredholm determinant moved by " + std::to_string(out.est_error) +
                                         " under refinement");
    }
    return out;
}

double tw_2to1_cdf(AirySign sign, double s) { return tw_2to1(sign, s).value; }

DiscreteEdgeCdf discrete_edge_cdf(KernelFamily f, double theta, double s) {
    if (!(theta > 0.0)) throw PreconditionViolation("theta must be > 0");
    const double c = std::cbrt(theta);
    DiscreteEdgeCdf out;
    out.m = static_cast<int>(std::floor(2 * theta + s * c));
    // lambda_1 <= m  <=>  no particle lambda_i - i at or above m
    const int top = static_cast<int>(std::ceil(2 * theta + 8 * c));
    out.window = std::max(0, top - out.m + 1);
    if (out.window == 0) {
        out.value = 1.0;
        return out;
    }
    const BesselKernel k(theta, f, out.m, top);
    out.value = fredholm_det_section(k, out.m, out.window);
    return out;
}

} // namespace spo
