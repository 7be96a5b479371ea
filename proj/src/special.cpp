#include "spo/special.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>

#include "spo/errors.hpp"

namespace spo {

std::vector<double> bessel_j_table(int n_max, double x) {
    if (n_max < 0) throw PreconditionViolation("bessel order must be >= 0");
    if (n_max > 1000000) throw PreconditionViolation("bessel order above 1e6");
    if (!(x >= 0.0)) throw PreconditionViolation("bessel argument must be >= 0");
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    const double top = std::max(static_cast<double>(n_max), x);
    int start = static_cast<int>(top + std::sqrt(160.0 * top) + 30.0);
    start += start % 2;
    std::vector<double> j(static_cast<std::size_t>(start) + 2, 0.0);
    j[static_cast<std::size_t>(start) + 1] = 0.0;
    j[static_cast<std::size_t>(start)] = 1e-300;
    for (int k = start; k >= 1; --k) {
        const auto ku = static_cast<std::size_t>(k);
        j[ku - 1] = (2.0 * k / x) * j[ku] - j[ku + 1];
        if (std::abs(j[ku - 1]) > 1e250) {
            for (std::size_t i = ku - 1; i < j.size(); ++i) j[i] *= 1e-250;
        }
    }
    double norm = j[0];
    for (int k = 2; k <= start; k += 2) norm += 2.0 * j[static_cast<std::size_t>(k)];
    for (int n = 0; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = j[static_cast<std::size_t>(n)] / norm;
    return out;
}

double bessel_j(int n, double x) {
    const int m = std::abs(n);
    const double v = bessel_j_table(m, x)[static_cast<std::size_t>(m)];
    return (n < 0 && m % 2) ? -v : v;
}

BesselTable::BesselTable(double x, int lo, int hi) : x_(x), lo_(lo), hi_(hi) {
    if (lo > hi) throw PreconditionViolation("empty Bessel table range");
    pos_ = bessel_j_table(std::max(std::abs(lo), std::abs(hi)), x);
}

double BesselTable::operator()(int n) const {
    if (n < lo_ || n > hi_) throw PreconditionViolation("Bessel order outside the tabulated range");
    const int m = std::abs(n);
    const double v = pos_[static_cast<std::size_t>(m)];
    return (n < 0 && m % 2) ? -v : v;
}

namespace {

double airy_series(double x) {
    // Ai(x) = c1 f(x) - c2 g(x) with the two Maclaurin solutions of y'' = x y
    const long double c1 = 0.355028053887817239260L;
    const long double c2 = 0.258819403792806798405L;
    const long double z = x;
    const long double z3 = z * z * z;
    long double f = 1.0L, g = z, tf = 1.0L, tg = z;
    for (int k = 1; k < 400; ++k) {
        tf *= z3 / ((3.0L * k - 1.0L) * (3.0L * k));
        tg *= z3 / ((3.0L * k) * (3.0L * k + 1.0L));
        f += tf;
        g += tg;
        if (std::abs(tf) < 1e-22L * std::abs(f) && std::abs(tg) < 1e-22L * (std::abs(g) + 1e-300L)) break;
    }
    return static_cast<double>(c1 * f - c2 * g);
}

double airy_asymptotic(double x) {
    const double pi = std::numbers::pi;
    const double ax = std::abs(x);
    const double zeta = 2.0 / 3.0 * ax * std::sqrt(ax);
    // u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / ((2k-1) 216 k)
    std::vector<double> u{1.0};
    for (int k = 1; k < 40; ++k)
        u.push_back(u.back() * (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / ((2.0 * k - 1) * 216.0 * k));
    if (x > 0) {
        double sum = 0.0, prev = INFINITY;
        for (std::size_t k = 0; k < u.size(); ++k) {
            const double t = ((k % 2) ? -1.0 : 1.0) * u[k] / std::pow(zeta, static_cast<double>(k));
            if (std::abs(t) > prev) break;  // optimal truncation
            prev = std::abs(t);
            sum += t;
            if (std::abs(t) < 1e-17 * std::abs(sum)) break;
        }
        return std::exp(-zeta) / (2.0 * std::sqrt(pi) * std::pow(ax, 0.25)) * sum;
    }
    double p = 0.0, q = 0.0, prev = INFINITY;
    for (std::size_t k = 0; 2 * k + 1 < u.size(); ++k) {
        const double sgn = (k % 2) ? -1.0 : 1.0;
        const double tp = sgn * u[2 * k] / std::pow(zeta, 2.0 * k);
        const double tq = sgn * u[2 * k + 1] / std::pow(zeta, 2.0 * k + 1);
        if (std::abs(tp) > prev) break;
        prev = std::abs(tp);
        p += tp;
        q += tq;
        if (std::abs(tq) < 1e-17) break;
    }
    const double phase = zeta + pi / 4;
    return (std::sin(phase) * p - std::cos(phase) * q) / (std::sqrt(pi) * std::pow(ax, 0.25));
}

} // namespace

double airy_ai(double x) {
    if (!(std::abs(x) <= 40.0)) throw DomainTooLarge("airy_ai is implemented for |x| <= 40");
    if (std::abs(x) <= 8.0) return airy_series(x);
    return airy_asymptotic(x);
}

double airy_ai_contour(double x) {
    if (!(std::abs(x) <= 40.0)) throw DomainTooLarge("airy_ai_contour is implemented for |x| <= 40");
    // Ai(x) = (1/pi) Im int_0^inf exp(-t^3/3 - x t e^{i pi/3}) e^{i pi/3} dt
    const std::complex<double> rot = std::polar(1.0, std::numbers::pi / 3);
    // cut where t^3/3 + x t / 2 exceeds 50
    double t_max = 2.0;
    while (t_max * t_max * t_max / 3.0 + 0.5 * x * t_max < 50.0) t_max += 0.5;
    const int panels = static_cast<int>(std::ceil(t_max / 0.25));
    const GaussRule rule = composite_gauss(0.0, t_max, panels, 24);
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = rule.nodes[i];
        acc += rule.weights[i] * std::exp(-t * t * t / 3.0 - x * t * rot);
    }
    return (acc * rot).imag() / std::numbers::pi;
}

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    if (n < 1) throw PreconditionViolation("Gauss-Legendre order must be >= 1");
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    GaussRule r;
    r.nodes.resize(static_cast<std::size_t>(n));
    r.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = 0.0;
        for (int k = 1; k <= n; ++k) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        r.nodes[static_cast<std::size_t>(i)] = -z;
        r.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
        r.weights[static_cast<std::size_t>(i)] = w;
        r.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return cache.emplace(n, std::move(r)).first->second;
}

GaussRule composite_gauss(double a, double b, int panels, int order) {
    if (panels < 1) throw PreconditionViolation("composite rule needs at least one panel");
    const GaussRule& base = gauss_legendre(order);
    GaussRule out;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (std::size_t i = 0; i < base.nodes.size(); ++i) {
            out.nodes.push_back(mid + 0.5 * h * base.nodes[i]);
            out.weights.push_back(0.5 * h * base.weights[i]);
        }
    }
    return out;
}

double integrate(const std::function<double(double)>& f, double a, double b, int panels, int order) {
    const GaussRule r = composite_gauss(a, b, panels, order);
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * f(r.nodes[i]);
    return acc;
}

double sine_kernel(double phi, int d) {
    if (phi < 0.0 || phi > std::numbers::pi + 1e-15) throw PreconditionViolation("sine kernel needs 0 <= phi <= pi");
    if (d == 0) return phi / std::numbers::pi;
    return std::sin(phi * d) / (std::numbers::pi * d);
}

} // namespace spo
