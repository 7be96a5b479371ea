// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "spo/asymptotics.hpp"
#include "spo/errors.hpp"
#include "spo/identities.hpp"
#include "spo/kernels.hpp"
#include "spo/measures.hpp"
#include "spo/toeplitz_hankel.hpp"

using namespace spo;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[200];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

bool decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

std::string list(const std::vector<double>& v) {
    std::string s;
    for (double x : v) s += (s.empty() ? "" : " ") + fmt("%.3g", x);
    return s;
}

Outcome cauchy() {
    Outcome o;
    for (int t = 0; t < 5; ++t) {
        const Specialization plus = random_specialization(1000 + 2 * t, 8), minus = random_specialization(1001 + 2 * t, 8);
        for (int k = 1; k <= 3; ++k)
            o.require(plus.powersum_coefficient(k) != 0 && minus.powersum_coefficient(k) != 0, "p_1..p_3 must be nonzero");
        for (Family f : {Family::Sp, Family::O}) {
            const IdentityResult r = cauchy_identity(f, plus, minus);
            o.require(r.passed && r.degree == 8, r.name + " trial " + std::to_string(t));
        }
    }
    if (o.passed) o.detail = "5 pairs x {sp, o} exact at degree 8";
    return o;
}

Outcome gessel() {
    Outcome o;
    std::vector<Symbol> symbols{Symbol::plancherel(1, 8), Symbol::plancherel(Rational(3, 7), 8)};
    for (int t = 0; t < 3; ++t)
        symbols.emplace_back(random_specialization(2000 + 2 * t, 8), random_specialization(2001 + 2 * t, 8));
    int checked = 0;
    for (const Symbol& sym : symbols)
        for (THDet d : {THDet::D1, THDet::D2, THDet::D3, THDet::D4})
            for (int n = 1; n <= 4; ++n) {
                const IdentityResult r = gessel_identity(sym, d, n, 8);
                o.require(r.passed, r.name + " " + r.detail);
                ++checked;
            }
    if (o.passed) o.detail = std::to_string(checked) + " determinant identities exact at degree 8";
    return o;
}

Outcome cross_representation() {
    Outcome o;
    std::vector<int> sites;
    for (int a = -10; a <= 10; ++a) sites.push_back(a);
    double worst = 0.0;
    for (double theta : {0.5, 1.0, 2.0}) {
        const SymbolF f = SymbolF::plancherel(theta);
        ModeCache cache = ModeCache::compute(f);
        for (KernelFamily fam : {KernelFamily::Sp, KernelFamily::O}) {
            const KernelBatch contour = kernel_contour_batch(KernelConfig{}, f, fam, sites, sites);
            const BesselKernel bessel(theta, fam, -10, 10);
            for (std::size_t i = 0; i < sites.size(); ++i)
                for (std::size_t j = 0; j < sites.size(); ++j) {
                    const double c = contour.value[i][j], b = bessel(sites[i], sites[j]);
                    const double m = kernel_fourier(f, fam, sites[i], sites[j], cache);
                    worst = std::max({worst, std::abs(c - b), std::abs(c - m), std::abs(b - m)});
                }
        }
    }
    o.require(worst < 1e-8, fmt("max pairwise difference %.3g", worst));
    if (o.passed) o.detail = fmt("max pairwise difference %.3g over 2 x 3 x 441 entries", worst);
    return o;
}

Outcome correlation_oracle() {
    Outcome o;
    std::vector<std::vector<int>> sets;
    for (int a = -4; a <= 4; ++a) {
        sets.push_back({a});
        for (int b = a + 1; b <= 4; ++b) sets.push_back({a, b});
    }
    double worst = 0.0, worst_tail = 0.0;
    for (const char* name : {"1/5", "2/5"}) {
        const Rational theta(name);
        for (Family fam : {Family::Sp, Family::O, Family::SpDual, Family::ODual}) {
            MeasureSpec spec{fam, Specialization::plancherel(2 * theta, 0), Specialization::plancherel(theta, 0),
                             NumericMode::Float};
            BruteForceOracle oracle(spec);
            const double th = theta.get_d();
            const SymbolF f = is_dual(fam) ? SymbolF::dual(FloatSpec::plancherel(2 * th), FloatSpec::plancherel(th))
                                           : SymbolF::plancherel(th);
            std::vector<int> sites;
            for (int a = -4; a <= 4; ++a) sites.push_back(a);
            const KernelBatch k = kernel_contour_batch(KernelConfig{}, f, kernel_family(fam), sites, sites);
            const KernelFn kfn = [&](int a, int b) { return k.value[static_cast<std::size_t>(a + 4)][static_cast<std::size_t>(b + 4)]; };
            for (const auto& pts : sets) {
                const CorrelationEstimate est = oracle.correlation(pts);
                const double err = std::abs(correlation_det(kfn, pts) - est.value);
                worst = std::max(worst, err);
                worst_tail = std::max(worst_tail, est.est_tail);
                o.require(est.est_tail <= 1e-6, "tail estimate above 1e-6");
                o.require(err <= est.est_tail, to_string(fam) + " theta=" + name + fmt(" error %.3g > tail %.3g", err, est.est_tail));
            }
        }
    }
    if (o.passed) o.detail = fmt("max |det - oracle| %.3g, max tail estimate %.3g, 4 families", worst, worst_tail);
    return o;
}

Outcome szego() {
    Outcome o;
    const double theta = 0.5, z = std::exp(1.5 * theta * theta);
    const Symbol sym = Symbol::plancherel(Rational(1, 2), 0);
    double worst = 0.0;
    for (THDet d : {THDet::D1, THDet::D2, THDet::D3, THDet::D4}) {
        const double scale = (d == THDet::D1 || d == THDet::D4) ? 0.5 : 1.0;
        const double gap = std::abs(scale * th_det_float(sym, d, 12) - z);
        worst = std::max(worst, gap);
        o.require(gap < 1e-8, to_string(d) + fmt(" gap %.3g", gap));
    }
    if (o.passed) o.detail = fmt("max gap %.3g to exp(3 theta^2 / 2) at n = 12", worst);
    return o;
}

Outcome borodin_okounkov() {
    Outcome o;
    double worst = 0.0;
    for (double theta : {0.3, 0.5})
        for (KernelFamily fam : {KernelFamily::Sp, KernelFamily::O})
            for (int m = 2; m <= 8; ++m) {
                const BOResult r = bo_check_plancherel(theta, fam, m);
                worst = std::max(worst, std::abs(r.gap));
                o.require(std::abs(r.gap) < 1e-8, to_string(fam) + fmt(" theta=%g m=%g gap %.3g", theta, m, r.gap));
            }
    if (o.passed) o.detail = fmt("max gap %.3g", worst);
    return o;
}

Outcome bulk() {
    Outcome o;
    const std::vector<double> thetas{50, 200, 800};
    for (KernelFamily fam : {KernelFamily::Sp, KernelFamily::O}) {
        std::vector<double> errs;
        for (double theta : thetas) {
            const BesselKernel k(theta, fam, -3, 3);
            double worst = 0.0;
            for (int a = -3; a <= 3; ++a)
                for (int b = -3; b <= 3; ++b) {
                    const int d = b - a;
                    const double sine = d == 0 ? 0.5 : std::sin(std::numbers::pi * d / 2) / (std::numbers::pi * d);
                    worst = std::max(worst, std::abs(k(a, b) - sine));
                }
            errs.push_back(worst);
        }
        o.require(decreasing(errs), to_string(fam) + " not decreasing: " + list(errs));
        o.require(errs.back() < 0.02, to_string(fam) + fmt(" error %.3g at theta = 800", errs.back()));
        o.detail += (o.detail.empty() ? "" : "; ") + to_string(fam) + " " + list(errs);
    }
    return o;
}

Outcome edge() {
    Outcome o;
    const std::vector<double> thetas{50, 200, 800};
    for (KernelFamily fam : {KernelFamily::Sp, KernelFamily::O}) {
        const auto rows = edge_scan(fam, thetas, {-2, 0, 2});
        // the limit column against the contour form of A±
        for (const ScanRow& r : rows)
            o.require(std::abs(r.limit - airy_2to1_contour(edge_sign(fam), r.x, r.y)) < 1e-8, "limit mismatch");
        std::vector<double> errs;
        for (double t : thetas) errs.push_back(max_error(rows, t));
        const double slope = fit_exponent(thetas, errs);
        o.require(decreasing(errs), to_string(fam) + " not decreasing: " + list(errs));
        o.require(slope >= -0.6 && slope <= -0.15, to_string(fam) + fmt(" exponent %.3g", slope));
        o.require(errs.back() < 0.02, to_string(fam) + fmt(" error %.3g at theta = 800", errs.back()));
        o.detail += (o.detail.empty() ? "" : "; ") + to_string(fam) + " " + list(errs) + fmt(" exponent %.3g", slope);
    }
    return o;
}

Outcome nicholson() {
    Outcome o;
    const std::vector<double> thetas{50, 200, 800};
    const auto rows = nicholson_scan(thetas, {-1, 0, 1});
    for (double x : {-1.0, 0.0, 1.0}) {
        std::vector<double> errs;
        for (double theta : thetas) {
            const double c = std::cbrt(theta);
            const int n = static_cast<int>(std::floor(2 * theta + x * c));
            const double j = boost::math::cyl_bessel_j(n, 2 * theta);
            const double err = std::abs(c * j - boost::math::airy_ai(x));
            errs.push_back(err);
            for (const ScanRow& r : rows)
                if (r.param == theta && r.x == x) o.require(std::abs(r.discrete - c * j) < 1e-10, "library J differs from Boost");
        }
        o.require(decreasing(errs), fmt("x = %g not decreasing: ", x) + list(errs));
        o.detail += (o.detail.empty() ? "" : "; ") + fmt("x=%g: ", x) + list(errs);
    }
    return o;
}

Outcome tracy_widom() {
    Outcome o;
    std::vector<double> grid;
    for (int i = 0; i < 50; ++i) grid.push_back(-6.0 + 10.0 * i / 49.0);
    TWConfig cfg;
    cfg.check = true;
    double prev = -1.0, drift = 0.0;
    for (double s : grid) {
        TWResult r;
        try {
            r = tw_2to1(AirySign::Plus, s, cfg);
        } catch (const TruncationInsufficient& e) {
            o.require(false, e.what());
            continue;
        }
        drift = std::max(drift, r.est_error);
        o.require(r.value >= prev, fmt("not monotone at s = %g", s));
        prev = r.value;
    }
    o.require(drift <= 1e-7, fmt("doubling moved a value by %.3g", drift));
    const TWResult top = tw_2to1(AirySign::Plus, 6.0, cfg);
    o.require(std::abs(top.value - 1.0) < 1e-6, fmt("F(6) = %.10g", top.value));
    o.require(top.est_error <= 1e-7, fmt("doubling moved F(6) by %.3g", top.est_error));
    o.detail = fmt("monotone grid, doubling drift %.3g, 1 - F(6) = %.3g", std::max(drift, top.est_error), 1.0 - top.value);
    for (double s : {-1.0, 0.0, 1.0}) {
        const DiscreteEdgeCdf d = discrete_edge_cdf(KernelFamily::Sp, 200, s);
        const double gap = std::abs(d.value - tw_2to1_cdf(AirySign::Plus, s));
        o.detail += fmt("; discrete gap at s = %g: %.4f", s, gap);
        o.require(gap < 0.02, fmt("discrete gap %.4f at s = %g exceeds 0.02", gap, s));
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0: no runtime target
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "exact Cauchy identities", 60, cauchy},
        {2, "Gessel identities", 120, gessel},
        {3, "kernel cross-representation", 60, cross_representation},
        {4, "determinantal correlation oracle", 300, correlation_oracle},
        {5, "Szego limits", 0, szego},
        {6, "Borodin-Okounkov", 0, borodin_okounkov},
        {7, "bulk limit", 0, bulk},
        {8, "edge limit", 0, edge},
        {9, "Nicholson approximation", 0, nicholson},
        {10, "Airy 2->1 gap probability", 0, tracy_widom},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0) o.require(secs < c.budget_seconds, fmt("runtime %.1f s over budget", secs));
        if (!o.passed) ++failed;
        std::printf("criterion %2d %-34s %s  (%.1f s)  %s\n", c.id, c.name, o.passed ? "PASS" : "FAIL", secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
