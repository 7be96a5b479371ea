#include <doctest.h>

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "spo/errors.hpp"
#include "spo/special.hpp"

namespace {

// Laurent coefficient n of exp(theta (z - 1/z)) by the trapezoid rule on |z| = 1.
double plancherel_mode(int n, double theta, int nodes = 256) {
    std::complex<double> acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double phi = 2 * std::numbers::pi * k / nodes;
        const std::complex<double> z = std::polar(1.0, phi);
        acc += std::exp(theta * (z - 1.0 / z)) * std::polar(1.0, -n * phi);
    }
    return acc.real() / nodes;
}

} // namespace

TEST_CASE("bessel J basics") {
    CHECK(spo::bessel_j(0, 0.0) == 1.0);
    for (int n = 1; n < 5; ++n) CHECK(spo::bessel_j(n, 0.0) == 0.0);
    CHECK(std::abs(spo::bessel_j(0, 2.0) - plancherel_mode(0, 1.0)) < 1e-12);
    CHECK(spo::bessel_j(-3, 2.5) == doctest::Approx(-spo::bessel_j(3, 2.5)));
    CHECK(spo::bessel_j(-4, 2.5) == doctest::Approx(spo::bessel_j(4, 2.5)));
}

TEST_CASE("bessel J against libstdc++ and quadrature") {
    for (double x : {0.1, 1.0, 2.0, 5.0, 20.0, 100.0}) {
        auto table = spo::bessel_j_table(150, x);
        for (int n = 0; n <= 150; n += 7) {
            const double ref = std::cyl_bessel_j(static_cast<double>(n), x);
            CHECK(std::abs(table[static_cast<std::size_t>(n)] - ref) < 1e-13 + 1e-10 * std::abs(ref));
        }
    }
    for (double theta : {0.5, 1.0, 2.0})
        for (int n = -10; n <= 10; ++n) CHECK(std::abs(spo::bessel_j(n, 2 * theta) - plancherel_mode(n, theta)) < 1e-13);
}

TEST_CASE("bessel normalization sum") {
    for (double x : {1.0, 5.0, 20.0}) {
        auto j = spo::bessel_j_table(200, x);
        double s = j[0];
        for (std::size_t k = 2; k < j.size(); k += 2) s += 2 * j[k];
        CHECK(std::abs(s - 1.0) < 1e-12);
    }
}

TEST_CASE("bessel at large order and argument") {
    // edge region of J_n(2 theta) for theta = 800
    const double x = 1600.0;
    auto j = spo::bessel_j_table(1700, x);
    for (int n : {1500, 1590, 1600, 1610, 1650}) {
        // libstdc++ loses accuracy at this order; boost does not
        const double ref = boost::math::cyl_bessel_j(static_cast<double>(n), x);
        CHECK(std::abs(j[static_cast<std::size_t>(n)] - ref) < 1e-12);
    }
    spo::BesselTable t(3.0, -5, 5);
    CHECK(t(-5) == doctest::Approx(-std::cyl_bessel_j(5.0, 3.0)));
    CHECK_THROWS_AS(t(6), spo::PreconditionViolation);
}

TEST_CASE("airy Ai against boost and the contour integral") {
    double max_err = 0.0;
    for (double x = -8.0; x <= 8.0; x += 0.125) max_err = std::max(max_err, std::abs(spo::airy_ai(x) - spo::airy_ai_contour(x)));
    CHECK(max_err < 1e-9);
    CHECK(std::abs(spo::airy_ai(0.0) - spo::airy_ai_contour(0.0)) < 1e-10);
    for (double x = -40.0; x <= 40.0; x += 0.37) {
        const double ref = boost::math::airy_ai(x);
        CHECK(std::abs(spo::airy_ai(x) - ref) < 1e-12 + 1e-9 * std::abs(ref));
    }
    CHECK_THROWS_AS(spo::airy_ai(41.0), spo::DomainTooLarge);
}

TEST_CASE("airy decay and ODE residual") {
    double prev = spo::airy_ai(2.0);
    for (double x = 2.25; x <= 10.0; x += 0.25) {
        const double v = spo::airy_ai(x);
        CHECK(v < prev);
        prev = v;
    }
    // second difference with one Richardson step, O(h^4)
    auto d2 = [](double x, double h) {
        return (spo::airy_ai(x + h) - 2 * spo::airy_ai(x) + spo::airy_ai(x - h)) / (h * h);
    };
    for (double x : {-2.0, 0.0, 2.0}) {
        const double second = (4 * d2(x, 0.005) - d2(x, 0.01)) / 3;
        CHECK(std::abs(second - x * spo::airy_ai(x)) < 1e-8);
    }
}

TEST_CASE("gauss-legendre") {
    for (int n : {1, 2, 5, 16, 40}) {
        const auto& r = spo::gauss_legendre(n);
        double w = 0.0;
        for (double v : r.weights) w += v;
        CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
        // exact for polynomials of degree 2n - 1
        double m = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) m += r.weights[i] * std::pow(r.nodes[i], 2 * n - 2);
        CHECK(m == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
    }
    CHECK(spo::integrate([](double x) { return std::exp(x); }, 0.0, 3.0, 4, 12) ==
          doctest::Approx(std::exp(3.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("sine kernel") {
    CHECK(spo::sine_kernel(std::numbers::pi / 2, 0) == doctest::Approx(0.5));
    for (int d = -3; d <= 3; ++d) {
        CHECK(std::abs(spo::sine_kernel(std::numbers::pi, d) - (d == 0 ? 1.0 : 0.0)) < 1e-15);
        CHECK(spo::sine_kernel(0.0, d) == 0.0);
    }
    CHECK(spo::sine_kernel(std::numbers::pi / 2, 1) == doctest::Approx(1 / std::numbers::pi));
}
