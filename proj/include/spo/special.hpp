#pragma once

#include <functional>
#include <vector>

namespace spo {

/// J_0(x), ..., J_{n_max}(x) for x >= 0 by Miller's backward recurrence,
/// normalized with J_0 + 2 sum_k J_{2k} = 1.
std::vector<double> bessel_j_table(int n_max, double x);
/// J_n(x) for any integer n (J_{-n} = (-1)^n J_n), x >= 0.
double bessel_j(int n, double x);

/// Table of J_n(x) for n in [lo, hi], including negative orders.
class BesselTable {
public:
    BesselTable(double x, int lo, int hi);
    double operator()(int n) const;
    double x() const { return x_; }

private:
    double x_;
    int lo_, hi_;
    std::vector<double> pos_;  // J_0..J_max(|lo|, |hi|)
};

/// Airy Ai on |x| <= 40: Maclaurin series (extended precision) for |x| <= 8,
/// asymptotic expansions beyond. DomainTooLarge outside.
double airy_ai(double x);
/// Ai(x) by quadrature of its defining contour integral along the rays
/// arg = +-pi/3; slower, used as an independent check.
double airy_ai_contour(double x);

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (cached per n).
const GaussRule& gauss_legendre(int n);
/// Composite Gauss-Legendre on [a, b] with `panels` equal panels of `order` nodes.
GaussRule composite_gauss(double a, double b, int panels, int order);

double integrate(const std::function<double(double)>& f, double a, double b, int panels, int order);

/// Discrete sine kernel sin(phi d)/(pi d), phi/pi on the diagonal.
double sine_kernel(double phi, int d);

} // namespace spo
