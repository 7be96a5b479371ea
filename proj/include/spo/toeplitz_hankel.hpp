#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spo/kernels.hpp"
#include "spo/specialization.hpp"

namespace spo {

/// Symbol f(z) = exp(R+(z) + R-(1/z)) with R±(z) = sum_k p_k(rho±) z^k / k,
/// i.e. f(z) = H(rho+; z) H(rho-; 1/z), and f~(z) = 1/f(-z) = E(rho+; z) E(rho-; 1/z).
class Symbol {
public:
    Symbol(Specialization plus, Specialization minus);
    /// rho+ = Plancherel(2 theta), rho- = Plancherel(theta): f = exp(theta (2z + 1/z)).
    static Symbol plancherel(const Rational& theta, int degree);

    const Specialization& plus() const { return plus_; }
    const Specialization& minus() const { return minus_; }

    /// Exact Laurent coefficients modulo t^{D+1} (graded specializations).
    GradedScalar f(int k) const;
    GradedScalar f_tilde(int k) const;

    /// Float coefficients (t = 1) from FFT quadrature on the unit circle.
    /// Needs finite power-sum support on both sides; QuadratureNotConverged
    /// when the modes do not decay.
    double f_float(int k) const;
    double f_tilde_float(int k) const;

    /// sum_k k (|rho+_k|^2 + |rho-_k|^2), i.e. sum_k (p_k(rho+)^2 + p_k(rho-)^2) / k.
    double summability() const;

    FloatSpec float_plus() const;
    FloatSpec float_minus() const;
    /// F(z) = H(rho+; z) / (H(rho-; z) H(rho-; 1/z)) of the associated kernel.
    SymbolF kernel_symbol() const;

private:
    void ensure_float() const;
    Specialization plus_, minus_;
    mutable std::vector<double> ff_, ft_;
    mutable int float_max_ = -1;
};

enum class THDet { D1, D2, D3, D4 };
THDet parse_th_det(const std::string& name);
std::string to_string(THDet d);

/// Toeplitz+Hankel determinants of size n (indices 0..n-1):
///   D1 = det[f_{j-i} + f_{-i-j}],   D2 = det[f~_{j-i} - f~_{-i-j-2}],
///   D3 = det[f_{j-i} - f_{-i-j-2}], D4 = det[f~_{j-i} + f~_{-i-j}].
/// Size 0 gives 1.
GradedScalar th_det(const Symbol& sym, THDet which, int size);
double th_det_float(const Symbol& sym, THDet which, int size);

/// The determinant side with the factor 1/2 for D1 and D4 (n >= 1), against
/// the restricted sum of sp/o_lambda(rho+) s_lambda(rho-):
///   l(lambda) <= n for D1, D3; lambda_1 <= n for D2, D4.
struct GesselSides {
    GradedScalar det_side;
    GradedScalar sum_side;
};
GesselSides gessel_sides(const Symbol& sym, THDet which, int size, int degree);
bool gessel_check(const Symbol& sym, THDet which, int size, int degree);

struct SzegoLimits {
    GradedScalar z_sp, z_o;
};
/// Z_sp = exp sum_k (k rho+_k rho-_k + rho-_{2k} - k (rho-_k)^2 / 2), Z_o with -rho-_{2k}.
SzegoLimits szego_limits(const Symbol& sym);
/// Float values; DivergentNormalization if the exponent series does not settle.
std::pair<double, double> szego_limits_float(const Symbol& sym);

struct FredholmConfig {
    int window = 16;             // initial section size
    int max_window = 4096;
    double tail_tolerance = 1e-12;
    double conjugation = 1.0;    // K(i,j) -> r^{i-j} K(i,j)
    KernelConfig kernel;         // used when no Bessel form is available
};

struct BOResult {
    double lhs = 0.0;  // D2_m or D4_m / 2
    double rhs = 0.0;  // Z * det(I - K) on sites >= m
    double gap = 0.0;
    double tail_bound = 0.0;
    int window = 0;
};

/// D2_m = Z_sp det(I - K_sp) and D4_m / 2 = Z_o det(I - K_o) on sites m, m+1, ...
/// The section grows until the kernel mass coupling the next block of sites
/// drops below tail_tolerance; TruncationInsufficient at max_window.
BOResult bo_check(const Symbol& sym, KernelFamily family, int m, const FredholmConfig& fred = {});

/// Same with the Plancherel kernel in Bessel form (rho+ = pl(2 theta), rho- = pl(theta)).
BOResult bo_check_plancherel(double theta, KernelFamily family, int m, const FredholmConfig& fred = {});

} // namespace spo
