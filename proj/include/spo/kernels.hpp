#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spo/measures.hpp"

namespace spo {

using cplx = std::complex<double>;

/// Double-precision specialization used by the analytic symbols: finitely
/// many power sums, an ordinary alphabet y and a BC alphabet x (with
/// inverses, optionally the extra variable 1).
struct FloatSpec {
    std::vector<double> powersums;  // p_1, p_2, ...
    std::vector<double> y;
    std::vector<double> x;
    bool include_one = false;

    static FloatSpec plancherel(double theta);
    static FloatSpec from_json(const std::string& text);
    /// Finite power-sum specializations only.
    static FloatSpec from_specialization(const Specialization& rho);

    double powersum(int k) const;
    /// log H(rho; z) and log E(rho; z), any branch.
    cplx log_h(cplx z) const;
    cplx log_e(cplx z) const;
    /// H and E converge (and do not vanish) for |z| below this radius.
    double radius() const;
    bool is_zero() const;
};

/// F(z) together with the annulus where it is analytic and nonvanishing.
///   lifted:          F = H(rho+; z) / (H(rho-; z) H(rho-; 1/z))
///   dual:            F = H(rho+; z) / (E(rho-; z) E(rho-; 1/z))
///   dual_corollary:  F = E(rho-; z) E(rho-; 1/z) / E(rho+; z)
class SymbolF {
public:
    enum class Kind { Lifted, Dual, DualCorollary };

    static SymbolF plancherel(double theta);
    static SymbolF lifted(FloatSpec plus, FloatSpec minus);
    static SymbolF dual(FloatSpec plus, FloatSpec minus);
    static SymbolF dual_corollary(FloatSpec plus, FloatSpec minus);
    static SymbolF trivial() { return lifted({}, {}); }

    cplx log_value(cplx z) const;
    cplx value(cplx z) const { return std::exp(log_value(z)); }
    double inner_radius() const;
    double outer_radius() const;
    bool admits(double r) const { return r > inner_radius() && r < outer_radius(); }

    std::optional<double> plancherel_theta() const { return theta_; }
    Kind kind() const { return kind_; }
    const FloatSpec& plus() const { return plus_; }
    const FloatSpec& minus() const { return minus_; }

private:
    SymbolF(Kind kind, FloatSpec plus, FloatSpec minus) : kind_(kind), plus_(std::move(plus)), minus_(std::move(minus)) {}
    Kind kind_;
    FloatSpec plus_, minus_;
    std::optional<double> theta_;
};

enum class KernelFamily { Sp, O };
KernelFamily kernel_family(Family f);
KernelFamily parse_kernel_family(const std::string& name);
std::string to_string(KernelFamily f);

enum class Representation { Contour, Bessel, Fourier };
Representation parse_representation(const std::string& name);
std::string to_string(Representation r);

// Lattice convention: site a is the position lambda_i - i. Every
// representation extracts K(a, b) = [z^{a+1} w^{-b-1}] F(z)/F(w) G(z, w) with
//   G_sp = (1 - w^2) / ((1 - w/z)(1 - wz)),  G_o = (z/w) (1/(1 - w/z) - 1/(1 - wz)),
// expanded in |w| < |z|, |wz| < 1. For the Plancherel symbol this gives
//   K_sp(a,b) = sum_{i>=1} J_{a+1+i} J_{b+1+i} + sum_{i>=0} J_{a+1-i} J_{b+1+i},
//   K_o(a,b)  = sum_{i>=0} J_{a+i} J_{b+i}     - sum_{i>=0} J_{a-i} J_{b+i},
// all Bessel functions at 2 theta.

struct KernelConfig {
    double r_z = 1.2;
    double r_w = 0.8;
    int nodes = 64;           // initial node count per circle (power of two)
    int max_nodes = 8192;
    double tolerance = 1e-12;  // successive-doubling agreement
    Representation representation = Representation::Contour;
};

struct KernelBatch {
    std::vector<int> a, b;
    std::vector<std::vector<double>> value;  // value[i][j] = K(a[i], b[j])
    double est_error = 0.0;
    int nodes = 0;
};

/// Double trapezoid rule on |z| = r_z, |w| = r_w with node doubling.
/// ContourViolation for inadmissible radii, QuadratureNotConverged when
/// max_nodes is reached first.
KernelBatch kernel_contour_batch(const KernelConfig& cfg, const SymbolF& f, KernelFamily fam,
                                 const std::vector<int>& a, const std::vector<int>& b);
double kernel_contour(const KernelConfig& cfg, const SymbolF& f, KernelFamily fam, int a, int b);

/// Plancherel kernel as Bessel sums; terms beyond the order where J_n(2 theta)
/// drops below 1e-18 are dropped.
double kernel_bessel(double theta, KernelFamily fam, int a, int b);

/// All entries K(a_i, b_j) from one Bessel table.
class BesselKernel {
public:
    BesselKernel(double theta, KernelFamily fam, int lo, int hi);
    double operator()(int a, int b) const;
    double theta() const { return theta_; }
    /// Crude bound for the dropped terms.
    double truncation_error() const { return 1e-18 * (hi_ - lo_ + 1); }

private:
    double theta_;
    KernelFamily fam_;
    int lo_, hi_, n_top_;
    std::vector<double> j_;  // J_0 .. J_{n_max}
    double j(int n) const;
};

/// Laurent coefficients of F and 1/F on a circle inside F's annulus, by FFT.
class ModeCache {
public:
    /// Computes modes with automatic FFT size until the edge modes drop below
    /// `threshold` relative to the largest.
    static ModeCache compute(const SymbolF& f, double radius = 1.0, double threshold = 1e-14, int max_size = 1 << 20);
    /// Truncated table: modes |n| <= max_mode only, marked incomplete.
    ModeCache truncated(int max_mode) const;

    double f(int n) const;
    double f_inv(int n) const;
    int max_mode() const { return max_mode_; }
    bool complete() const { return complete_; }
    double radius() const { return radius_; }
    double edge_magnitude() const { return edge_; }

    /// JSON header line followed by little-endian f64 (re, im) pairs for
    /// F then 1/F, modes -max_mode..max_mode.
    void save(const std::string& path) const;
    static ModeCache load(const std::string& path);

private:
    double radius_ = 1.0;
    int max_mode_ = 0;
    bool complete_ = true;
    double edge_ = 0.0;
    std::vector<cplx> f_, finv_;
};

struct FourierOptions {
    bool allow_recompute = true;
};

/// Fourier-mode series for K(a, b). CoefficientCacheMiss if the sum needs
/// modes beyond an incomplete cache and recomputation is disabled.
double kernel_fourier(const SymbolF& f, KernelFamily fam, int a, int b, ModeCache& cache,
                      const FourierOptions& opts = {});
double kernel_fourier(const SymbolF& f, KernelFamily fam, int a, int b);

using KernelFn = std::function<double(int, int)>;

/// det[K(k_i, k_j)] by LU; points must be distinct.
double correlation_det(const KernelFn& kernel, const std::vector<int>& points);

/// det(I - K) restricted to sites first, ..., first + size - 1, with the
/// optional similarity K(i,j) -> r^{i-j} K(i,j).
double fredholm_det_section(const KernelFn& kernel, int first, int size, double conjugation = 1.0);

} // namespace spo
