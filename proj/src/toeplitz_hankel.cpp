#include "spo/toeplitz_hankel.hpp"

#include <cmath>
#include <limits>

#include "spo/errors.hpp"
#include "spo/linalg.hpp"
#include "spo/partition.hpp"
#include "spo/symfunc.hpp"
#include "laurent.hpp"

namespace spo {

Symbol::Symbol(Specialization plus, Specialization minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}

Symbol Symbol::plancherel(const Rational& theta, int degree) {
    return Symbol(Specialization::plancherel(2 * theta, degree), Specialization::plancherel(theta, degree));
}

namespace {

void require_graded(const Symbol& s) {
    if (!s.plus().is_graded() || !s.minus().is_graded())
        throw PreconditionViolation("exact symbol coefficients need graded specializations");
}

// sum_{m >= max(0, -k)} x_{m+k}(rho+) x_m(rho-), finite because both vanish above D
template <class Seq>
GradedScalar convolve(const Specialization& plus, const Specialization& minus, int k, Seq seq) {
    const int d = std::min(plus.truncation_degree(), minus.truncation_degree());
    GradedScalar acc(d);
    for (int m = std::max(0, -k); m <= d && m + k <= d; ++m) acc += seq(plus, m + k) * seq(minus, m);
    return acc;
}

} // namespace

GradedScalar Symbol::f(int k) const {
    require_graded(*this);
    return convolve(plus_, minus_, k, [](const Specialization& s, int n) { return s.h(n); });
}

GradedScalar Symbol::f_tilde(int k) const {
    require_graded(*this);
    return convolve(plus_, minus_, k, [](const Specialization& s, int n) { return s.e(n); });
}

FloatSpec Symbol::float_plus() const { return FloatSpec::from_specialization(plus_); }
FloatSpec Symbol::float_minus() const { return FloatSpec::from_specialization(minus_); }

SymbolF Symbol::kernel_symbol() const { return SymbolF::lifted(float_plus(), float_minus()); }

void Symbol::ensure_float() const {
    if (float_max_ >= 0) return;
    const FloatSpec p = float_plus(), q = float_minus();
    const auto modes = detail::laurent_modes(
        {[&](cplx z) { return p.log_h(z) + q.log_h(1.0 / z); }, [&](cplx z) { return p.log_e(z) + q.log_e(1.0 / z); }},
        1.0, 1e-14, 1 << 20);
    if (!modes.converged) throw QuadratureNotConverged("Fourier coefficients of the symbol do not decay");
    ff_.clear();
    ft_.clear();
    for (const auto& c : modes.coeffs[0]) ff_.push_back(c.real());
    for (const auto& c : modes.coeffs[1]) ft_.push_back(c.real());
    float_max_ = modes.max_mode;
}

double Symbol::f_float(int k) const {
    ensure_float();
    return std::abs(k) > float_max_ ? 0.0 : ff_[static_cast<std::size_t>(k + float_max_)];
}

double Symbol::f_tilde_float(int k) const {
    ensure_float();
    return std::abs(k) > float_max_ ? 0.0 : ft_[static_cast<std::size_t>(k + float_max_)];
}

namespace {

// Sums a series of nonnegative-index terms until it settles; finite support
// stops at the support bound.
double series(const Symbol& sym, const std::function<double(int)>& term, int min_terms) {
    const int bp = sym.plus().support_bound(), bm = sym.minus().support_bound();
    if (bp >= 0 && bm >= 0) {
        double acc = 0.0;
        for (int k = 1; k <= std::max({bp, bm, min_terms}); ++k) acc += term(k);
        return acc;
    }
    double acc = 0.0;
    int quiet = 0;
    for (int k = 1; k <= 20000; ++k) {
        const double t = term(k);
        acc += t;
        quiet = std::abs(t) < 1e-18 * std::max(1.0, std::abs(acc)) ? quiet + 1 : 0;
        if (quiet >= 20) return acc;
    }
    throw DivergentNormalization("symbol exponent series does not settle");
}

} // namespace

double Symbol::summability() const {
    return series(
        *this,
        [this](int k) {
            const double a = plus_.powersum_coefficient(k).get_d(), b = minus_.powersum_coefficient(k).get_d();
            return (a * a + b * b) / k;
        },
        1);
}

THDet parse_th_det(const std::string& name) {
    if (name == "D1" || name == "d1" || name == "1") return THDet::D1;
    if (name == "D2" || name == "d2" || name == "2") return THDet::D2;
    if (name == "D3" || name == "d3" || name == "3") return THDet::D3;
    if (name == "D4" || name == "d4" || name == "4") return THDet::D4;
    throw ConfigError("unknown determinant '" + name + "' (expected D1..D4)");
}

std::string to_string(THDet d) {
    switch (d) {
    case THDet::D1: return "D1";
    case THDet::D2: return "D2";
    case THDet::D3: return "D3";
    case THDet::D4: return "D4";
    }
    return "?";
}

namespace {

template <class T, class F, class G>
DenseMatrix<T> th_matrix(THDet which, int n, F f, G ft) {
    DenseMatrix<T> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            T v;
            switch (which) {
            case THDet::D1: v = f(j - i) + f(-i - j); break;
            case THDet::D2: v = ft(j - i) - ft(-i - j - 2); break;
            case THDet::D3: v = f(j - i) - f(-i - j - 2); break;
            case THDet::D4: v = ft(j - i) + ft(-i - j); break;
            }
            m[static_cast<std::size_t>(i)].push_back(std::move(v));
        }
    return m;
}

bool halved(THDet which) { return which == THDet::D1 || which == THDet::D4; }
bool symplectic(THDet which) { return which == THDet::D1 || which == THDet::D2; }
bool length_bounded(THDet which) { return which == THDet::D1 || which == THDet::D3; }

} // namespace

GradedScalar th_det(const Symbol& sym, THDet which, int size) {
    if (size < 0) throw PreconditionViolation("determinant size must be >= 0");
    require_graded(sym);
    const int d = std::min(sym.plus().truncation_degree(), sym.minus().truncation_degree());
    if (size == 0) return GradedScalar::constant(1, d);
    return determinant(th_matrix<GradedScalar>(
        which, size, [&](int k) { return sym.f(k); }, [&](int k) { return sym.f_tilde(k); }));
}

double th_det_float(const Symbol& sym, THDet which, int size) {
    if (size < 0) throw PreconditionViolation("determinant size must be >= 0");
    if (size == 0) return 1.0;
    return determinant(th_matrix<double>(
        which, size, [&](int k) { return sym.f_float(k); }, [&](int k) { return sym.f_tilde_float(k); }));
}

GesselSides gessel_sides(const Symbol& sym, THDet which, int size, int degree) {
    if (size < 0 || degree < 0) throw PreconditionViolation("size and degree must be >= 0");
    require_graded(sym);
    const Symbol s(sym.plus().with_degree(degree), sym.minus().with_degree(degree));
    GesselSides out;
    // the empty determinant and the empty-partition sum are both 1
    out.det_side = th_det(s, which, size);
    if (size > 0 && halved(which)) out.det_side = halve(out.det_side);
    out.sum_side = GradedScalar(degree);
    for (const Partition& lambda : enumerate_partitions(degree)) {
        const int bound = length_bounded(which) ? lambda.length() : lambda[1];
        if (bound > size) continue;
        const GradedScalar c = symplectic(which) ? sp_char(lambda, s.plus()) : o_char(lambda, s.plus());
        out.sum_side += c * schur(lambda, s.minus());
    }
    return out;
}

bool gessel_check(const Symbol& sym, THDet which, int size, int degree) {
    const auto sides = gessel_sides(sym, which, size, degree);
    return sides.det_side == sides.sum_side;
}

SzegoLimits szego_limits(const Symbol& sym) {
    require_graded(sym);
    const int d = std::min(sym.plus().truncation_degree(), sym.minus().truncation_degree());
    GradedScalar common(d), even(d);
    // with rho_k = p_k / k: k rho+_k rho-_k = p+_k p-_k / k, rho-_{2k} = p-_{2k} / 2k
    for (int k = 1; k <= d; ++k) {
        const GradedScalar pp = sym.plus().p(k), pm = sym.minus().p(k);
        common += (pp * pm - Rational(1, 2) * (pm * pm)) * Rational(1, k);
        if (2 * k <= d) even += sym.minus().p(2 * k) * Rational(1, 2 * k);
    }
    return {(common + even).exp(), (common - even).exp()};
}

std::pair<double, double> szego_limits_float(const Symbol& sym) {
    auto p = [&](const Specialization& s, int k) { return s.powersum_coefficient(k).get_d(); };
    const double common = series(
        sym,
        [&](int k) {
            const double a = p(sym.plus(), k), b = p(sym.minus(), k);
            return (a * b - 0.5 * b * b) / k;
        },
        1);
    const double even = series(sym, [&](int k) { return p(sym.minus(), 2 * k) / (2.0 * k); }, 1);
    const double zs = std::exp(common + even), zo = std::exp(common - even);
    if (!std::isfinite(zs) || !std::isfinite(zo)) throw DivergentNormalization("Szego limit overflows");
    return {zs, zo};
}

namespace {

using TableFn = std::function<KernelFn(int lo, int hi)>;

BOResult bo_impl(double lhs, double z, int m, const FredholmConfig& fred, const TableFn& table) {
    if (fred.window < 1) throw PreconditionViolation("Fredholm window must be >= 1");
    const double eps = std::numeric_limits<double>::epsilon();
    for (int w = fred.window; 2 * w <= fred.max_window; w *= 2) {
        const KernelFn k = table(m, m + 2 * w - 1);
        const double r = fred.conjugation;
        // kernel mass of the second block and its coupling to the first
        double tau = 0.0;
        for (int s = m + w; s < m + 2 * w; ++s) {
            tau += std::abs(k(s, s));
            for (int j = m; j < m + w; ++j)
                tau += std::abs(std::pow(r, s - j) * k(s, j)) * std::abs(std::pow(r, j - s) * k(j, s));
        }
        const double det_w = fredholm_det_section(k, m, w, r);
        const double det_2w = fredholm_det_section(k, m, 2 * w, r);
        if (tau > fred.tail_tolerance) continue;
        BOResult out;
        out.lhs = lhs;
        out.rhs = z * det_2w;
        out.gap = out.lhs - out.rhs;
        out.window = 2 * w;
        out.tail_bound = std::abs(z) * (std::abs(det_2w - det_w) + tau + 16.0 * w * eps);
        return out;
    }
    throw TruncationInsufficient("Fredholm section did not reach tail tolerance within " +
                                 std::to_string(fred.max_window) + " sites");
}

double bo_lhs(const Symbol& sym, KernelFamily family, int m) {
    if (m < 0) throw PreconditionViolation("m must be >= 0");
    if (family == KernelFamily::Sp) return th_det_float(sym, THDet::D2, m);
    return m == 0 ? 1.0 : 0.5 * th_det_float(sym, THDet::D4, m);
}

} // namespace

BOResult bo_check(const Symbol& sym, KernelFamily family, int m, const FredholmConfig& fred) {
    const double lhs = bo_lhs(sym, family, m);
    const auto [zs, zo] = szego_limits_float(sym);
    const SymbolF f = sym.kernel_symbol();
    return bo_impl(lhs, family == KernelFamily::Sp ? zs : zo, m, fred, [&](int lo, int hi) -> KernelFn {
        std::vector<int> sites;
        for (int a = lo; a <= hi; ++a) sites.push_back(a);
        auto batch = std::make_shared<KernelBatch>(kernel_contour_batch(fred.kernel, f, family, sites, sites));
        return [batch, lo](int a, int b) {
            return batch->value[static_cast<std::size_t>(a - lo)][static_cast<std::size_t>(b - lo)];
        };
    });
}

BOResult bo_check_plancherel(double theta, KernelFamily family, int m, const FredholmConfig& fred) {
    if (!(theta > 0.0)) throw PreconditionViolation("theta must be > 0");
    const Symbol sym = Symbol::plancherel(Rational(theta), 0);
    const double lhs = bo_lhs(sym, family, m);
    const auto [zs, zo] = szego_limits_float(sym);
    return bo_impl(lhs, family == KernelFamily::Sp ? zs : zo, m, fred, [&](int lo, int hi) -> KernelFn {
        auto k = std::make_shared<BesselKernel>(theta, family, lo, hi);
        return [k](int a, int b) { return (*k)(a, b); };
    });
}

} // namespace spo
