#include "spo/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include <Eigen/Dense>

#include "spo/errors.hpp"
#include "spo/linalg.hpp"
#include "spo/special.hpp"
#include "laurent.hpp"

namespace spo {

// ---------------------------------------------------------------- FloatSpec

FloatSpec FloatSpec::plancherel(double theta) {
    FloatSpec s;
    s.powersums = {theta};
    return s;
}

namespace {

double json_number(const nlohmann::json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_rational(v.get<std::string>()).get_d();
    throw ConfigError("expected a number, got " + v.dump());
}

} // namespace

FloatSpec FloatSpec::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigError(std::string("invalid specialization JSON: ") + ex.what());
    }
    if (!j.is_object()) throw ConfigError("specialization JSON must be an object");
    FloatSpec s;
    if (j.contains("powersums")) {
        if (!j["powersums"].is_object()) throw ConfigError("'powersums' must be an object");
        for (const auto& [key, value] : j["powersums"].items()) {
            int k = 0;
            try {
                std::size_t used = 0;
                k = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ConfigError("power sum index '" + key + "' is not an integer");
            }
            if (k < 1 || k > 10000) throw ConfigError("power sum index out of range");
            if (static_cast<int>(s.powersums.size()) < k) s.powersums.resize(static_cast<std::size_t>(k), 0.0);
            s.powersums[static_cast<std::size_t>(k - 1)] = json_number(value);
        }
    }
    if (j.contains("y"))
        for (const auto& v : j["y"]) s.y.push_back(json_number(v));
    if (j.contains("x"))
        for (const auto& v : j["x"]) {
            const double x = json_number(v);
            if (x == 0.0) throw ConfigError("BC alphabet variables must be nonzero");
            s.x.push_back(x);
        }
    s.include_one = j.value("include_one", false);
    return s;
}

FloatSpec FloatSpec::from_specialization(const Specialization& rho) {
    const int bound = rho.support_bound();
    if (bound < 0) throw PreconditionViolation("only finite power-sum specializations convert to FloatSpec");
    FloatSpec s;
    for (int k = 1; k <= bound; ++k) s.powersums.push_back(rho.powersum_coefficient(k).get_d());
    return s;
}

double FloatSpec::powersum(int k) const {
    double p = k <= static_cast<int>(powersums.size()) ? powersums[static_cast<std::size_t>(k - 1)] : 0.0;
    for (double v : y) p += std::pow(v, k);
    for (double v : x) p += std::pow(v, k) + std::pow(v, -k);
    if (include_one) p += 1.0;
    return p;
}

cplx FloatSpec::log_h(cplx z) const {
    cplx acc = 0.0, zk = 1.0;
    for (std::size_t k = 0; k < powersums.size(); ++k) {
        zk *= z;
        acc += powersums[k] * zk / static_cast<double>(k + 1);
    }
    for (double v : y) acc -= std::log(1.0 - v * z);
    for (double v : x) acc -= std::log(1.0 - v * z) + std::log(1.0 - z / v);
    if (include_one) acc -= std::log(1.0 - z);
    return acc;
}

cplx FloatSpec::log_e(cplx z) const {
    cplx acc = 0.0, zk = 1.0;
    for (std::size_t k = 0; k < powersums.size(); ++k) {
        zk *= z;
        acc += (k % 2 ? -1.0 : 1.0) * powersums[k] * zk / static_cast<double>(k + 1);
    }
    for (double v : y) acc += std::log(1.0 + v * z);
    for (double v : x) acc += std::log(1.0 + v * z) + std::log(1.0 + z / v);
    if (include_one) acc += std::log(1.0 + z);
    return acc;
}

double FloatSpec::radius() const {
    double r = std::numeric_limits<double>::infinity();
    for (double v : y)
        if (v != 0.0) r = std::min(r, 1.0 / std::abs(v));
    for (double v : x) r = std::min({r, std::abs(v), 1.0 / std::abs(v)});
    if (include_one) r = std::min(r, 1.0);
    return r;
}

bool FloatSpec::is_zero() const {
    return std::all_of(powersums.begin(), powersums.end(), [](double p) { return p == 0.0; }) && y.empty() &&
           x.empty() && !include_one;
}

// ---------------------------------------------------------------- SymbolF

SymbolF SymbolF::plancherel(double theta) {
    if (!(theta >= 0.0)) throw PreconditionViolation("theta must be >= 0");
    SymbolF f(Kind::Lifted, FloatSpec::plancherel(2 * theta), FloatSpec::plancherel(theta));
    f.theta_ = theta;
    return f;
}

SymbolF SymbolF::lifted(FloatSpec plus, FloatSpec minus) { return SymbolF(Kind::Lifted, std::move(plus), std::move(minus)); }
SymbolF SymbolF::dual(FloatSpec plus, FloatSpec minus) { return SymbolF(Kind::Dual, std::move(plus), std::move(minus)); }
SymbolF SymbolF::dual_corollary(FloatSpec plus, FloatSpec minus) {
    return SymbolF(Kind::DualCorollary, std::move(plus), std::move(minus));
}

cplx SymbolF::log_value(cplx z) const {
    switch (kind_) {
    case Kind::Lifted: return plus_.log_h(z) - minus_.log_h(z) - minus_.log_h(1.0 / z);
    case Kind::Dual: return plus_.log_h(z) - minus_.log_e(z) - minus_.log_e(1.0 / z);
    case Kind::DualCorollary: return minus_.log_e(z) + minus_.log_e(1.0 / z) - plus_.log_e(z);
    }
    return 0.0;
}

double SymbolF::inner_radius() const { return 1.0 / minus_.radius(); }
double SymbolF::outer_radius() const { return std::min(plus_.radius(), minus_.radius()); }

// ---------------------------------------------------------------- names

KernelFamily kernel_family(Family f) { return is_symplectic(f) ? KernelFamily::Sp : KernelFamily::O; }

KernelFamily parse_kernel_family(const std::string& name) {
    if (name == "sp") return KernelFamily::Sp;
    if (name == "o") return KernelFamily::O;
    throw ConfigError("unknown kernel family '" + name + "' (expected sp or o)");
}

std::string to_string(KernelFamily f) { return f == KernelFamily::Sp ? "sp" : "o"; }

Representation parse_representation(const std::string& name) {
    if (name == "contour") return Representation::Contour;
    if (name == "bessel") return Representation::Bessel;
    if (name == "fourier") return Representation::Fourier;
    throw ConfigError("unknown representation '" + name + "' (expected contour, bessel, fourier)");
}

std::string to_string(Representation r) {
    switch (r) {
    case Representation::Contour: return "contour";
    case Representation::Bessel: return "bessel";
    case Representation::Fourier: return "fourier";
    }
    return "?";
}

// ---------------------------------------------------------------- contour

namespace {

void check_radii(const KernelConfig& cfg, const SymbolF& f) {
    if (!(cfg.r_w > 0.0 && cfg.r_z > 0.0)) throw ContourViolation("radii must be positive");
    if (!(cfg.r_w < cfg.r_z)) throw ContourViolation("need r_w < r_z");
    if (!(cfg.r_z * cfg.r_w < 1.0)) throw ContourViolation("need r_z < 1 / r_w");
    if (!f.admits(cfg.r_z) || !f.admits(cfg.r_w)) {
        std::ostringstream os;
        os << "circles must lie in the annulus " << f.inner_radius() << " < |z| < " << f.outer_radius()
           << " where F is analytic and nonzero";
        throw ContourViolation(os.str());
    }
    if (cfg.nodes < 4 || (cfg.nodes & (cfg.nodes - 1)) != 0)
        throw PreconditionViolation("node count must be a power of two >= 4");
}

Eigen::MatrixXd contour_pass(const KernelConfig& cfg, const SymbolF& f, KernelFamily fam, const std::vector<int>& a,
                             const std::vector<int>& b, int n, double* max_imag) {
    const double two_pi = 2.0 * std::numbers::pi;
    const auto na = static_cast<Eigen::Index>(a.size());
    const auto nb = static_cast<Eigen::Index>(b.size());
    std::vector<cplx> z(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    Eigen::MatrixXcd u(na, n), v(n, nb);
    for (int k = 0; k < n; ++k) {
        const double phi = two_pi * k / n;
        const cplx zk = std::polar(cfg.r_z, phi), wk = std::polar(cfg.r_w, phi);
        z[static_cast<std::size_t>(k)] = zk;
        w[static_cast<std::size_t>(k)] = wk;
        const cplx lfz = f.log_value(zk), lfw = f.log_value(wk);
        for (Eigen::Index i = 0; i < na; ++i) {
            const double e = -(a[static_cast<std::size_t>(i)] + 1.0);
            u(i, k) = std::exp(lfz + cplx(e * std::log(cfg.r_z), e * phi));
        }
        for (Eigen::Index j = 0; j < nb; ++j) {
            const double e = b[static_cast<std::size_t>(j)] + 1.0;
            v(k, j) = std::exp(-lfw + cplx(e * std::log(cfg.r_w), e * phi));
        }
    }
    // w/z and wz run over fixed circles, so G(z_k, w_l) only depends on l - k and l + k
    const double rho_minus = cfg.r_w / cfg.r_z, rho_plus = cfg.r_w * cfg.r_z;
    std::vector<cplx> inv_minus(static_cast<std::size_t>(n)), inv_plus(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        const cplx root = std::polar(1.0, two_pi * m / n);
        inv_minus[static_cast<std::size_t>(m)] = 1.0 / (1.0 - rho_minus * root);
        inv_plus[static_cast<std::size_t>(m)] = 1.0 / (1.0 - rho_plus * root);
    }
    for (int l = 0; l < n; ++l) {
        const cplx wl = w[static_cast<std::size_t>(l)];
        v.row(l) *= fam == KernelFamily::Sp ? 1.0 - wl * wl : 1.0 / wl;
    }
    if (fam == KernelFamily::O)
        for (int k = 0; k < n; ++k) u.col(k) *= z[static_cast<std::size_t>(k)];
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(na, nb);
    const int block = 256;
    Eigen::MatrixXcd g(std::min(block, n), n);
    for (int k0 = 0; k0 < n; k0 += block) {
        const int rows = std::min(block, n - k0);
        for (int r = 0; r < rows; ++r) {
            const int k = k0 + r;
            for (int l = 0; l < n; ++l) {
                const cplx x = inv_minus[static_cast<std::size_t>((l - k + n) % n)];
                const cplx y = inv_plus[static_cast<std::size_t>((l + k) % n)];
                g(r, l) = fam == KernelFamily::Sp ? x * y : x - y;
            }
        }
        acc.noalias() += u.middleCols(k0, rows) * (g.topRows(rows) * v);
    }
    acc /= static_cast<double>(n) * static_cast<double>(n);
    *max_imag = acc.imag().cwiseAbs().maxCoeff();
    return acc.real();
}

} // namespace

KernelBatch kernel_contour_batch(const KernelConfig& cfg, const SymbolF& f, KernelFamily fam, const std::vector<int>& a,
                                 const std::vector<int>& b) {
    check_radii(cfg, f);
    KernelBatch out;
    out.a = a;
    out.b = b;
    if (a.empty() || b.empty()) return out;
    int n = cfg.nodes;
    double imag = 0.0;
    Eigen::MatrixXd prev = contour_pass(cfg, f, fam, a, b, n, &imag);
    for (;;) {
        if (2 * n > cfg.max_nodes)
            throw QuadratureNotConverged("contour quadrature did not settle within " + std::to_string(cfg.max_nodes) +
                                         " nodes");
        n *= 2;
        Eigen::MatrixXd cur = contour_pass(cfg, f, fam, a, b, n, &imag);
        const double diff = (cur - prev).cwiseAbs().maxCoeff();
        prev = std::move(cur);
        if (diff < cfg.tolerance) {
            out.est_error = diff;
            break;
        }
    }
    const double scale = std::max(1.0, prev.cwiseAbs().maxCoeff());
    if (imag > 1e-12 * scale)
        throw QuadratureNotConverged("kernel has an imaginary part of " + std::to_string(imag));
    out.nodes = n;
    out.value.assign(a.size(), std::vector<double>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out.value[i][j] = prev(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return out;
}

double kernel_contour(const KernelConfig& cfg, const SymbolF& f, KernelFamily fam, int a, int b) {
    return kernel_contour_batch(cfg, f, fam, {a}, {b}).value[0][0];
}

// ---------------------------------------------------------------- Bessel

BesselKernel::BesselKernel(double theta, KernelFamily fam, int lo, int hi) : theta_(theta), fam_(fam), lo_(lo), hi_(hi) {
    if (!(theta > 0.0)) throw PreconditionViolation("kernel_bessel needs theta > 0");
    if (lo > hi) throw PreconditionViolation("empty site range");
    // beyond 2 theta + 20 theta^{1/3} (+ slack for small theta) J_n(2 theta) < 1e-18
    n_top_ = static_cast<int>(std::ceil(2 * theta + 20 * std::cbrt(theta) + 30));
    const int n_max = n_top_ + std::abs(lo) + std::abs(hi) + 4;
    j_ = bessel_j_table(n_max, 2 * theta);
}

double BesselKernel::j(int n) const {
    const int m = std::abs(n);
    if (m >= static_cast<int>(j_.size())) return 0.0;
    const double v = j_[static_cast<std::size_t>(m)];
    return (n < 0 && m % 2) ? -v : v;
}

double BesselKernel::operator()(int a, int b) const {
    if (a < lo_ || a > hi_ || b < lo_ || b > hi_) throw PreconditionViolation("site outside the tabulated range");
    // an index n contributes only while |n| <= n_top
    double s1 = 0.0, s2 = 0.0;
    if (fam_ == KernelFamily::Sp) {
        for (int i = std::max(1, -n_top_ - std::max(a, b) - 1); std::min(a, b) + 1 + i <= n_top_; ++i)
            s1 += j(a + 1 + i) * j(b + 1 + i);
        for (int i = std::max(0, -n_top_ - b - 1); b + 1 + i <= n_top_ && a + 1 - i >= -n_top_; ++i)
            s2 += j(a + 1 - i) * j(b + 1 + i);
        return s1 + s2;
    }
    for (int i = std::max(0, -n_top_ - std::max(a, b)); std::min(a, b) + i <= n_top_; ++i) s1 += j(a + i) * j(b + i);
    for (int i = std::max(0, -n_top_ - b); b + i <= n_top_ && a - i >= -n_top_; ++i) s2 += j(a - i) * j(b + i);
    return s1 - s2;
}

double kernel_bessel(double theta, KernelFamily fam, int a, int b) {
    return BesselKernel(theta, fam, std::min(a, b), std::max(a, b))(a, b);
}

// ---------------------------------------------------------------- Fourier modes

ModeCache ModeCache::compute(const SymbolF& f, double radius, double threshold, int max_size) {
    if (!f.admits(radius)) throw ContourViolation("mode circle outside the annulus of F");
    const auto modes = detail::laurent_modes({[&f](cplx z) { return f.log_value(z); },
                                              [&f](cplx z) { return -f.log_value(z); }},
                                             radius, threshold, max_size);
    if (!modes.converged) throw QuadratureNotConverged("Laurent modes of F did not decay within the FFT size cap");
    ModeCache c;
    c.radius_ = radius;
    c.max_mode_ = modes.max_mode;
    c.complete_ = true;
    c.edge_ = modes.edge;
    c.f_ = modes.coeffs[0];
    c.finv_ = modes.coeffs[1];
    return c;
}

ModeCache ModeCache::truncated(int max_mode) const {
    ModeCache c = *this;
    if (max_mode >= max_mode_) return c;
    c.max_mode_ = max_mode;
    c.complete_ = false;
    const auto off = static_cast<std::size_t>(max_mode_ - max_mode);
    c.f_.assign(f_.begin() + static_cast<std::ptrdiff_t>(off), f_.end() - static_cast<std::ptrdiff_t>(off));
    c.finv_.assign(finv_.begin() + static_cast<std::ptrdiff_t>(off), finv_.end() - static_cast<std::ptrdiff_t>(off));
    return c;
}

double ModeCache::f(int n) const {
    if (std::abs(n) > max_mode_) {
        if (complete_) return 0.0;
        throw CoefficientCacheMiss("mode " + std::to_string(n) + " not in cache");
    }
    return f_[static_cast<std::size_t>(n + max_mode_)].real();
}

double ModeCache::f_inv(int n) const {
    if (std::abs(n) > max_mode_) {
        if (complete_) return 0.0;
        throw CoefficientCacheMiss("mode " + std::to_string(n) + " not in cache");
    }
    return finv_[static_cast<std::size_t>(n + max_mode_)].real();
}

namespace {

void put_le(std::ostream& os, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
    os.write(buf, 8);
}

double get_le(std::istream& is) {
    unsigned char buf[8];
    if (!is.read(reinterpret_cast<char*>(buf), 8)) throw ConfigError("truncated mode cache file");
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | buf[i];
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
}

} // namespace

void ModeCache::save(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot write " + path);
    nlohmann::ordered_json h;
    h["format"] = "spo-laurent-modes";
    h["version"] = 1;
    h["radius"] = radius_;
    h["max_mode"] = max_mode_;
    h["complete"] = complete_;
    h["edge"] = edge_;
    h["layout"] = "f64le re,im; F modes -max_mode..max_mode then 1/F modes";
    os << h.dump() << '\n';
    for (const auto* v : {&f_, &finv_})
        for (const auto& c : *v) {
            put_le(os, c.real());
            put_le(os, c.imag());
        }
}

ModeCache ModeCache::load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("cannot read " + path);
    std::string header;
    std::getline(is, header);
    nlohmann::json h;
    try {
        h = nlohmann::json::parse(header);
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigError(std::string("bad mode cache header: ") + ex.what());
    }
    if (h.value("format", "") != "spo-laurent-modes") throw ConfigError("not a mode cache file");
    ModeCache c;
    c.radius_ = h.at("radius").get<double>();
    c.max_mode_ = h.at("max_mode").get<int>();
    c.complete_ = h.at("complete").get<bool>();
    c.edge_ = h.value("edge", 0.0);
    const auto count = static_cast<std::size_t>(2 * c.max_mode_ + 1);
    for (auto* v : {&c.f_, &c.finv_}) {
        v->resize(count);
        for (auto& x : *v) {
            const double re = get_le(is);
            const double im = get_le(is);
            x = cplx(re, im);
        }
    }
    return c;
}

double kernel_fourier(const SymbolF& f, KernelFamily fam, int a, int b, ModeCache& cache, const FourierOptions& opts) {
    const int big_a = a + 1, big_b = -b - 1;
    const int lead = std::max(std::abs(big_a), std::abs(big_b)) + 1;
    if (!cache.complete() && lead > cache.max_mode()) {
        if (!opts.allow_recompute)
            throw CoefficientCacheMiss("kernel at (" + std::to_string(a) + ", " + std::to_string(b) +
                                       ") needs modes beyond " + std::to_string(cache.max_mode()));
        cache = ModeCache::compute(f, cache.radius());
    }
    const int m = cache.max_mode();
    auto fm = [&](int n) { return std::abs(n) > m ? 0.0 : cache.f(n); };
    auto gm = [&](int n) { return std::abs(n) > m ? 0.0 : cache.f_inv(n); };
    const int span = 2 * m + std::abs(big_a) + std::abs(big_b) + 2;
    double acc = 0.0;
    if (fam == KernelFamily::Sp) {
        for (int i = 1; i <= span; ++i) acc += fm(big_a + i) * gm(big_b - i);
        for (int j = 0; j <= span; ++j) acc += fm(big_a - j) * gm(big_b - j);
    } else {
        for (int i = 0; i <= span; ++i) acc += fm(big_a - 1 + i) * gm(big_b + 1 - i);
        for (int j = 0; j <= span; ++j) acc -= fm(big_a - j - 1) * gm(big_b - j + 1);
    }
    return acc;
}

double kernel_fourier(const SymbolF& f, KernelFamily fam, int a, int b) {
    ModeCache cache = ModeCache::compute(f);
    return kernel_fourier(f, fam, a, b, cache);
}

// ---------------------------------------------------------------- determinants

double correlation_det(const KernelFn& kernel, const std::vector<int>& points) {
    std::set<int> seen(points.begin(), points.end());
    if (seen.size() != points.size()) throw PreconditionViolation("correlation points must be distinct");
    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = kernel(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
    return determinant(m);
}

double fredholm_det_section(const KernelFn& kernel, int first, int size, double conjugation) {
    if (size < 0) throw PreconditionViolation("negative section size");
    Eigen::MatrixXd m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            m(i, j) = (i == j ? 1.0 : 0.0) - std::pow(conjugation, i - j) * kernel(first + i, first + j);
    return determinant(m);
}

} // namespace spo
