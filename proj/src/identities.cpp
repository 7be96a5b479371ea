#include "spo/identities.hpp"

#include <random>

#include "spo/errors.hpp"
#include "spo/partition.hpp"
#include "spo/symfunc.hpp"

namespace spo {

Specialization random_specialization(std::uint64_t seed, int degree) {
    std::mt19937_64 rng(seed);
    std::map<int, Rational> sums;
    for (int k = 1; k <= degree; ++k) {
        long num = static_cast<long>(rng() % 11) - 5;
        while (k <= 3 && num == 0) num = static_cast<long>(rng() % 11) - 5;
        const long den = static_cast<long>(rng() % 4) + 1;
        Rational q(num, den);
        q.canonicalize();
        if (q != 0) sums[k] = q;
    }
    return Specialization::graded(sums, degree);
}

namespace {

std::string pair_label(const Specialization& plus, const Specialization& minus) {
    return "plus=" + plus.to_json() + " minus=" + minus.to_json();
}

} // namespace

IdentityResult cauchy_identity(Family family, const Specialization& plus, const Specialization& minus) {
    if (is_dual(family)) throw PreconditionViolation("use dual_cauchy_identity for dual families");
    const int d = std::min(plus.truncation_degree(), minus.truncation_degree());
    GradedScalar sum(d);
    for (const Partition& lambda : enumerate_partitions(d)) {
        const GradedScalar c = family == Family::Sp ? sp_char(lambda, plus) : o_char(lambda, plus);
        sum += c * schur(lambda, minus);
    }
    const GradedScalar z = partition_function({family, plus, minus, NumericMode::ExactGraded});
    IdentityResult r{"cauchy-" + to_string(family), d, sum == z, pair_label(plus, minus)};
    if (!r.passed) r.detail += " sum=" + sum.to_string() + " Z=" + z.to_string();
    return r;
}

IdentityResult dual_cauchy_identity(const BCAlphabet& x, const std::vector<Rational>& y, int degree) {
    const Specialization xs = Specialization::bc_alphabet(x, degree, false);
    const Specialization ys = Specialization::alphabet(y, degree, true);
    GradedScalar lhs(degree);
    for (const Partition& lambda : enumerate_partitions(degree)) lhs += sp_char(lambda, xs) * schur(lambda.conjugate(), ys);
    // h_o(Y) = prod_{i <= j} (1 - y_i y_j t^2); E(X; Y) = prod (1 + x^{±1} y t)
    const GradedScalar one = GradedScalar::constant(1, degree);
    GradedScalar rhs = one;
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = i; j < y.size(); ++j) rhs *= one - GradedScalar::monomial(y[i] * y[j], 2, degree);
    for (const Rational& v : x.x)
        for (const Rational& w : {v, Rational(1 / v)})
            for (const Rational& u : y) rhs *= one + GradedScalar::monomial(w * u, 1, degree);
    if (x.include_one)
        for (const Rational& u : y) rhs *= one + GradedScalar::monomial(u, 1, degree);
    return {"dual-cauchy-sp", degree, lhs == rhs, "x=" + std::to_string(x.x.size()) + " y=" + std::to_string(y.size())};
}

IdentityResult jacobi_trudi_identity(const Specialization& rho) {
    const int d = rho.truncation_degree();
    for (const Partition& lambda : enumerate_partitions(d)) {
        const GradedScalar sp = sp_char(lambda, rho, JTForm::H);
        const GradedScalar o = o_char(lambda, rho, JTForm::H);
        const bool ok = schur(lambda, rho, JTForm::H) == schur(lambda, rho, JTForm::E) &&
                        sp == sp_char(lambda, rho, JTForm::E) && o == o_char(lambda, rho, JTForm::E) &&
                        sp == sp_via_expansion(lambda, rho) && o == o_via_expansion(lambda, rho);
        if (!ok) return {"jacobi-trudi", d, false, "first mismatch at " + lambda.to_string()};
    }
    return {"jacobi-trudi", d, true, rho.to_json()};
}

IdentityResult omega_identity(const Specialization& rho) {
    const int d = rho.truncation_degree();
    for (const Partition& lambda : enumerate_partitions(d))
        if (!omega_dual_check(lambda, rho)) return {"omega-duality", d, false, "first mismatch at " + lambda.to_string()};
    return {"omega-duality", d, true, rho.to_json()};
}

IdentityResult gessel_identity(const Symbol& sym, THDet which, int size, int degree) {
    const auto sides = gessel_sides(sym, which, size, degree);
    IdentityResult r{"gessel-" + to_string(which) + "-n" + std::to_string(size), degree,
                     sides.det_side == sides.sum_side, pair_label(sym.plus(), sym.minus())};
    if (!r.passed) r.detail += " det=" + sides.det_side.to_string() + " sum=" + sides.sum_side.to_string();
    return r;
}

std::vector<IdentityResult> run_identity_suite(const IdentitySuiteConfig& cfg) {
    if (cfg.degree < 0 || cfg.trials < 0 || cfg.max_size < 0) throw ConfigError("degree, trials and max_size must be >= 0");
    const int d = cfg.degree;
    std::vector<std::pair<Specialization, Specialization>> pairs;
    if (cfg.plus && cfg.minus) {
        pairs.emplace_back(cfg.plus->with_degree(d), cfg.minus->with_degree(d));
    } else {
        for (int t = 0; t < cfg.trials; ++t)
            pairs.emplace_back(random_specialization(cfg.seed + 2 * static_cast<std::uint64_t>(t), d),
                               random_specialization(cfg.seed + 2 * static_cast<std::uint64_t>(t) + 1, d));
    }
    std::vector<IdentityResult> out;
    for (const auto& [plus, minus] : pairs) {
        out.push_back(cauchy_identity(Family::Sp, plus, minus));
        out.push_back(cauchy_identity(Family::O, plus, minus));
    }
    out.push_back(dual_cauchy_identity({{Rational(2), Rational(-1, 3)}, false}, {Rational(1, 2), Rational(3, 5)}, d));
    for (const auto& [plus, minus] : pairs) {
        (void)minus;
        out.push_back(jacobi_trudi_identity(plus));
        out.push_back(omega_identity(plus));
    }
    std::vector<Symbol> symbols{Symbol::plancherel(1, d)};
    for (const auto& [plus, minus] : pairs) symbols.emplace_back(plus, minus);
    for (const Symbol& sym : symbols)
        for (THDet which : {THDet::D1, THDet::D2, THDet::D3, THDet::D4})
            for (int n = 1; n <= cfg.max_size; ++n) out.push_back(gessel_identity(sym, which, n, d));
    return out;
}

} // namespace spo
