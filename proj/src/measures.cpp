#include "spo/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "spo/errors.hpp"
#include "spo/symfunc.hpp"

namespace spo {

Family parse_family(const std::string& name) {
    if (name == "sp") return Family::Sp;
    if (name == "o") return Family::O;
    if (name == "sp-dual" || name == "dual-sp") return Family::SpDual;
    if (name == "o-dual" || name == "dual-o") return Family::ODual;
    throw ConfigError("unknown family '" + name + "' (expected sp, o, sp-dual, o-dual)");
}

std::string to_string(Family f) {
    switch (f) {
    case Family::Sp: return "sp";
    case Family::O: return "o";
    case Family::SpDual: return "sp-dual";
    case Family::ODual: return "o-dual";
    }
    return "?";
}

namespace {

Specialization effective_minus(const MeasureSpec& spec) {
    return is_dual(spec.family) ? spec.rho_minus.omega() : spec.rho_minus;
}

double sign_2k(Family f) { return is_symplectic(f) ? 1.0 : -1.0; }

} // namespace

GradedScalar partition_function(const MeasureSpec& spec) {
    if (!spec.rho_minus.is_graded())
        throw PreconditionViolation("exact partition function needs a graded rho-");
    const int d = std::min(spec.rho_plus.truncation_degree(), spec.rho_minus.truncation_degree());
    const Specialization plus = spec.rho_plus.with_degree(d);
    const Specialization minus = effective_minus(spec).with_degree(d);
    const Rational sgn = is_symplectic(spec.family) ? 1 : -1;
    GradedScalar s(d);
    for (int k = 1; k <= d; ++k) {
        GradedScalar term = plus.p(k) * minus.p(k) * Rational(1, k);
        term -= minus.p(k) * minus.p(k) * Rational(1, 2 * k);
        if (2 * k <= d) term += minus.p(2 * k) * Rational(sgn / (2 * k));
        s += term;
    }
    return s.exp();
}

double partition_function_float(const MeasureSpec& spec) {
    const Specialization minus = effective_minus(spec);
    const double sgn = sign_2k(spec.family);
    auto term = [&](int k) {
        const double p = spec.rho_plus.powersum_coefficient(k).get_d();
        const double q = minus.powersum_coefficient(k).get_d();
        const double q2 = minus.powersum_coefficient(2 * k).get_d();
        return p * q / k + sgn * q2 / (2.0 * k) - q * q / (2.0 * k);
    };
    const int bp = spec.rho_plus.support_bound();
    const int bm = minus.support_bound();
    double s = 0.0;
    if (bp >= 0 && bm >= 0) {
        for (int k = 1; k <= std::max(bp, bm); ++k) s += term(k);
    } else {
        // alphabets: sum until the terms have been negligible for a while
        int quiet = 0;
        int k = 1;
        for (; k <= 20000 && quiet < 8; ++k) {
            const double t = term(k);
            s += t;
            quiet = std::abs(t) < 1e-18 * std::max(1.0, std::abs(s)) ? quiet + 1 : 0;
        }
        if (quiet < 8) throw DivergentNormalization("partition function series does not converge");
    }
    if (!std::isfinite(s) || s > 700.0) throw DivergentNormalization("partition function overflows");
    return std::exp(s);
}

GradedScalar raw_weight(const MeasureSpec& spec, const Partition& lambda) {
    GradedScalar c = is_symplectic(spec.family) ? sp_char(lambda, spec.rho_plus) : o_char(lambda, spec.rho_plus);
    const Partition mu = is_dual(spec.family) ? lambda.conjugate() : lambda;
    return c * schur(mu, spec.rho_minus);
}

GradedScalar weight(const MeasureSpec& spec, const Partition& lambda) {
    return raw_weight(spec, lambda) * partition_function(spec).inverse();
}

double weight_float(const MeasureSpec& spec, const Partition& lambda) {
    const double c = is_symplectic(spec.family) ? sp_char_float(lambda, spec.rho_plus)
                                                : o_char_float(lambda, spec.rho_plus);
    const Partition mu = is_dual(spec.family) ? lambda.conjugate() : lambda;
    return c * schur_float(mu, spec.rho_minus) / partition_function_float(spec);
}

GradedScalar total_mass(const MeasureSpec& spec) {
    const int d = std::min(spec.rho_plus.truncation_degree(), spec.rho_minus.truncation_degree());
    GradedScalar acc(d);
    for (const auto& lambda : enumerate_partitions(d)) acc += raw_weight(spec, lambda);
    return acc * partition_function(spec).inverse();
}

namespace {

void check_points(const std::vector<int>& points) {
    std::set<int> seen(points.begin(), points.end());
    if (seen.size() != points.size()) throw PreconditionViolation("correlation points must be distinct");
}

bool contains_all(const Partition& lambda, const std::vector<int>& points) {
    return std::all_of(points.begin(), points.end(), [&](int a) { return occupies(lambda, a); });
}

} // namespace

GradedScalar correlation_exact(const MeasureSpec& spec, const std::vector<int>& points, int cutoff) {
    check_points(points);
    const int d = std::min(spec.rho_plus.truncation_degree(), spec.rho_minus.truncation_degree());
    GradedScalar acc(d);
    PartitionEnumerator en(cutoff);
    Partition lambda;
    while (en.next(lambda))
        if (contains_all(lambda, points)) acc += raw_weight(spec, lambda);
    return acc * partition_function(spec).inverse();
}

BruteForceOracle::BruteForceOracle(MeasureSpec spec, OracleOptions opts)
    : spec_(std::move(spec)), opts_(opts), z_(partition_function_float(spec_)) {}

void BruteForceOracle::extend_to(int size) {
    if (size <= enumerated_) return;
    PartitionEnumerator en(size, enumerated_ + 1);
    Partition lambda;
    int current = enumerated_;
    while (en.next(lambda)) {
        if (static_cast<long>(parts_.size()) >= opts_.partition_budget)
            throw CutoffTooSmall("partition budget of " + std::to_string(opts_.partition_budget) +
                                 " exhausted before the correlation stabilized");
        while (current < lambda.size()) {
            size_start_.push_back(parts_.size());
            ++current;
        }
        const double c = is_symplectic(spec_.family) ? sp_char_float(lambda, spec_.rho_plus)
                                                      : o_char_float(lambda, spec_.rho_plus);
        const Partition mu = is_dual(spec_.family) ? lambda.conjugate() : lambda;
        weights_.push_back(c * schur_float(mu, spec_.rho_minus) / z_);
        parts_.push_back(lambda);
    }
    while (current < size) {
        size_start_.push_back(parts_.size());
        ++current;
    }
    enumerated_ = size;
}

double BruteForceOracle::sum_matching(const Predicate& keep, int min_size, int max_size,
                                      double* abs_sum) const {
    const std::size_t lo = size_start_[static_cast<std::size_t>(min_size)];
    const std::size_t hi = max_size + 1 <= enumerated_ ? size_start_[static_cast<std::size_t>(max_size + 1)]
                                                       : parts_.size();
    double s = 0.0, a = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        if (!keep(parts_[i])) continue;
        s += weights_[i];
        a += std::abs(weights_[i]);
    }
    if (abs_sum) *abs_sum = a;
    return s;
}

CorrelationEstimate BruteForceOracle::correlation(const std::vector<int>& points) {
    check_points(points);
    CorrelationEstimate est = accumulate([&](const Partition& l) { return contains_all(l, points); }, points);
    est.points = points;
    return est;
}

CorrelationEstimate BruteForceOracle::hole_probability(int a) {
    CorrelationEstimate est = accumulate([a](const Partition& l) { return !occupies(l, a); }, {a});
    est.points = {a};
    return est;
}

CorrelationEstimate BruteForceOracle::accumulate(const Predicate& points_match, const std::vector<int>& points) {
    CorrelationEstimate est;
    int max_abs = 0;
    for (int a : points) max_abs = std::max(max_abs, std::abs(a));
    int cutoff = opts_.cutoff > 0 ? opts_.cutoff : std::max(8, 2 * max_abs);
    extend_to(cutoff);
    // The shell is the absolute weight of every partition in the last block,
    // not only the matching ones: a point set can have no support below some
    // size, and an empty matching shell says nothing about what comes next.
    const auto any = [](const Partition&) { return true; };
    double shell = 0.0;
    double value = sum_matching(points_match, 0, cutoff, nullptr);
    sum_matching(any, cutoff, cutoff, &shell);
    if (opts_.cutoff == 0) {
        while (shell >= opts_.tolerance / 10) {
            const int next = 2 * cutoff;
            extend_to(next);
            value += sum_matching(points_match, cutoff + 1, next, nullptr);
            sum_matching(any, cutoff + 1, next, &shell);
            cutoff = next;
        }
    }
    double mass = 0.0;
    for (double w : weights_) mass += std::abs(w);
    est.value = value;
    est.cutoff = cutoff;
    // the last shell bounds the (factorially decaying) remainder; the second
    // term is the double-precision floor of the Jacobi-Trudi evaluations
    est.est_tail = shell + 64 * std::numeric_limits<double>::epsilon() * mass;
    est.partitions = static_cast<long>(parts_.size());
    return est;
}

CorrelationEstimate correlation_bruteforce(const MeasureSpec& spec, const std::vector<int>& points,
                                           const OracleOptions& opts) {
    BruteForceOracle oracle(spec, opts);
    return oracle.correlation(points);
}

} // namespace spo
