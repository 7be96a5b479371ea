#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spo/graded.hpp"
#include "spo/partition.hpp"
#include "spo/specialization.hpp"

namespace spo {

enum class Family { Sp, O, SpDual, ODual };
enum class NumericMode { ExactGraded, Float };

Family parse_family(const std::string& name);
std::string to_string(Family f);
inline bool is_symplectic(Family f) { return f == Family::Sp || f == Family::SpDual; }
inline bool is_dual(Family f) { return f == Family::SpDual || f == Family::ODual; }

struct MeasureSpec {
    Family family = Family::Sp;
    Specialization rho_plus;
    Specialization rho_minus;
    NumericMode mode = NumericMode::ExactGraded;
};

/// Lifted Cauchy normalizations. With p_k = p_k(rho+), q_k = p_k(rho-):
///   Z_sp  = exp sum_k ( p_k q_k / k + q_{2k} / 2k - q_k^2 / 2k ),
///   Z_o   = same with -q_{2k};
///   dual families use rho- -> omega(rho-) in these formulas.
GradedScalar partition_function(const MeasureSpec& spec);
/// Float value at t = 1; DivergentNormalization when the exponent series
/// does not settle.
double partition_function_float(const MeasureSpec& spec);

/// Unnormalized weight sp/o_lambda(rho+) s_lambda(rho-) (lambda' in the
/// Schur factor for dual families).
GradedScalar raw_weight(const MeasureSpec& spec, const Partition& lambda);
GradedScalar weight(const MeasureSpec& spec, const Partition& lambda);
double weight_float(const MeasureSpec& spec, const Partition& lambda);

/// Sum of exact weights over |lambda| <= D; 1 modulo t^{D+1}.
GradedScalar total_mass(const MeasureSpec& spec);

/// Exact correlation truncated to |lambda| <= cutoff (graded mode).
GradedScalar correlation_exact(const MeasureSpec& spec, const std::vector<int>& points, int cutoff);

struct CorrelationEstimate {
    std::vector<int> points;
    double value = 0.0;
    int cutoff = 0;
    double est_tail = 0.0;
    long partitions = 0;
};

struct OracleOptions {
    double tolerance = 1e-7;
    long partition_budget = 1000000;
    // 0 selects the adaptive cutoff; otherwise the enumeration stops at |lambda| = cutoff
    int cutoff = 0;
};

/// Brute-force correlation functions of a float-mode measure. Enumerated
/// weights are kept so several point sets can share one enumeration.
class BruteForceOracle {
public:
    explicit BruteForceOracle(MeasureSpec spec, OracleOptions opts = {});

    CorrelationEstimate correlation(const std::vector<int>& points);
    /// Probability that site `a` is empty, summed directly over the
    /// partitions that leave it empty.
    CorrelationEstimate hole_probability(int a);

private:
    using Predicate = std::function<bool(const Partition&)>;
    void extend_to(int size);
    double sum_matching(const Predicate& keep, int min_size, int max_size, double* abs_sum) const;
    CorrelationEstimate accumulate(const Predicate& keep, const std::vector<int>& points);

    MeasureSpec spec_;
    OracleOptions opts_;
    double z_ = 1.0;
    int enumerated_ = -1;
    std::vector<Partition> parts_;
    std::vector<double> weights_;
    std::vector<std::size_t> size_start_;  // first index of each size
};

CorrelationEstimate correlation_bruteforce(const MeasureSpec& spec, const std::vector<int>& points,
                                           const OracleOptions& opts = {});

} // namespace spo
