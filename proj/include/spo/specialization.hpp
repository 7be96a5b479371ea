#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spo/graded.hpp"

namespace spo {

/// Variables x_1..x_N of a BC-type alphabet. The induced specialization has
/// p_k = sum_i (x_i^k + x_i^{-k}), plus 1 when include_one is set.
struct BCAlphabet {
    std::vector<Rational> x;
    bool include_one = false;
};

/// A specialization of the ring of symmetric functions, determined by its
/// power sums. Two storage modes:
///   graded:   p_k = c_k t^k in Q[t]/t^{D+1} (so p_k vanishes for k > D),
///   constant: p_k = c_k for every k (alphabets evaluated at numbers).
/// h_n and e_n are derived through Newton's identities and memoized; the
/// memo is shared between copies and guarded by a mutex.
class Specialization {
public:
    using Coefficient = std::function<Rational(int)>;

    Specialization();  // zero specialization, D = 0

    static Specialization graded(const std::map<int, Rational>& powersums, int degree);
    static Specialization from_powersums(const std::map<int, Rational>& powersums, int degree, bool graded);
    static Specialization graded(Coefficient c, int degree);
    static Specialization constant(Coefficient c, int degree);
    static Specialization zero(int degree);
    /// p_1 = theta, all other power sums zero (graded).
    static Specialization plancherel(const Rational& theta, int degree);
    /// Ordinary alphabet y_1..y_N: p_k = sum y_i^k.
    static Specialization alphabet(const std::vector<Rational>& y, int degree, bool graded);
    static Specialization bc_alphabet(const BCAlphabet& x, int degree, bool graded = false);

    int truncation_degree() const { return degree_; }
    bool is_graded() const { return graded_; }

    /// Scalar c_k such that p_k = c_k t^k (graded) or p_k = c_k.
    Rational powersum_coefficient(int k) const;
    GradedScalar p(int k) const;

    /// h_n, e_n as elements of Q[t]/t^{D+1}; zero for n < 0. In graded mode
    /// these vanish identically for n > D.
    GradedScalar h(int n) const;
    GradedScalar e(int n) const;

    /// Checked access: throws TruncationOverflow when graded and n_max > D.
    std::vector<GradedScalar> h_values(int n_max) const;
    std::vector<GradedScalar> e_values(int n_max) const;

    /// Floating values of h_n, e_n with t = 1 and no truncation.
    double h_float(int n) const;
    double e_float(int n) const;

    /// Largest k with p_k != 0 when built from a finite power-sum map,
    /// otherwise -1 (power sums of an alphabet never stop).
    int support_bound() const;

    /// omega: p_k -> (-1)^{k-1} p_k.
    Specialization omega() const;
    /// Same power sums with a different truncation degree.
    Specialization with_degree(int degree) const;

    std::string to_json() const;

private:
    struct Cache;
    Specialization(Coefficient c, int degree, bool graded, std::optional<std::map<int, Rational>> explicit_sums);

    Coefficient coeff_;
    int degree_ = 0;
    bool graded_ = true;
    // set for specializations built from a finite power-sum map
    bool coeff_is_map_ = false;
    std::map<int, Rational> explicit_sums_;
    std::shared_ptr<Cache> cache_;
};

Specialization specialization_from_json(const std::string& text);
BCAlphabet bc_alphabet_from_json(const std::string& text);

} // namespace spo
