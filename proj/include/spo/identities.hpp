#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spo/measures.hpp"
#include "spo/toeplitz_hankel.hpp"

namespace spo {

struct IdentityResult {
    std::string name;
    int degree = 0;
    bool passed = false;
    std::string detail;
};

/// Random graded specialization with p_k = n/d, n in [-5, 5], d in [1, 4],
/// p_1..p_3 nonzero. Uses the raw mt19937_64 stream so results do not depend
/// on the standard library's distributions.
Specialization random_specialization(std::uint64_t seed, int degree);

/// sum_{|lambda| <= D} sp/o_lambda(rho+) s_lambda(rho-) == Z, modulo t^{D+1}.
IdentityResult cauchy_identity(Family family, const Specialization& plus, const Specialization& minus);
/// sum_lambda sp_lambda(X) s_{lambda'}(Y) == h_o(Y) E(X; Y) for a BC alphabet X
/// and an ordinary alphabet Y (graded by t).
IdentityResult dual_cauchy_identity(const BCAlphabet& x, const std::vector<Rational>& y, int degree);
/// h-form == e-form for s, sp, o and the Frobenius-shifted expansions, |lambda| <= D.
IdentityResult jacobi_trudi_identity(const Specialization& rho);
/// sp_lambda(rho) == o_{lambda'}(omega rho), |lambda| <= D.
IdentityResult omega_identity(const Specialization& rho);
IdentityResult gessel_identity(const Symbol& sym, THDet which, int size, int degree);

struct IdentitySuiteConfig {
    int degree = 8;
    int trials = 5;
    int max_size = 4;
    std::uint64_t seed = 1;
    // replace the random pairs when both are set
    std::optional<Specialization> plus, minus;
};

std::vector<IdentityResult> run_identity_suite(const IdentitySuiteConfig& cfg);

} // namespace spo
