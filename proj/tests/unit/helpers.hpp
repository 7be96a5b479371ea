#pragma once

#include <map>
#include <random>

#include "spo/graded.hpp"
#include "spo/specialization.hpp"

namespace testutil {

inline spo::Rational random_rational(std::mt19937& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    int n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    spo::Rational q(n, den(rng));
    q.canonicalize();
    return q;
}

/// Graded specialization with random p_1..p_D; p_1..p_3 are never zero.
inline spo::Specialization random_specialization(std::mt19937& rng, int degree) {
    std::map<int, spo::Rational> sums;
    for (int k = 1; k <= degree; ++k) {
        spo::Rational q = random_rational(rng, k <= 3);
        if (q != 0) sums[k] = q;
    }
    return spo::Specialization::graded(sums, degree);
}

} // namespace testutil
