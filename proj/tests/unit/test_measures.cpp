#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "spo/errors.hpp"
#include "spo/measures.hpp"

using spo::Family;
using spo::GradedScalar;
using spo::MeasureSpec;
using spo::Partition;
using spo::Rational;
using spo::Specialization;

namespace {

MeasureSpec plancherel_pair(Family f, const Rational& theta, int d, spo::NumericMode mode) {
    return {f, Specialization::plancherel(2 * theta, d), Specialization::plancherel(theta, d), mode};
}

} // namespace

TEST_CASE("family names") {
    CHECK(spo::parse_family("sp") == Family::Sp);
    CHECK(spo::parse_family("dual-o") == Family::ODual);
    CHECK(spo::to_string(Family::SpDual) == "sp-dual");
    CHECK_THROWS_AS(spo::parse_family("gl"), spo::ConfigError);
}

TEST_CASE("Plancherel partition function") {
    const int d = 8;
    auto spec = plancherel_pair(Family::Sp, 1, d, spo::NumericMode::ExactGraded);
    // exp(3 t^2 / 2)
    GradedScalar expect = GradedScalar::monomial(Rational(3, 2), 2, d).exp();
    CHECK(spo::partition_function(spec) == expect);
    spec.family = Family::O;
    CHECK(spo::partition_function(spec) == expect);
    auto fl = plancherel_pair(Family::Sp, Rational(3, 10), 0, spo::NumericMode::Float);
    CHECK(spo::partition_function_float(fl) == doctest::Approx(std::exp(1.5 * 0.09)).epsilon(1e-15));
}

TEST_CASE("weights") {
    auto fl = plancherel_pair(Family::Sp, Rational(3, 10), 0, spo::NumericMode::Float);
    const double z = std::exp(1.5 * 0.09);
    CHECK(spo::weight_float(fl, Partition{}) == doctest::Approx(1 / z));
    CHECK(spo::weight_float(fl, Partition{1}) == doctest::Approx(0.6 * 0.3 / z));
}

TEST_CASE("total mass is one for all four families") {
    std::mt19937 rng(5);
    const int d = 7;
    for (Family f : {Family::Sp, Family::O, Family::SpDual, Family::ODual}) {
        MeasureSpec spec{f, testutil::random_specialization(rng, d), testutil::random_specialization(rng, d)};
        CHECK(spo::total_mass(spec) == GradedScalar::constant(1, d));
    }
}

TEST_CASE("brute-force oracle basics") {
    MeasureSpec trivial{Family::Sp, Specialization::zero(0), Specialization::zero(0), spo::NumericMode::Float};
    CHECK(spo::correlation_bruteforce(trivial, {}).value == doctest::Approx(1.0));
    CHECK(spo::correlation_bruteforce(trivial, {-1}).value == doctest::Approx(1.0));
    CHECK(spo::correlation_bruteforce(trivial, {0}).value == doctest::Approx(0.0));
    CHECK_THROWS_AS(spo::correlation_bruteforce(trivial, {1, 1}), spo::PreconditionViolation);

    for (Family f : {Family::Sp, Family::O}) {
        spo::BruteForceOracle oracle(plancherel_pair(f, Rational(2, 5), 0, spo::NumericMode::Float));
        const auto empty = oracle.correlation({});
        CHECK(empty.value == doctest::Approx(1.0).epsilon(1e-9));
        for (int a = -12; a <= 8; ++a) {
            const auto occ = oracle.correlation({a});
            const auto hole = oracle.hole_probability(a);
            CHECK(occ.value + hole.value == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(occ.est_tail < 1e-7);
        }
        CHECK(oracle.correlation({-20}).value == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(oracle.correlation({8}).value) < 1e-9);
    }
}

TEST_CASE("oracle does not stop on an empty first shell") {
    // sites 2 and 4 are both occupied only once |lambda| >= 9
    const MeasureSpec spec = plancherel_pair(Family::O, Rational(2, 5), 0, spo::NumericMode::Float);
    spo::BruteForceOracle adaptive(spec);
    const auto est = adaptive.correlation({2, 4});
    CHECK(est.cutoff > 8);
    CHECK(est.value != 0.0);
    spo::OracleOptions fixed;
    fixed.cutoff = 40;
    const auto deep = spo::correlation_bruteforce(spec, {2, 4}, fixed);
    CHECK(std::abs(est.value - deep.value) <= est.est_tail);
}

TEST_CASE("oracle budget") {
    spo::OracleOptions opts;
    opts.partition_budget = 100;
    MeasureSpec spec{Family::Sp, Specialization::plancherel(4, 0), Specialization::plancherel(2, 0),
                     spo::NumericMode::Float};
    CHECK_THROWS_AS(spo::correlation_bruteforce(spec, {0}, opts), spo::CutoffTooSmall);
}

TEST_CASE("exact correlations match the float oracle") {
    // graded weights evaluated at t = 1 converge to the float oracle as D grows
    const int d = 14;
    auto exact = plancherel_pair(Family::O, Rational(1, 5), d, spo::NumericMode::ExactGraded);
    auto fl = exact;
    fl.mode = spo::NumericMode::Float;
    const double val = spo::correlation_exact(exact, {0}, d).evaluate(1.0);
    CHECK(val == doctest::Approx(spo::correlation_bruteforce(fl, {0}).value).epsilon(1e-8));
}
