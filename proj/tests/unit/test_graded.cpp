#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "spo/errors.hpp"
#include "spo/graded.hpp"
#include "spo/linalg.hpp"

using spo::GradedScalar;
using spo::Rational;

namespace {

GradedScalar random_series(std::mt19937& rng, int degree, bool zero_constant) {
    GradedScalar g(degree);
    for (int k = zero_constant ? 1 : 0; k <= degree; ++k) g[k] = testutil::random_rational(rng, false);
    return g;
}

} // namespace

TEST_CASE("rational parsing") {
    CHECK(spo::parse_rational("3/2") == Rational(3, 2));
    CHECK(spo::parse_rational("-4") == Rational(-4));
    CHECK(spo::parse_rational("0.25") == Rational(1, 4));
    CHECK(spo::parse_rational("-1.5e-1") == Rational(-3, 20));
    CHECK(spo::parse_rational(" 6/4 ") == Rational(3, 2));
    CHECK_THROWS_AS(spo::parse_rational("abc"), spo::ConfigError);
    CHECK_THROWS_AS(spo::parse_rational("1.2.3"), spo::ConfigError);
}

TEST_CASE("ring operations truncate") {
    GradedScalar a = GradedScalar::monomial(1, 1, 3);  // t
    GradedScalar b = a * a * a * a;                      // t^4 = 0 mod t^4
    CHECK(b.is_zero());
    GradedScalar one_plus_t = GradedScalar::constant(1, 3) + a;
    GradedScalar inv = one_plus_t.inverse();
    CHECK(inv.coeff(3) == -1);
    CHECK(one_plus_t * inv == GradedScalar::constant(1, 3));
    GradedScalar shorter(1);
    CHECK((one_plus_t + shorter).degree() == 1);
}

TEST_CASE("exp and log1p are inverse") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        GradedScalar s = random_series(rng, 8, true);
        GradedScalar one = GradedScalar::constant(1, 8);
        CHECK(s.log1p().exp() == one + s);
        CHECK((s.exp() - one).log1p() == s);
    }
    // exp(t) coefficients are 1/k!
    GradedScalar e = GradedScalar::monomial(1, 1, 6).exp();
    CHECK(e[6] == Rational(1, 720));
    CHECK_THROWS_AS(GradedScalar::constant(1, 2).exp(), spo::PreconditionViolation);
}

TEST_CASE("polynomial exact division") {
    spo::Polynomial x({Rational(-1), Rational(1)});  // t - 1
    spo::Polynomial y({Rational(1), Rational(1)});   // t + 1
    spo::Polynomial prod = x * y;
    CHECK(prod.exact_div(x) == y);
    CHECK_THROWS_AS(y.exact_div(spo::Polynomial({Rational(0), Rational(1)})), spo::PreconditionViolation);
}

TEST_CASE("exact determinants") {
    using M = spo::DenseMatrix<Rational>;
    CHECK(spo::determinant(M{{1, 2}, {3, 4}}) == -2);
    CHECK(spo::determinant(M{{0, 1}, {1, 0}}) == -1);
    CHECK(spo::determinant(M{{0, 0}, {1, 0}}) == 0);
    CHECK(spo::determinant(M{}) == 1);

    // graded: random matrices vs cofactor expansion
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        spo::DenseMatrix<GradedScalar> g(3);
        for (auto& row : g)
            for (int j = 0; j < 3; ++j) row.push_back(random_series(rng, 5, trial % 2 == 0));
        auto c = [&](int i, int j) { return g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
        GradedScalar cofactor = c(0, 0) * (c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1)) -
                                c(0, 1) * (c(1, 0) * c(2, 2) - c(1, 2) * c(2, 0)) +
                                c(0, 2) * (c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0));
        CHECK(spo::determinant(g) == cofactor);
    }
    CHECK(spo::determinant(spo::DenseMatrix<double>{{2.0, 1.0}, {1.0, 3.0}}) == doctest::Approx(5.0));
}
