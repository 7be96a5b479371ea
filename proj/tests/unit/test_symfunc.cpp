#include <doctest.h>

#include <functional>
#include <random>

#include "helpers.hpp"
#include "spo/errors.hpp"
#include "spo/measures.hpp"
#include "spo/symfunc.hpp"

using spo::GradedScalar;
using spo::JTForm;
using spo::Partition;
using spo::Rational;
using spo::Specialization;

namespace {

// Sum over semistandard tableaux of shape lambda with entries 1..y.size().
Rational ssyt_schur(const Partition& lambda, const std::vector<Rational>& y) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i]; ++j) cells.emplace_back(i, j);
    std::vector<std::vector<int>> t(static_cast<std::size_t>(lambda.length()) + 1,
                                    std::vector<int>(static_cast<std::size_t>(lambda[1]) + 1, 0));
    Rational total = 0;
    std::function<void(std::size_t, Rational)> fill = [&](std::size_t idx, Rational w) {
        if (idx == cells.size()) {
            total += w;
            return;
        }
        auto [i, j] = cells[idx];
        int lo = 1;
        if (j > 1) lo = std::max(lo, t[i][j - 1]);
        if (i > 1) lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= static_cast<int>(y.size()); ++v) {
            t[i][j] = v;
            fill(idx + 1, w * y[static_cast<std::size_t>(v - 1)]);
        }
        t[i][j] = 0;
    };
    fill(0, 1);
    return total;
}

GradedScalar constant(const Rational& q, int d) { return GradedScalar::constant(q, d); }

} // namespace

TEST_CASE("h and e values") {
    const int d = 6;
    auto pl = Specialization::plancherel(Rational(3, 2), d);
    auto h = pl.h_values(d);
    auto e = pl.e_values(d);
    Rational fact = 1;
    for (int n = 0; n <= d; ++n) {
        if (n > 0) fact *= n;
        GradedScalar expect = GradedScalar::monomial(Rational(1) / fact, n, d);
        Rational pw = 1;
        for (int k = 0; k < n; ++k) pw *= Rational(3, 2);
        expect *= pw;
        CHECK(h[static_cast<std::size_t>(n)] == expect);
        CHECK(e[static_cast<std::size_t>(n)] == expect);
    }
    CHECK_THROWS_AS(pl.h_values(d + 1), spo::TruncationOverflow);

    auto zero = Specialization::zero(4);
    CHECK(zero.h(0) == constant(1, 4));
    CHECK(zero.h(3).is_zero());

    auto x = Specialization::alphabet({Rational(2, 3)}, 5, false);
    for (int n = 0; n <= 5; ++n) {
        Rational pw = 1;
        for (int k = 0; k < n; ++k) pw *= Rational(2, 3);
        CHECK(x.h(n) == constant(pw, 5));
    }
    CHECK(x.e(1) == constant(Rational(2, 3), 5));
    CHECK(x.e(2).is_zero());
    CHECK(x.h(-1).is_zero());

    auto bc = Specialization::bc_alphabet({{Rational(3)}, false}, 4);
    CHECK(bc.e(2) == constant(1, 4));
}

TEST_CASE("H(t)E(-t) = 1") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        auto rho = testutil::random_specialization(rng, 8);
        for (int n = 1; n <= 8; ++n) {
            GradedScalar acc(8);
            for (int k = 0; k <= n; ++k) {
                GradedScalar term = rho.h(k) * rho.e(n - k);
                if ((n - k) % 2) acc -= term;
                else acc += term;
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("schur examples") {
    auto y1 = Specialization::alphabet({Rational(5, 7)}, 3, false);
    CHECK(spo::schur(Partition{1}, y1) == constant(Rational(5, 7), 3));

    std::vector<Rational> y{Rational(1, 2), Rational(-2, 3)};
    auto y2 = Specialization::alphabet(y, 6, false);
    const Rational a = y[0], b = y[1];
    CHECK(spo::schur(Partition{2, 1}, y2) == constant(a * a * b + a * b * b, 6));

    auto zero = Specialization::zero(5);
    CHECK(spo::schur(Partition{}, zero) == constant(1, 5));
    CHECK(spo::schur(Partition{2}, zero).is_zero());
}

TEST_CASE("schur matches tableau enumeration") {
    std::vector<Rational> y{Rational(1, 2), Rational(-2, 3), Rational(3, 4)};
    auto rho = Specialization::alphabet(y, 8, false);
    for (const auto& l : spo::enumerate_partitions(6)) {
        const Rational expect = ssyt_schur(l, y);
        CHECK(spo::schur(l, rho, JTForm::H) == constant(expect, 8));
        CHECK(spo::schur(l, rho, JTForm::E) == constant(expect, 8));
    }
}

TEST_CASE("skew schur") {
    auto pl = Specialization::plancherel(Rational(2), 6);
    CHECK(spo::skew_schur(Partition{2, 1}, Partition{2, 1}, pl) == constant(1, 6));
    // two standard tableaux of shape (2,1)/(1): theta^2 * 2 / 2!
    CHECK(spo::skew_schur(Partition{2, 1}, Partition{1}, pl) == GradedScalar::monomial(4, 2, 6));
    CHECK(spo::skew_schur(Partition{2, 1}, Partition{3}, pl).is_zero());
    for (const auto& l : spo::enumerate_partitions(6)) CHECK(spo::skew_schur(l, Partition{}, pl) == spo::schur(l, pl));
}

TEST_CASE("symplectic and orthogonal characters on BC alphabets") {
    const Rational x(3, 2);
    auto bc = Specialization::bc_alphabet({{x}, false}, 6);
    CHECK(spo::sp_char(Partition{1}, bc) == constant(x + 1 / x, 6));
    CHECK(spo::sp_char(Partition{1, 1}, bc).is_zero());
    CHECK(spo::sp_char(Partition{1, 1}, bc, JTForm::E).is_zero());
    auto bco = Specialization::bc_alphabet({{x}, true}, 6);
    CHECK(spo::o_char(Partition{1}, bco) == constant(x + 1 / x + 1, 6));
    CHECK(spo::o_char(Partition{1}, bco, JTForm::E) == constant(x + 1 / x + 1, 6));
    // Sp(2) character of (2): x^2 + 1 + x^-2
    CHECK(spo::sp_char(Partition{2}, bc) == constant(x * x + 1 + 1 / (x * x), 6));
    CHECK(spo::sp_char(Partition{}, bc) == constant(1, 6));
    CHECK(spo::o_char(Partition{}, bc) == constant(1, 6));
}

TEST_CASE("Jacobi-Trudi forms, expansions and omega duality agree") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 3; ++trial) {
        auto rho = testutil::random_specialization(rng, 8);
        for (const auto& l : spo::enumerate_partitions(8)) {
            CHECK(spo::schur(l, rho, JTForm::H) == spo::schur(l, rho, JTForm::E));
            const GradedScalar sp = spo::sp_char(l, rho, JTForm::H);
            const GradedScalar o = spo::o_char(l, rho, JTForm::H);
            CHECK(sp == spo::sp_char(l, rho, JTForm::E));
            CHECK(o == spo::o_char(l, rho, JTForm::E));
            CHECK(sp == spo::sp_via_expansion(l, rho));
            CHECK(o == spo::o_via_expansion(l, rho));
            CHECK(spo::omega_dual_check(l, rho));
        }
    }
    auto pl = Specialization::plancherel(Rational(1, 3), 4);
    CHECK(spo::omega_dual_check(Partition{}, pl));
    CHECK(spo::omega_dual_check(Partition{1}, pl));
}

TEST_CASE("float Jacobi-Trudi matches exact") {
    auto rho = Specialization::graded({{1, Rational(1, 2)}, {2, Rational(-1, 3)}, {3, Rational(1, 5)}}, 12);
    for (const auto& l : spo::enumerate_partitions(7)) {
        CHECK(spo::schur_float(l, rho) == doctest::Approx(spo::schur(l, rho).evaluate(1.0)).epsilon(1e-12));
        CHECK(spo::sp_char_float(l, rho) == doctest::Approx(spo::sp_char(l, rho).evaluate(1.0)).epsilon(1e-12));
        CHECK(spo::o_char_float(l, rho) == doctest::Approx(spo::o_char(l, rho).evaluate(1.0)).epsilon(1e-12));
    }
}

TEST_CASE("truncated Cauchy identities") {
    std::mt19937 rng(99);
    const int d = 8;
    for (int trial = 0; trial < 2; ++trial) {
        auto plus = testutil::random_specialization(rng, d);
        auto minus = testutil::random_specialization(rng, d);
        GradedScalar sp_sum(d), o_sum(d);
        for (const auto& l : spo::enumerate_partitions(d)) {
            const GradedScalar s = spo::schur(l, minus);
            sp_sum += spo::sp_char(l, plus) * s;
            o_sum += spo::o_char(l, plus) * s;
        }
        CHECK(sp_sum == spo::partition_function({spo::Family::Sp, plus, minus}));
        CHECK(o_sum == spo::partition_function({spo::Family::O, plus, minus}));
    }
}

TEST_CASE("dual Cauchy identity for a BC alphabet") {
    // X = (x1, x2) with inverses, ungraded; Y = (y1, y2) graded by t.
    const int d = 8;
    const std::vector<Rational> xs{Rational(2), Rational(-1, 3)};
    const std::vector<Rational> ys{Rational(1, 2), Rational(3, 5)};
    auto x = Specialization::bc_alphabet({xs, false}, d);
    auto y = Specialization::alphabet(ys, d, true);

    GradedScalar lhs(d);
    for (const auto& l : spo::enumerate_partitions(d)) lhs += spo::sp_char(l, x) * spo::schur(l.conjugate(), y);

    // h_o(Y) E(X;Y) as a finite product
    GradedScalar rhs = constant(1, d);
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i; j < ys.size(); ++j)
            rhs *= constant(1, d) - GradedScalar::monomial(ys[i] * ys[j], 2, d);
    for (const auto& xv : xs)
        for (const auto& v : {xv, Rational(1 / xv)})
            for (const auto& yv : ys) rhs *= constant(1, d) + GradedScalar::monomial(v * yv, 1, d);
    CHECK(lhs == rhs);
}
