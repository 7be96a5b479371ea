#include <doctest.h>

#include <set>

#include "spo/errors.hpp"
#include "spo/partition.hpp"

using spo::Partition;

namespace {

// Euler's pentagonal recurrence, independent of the enumerator.
std::vector<long> partition_numbers(int n) {
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const long sgn = (k % 2) ? 1 : -1;
            acc += sgn * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) acc += sgn * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p;
}

} // namespace

TEST_CASE("partition validation and accessors") {
    Partition l{3, 1, 0, 0};
    CHECK(l.length() == 2);
    CHECK(l.size() == 4);
    CHECK(l[1] == 3);
    CHECK(l[3] == 0);
    CHECK_THROWS_AS(Partition({1, 2}), spo::PreconditionViolation);
    CHECK_THROWS_AS(Partition({2, -1}), spo::PreconditionViolation);
}

TEST_CASE("conjugate") {
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{2, 2}.conjugate() == Partition{2, 2});
    for (const auto& l : spo::enumerate_partitions(9)) CHECK(l.conjugate().conjugate() == l);
}

TEST_CASE("frobenius coordinates") {
    using FP = spo::FrobeniusPair;
    CHECK(spo::frobenius(Partition{1}) == std::vector<FP>{{0, 0}});
    // rows (2,2): a = (2-1, 2-2), legs from the conjugate (2,2) likewise
    CHECK(spo::frobenius(Partition{2, 2}) == std::vector<FP>{{1, 1}, {0, 0}});
    CHECK(spo::frobenius(Partition{3, 1, 1}) == std::vector<FP>{{2, 2}});
    for (const auto& l : spo::enumerate_partitions(10)) {
        auto f = spo::frobenius(l);
        int size = 0;
        for (const auto& c : f) {
            CHECK(c.arm >= 0);
            CHECK(c.leg >= 0);
            size += c.arm + c.leg + 1;
        }
        CHECK(size == l.size());
        CHECK(spo::from_frobenius(f) == l);
    }
}

TEST_CASE("enumeration counts and order") {
    CHECK(spo::enumerate_partitions(0).size() == 1);
    CHECK(spo::enumerate_partitions(4).size() == 12);
    CHECK(spo::enumerate_partitions(10).size() == 139);
    const auto p = partition_numbers(20);
    for (int n = 0; n <= 20; ++n) CHECK(static_cast<long>(spo::partitions_of(n).size()) == p[static_cast<std::size_t>(n)]);

    auto all = spo::enumerate_partitions(6);
    std::set<std::vector<int>> seen;
    for (const auto& l : all) CHECK(seen.insert(l.parts()).second);
    const auto four = spo::partitions_of(4);
    CHECK(four[0] == Partition{4});
    CHECK(four[1] == Partition{3, 1});
    CHECK(four[2] == Partition{2, 2});
    CHECK(four[3] == Partition{2, 1, 1});
    CHECK(four[4] == Partition{1, 1, 1, 1});
}

TEST_CASE("particle positions and occupancy") {
    Partition l{2, 1};
    CHECK(spo::particle_positions(l, 4) == std::vector<int>{1, -1, -3, -4});
    CHECK(spo::occupies(l, 1));
    CHECK_FALSE(spo::occupies(l, 0));
    CHECK(spo::occupies(l, -1));
    CHECK_FALSE(spo::occupies(l, -2));
    CHECK(spo::occupies(l, -3));
    CHECK(spo::occupies(Partition{}, -1));
    CHECK_FALSE(spo::occupies(Partition{}, 0));
}

TEST_CASE("frobenius-shifted families") {
    auto alphas = spo::frobenius_shifted_partitions(6, +1);
    CHECK(alphas[0] == Partition{});
    CHECK(alphas[1] == Partition{1, 1});
    CHECK(alphas[2] == Partition{2, 1, 1});
    for (const auto& a : alphas) {
        for (const auto& c : spo::frobenius(a)) CHECK(c.leg == c.arm + 1);
    }
    auto betas = spo::frobenius_shifted_partitions(6, -1);
    CHECK(betas[1] == Partition{2});
    for (const auto& b : betas) {
        for (const auto& c : spo::frobenius(b)) CHECK(c.leg == c.arm - 1);
    }
}
