#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace spo {

/// Integer partition stored as its nonzero parts in weakly decreasing order.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    /// 1-based part access with implicit trailing zeros.
    int operator[](int i) const;

    Partition conjugate() const;
    bool contains(const Partition& mu) const;
    int durfee() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

struct FrobeniusPair {
    int arm;  // a_i = lambda_i - i
    int leg;  // b_i = lambda'_i - i
    friend bool operator==(const FrobeniusPair&, const FrobeniusPair&) = default;
};

std::vector<FrobeniusPair> frobenius(const Partition& lambda);
Partition from_frobenius(const std::vector<FrobeniusPair>& coords);

/// Particle positions lambda_i - i for i = 1..depth (depth >= length()).
std::vector<int> particle_positions(const Partition& lambda, int depth);

/// True when site `a` of the lattice {lambda_i - i : i >= 1} is occupied.
bool occupies(const Partition& lambda, int a);

/// Streams every partition of size <= max_size: ascending size, then
/// reverse-lexicographic parts, e.g. (3), (2,1), (1,1,1).
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int max_size, int min_size = 0);
    bool next(Partition& out);

private:
    bool advance_within_size();

    int max_size_;
    int size_;
    bool started_ = false;
    std::vector<int> current_;
};

std::vector<Partition> enumerate_partitions(int max_size);
std::vector<Partition> partitions_of(int n);

/// Partitions whose Frobenius coordinates are (a_1, a_2, ... | a_1 + leg_shift, ...)
/// with `leg_shift` = +1 (symplectic family) or -1 (orthogonal family), size <= max_size.
std::vector<Partition> frobenius_shifted_partitions(int max_size, int leg_shift);

} // namespace spo
