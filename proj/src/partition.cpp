#include "spo/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "spo/errors.hpp"

namespace spo {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw PreconditionViolation("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw PreconditionViolation("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::operator[](int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu[i] > (*this)[i]) return false;
    return true;
}

int Partition::durfee() const {
    int d = 0;
    while (d < length() && parts_[static_cast<std::size_t>(d)] >= d + 1) ++d;
    return d;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

std::vector<FrobeniusPair> frobenius(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<FrobeniusPair> out;
    for (int i = 1; i <= lambda.durfee(); ++i) out.push_back({lambda[i] - i, conj[i] - i});
    return out;
}

Partition from_frobenius(const std::vector<FrobeniusPair>& coords) {
    const int d = static_cast<int>(coords.size());
    for (int i = 0; i < d; ++i) {
        if (coords[i].arm < 0 || coords[i].leg < 0)
            throw PreconditionViolation("Frobenius coordinates must be nonnegative");
        if (i > 0 && (coords[i].arm >= coords[i - 1].arm || coords[i].leg >= coords[i - 1].leg))
            throw PreconditionViolation("Frobenius coordinates must be strictly decreasing");
    }
    std::vector<int> parts;
    for (int i = 1; i <= d; ++i) parts.push_back(coords[i - 1].arm + i);
    // rows below the Durfee square are read off the columns b_j + j
    for (int i = d + 1;; ++i) {
        int row = 0;
        for (int j = 1; j <= d; ++j)
            if (coords[j - 1].leg + j >= i) ++row;
        if (row == 0) break;
        parts.push_back(row);
    }
    return Partition(std::move(parts));
}

std::vector<int> particle_positions(const Partition& lambda, int depth) {
    depth = std::max(depth, lambda.length());
    std::vector<int> pos;
    pos.reserve(static_cast<std::size_t>(depth));
    for (int i = 1; i <= depth; ++i) pos.push_back(lambda[i] - i);
    return pos;
}

bool occupies(const Partition& lambda, int a) {
    const int len = lambda.length();
    if (a < -len) return true;  // Fermi sea below the last row
    for (int i = 1; i <= len; ++i) {
        const int p = lambda[i] - i;
        if (p == a) return true;
        if (p < a) return false;
    }
    return false;
}

PartitionEnumerator::PartitionEnumerator(int max_size, int min_size)
    : max_size_(max_size), size_(std::max(0, min_size)) {
    if (max_size < 0) throw PreconditionViolation("max_size must be >= 0");
}

bool PartitionEnumerator::advance_within_size() {
    // reverse-lex successor: decrement the last part > 1, refill with the remainder
    int ones = 0;
    while (!current_.empty() && current_.back() == 1) {
        ++ones;
        current_.pop_back();
    }
    if (current_.empty()) return false;
    int k = --current_.back();
    int rem = ones + 1;
    while (rem > 0) {
        const int part = std::min(k, rem);
        current_.push_back(part);
        rem -= part;
    }
    return true;
}

bool PartitionEnumerator::next(Partition& out) {
    if (!started_) {
        started_ = true;
        if (size_ > max_size_) return false;
        current_ = size_ ? std::vector<int>{size_} : std::vector<int>{};
    } else if (!advance_within_size()) {
        if (++size_ > max_size_) return false;
        current_ = {size_};
    }
    out = Partition(current_);
    return true;
}

std::vector<Partition> enumerate_partitions(int max_size) {
    std::vector<Partition> out;
    PartitionEnumerator en(max_size);
    Partition p;
    while (en.next(p)) out.push_back(p);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    PartitionEnumerator en(n, n);
    Partition p;
    while (en.next(p)) out.push_back(p);
    return out;
}

std::vector<Partition> frobenius_shifted_partitions(int max_size, int leg_shift) {
    if (leg_shift != 1 && leg_shift != -1)
        throw PreconditionViolation("leg_shift must be +1 or -1");
    const int min_arm = leg_shift == 1 ? 0 : 1;
    std::vector<Partition> out;
    std::vector<FrobeniusPair> coords;
    // each hook (a | a + shift) has size 2a + shift + 1
    std::function<void(int, int)> extend = [&](int max_arm, int budget) {
        out.push_back(from_frobenius(coords));
        for (int a = min_arm; a <= max_arm; ++a) {
            const int hook = 2 * a + leg_shift + 1;
            if (hook > budget) break;
            coords.push_back({a, a + leg_shift});
            extend(a - 1, budget - hook);
            coords.pop_back();
        }
    };
    extend(max_size, max_size);
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        return x.size() != y.size() ? x.size() < y.size() : x > y;
    });
    return out;
}

} // namespace spo
