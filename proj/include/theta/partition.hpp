#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "theta/numeric.hpp"

namespace theta {

/// A weakly decreasing sequence of nonnegative integers.
///
/// The parts are kept exactly as supplied, so a partition built as
/// (2,1,0) still reports a declared length of three; equality, ordering and
/// hashing all look only at the nonzero parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parts as supplied, including any trailing zeros.
    const std::vector<int>& parts() const { return parts_; }
    /// Parts with trailing zeros dropped.
    std::vector<int> normalized() const;

    std::size_t declared_length() const { return parts_.size(); }
    /// Number of nonzero parts.
    std::size_t length() const;
    /// Sum of the parts.
    int size() const;
    bool empty() const { return size() == 0; }

    /// i-th part (0-based); zero past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Pads with zeros (or trims zeros) to exactly n parts.
    Partition padded(std::size_t n) const;
    Partition conjugate() const;
    /// Componentwise containment of Young diagrams.
    bool contains(const Partition& other) const;
    bool fits_in_box(std::size_t rows, int cols) const;

    /// "[3,2,1]" using the declared parts.
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.normalized() == b.normalized();
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.normalized() <=> b.normalized();
    }

private:
    std::vector<int> parts_;
};

/// dim S_lambda(C^n) by the hook-content formula; zero when lambda has more
/// than n nonzero parts.
BigInt dim_schur(const Partition& lambda, int n);

/// (m - mu_r, ..., m - mu_1) for mu inside the r x m box.
Partition complement_in_box(const Partition& mu, std::size_t r, int m);

/// Every partition with at most r parts, each at most m, padded to r parts
/// and listed in lexicographically increasing order of the padded sequence.
std::vector<Partition> enumerate_in_box(std::size_t r, int m);

/// All partitions of n, in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

}  // namespace theta
