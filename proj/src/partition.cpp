#include "theta/partition.hpp"

#include <algorithm>
#include <numeric>

namespace theta {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw ValidationError("partition has a negative part: " + to_string());
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw ValidationError("partition parts are not weakly decreasing: " + to_string());
    }
}

std::vector<int> Partition::normalized() const {
    std::vector<int> out(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(length()));
    return out;
}

std::size_t Partition::length() const {
    std::size_t n = parts_.size();
    while (n > 0 && parts_[n - 1] == 0) --n;
    return n;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::padded(std::size_t n) const {
    if (length() > n)
        throw BoxViolation("cannot pad " + to_string() + " to " + std::to_string(n) + " parts");
    std::vector<int> out(n, 0);
    std::copy_n(parts_.begin(), std::min(n, parts_.size()), out.begin());
    return Partition(std::move(out));
}

Partition Partition::conjugate() const {
    std::vector<int> out(static_cast<std::size_t>(parts_.empty() ? 0 : parts_.front()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& other) const {
    for (std::size_t i = 0; i < other.length(); ++i)
        if (other[i] > (*this)[i]) return false;
    return true;
}

bool Partition::fits_in_box(std::size_t rows, int cols) const {
    return length() <= rows && (*this)[0] <= cols;
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

BigInt dim_schur(const Partition& lambda, int n) {
    if (n < 0) throw ValidationError("dim_schur: negative number of variables");
    if (lambda.length() > static_cast<std::size_t>(n)) return 0;
    const Partition conj = lambda.conjugate();
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            const int content = j - static_cast<int>(i);
            const int hook = (lambda[i] - j) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i)) - 1;
            num *= n + content;
            den *= hook;
        }
    }
    return num / den;
}

Partition complement_in_box(const Partition& mu, std::size_t r, int m) {
    if (m < 0) throw BoxViolation("box width must be nonnegative");
    if (!mu.fits_in_box(r, m))
        throw BoxViolation("partition " + mu.to_string() + " is outside the " + std::to_string(r) +
                           "x" + std::to_string(m) + " box");
    std::vector<int> out(r);
    for (std::size_t i = 0; i < r; ++i) out[i] = m - mu[r - 1 - i];
    return Partition(std::move(out));
}

std::vector<Partition> enumerate_in_box(std::size_t r, int m) {
    std::vector<Partition> out;
    if (m < 0) return out;
    std::vector<int> cur(r, 0);
    // Odometer over weakly decreasing sequences, least significant part last.
    auto fill = [&](auto&& self, std::size_t i, int cap) -> void {
        if (i == r) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    fill(fill, 0, m);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(cap, remaining); v >= 1; --v) {
            cur.push_back(v);
            self(self, remaining - v, v);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace theta
