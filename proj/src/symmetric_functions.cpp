#include "theta/symmetric_functions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace theta {

BigInt SchurExpansion::coefficient(const Partition& nu) const {
    auto it = terms.find(nu);
    return it == terms.end() ? BigInt(0) : it->second;
}

namespace {

// Backtracking LR tableau counter. Cells are visited in reverse reading
// order: rows top to bottom, each row right to left.
class LrCounter {
public:
    LrCounter(const Partition& outer, const Partition& inner, const Partition& content)
        : outer_(outer), inner_(inner), content_(content.normalized()) {
        for (std::size_t i = 0; i < outer_.length(); ++i)
            for (int j = outer_[i] - 1; j >= inner_[i]; --j) cells_.push_back({i, j});
        filling_.resize(outer_.length());
        for (std::size_t i = 0; i < outer_.length(); ++i)
            filling_[i].assign(static_cast<std::size_t>(outer_[i]), 0);
        used_.assign(content_.size() + 1, 0);
    }

    BigInt count() {
        BigInt total = 0;
        place(0, total);
        return total;
    }

private:
    struct Cell {
        std::size_t row;
        int col;
    };

    void place(std::size_t idx, BigInt& total) {
        if (idx == cells_.size()) {
            ++total;
            return;
        }
        const auto [row, col] = cells_[idx];
        const auto c = static_cast<std::size_t>(col);
        int hi = static_cast<int>(content_.size());
        // Rows weakly increase left to right; the right neighbour is filled.
        if (col + 1 < outer_[row]) hi = std::min(hi, filling_[row][c + 1]);
        int lo = 1;
        // Columns strictly increase downward.
        if (row > 0 && col >= inner_[row - 1]) lo = filling_[row - 1][c] + 1;
        for (int v = lo; v <= hi; ++v) {
            const auto sv = static_cast<std::size_t>(v);
            if (used_[sv] >= content_[sv - 1]) continue;
            if (v > 1 && used_[sv] + 1 > used_[sv - 1]) continue;
            ++used_[sv];
            filling_[row][c] = v;
            place(idx + 1, total);
            --used_[sv];
        }
        filling_[row][c] = 0;
    }

    Partition outer_, inner_;
    std::vector<int> content_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> filling_;
    std::vector<int> used_;
};

// Removes a horizontal strip of the given size from nu in every possible
// way, accumulating SSYT counts for the remaining content.
BigInt kostka_rec(const std::vector<int>& nu, const std::vector<int>& content, std::size_t upto,
                  std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo) {
    if (upto == 0) {
        return std::all_of(nu.begin(), nu.end(), [](int p) { return p == 0; }) ? 1 : 0;
    }
    auto key = std::make_pair(nu, upto);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int strip = content[upto - 1];
    BigInt total = 0;
    std::vector<int> next = nu;
    // Row i may lose between 0 and nu[i] - nu[i+1] cells.
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == nu.size()) {
            if (left == 0) total += kostka_rec(next, content, upto - 1, memo);
            return;
        }
        const int below = i + 1 < nu.size() ? nu[i + 1] : 0;
        const int most = std::min(left, nu[i] - below);
        for (int take = 0; take <= most; ++take) {
            next[i] = nu[i] - take;
            self(self, i + 1, left - take);
        }
        next[i] = nu[i];
    };
    rec(rec, 0, strip);
    memo.emplace(std::move(key), total);
    return total;
}

void require_contained(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu))
        throw ContainmentError("skew shape " + lambda.to_string() + "/" + mu.to_string() +
                               " is undefined: inner shape not contained in outer");
}

}  // namespace

BigInt lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
    return LrCounter(lambda, mu, nu).count();
}

BigInt kostka_number(const Partition& nu, const std::vector<int>& content) {
    if (std::any_of(content.begin(), content.end(), [](int c) { return c < 0; }))
        throw ValidationError("Kostka content must be nonnegative");
    if (std::accumulate(content.begin(), content.end(), 0) != nu.size()) return 0;
    std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
    return kostka_rec(nu.normalized(), content, content.size(), memo);
}

SchurExpansion skew_schur_expand(const Partition& lambda, const Partition& mu) {
    require_contained(lambda, mu);
    const std::size_t n = lambda.length();
    SchurExpansion out;
    if (n == 0) {
        out.terms.emplace(Partition{}, 1);
        return out;
    }

    // Expand det(h_{lambda_i - mu_j - i + j}) over permutations; each term is
    // a signed product of complete homogeneous functions, keyed by the sorted
    // index multiset.
    std::map<Partition, BigInt> h_terms;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> idx;
        bool zero = false;
        for (std::size_t i = 0; i < n && !zero; ++i) {
            const std::size_t j = perm[i];
            const int e = lambda[i] - mu[j] - static_cast<int>(i) + static_cast<int>(j);
            if (e < 0) zero = true;
            else if (e > 0) idx.push_back(e);
        }
        if (zero) continue;
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        std::sort(idx.rbegin(), idx.rend());
        h_terms[Partition(idx)] += (inversions % 2 == 0) ? 1 : -1;
    } while (std::next_permutation(perm.begin(), perm.end()));

    // h_alpha = sum_nu K_{nu,alpha} s_nu.
    const int degree = lambda.size() - mu.size();
    const auto shapes = partitions_of(degree);
    std::map<Partition, BigInt> s_terms;
    for (const auto& [alpha, coeff] : h_terms) {
        if (coeff == 0) continue;
        for (const auto& nu : shapes) {
            BigInt k = kostka_number(nu, alpha.normalized());
            if (k != 0) s_terms[nu] += coeff * k;
        }
    }
    for (auto& [nu, c] : s_terms) {
        if (c < 0)
            throw std::logic_error("negative Schur coefficient in skew expansion of " +
                                   lambda.to_string() + "/" + mu.to_string());
        if (c != 0) out.terms.emplace(nu, c);
    }
    return out;
}

SchurExpansion skew_schur_expand_lr(const Partition& lambda, const Partition& mu) {
    require_contained(lambda, mu);
    SchurExpansion out;
    for (const auto& nu : partitions_of(lambda.size() - mu.size())) {
        BigInt c = lr_coefficient(mu, nu, lambda);
        if (c != 0) out.terms.emplace(nu, c);
    }
    return out;
}

std::pair<Partition, BigInt> rectangular_lr_is_delta(const Partition& mu, std::size_t r, int m) {
    Partition expected = complement_in_box(mu, r, m);
    const Partition rect(std::vector<int>(r, m));
    for (const auto& nu : partitions_of(rect.size() - mu.size())) {
        BigInt c = lr_coefficient(mu, nu, rect);
        const BigInt want = (nu == expected) ? 1 : 0;
        if (c != want)
            throw std::logic_error("N_{" + mu.to_string() + "," + nu.to_string() + "," +
                                   rect.to_string() + "} = " + c.get_str() + ", expected " +
                                   want.get_str());
    }
    return {std::move(expected), BigInt(1)};
}

}  // namespace theta
