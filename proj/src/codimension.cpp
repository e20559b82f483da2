#include "theta/codimension.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace theta {

StratumDatum::StratumDatum(int r1, std::vector<int> m, FlagType n)
    : r1_(r1), m_(std::move(m)), n_(std::move(n)) {
    const auto& nn = n_.multiplicities();
    if (r1_ <= 0) throw ValidationError("stratum: r1 must be positive");
    if (m_.size() != nn.size())
        throw ValidationError("stratum: m and n must have the same number of parts");
    for (std::size_t i = 0; i < m_.size(); ++i)
        if (m_[i] < 0 || m_[i] > nn[i])
            throw ValidationError("stratum: need 0 <= m_i <= n_i at position " + std::to_string(i + 1));
    if (std::accumulate(m_.begin(), m_.end(), 0) != r1_)
        throw ValidationError("stratum: m does not sum to r1");
}

std::int64_t schubert_codim(const StratumDatum& datum) {
    const auto& n = datum.n().multiplicities();
    const auto& m = datum.m();
    std::int64_t total = 0;
    std::int64_t prefix = 0;
    for (std::size_t j = 0; j < n.size(); ++j) {
        prefix += m[j];
        total += std::int64_t{n[j] - m[j]} * (datum.r1() - prefix);
    }
    return total;
}

Rational lemma52_gap(std::span<const int> n, std::span<const int> m, std::span<const Rational> a) {
    if (n.empty() || n.size() != m.size() || n.size() != a.size())
        throw ValidationError("lemma52_gap: n, m, a must be nonempty and of equal length");
    for (std::size_t j = 0; j < n.size(); ++j) {
        if (n[j] <= 0) throw ValidationError("lemma52_gap: n_j must be positive");
        if (m[j] < 0 || m[j] > n[j]) throw ValidationError("lemma52_gap: need 0 <= m_j <= n_j");
    }
    if (a.front() <= 0 || a.back() > 1)
        throw ValidationError("lemma52_gap: weights must lie in (0, 1]");
    for (std::size_t j = 0; j + 1 < a.size(); ++j)
        if (a[j] >= a[j + 1]) throw ValidationError("lemma52_gap: weights must be strictly increasing");

    BigInt sum_m = 0, sum_n = 0, sum_n_minus_m = 0, prefix_term = 0;
    Rational sum_na = 0, sum_ma = 0;
    BigInt prefix = 0;
    for (std::size_t j = 0; j < n.size(); ++j) {
        sum_m += m[j];
        sum_n += n[j];
        sum_n_minus_m += n[j] - m[j];
        prefix += m[j];
        prefix_term += prefix * (n[j] - m[j]);
        sum_na += Rational(n[j]) * a[j];
        sum_ma += Rational(m[j]) * a[j];
    }
    Rational lhs = Rational(sum_m * sum_n_minus_m) + Rational(sum_m) * sum_na;
    Rational rhs = Rational(prefix_term) + Rational(sum_n) * sum_ma;
    Rational gap = lhs - rhs;
    gap.canonicalize();
    return gap;
}

QuotCodimBounds quot_codim_bounds(int rank, int g_tilde, bool has_parabolic) {
    if (rank <= 0) throw ValidationError("rank must be positive");
    if (g_tilde < 0) throw ValidationError("genus must be nonnegative");
    const std::int64_t base = std::int64_t{rank - 1} * (g_tilde - 1);
    return {has_parabolic ? base + 1 : base, base + 1};
}

GpsCodimBounds gps_codim_bounds(int rank, int g_tilde, bool has_parabolic) {
    if (rank <= 0) throw ValidationError("rank must be positive");
    if (g_tilde < 0) throw ValidationError("genus must be nonnegative");
    const std::int64_t base = std::int64_t{rank - 1} * g_tilde;
    return {base + 1, has_parabolic ? base + 1 : base};
}

std::int64_t double_det_dim(int a, int b, int p, int q, int r) {
    if (a < 0 || b < 0 || p < 0 || q < 0 || r < 0)
        throw ValidationError("double_det_dim: arguments must be nonnegative");
    if (a > std::min(p, r) || b > std::min(q, r) || a + b > r)
        throw ValidationError("double_det_dim: need a <= min(p,r), b <= min(q,r), a + b <= r");
    const std::int64_t A = a, B = b;
    return A * (r + p) + B * (r + q) - A * A - B * B - A * B;
}

std::int64_t complete_intersection_height(int r, int r_i) {
    if (r_i < 0 || r_i > r) throw ValidationError("complete_intersection_height: need 0 <= r_i <= r");
    const std::int64_t height = std::int64_t{r_i} * (r - r_i);
    const std::int64_t ambient = std::int64_t{r} * r_i + std::int64_t{r} * (r - r_i);
    if (ambient - double_det_dim(r_i, r - r_i, r_i, r - r_i, r) != height)
        throw std::logic_error("height does not match ambient minus variety dimension");
    return height;
}

bool telescoping_check(const FlagType& flag) {
    const auto& n = flag.multiplicities();
    const auto ri = flag.partial_sums();
    const std::int64_t r = flag.rank();
    const std::size_t l = flag.steps();
    std::int64_t total = r * (n[l] - r);
    for (std::size_t i = 0; i < l; ++i) total += std::int64_t{ri[i]} * (n[i] + n[i + 1]);
    return total == 0;
}

}  // namespace theta
