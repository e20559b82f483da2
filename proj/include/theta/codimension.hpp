#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "theta/numeric.hpp"
#include "theta/parabolic.hpp"

namespace theta {

/// Incidence data for a Schubert locus in Flag_n(V): an r1-dimensional
/// subspace V' and a split r1 = m_1 + ... + m_{l+1} with m_i <= n_i.
class StratumDatum {
public:
    StratumDatum(int r1, std::vector<int> m, FlagType n);

    int r1() const { return r1_; }
    const std::vector<int>& m() const { return m_; }
    const FlagType& n() const { return n_; }

private:
    int r1_;
    std::vector<int> m_;
    FlagType n_;
};

/// codim of { F : dim(V' cap V_i) >= r1 - (m_1 + ... + m_i) } in Flag_n(V):
///   sum_j (n_j - m_j) (r1 - (m_1 + ... + m_j)).
std::int64_t schubert_codim(const StratumDatum& datum);

/// LHS - RHS of the weighted flag inequality
///   (sum m)(sum (n - m)) + (sum m)(sum n a)
///     >= sum_j (m_1 + ... + m_j)(n_j - m_j) + (sum n)(sum m a)
/// with weights normalized to 0 < a_1 < ... < a_{l+1} <= 1.
Rational lemma52_gap(std::span<const int> n, std::span<const int> m, std::span<const Rational> a);

struct QuotCodimBounds {
    std::int64_t ss_minus_s = 0;  ///< semistable but not stable
    std::int64_t f_minus_ss = 0;  ///< not semistable
};

/// Lower bounds (r-1)(g~-1)+1 (or (r-1)(g~-1) without parabolic points) and
/// (r-1)(g~-1)+1.
QuotCodimBounds quot_codim_bounds(int rank, int g_tilde, bool has_parabolic);

struct GpsCodimBounds {
    std::int64_t h_minus_ss = 0;
    std::int64_t nonstable = 0;
};

/// Lower bounds (r-1)g~+1 and (r-1)g~+1 (or (r-1)g~ without parabolic points).
GpsCodimBounds gps_codim_bounds(int rank, int g_tilde, bool has_parabolic);

/// dim D_{a,b} = a(r+p) + b(r+q) - a^2 - b^2 - ab, for 0 <= a <= min(p,r),
/// 0 <= b <= min(q,r), a + b <= r.
std::int64_t double_det_dim(int a, int b, int p, int q, int r);

/// r_i (r - r_i), cross-checked against r^2 - dim D_{r_i, r-r_i}.
std::int64_t complete_intersection_height(int r, int r_i);

/// r(n_{l+1} - r) + sum_{i<=l} r_i (n_i + n_{i+1}) == 0.
bool telescoping_check(const FlagType& flag);

}  // namespace theta
