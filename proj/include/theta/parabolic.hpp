#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "theta/numeric.hpp"

namespace theta {

/// Multiplicities (n_1, ..., n_{l+1}) of a flag in an r-dimensional fibre.
class FlagType {
public:
    FlagType() = default;
    explicit FlagType(std::vector<int> multiplicities);
    FlagType(std::initializer_list<int> m) : FlagType(std::vector<int>(m)) {}

    const std::vector<int>& multiplicities() const { return mult_; }
    /// l: number of proper steps, one less than the number of multiplicities.
    std::size_t steps() const { return mult_.empty() ? 0 : mult_.size() - 1; }
    int rank() const;
    /// r_i = n_1 + ... + n_i for i = 1..l+1.
    std::vector<int> partial_sums() const;

    friend bool operator==(const FlagType&, const FlagType&) = default;

private:
    std::vector<int> mult_;
};

/// Strictly increasing nonnegative integer weights (a_1, ..., a_{l+1}).
/// The upper bound a_{l+1} <= k is checked where the level is known.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<int> weights);
    WeightVector(std::initializer_list<int> w) : WeightVector(std::vector<int>(w)) {}

    const std::vector<int>& weights() const { return w_; }
    std::size_t size() const { return w_.size(); }
    /// d_i = a_{i+1} - a_i for i = 1..l.
    std::vector<int> gaps() const;
    bool bounded_by(int level) const { return w_.empty() || w_.back() <= level; }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<int> w_;
};

struct MarkedPoint {
    std::string label;
    FlagType flag;
    WeightVector weights;
    int alpha = 0;

    MarkedPoint() = default;
    MarkedPoint(std::string label, FlagType flag, WeightVector weights, int alpha);

    /// sum_{i=1}^{l} d_i * r_i for this point.
    std::int64_t flag_contribution() const;

    friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

/// Data (g, r, d, k, ell, {points}) of a moduli problem of parabolic sheaves.
class ModuliSpec {
public:
    ModuliSpec(int genus, int rank, int degree, int level, int ell, std::vector<MarkedPoint> points);

    int genus() const { return genus_; }
    int rank() const { return rank_; }
    int degree() const { return degree_; }
    int level() const { return level_; }
    int ell() const { return ell_; }
    const std::vector<MarkedPoint>& points() const { return points_; }

    /// d + r(1 - g).
    std::int64_t euler_characteristic() const;

    /// Same data on genus g - 1 with extra points appended.
    ModuliSpec with_genus_and_points(int genus, std::vector<MarkedPoint> extra) const;

    friend bool operator==(const ModuliSpec&, const ModuliSpec&) = default;

private:
    int genus_, rank_, degree_, level_, ell_;
    std::vector<MarkedPoint> points_;
};

struct StarReport {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
};

/// Evaluates both sides of the polarization balance
///   sum_x sum_i d_i(x) r_i(x) + r sum_x alpha_x + r ell = k (d + r(1 - g)).
StarReport check_star(const ModuliSpec& spec);

/// deg + (1/k) sum_x sum_i n_i(x) a_i(x).
Rational pardeg(int degree, const std::vector<MarkedPoint>& points, int level);

/// (degree - q_dim) / rank for a generalized parabolic sheaf of positive rank.
Rational gps_slope(int degree, int q_dim, int rank);

}  // namespace theta
