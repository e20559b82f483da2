#include "theta/parabolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace theta {

namespace {

std::string join(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

}  // namespace

FlagType::FlagType(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    if (mult_.empty()) throw ValidationError("flag type needs at least one multiplicity");
    if (std::any_of(mult_.begin(), mult_.end(), [](int n) { return n <= 0; }))
        throw ValidationError("flag multiplicities must be positive: " + join(mult_));
}

int FlagType::rank() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

std::vector<int> FlagType::partial_sums() const {
    std::vector<int> out(mult_.size());
    std::partial_sum(mult_.begin(), mult_.end(), out.begin());
    return out;
}

WeightVector::WeightVector(std::vector<int> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw ValidationError("weight vector must be nonempty");
    if (w_.front() < 0) throw ValidationError("weights must be nonnegative: " + join(w_));
    for (std::size_t i = 0; i + 1 < w_.size(); ++i)
        if (w_[i] >= w_[i + 1])
            throw ValidationError("weights must be strictly increasing: " + join(w_));
}

std::vector<int> WeightVector::gaps() const {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < w_.size(); ++i) out.push_back(w_[i + 1] - w_[i]);
    return out;
}

MarkedPoint::MarkedPoint(std::string label_, FlagType flag_, WeightVector weights_, int alpha_)
    : label(std::move(label_)), flag(std::move(flag_)), weights(std::move(weights_)), alpha(alpha_) {
    if (flag.multiplicities().size() != weights.size())
        throw ValidationError("point '" + label + "': flag has " +
                              std::to_string(flag.multiplicities().size()) + " parts but " +
                              std::to_string(weights.size()) + " weights");
    if (alpha < 0) throw ValidationError("point '" + label + "': alpha must be nonnegative");
}

std::int64_t MarkedPoint::flag_contribution() const {
    const auto d = weights.gaps();
    const auto r = flag.partial_sums();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < d.size(); ++i) total += std::int64_t{d[i]} * r[i];
    return total;
}

ModuliSpec::ModuliSpec(int genus, int rank, int degree, int level, int ell,
                       std::vector<MarkedPoint> points)
    : genus_(genus), rank_(rank), degree_(degree), level_(level), ell_(ell), points_(std::move(points)) {
    if (genus_ < 0) throw ValidationError("genus must be nonnegative");
    if (rank_ <= 0) throw ValidationError("rank must be positive");
    if (level_ <= 0) throw ValidationError("level k must be positive");
    if (ell_ <= 0) throw ValidationError("ell must be positive");
    std::set<std::string> labels;
    for (const auto& p : points_) {
        if (!labels.insert(p.label).second)
            throw ValidationError("duplicate marked point label '" + p.label + "'");
        if (p.flag.rank() != rank_)
            throw ValidationError("point '" + p.label + "': flag multiplicities sum to " +
                                  std::to_string(p.flag.rank()) + ", expected rank " +
                                  std::to_string(rank_));
        if (!p.weights.bounded_by(level_))
            throw ValidationError("point '" + p.label + "': weight exceeds level " +
                                  std::to_string(level_));
    }
}

std::int64_t ModuliSpec::euler_characteristic() const {
    return std::int64_t{degree_} + std::int64_t{rank_} * (1 - std::int64_t{genus_});
}

ModuliSpec ModuliSpec::with_genus_and_points(int genus, std::vector<MarkedPoint> extra) const {
    auto pts = points_;
    for (auto& p : extra) pts.push_back(std::move(p));
    return ModuliSpec(genus, rank_, degree_, level_, ell_, std::move(pts));
}

StarReport check_star(const ModuliSpec& spec) {
    StarReport out;
    const std::int64_t r = spec.rank();
    std::int64_t alpha_sum = 0;
    for (const auto& p : spec.points()) {
        out.lhs += p.flag_contribution();
        alpha_sum += p.alpha;
    }
    out.lhs += r * alpha_sum + r * spec.ell();
    out.rhs = std::int64_t{spec.level()} * spec.euler_characteristic();
    out.holds = out.lhs == out.rhs;
    return out;
}

Rational pardeg(int degree, const std::vector<MarkedPoint>& points, int level) {
    if (level <= 0) throw ValidationError("pardeg: level k must be positive");
    BigInt weighted = 0;
    for (const auto& p : points) {
        if (!p.weights.bounded_by(level))
            throw ValidationError("point '" + p.label + "': weight exceeds level " +
                                  std::to_string(level));
        const auto& n = p.flag.multiplicities();
        const auto& a = p.weights.weights();
        for (std::size_t i = 0; i < n.size(); ++i) weighted += BigInt(n[i]) * a[i];
    }
    return Rational(degree) + make_rational(weighted, level);
}

Rational gps_slope(int degree, int q_dim, int rank) {
    if (rank <= 0) throw ValidationError("gps_slope: rank must be positive");
    if (q_dim < 0) throw ValidationError("gps_slope: dim Q must be nonnegative");
    return make_rational(BigInt(degree) - q_dim, rank);
}

}  // namespace theta
