#include "theta/json_io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <sstream>

namespace theta {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hash_tag(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string("fnv1a64:") + buf;
}

Json bigint_to_json(const BigInt& z) {
    if (z.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t))
        return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw ValidationError("expected an integer, got " + j.dump());
}

namespace {

int get_int(const Json& obj, const char* key) {
    if (!obj.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
    const Json& v = obj.at(key);
    if (!v.is_number_integer()) throw ValidationError(std::string("field '") + key + "' must be an integer");
    const auto x = v.get<std::int64_t>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw ValidationError(std::string("field '") + key + "' is out of range");
    return static_cast<int>(x);
}

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ValidationError(std::string(what) + " must be a JSON array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ValidationError(std::string(what) + " must be a JSON array of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

Json partition_to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) { return Partition(int_array(j, "partition")); }

Json expansion_to_json(const SchurExpansion& e) {
    Json out = Json::object();
    for (const auto& [nu, c] : e.terms) out[Partition(nu.normalized()).to_string()] = bigint_to_json(c);
    return out;
}

Json point_to_json(const MarkedPoint& p) {
    return Json{{"label", p.label},
                {"flag", p.flag.multiplicities()},
                {"weights", p.weights.weights()},
                {"alpha", p.alpha}};
}

Json spec_to_json(const ModuliSpec& spec) {
    Json pts = Json::array();
    for (const auto& p : spec.points()) pts.push_back(point_to_json(p));
    return Json{{"genus", spec.genus()}, {"rank", spec.rank()},   {"degree", spec.degree()},
                {"level", spec.level()}, {"ell", spec.ell()},     {"points", pts}};
}

ModuliSpec spec_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("spec must be a JSON object");
    std::vector<MarkedPoint> points;
    if (j.contains("points")) {
        if (!j.at("points").is_array()) throw ValidationError("'points' must be an array");
        std::size_t idx = 0;
        for (const auto& p : j.at("points")) {
            ++idx;
            if (!p.is_object()) throw ValidationError("each point must be a JSON object");
            std::string label = p.contains("label") && p.at("label").is_string()
                                    ? p.at("label").get<std::string>()
                                    : "p" + std::to_string(idx);
            if (!p.contains("flag") || !p.contains("weights"))
                throw ValidationError("point '" + label + "' needs 'flag' and 'weights'");
            const int alpha = p.contains("alpha") ? get_int(p, "alpha") : 0;
            points.emplace_back(label, FlagType(int_array(p.at("flag"), "flag")),
                                WeightVector(int_array(p.at("weights"), "weights")), alpha);
        }
    }
    return ModuliSpec(get_int(j, "genus"), get_int(j, "rank"), get_int(j, "degree"),
                      get_int(j, "level"), get_int(j, "ell"), std::move(points));
}

std::string spec_hash(const ModuliSpec& spec) {
    Json j = spec_to_json(spec);
    auto& pts = j["points"];
    std::sort(pts.begin(), pts.end(),
              [](const Json& a, const Json& b) { return a["label"] < b["label"]; });
    return hash_tag(j.dump());
}

Json boundary_to_json(const BoundaryData& b) {
    return Json{{"l", b.l},
                {"jumps", b.jumps},
                {"jump_sizes", b.jump_sizes},
                {"x1", point_to_json(b.point1)},
                {"x2", point_to_json(b.point2)},
                {"x2_unreversed_weights", b.point2_unreversed_weights.weights()}};
}

Json branching_to_json(const BranchingTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows)
        rows.push_back(Json{{"mu", partition_to_json(row.mu)},
                            {"dim_left", bigint_to_json(row.dim_left)},
                            {"dim_right", bigint_to_json(row.dim_right)}});
    return Json{{"r", t.r}, {"m", t.m}, {"rows", rows}};
}

std::string branching_to_text(const BranchingTable& t) {
    std::vector<std::array<std::string, 3>> cells{{"mu", "dim_left", "dim_right"}};
    for (const auto& row : t.rows)
        cells.push_back({row.mu.to_string(), row.dim_left.get_str(), row.dim_right.get_str()});
    std::array<std::size_t, 3> width{};
    for (const auto& c : cells)
        for (std::size_t i = 0; i < 3; ++i) width[i] = std::max(width[i], c[i].size());
    std::ostringstream os;
    for (const auto& c : cells) {
        os << c[0] << std::string(width[0] - c[0].size() + 2, ' ');
        os << std::string(width[1] - c[1].size(), ' ') << c[1] << "  ";
        os << std::string(width[2] - c[2].size(), ' ') << c[2] << '\n';
    }
    return os.str();
}

Json tree_to_json(const DecompositionTree& tree) {
    Json children = Json::array();
    for (const auto& [mu, child] : tree.children)
        children.push_back(Json{{"mu", partition_to_json(mu.mu())}, {"node", tree_to_json(child)}});
    return Json{{"spec", spec_to_json(tree.spec)}, {"spec_hash", spec_hash(tree.spec)},
                {"children", children}};
}

namespace {

void csv_rows(const DecompositionTree& node, int level, const std::string& path, std::ostringstream& os) {
    if (node.is_leaf()) {
        os << level << ",\"" << path << "\"," << spec_hash(node.spec) << '\n';
        return;
    }
    for (const auto& [mu, child] : node.children) {
        const std::string next = path.empty() ? mu.mu().to_string() : path + "/" + mu.mu().to_string();
        csv_rows(child, level + 1, next, os);
    }
}

}  // namespace

std::string tree_to_csv(const DecompositionTree& tree) {
    std::ostringstream os;
    os << "level,mu_path,leaf_spec_hash\n";
    csv_rows(tree, 0, "", os);
    return os.str();
}

}  // namespace theta
