#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "theta/branching.hpp"
#include "theta/factorization.hpp"
#include "theta/parabolic.hpp"
#include "theta/partition.hpp"
#include "theta/symmetric_functions.hpp"

namespace theta {

using Json = nlohmann::json;

/// 64-bit FNV-1a; stable across platforms and runs.
std::uint64_t fnv1a64(std::string_view bytes);
/// "fnv1a64:" followed by 16 lowercase hex digits.
std::string hash_tag(std::string_view bytes);

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
Json bigint_to_json(const BigInt& z);
BigInt bigint_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"[2,1]": 1, ...} with normalized partition keys.
Json expansion_to_json(const SchurExpansion& e);

Json spec_to_json(const ModuliSpec& spec);
ModuliSpec spec_from_json(const Json& j);
/// Hash of the spec with points sorted by label, so it ignores point order.
std::string spec_hash(const ModuliSpec& spec);

Json point_to_json(const MarkedPoint& p);
Json boundary_to_json(const BoundaryData& b);

Json branching_to_json(const BranchingTable& t);
/// Aligned columns: mu, dim_left, dim_right.
std::string branching_to_text(const BranchingTable& t);

Json tree_to_json(const DecompositionTree& tree);
/// One row per leaf: level, mu path, leaf spec hash.
std::string tree_to_csv(const DecompositionTree& tree);

}  // namespace theta
