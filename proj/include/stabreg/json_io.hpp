#pragma once

#include "stabreg/group.hpp"
#include "stabreg/pair_metrics.hpp"
#include "stabreg/partition.hpp"
#include "stabreg/stability.hpp"
#include "stabreg/types.hpp"

#include <json.hpp>

namespace stabreg {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings, vertex sets as sorted member arrays.

Json to_json(const Rational& value);
Json to_json(const VertexSet& set);
Json to_json(const Ladder& ladder);
Json to_json(const PairVerdict& verdict);
Json to_json(const TypeSpectrum& spectrum);
Json to_json(const PartitionParams& params);
Json to_json(const Partition& partition);
Json to_json(const RegularityReport& report);
Json to_json(const FiniteGroup& group);
Json to_json(const CosetReport& report);

/// Hex of the signature bitmask, most significant digit first; bit i is
/// vertex i.
std::string signature_hex(const VertexSet& signature);

Rational rational_from_json(const Json& j);
VertexSet vertex_set_from_json(const Json& j, std::size_t universe);
/// Reads {exceptional, parts, params?} over a universe of n vertices.
Partition partition_from_json(const Json& j, std::size_t n);
/// Reads {order, table, name?}.
FiniteGroup group_from_json(const Json& j);

/// Parses text as JSON, rethrowing syntax errors as InputError.
Json parse_json(const std::string& text);

}  // namespace stabreg
