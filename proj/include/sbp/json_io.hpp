#pragma once

#include <string>

#include <json.hpp>

#include "sbp/enumeration.hpp"
#include "sbp/registry.hpp"

namespace sbp {

// Document formats. A monoid is either an inline {"table": [[...]],
// "labels": [...]} object or a registry name string. Maps carry explicit
// "dom"/"cod" plus a value array. Semibiproducts and action systems embed
// their carriers and value tables under fixed keys. Parse problems raise
// Error(ParseError); structural problems raise their own codes.

nlohmann::json monoid_to_json(const MonoidTable& m);
MonoidTable monoid_from_json(const nlohmann::json& j, const Registry& reg);

nlohmann::json map_to_json(const PointedMap& f, const Registry& reg);
PointedMap map_from_json(const nlohmann::json& j, const Registry& reg);
Homomorphism hom_from_json(const nlohmann::json& j, const Registry& reg);

nlohmann::json semibiproduct_to_json(const Semibiproduct& S);
Semibiproduct semibiproduct_from_json(const nlohmann::json& j,
                                      const Registry& reg);

nlohmann::json action_system_to_json(const ActionSystem& T);
ActionSystem action_system_from_json(const nlohmann::json& j,
                                     const Registry& reg);

nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json error_to_json(const Error& e);
nlohmann::json obstruction_to_json(const CompositionObstruction& o);

// Census line: inline tables replaced by registry names where they match.
nlohmann::json census_entry_to_json(const CensusEntry& e, int item,
                                    const Registry& reg);

// Reads extra registry entries from {"name": monoid-doc, ...}.
void seed_registry(Registry& reg, const nlohmann::json& j);

// Pretty document with trailing newline; the byte format every
// file-producing command emits.
std::string canonical_dump(const nlohmann::json& j);
// Compact single line with trailing newline; the JSONL item format.
std::string jsonl_dump(const nlohmann::json& j);

nlohmann::json parse_json(const std::string& text);
nlohmann::json parse_json_file(const std::string& path);

}  // namespace sbp
