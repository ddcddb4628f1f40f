#pragma once

#include <json.hpp>

#include "qembed/embed.hpp"
#include "qembed/geom.hpp"

namespace qembed {

using nlohmann::json;

// Group files: {"kind":"cayley","order":n,"table":[[...]],"labels":[...]}
//          or  {"kind":"perm","degree":d,"generators":[[...],[...]]}
json group_to_json(const GroupPtr& g);
GroupPtr group_from_json(const json& j);

// Quandle files: {"order":n,"table":[[...]],"labels":[...]}
json quandle_to_json(const FiniteQuandle& q);
QuandlePtr quandle_from_json(const json& j);

json subgroup_to_json(const Subgroup& h);              // {"members":[...]}
Subgroup subgroup_from_json(const json& j, const GroupPtr& g);

json automorphism_to_json(const GroupAutomorphism& a); // {"image":[...]}
GroupAutomorphism automorphism_from_json(const json& j, const GroupPtr& g);

// Triplet files: {"group":...,"subgroup":...,"automorphism":...}
json triplet_to_json(const QuandleTriplet& t);
QuandleTriplet triplet_from_json(const json& j);

json map_to_json(const QuandleMap& m);                 // {"image":[...]}

// Clifford elements as sparse maps: {"n":3,"coeffs":{"6":1.0}} with decimal
// blade bitmask keys.
json clifford_to_json(const CliffordElement& e);
CliffordElement clifford_from_json(const json& j);

// {"verdict":...,"modulus":...,"witness_q":...,"collision":[i,j]|null,
//  "target_group":{...},"map":[...]}
json report_to_json(const EmbeddingReport& r);

json bergman_to_json(const BergmanReport& r);
json axiom_report_to_json(const AxiomReport& r);
json geom_report_to_json(const GeomReport& r);

/// Plain-text rendering of the same object tree.
std::string render_text(const json& j);

json load_json_file(const std::string& path);

} // namespace qembed
