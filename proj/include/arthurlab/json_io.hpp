#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "arthurlab/arthur_param.hpp"
#include "arthurlab/ems.hpp"
#include "arthurlab/l_param.hpp"
#include "arthurlab/labels.hpp"
#include "arthurlab/ldata.hpp"
#include "arthurlab/operators.hpp"
#include "arthurlab/segment.hpp"
#include "arthurlab/vogan.hpp"

namespace arthurlab {

// Insertion-ordered JSON so every emitter below is byte-stable: encoding a
// decoded document reproduces it exactly (objects are emitted with the fixed
// field orders used here, numbers are plain ints, half-integers are strings).
using json = nlohmann::ordered_json;

// Labels encode as {"name","dim","type"}; only self-dual labels have a JSON
// form (encoding a paired label throws InvariantBroken).
json label_to_json(const SupercuspidalLabel& rho);
SupercuspidalLabel label_from_json(const json& j);

// {"group","summands":[{"rho","a","b"}...]}
json param_to_json(const LocalArthurParameter& psi);
LocalArthurParameter param_from_json(const json& j);

// {"group","summands":[{"rho","x","a"}...]} with x a half-integer string
json lparam_to_json(const LocalLParameter& phi);
LocalLParameter lparam_from_json(const json& j);

// {"group","blocks":[{"rho","rows":[{"A","B","l","eta"}...]}...]}
json ems_to_json(const ExtendedMultiSegment& ems);
ExtendedMultiSegment ems_from_json(const json& j);

// {"rho","x","y"}; a list encodes as a JSON array
json segment_to_json(const Segment& s);
Segment segment_from_json(const json& j);
json segments_to_json(const std::vector<Segment>& segs);
std::vector<Segment> segments_from_json(const json& j);

// {"group","segments":[...],"tempered":[{"rho","a","sign"}...]}
json ldata_to_json(const LanglandsData& pi);
LanglandsData ldata_from_json(const json& j);

// Rank triangles travel as their row string, e.g. "1 1 1 / 3 1 / 1".
json triangle_to_json(const RankTriangle& t);
RankTriangle triangle_from_json(const json& j);

// Output-only conversions used by the CLI's --format json.
json descriptor_to_json(const OperatorDescriptor& op);
json validation_to_json(const ValidationReport& rep);
json ems_validation_to_json(const EmsValidation& rep);

std::string dump_json(const json& j);  // 2-space indent, trailing newline

}  // namespace arthurlab
