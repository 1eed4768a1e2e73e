#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ara/verify.hpp"

namespace ara {

using Json = nlohmann::json;

// File schemas.  All emitters order their output deterministically, so
// identical inputs produce byte-identical files.
//
//   complex:  {"vertices": ["x1", ...], "facets": [["x1","x2"], ...]}
//   ideal:    {"variables": ["x1", ...], "generators": ["x1*x3", ...]}
//   witness:  {"target": <ideal>, "elements": ["<poly>", ...],
//              "provenance": "...", "trace": {...}?}

Json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& j);

Json ideal_to_json(const MonomialIdeal& ideal, const std::vector<Variable>& variables);
std::pair<MonomialIdeal, std::vector<Variable>> ideal_from_json(const Json& j);

Json witness_to_json(const WitnessSet& witness);
Json witness_to_json(const WitnessSet& witness, const Json& trace);
WitnessSet witness_from_json(const Json& j);

Json matrix_to_json(const PolyMatrix& m);
Json cone_trace_to_json(const ConeLiftTrace& trace);

Json report_to_json(const VerificationReport& report, bool include_timing = false);

std::string dump_json(const Json& j);      // 2-space indent, trailing newline
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace ara
