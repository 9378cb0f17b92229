#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "inckk/numeric.hpp"
#include "inckk/oracle.hpp"
#include "inckk/simplicial.hpp"

// Serialization: one-line space-separated d-sets, "d=<d>"-headed family
// files, and the JSON forms of families, face-count vectors, complexes,
// chains, and verification reports.

namespace inckk {

using nlohmann::json;

/// Thrown on malformed input; the message names the offending line or field.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

DSet parse_dset(const std::string& line);

/// Text form: header "d=<d>", then one d-set per line. JSON form:
/// {"d": 3, "members": [[1,2,4], ...]}. The stream is sniffed: input starting
/// with '{' or '[' is treated as JSON.
Family read_family(std::istream& in);
Family family_from_json(const json& j);
json family_to_json(const Family& f);
std::string family_to_text(const Family& f);

FVector fvector_from_json(const json& j);
json fvector_to_json(const FVector& f);
FVectorChain chain_from_json(const json& j);
json chain_to_json(const FVectorChain& chain);

SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& dl);
std::vector<SimplicialComplex> complex_chain_from_json(const json& j);
json complex_chain_to_json(const std::vector<SimplicialComplex>& chain);

json report_to_json(const VerificationReport& report);
json segment_report_to_json(const SegmentReport& report);

json read_json(std::istream& in);

}  // namespace inckk
