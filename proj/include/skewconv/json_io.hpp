#pragma once

#include <nlohmann/json.hpp>

#include "skewconv/construction.hpp"
#include "skewconv/erasure.hpp"

namespace skewconv {

using ordered_json = nlohmann::ordered_json;

/// Stable-key-order code export:
/// {"schema",n,k,q,t,field,lambdas,G0,G1,verified}.
ordered_json code_to_json(const ConvCode& code, const ordered_json& verified);

/// Parses and validates a code export. The generator blocks are taken as
/// given (not rebuilt from the lambdas) so downstream checks see exactly
/// what the file claims.
ConvCode code_from_json(const nlohmann::json& j);

ordered_json construction_report_json(const ConstructionReport& rep);
ordered_json mdp_report_json(const MdpReport& rep, const ConvCode& code);
ordered_json dual_report_json(const DualMdpReport& rep);

/// Runs all checks and assembles the embedded "verified" block, including
/// the field-size accounting.
ordered_json verification_block(const ConvCode& code);

/// True when every check the code's parameters claim has passed.
bool verification_ok(const ordered_json& verified);

/// Deterministic report (wall-clock deliberately excluded).
ordered_json sim_report_json(const SimReport& rep);
ordered_json census_report_json(const CensusReport& rep);

} // namespace skewconv
