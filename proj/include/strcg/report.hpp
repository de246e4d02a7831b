#pragma once

#include <string>

#include <json.hpp>

#include "strcg/rankred.hpp"
#include "strcg/verify.hpp"

namespace strcg {

// Text and JSON renderings carry the same data; JSON adds nothing beyond
// machine-friendly structure.
nlohmann::json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

nlohmann::json outcome_to_json(const ReductionOutcome& outcome);
std::string outcome_to_text(const ReductionOutcome& outcome);

nlohmann::json chain_to_json(const ReductionChain& chain);
std::string chain_to_text(const ReductionChain& chain);

}  // namespace strcg
