#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace twistkit {

struct CaseResult {
    std::string name;
    std::string status;  // pass, fail, or error
    std::string details;
    nlohmann::json provenance;
};

// Run the whole verification battery, sorted by case name.
std::vector<CaseResult> run_acceptance_cases();

// 64-bit FNV-1a, used to fingerprint the inputs a case consumed.
std::string input_hash(const std::string& data);

}  // namespace twistkit
