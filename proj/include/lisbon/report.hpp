#pragma once

#include <map>
#include <string>
#include <vector>

#include "vendor_json.hpp"

namespace lisbon {

/// Structured outcome of one verification run.
struct Report {
    std::string check;
    std::map<std::string, std::string> params;
    double residual = 0.0;
    double tolerance = 0.0;  // 0 means the check is exact
    bool pass = false;
    long runtime_ms = 0;

    nlohmann::json to_json() const;
};

nlohmann::json reports_to_json(const std::vector<Report>& reports);

bool all_pass(const std::vector<Report>& reports);

}  // namespace lisbon
