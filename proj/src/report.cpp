#include "lisbon/report.hpp"

namespace lisbon {

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["params"] = params;
    j["residual"] = residual;
    j["tolerance"] = tolerance;
    j["pass"] = pass;
    j["runtime_ms"] = runtime_ms;
    return j;
}

nlohmann::json reports_to_json(const std::vector<Report>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return {{"schema", 1}, {"tool_version", "1.0.0"}, {"reports", std::move(arr)}};
}

bool all_pass(const std::vector<Report>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace lisbon
