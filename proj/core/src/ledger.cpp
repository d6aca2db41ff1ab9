#include "qstring/ledger.hpp"

#include <json.hpp>

namespace qs {

std::string QueryLedger::to_json() const {
    nlohmann::json j;
    j["sim_reads"] = sim_reads;
    j["charged_cost"] = charged_cost();
    nlohmann::json b = nlohmann::json::object();
    for (auto& [k, v] : breakdown) b[k] = v;
    j["breakdown"] = b;
    return j.dump();
}

} // namespace qs
