#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace qs {

// Dual-channel cost record. sim_reads counts real character reads performed
// by the classical simulation; charged_cost is the model quantum cost, as a
// per-primitive breakdown. The two channels are independent by design: the
// simulation may read far more than the model charges.
struct QueryLedger {
    uint64_t sim_reads = 0;
    std::map<std::string, double> breakdown;

    double charged_cost() const {
        double s = 0;
        for (auto& [k, v] : breakdown) s += v;
        return s;
    }

    void charge(const std::string& primitive, double units) {
        breakdown[primitive] += units;
    }

    void merge(const QueryLedger& other) {
        sim_reads += other.sim_reads;
        for (auto& [k, v] : other.breakdown) breakdown[k] += v;
    }

    // {"sim_reads": int, "charged_cost": float, "breakdown": {name: float}}
    std::string to_json() const;
};

} // namespace qs
