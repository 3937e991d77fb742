#pragma once

#include "stabreg/json_io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stabreg::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    std::size_t cases = 0;     // instances on which the property was evaluated
    std::size_t failures = 0;  // counterexamples or oracle disagreements
    bool pass = false;
    std::string detail;        // deterministic summary, first failure if any
};

struct BatteryConfig {
    std::uint64_t seed = 20240611;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<CriterionResult(const BatteryConfig&)> run;
};

/// Criteria 1-9 in order. Criterion 10 (byte-identical reruns) is a
/// property of the whole driver and is checked by the caller.
const std::vector<Criterion>& criteria();

Json to_json(const CriterionResult& result);

CriterionResult ladder_oracle_equivalence(const BatteryConfig& config);
CriterionResult symmetry_lemma(const BatteryConfig& config);
CriterionResult pair_implications(const BatteryConfig& config);
CriterionResult threshold_proposition(const BatteryConfig& config);
CriterionResult excellence(const BatteryConfig& config);
CriterionResult definability(const BatteryConfig& config);
CriterionResult harrington(const BatteryConfig& config);
CriterionResult regularity_pipeline(const BatteryConfig& config);
CriterionResult group_regularity(const BatteryConfig& config);

}  // namespace stabreg::acceptance
