#pragma once

#include <string>

#include <json.hpp>

#include "fairdiv/allocation.hpp"
#include "fairdiv/checkers.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

// Wire formats. Rationals travel as strings ("3", "1/2"); keys are emitted in
// sorted order and documents are newline-terminated so golden files stay stable.

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& doc);  // validates

nlohmann::json allocation_to_json(const Instance& inst, const IntegralAllocation& alloc);
IntegralAllocation allocation_from_json(const Instance& inst, const nlohmann::json& doc);

nlohmann::json lottery_to_json(const Instance& inst, const RandomizedAllocation& lottery);
RandomizedAllocation lottery_from_json(const Instance& inst, const nlohmann::json& doc);

nlohmann::json fractional_to_json(const FractionalAllocation& frac);

nlohmann::json report_to_json(const Instance& inst, const PropertyReport& report, Property p);

std::string canonical_dump(const nlohmann::json& doc);

nlohmann::json load_json_file(const std::string& path);

}  // namespace fairdiv
