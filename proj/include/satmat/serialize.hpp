#pragma once

#include <string>

#include "json.hpp"
#include "satmat/catalog.hpp"
#include "satmat/classify.hpp"
#include "satmat/witness.hpp"

namespace satmat {

// Flat key: value lines, one per field.
std::string format_class_label(const ClassLabel& label);
nlohmann::json to_json(const ClassLabel& label);

// Indices are reported 1-based in both renderings.
std::string format_witness_report(const WitnessReport& report);
nlohmann::json to_json(const WitnessReport& report);

std::string format_occurrence(const Occurrence& occ);
nlohmann::json to_json(const Occurrence& occ);

std::string format_class_record(const ClassRecord& record);
nlohmann::json to_json(const ClassRecord& record);

}  // namespace satmat
