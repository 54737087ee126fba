#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "charkit/chartab.hpp"
#include "charkit/classify.hpp"
#include "charkit/verify.hpp"

namespace charkit {

/// {conductor, terms:[{exp, num, den}]}, zero terms omitted.
nlohmann::json to_json(const Cyclotomic& value);
nlohmann::json to_json(const ClassFunction& chi);  // array of values
nlohmann::json to_json(const CharacterTable& table);
/// monomialWitness holds {subgroupOrder, generators, character} or null.
nlohmann::json to_json(const ClassificationReport& report, const GroupAnalysis& ctx);
nlohmann::json to_json(const CheckResult& result);

std::string render_text(const CharacterTable& table);
std::string render_text(const ClassificationReport& report, const GroupAnalysis& ctx);
/// One line per result followed by pass/fail/skipped totals.
std::string render_text(const std::vector<CheckResult>& results);
/// One compact JSON object per line.
std::string render_json_lines(const std::vector<CheckResult>& results);

}  // namespace charkit
