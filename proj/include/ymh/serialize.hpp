#pragma once

#include "ymh/checks.hpp"
#include "ymh/complex.hpp"
#include "ymh/derivation.hpp"
#include "ymh/lie.hpp"
#include "ymh/module.hpp"

#include <json.hpp>

#include <string>

namespace ymh {

inline constexpr int kSchemaVersion = 1;

nlohmann::ordered_json presentation_to_json(const YMPresentation& p);
// throws std::runtime_error when the document is malformed or fails an invariant
YMPresentation presentation_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json module_to_json(const GradedModule& y);
GradedModule module_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json table_to_json(const HomologyTable& t);
nlohmann::ordered_json report_to_json(const CheckReport& r);
nlohmann::ordered_json bracket_table_to_json(int n, const HH1Structure& h);

void save_json(const std::string& path, const nlohmann::ordered_json& j);
nlohmann::ordered_json load_json(const std::string& path);

}  // namespace ymh
