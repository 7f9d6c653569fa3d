#pragma once

#include "mcg/presentation.hpp"
#include "mcg/report.hpp"
#include "mcg/surface.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcg {

using json = nlohmann::json;

struct UnsupportedFormat : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ExportFormat { Plain, Gap, Magma, Json };
ExportFormat parse_export_format(std::string_view s);

std::string export_presentation(const Presentation& pres, ExportFormat fmt);
std::string export_presentation(const Presentation& pres, std::string_view fmt);

json word_to_json(const Word& w);
Word word_from_json(const json& j);

json to_json(const Presentation& pres);
Presentation presentation_from_json(const json& j);

json to_json(const CurveConfiguration& cfg);
CurveConfiguration configuration_from_json(const json& j);

json to_json(const Report& r);
Report report_from_json(const json& j);

}  // namespace mcg
