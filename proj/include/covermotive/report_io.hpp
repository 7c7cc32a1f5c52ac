#pragma once

#include <string>

#include "covermotive/group.hpp"
#include "covermotive/moduli.hpp"

namespace covermotive {

/// GroupSpecFile: {"schema": 1} plus exactly one of "builtin" ({"kind",
/// "params"}), "cayley" (matrix) or "permutations" (image arrays). Throws
/// MalformedSpec.
GroupSpec parse_group_spec_file(const std::string& json_text);
std::string group_spec_to_json(const GroupSpec& spec);

/// ClassReportFile, schema 1. Coefficients are decimal strings, ascending.
std::string class_report_to_json(const ClassReport& report);
ClassReport class_report_from_json(const std::string& json_text);
std::string class_report_to_text(const ClassReport& report);

/// "1,0,1".
std::string marking_to_string(const ClassTuple& marking);
ClassTuple parse_marking(const std::string& text);

}  // namespace covermotive
