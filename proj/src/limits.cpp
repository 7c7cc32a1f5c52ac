#include "covermotive/limits.hpp"

#include <cstdlib>
#include <string>

#include "covermotive/errors.hpp"

namespace covermotive {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::UnsupportedNonabelian: return "UnsupportedNonabelian";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::MissingEvaluations: return "MissingEvaluations";
    case ErrorKind::NonEmptyDegreeZero: return "NonEmptyDegreeZero";
    case ErrorKind::NonFreeAction: return "NonFreeAction";
    case ErrorKind::InexactDivision: return "InexactDivision";
  }
  return "Error";
}

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("COVERMOTIVE_CAP"); raw != nullptr && *raw != '\0') {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(raw, &used);
      if (used == std::string(raw).size() && value > 0) limits.enumeration_cap = value;
    } catch (const std::exception&) {
      // Unparseable override: keep the default.
    }
  }
  return limits;
}

}  // namespace covermotive
