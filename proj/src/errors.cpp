#include "arthurlab/errors.hpp"

namespace arthurlab {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::UnpairableBadParity: return "UnpairableBadParity";
    case Errc::TotalMismatch: return "TotalMismatch";
    case Errc::InfinitesimalMismatch: return "InfinitesimalMismatch";
    case Errc::BadIndex: return "BadIndex";
    case Errc::BadKind: return "BadKind";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::AssumptionViolated: return "AssumptionViolated";
    case Errc::NegativeMultiplicity: return "NegativeMultiplicity";
    case Errc::InvariantBroken: return "InvariantBroken";
    case Errc::NoWideRow: return "NoWideRow";
    case Errc::PPrimeViolated: return "PPrimeViolated";
    case Errc::LZero: return "LZero";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::DecompositionFailed: return "DecompositionFailed";
    case Errc::NotTemperedAllPlus: return "NotTemperedAllPlus";
    case Errc::Tempered: return "Tempered";
  }
  return "Unknown";
}

ToolkitError::ToolkitError(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code) {}

void fail(Errc code, const std::string& detail) {
  throw ToolkitError(code, detail);
}

ParseError::ParseError(std::size_t pos, const std::string& expected)
    : std::runtime_error("parse error at offset " + std::to_string(pos) +
                         ": expected " + expected),
      pos_(pos),
      expected_(expected) {}

}  // namespace arthurlab
