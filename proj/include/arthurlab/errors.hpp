#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arthurlab {

enum class Errc {
  UnpairableBadParity,
  TotalMismatch,
  InfinitesimalMismatch,
  BadIndex,
  BadKind,
  SearchBudgetExceeded,
  AssumptionViolated,
  NegativeMultiplicity,
  InvariantBroken,
  NoWideRow,
  PPrimeViolated,
  LZero,
  HypothesisFailed,
  DecompositionFailed,
  NotTemperedAllPlus,
  Tempered,
};

std::string_view errc_name(Errc code);

class ToolkitError : public std::runtime_error {
 public:
  ToolkitError(Errc code, const std::string& detail);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

// Thrown by the text parsers; `pos` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& expected);
  std::size_t pos() const { return pos_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t pos_;
  std::string expected_;
};

}  // namespace arthurlab
