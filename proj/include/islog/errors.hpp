#pragma once

#include <stdexcept>
#include <string>

namespace islog {

enum class Errc {
  NegativeEntry,
  SumNotOne,
  ZeroPriorRow,
  EmptyAxis,
  DimensionMismatch,
  ZeroProbabilityObservation,
  ObservationSpaceMismatch,
  UndefinedPosterior,
  NotBinary,
  PriorMismatch,
  LabelMismatch,
  DegeneratePrior,
  InvalidCurve,
  MissingPayoff,
  ParseError,
};

const char* errc_name(Errc c);

/// Library failure carrying a machine-readable code alongside the message.
/// The CLI maps codes to exit statuses; tests match on code, not text.
class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace islog
