#include "islog/errors.hpp"

namespace islog {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::SumNotOne: return "SumNotOne";
    case Errc::ZeroPriorRow: return "ZeroPriorRow";
    case Errc::EmptyAxis: return "EmptyAxis";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroProbabilityObservation: return "ZeroProbabilityObservation";
    case Errc::ObservationSpaceMismatch: return "ObservationSpaceMismatch";
    case Errc::UndefinedPosterior: return "UndefinedPosterior";
    case Errc::NotBinary: return "NotBinary";
    case Errc::PriorMismatch: return "PriorMismatch";
    case Errc::LabelMismatch: return "LabelMismatch";
    case Errc::DegeneratePrior: return "DegeneratePrior";
    case Errc::InvalidCurve: return "InvalidCurve";
    case Errc::MissingPayoff: return "MissingPayoff";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace islog
