#include "cvf/error.hpp"

namespace cvf {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidField: return "InvalidField";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZeroToPrecision: return "DivisionByZeroToPrecision";
    case Errc::NegativeValuation: return "NegativeValuation";
    case Errc::ZeroHasNoValuation: return "ZeroHasNoValuation";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::ValuationNotPositive: return "ValuationNotPositive";
    case Errc::NotASimpleResidualRoot: return "NotASimpleResidualRoot";
    case Errc::NonIntegralCoefficients: return "NonIntegralCoefficients";
    case Errc::SplitExtensionHasNoCanonicalValuation: return "SplitExtensionHasNoCanonicalValuation";
    case Errc::TooShort: return "TooShort";
    case Errc::SolvableB: return "SolvableB";
    case Errc::NotStabilized: return "NotStabilized";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

}  // namespace cvf
