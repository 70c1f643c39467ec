#include "branecharge/error.hpp"

namespace branecharge {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::InvalidFan: return "InvalidFan";
    case Errc::InvalidDivisor: return "InvalidDivisor";
    case Errc::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case Errc::FaceNotOfThisPolytope: return "FaceNotOfThisPolytope";
    case Errc::Unbounded: return "Unbounded";
    case Errc::NotNef: return "NotNef";
    case Errc::NotReflexive: return "NotReflexive";
    case Errc::NotSmooth: return "NotSmooth";
    case Errc::NotComplete: return "NotComplete";
    case Errc::DimensionUnsupported: return "DimensionUnsupported";
    case Errc::InternalNonTermination: return "InternalNonTermination";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace branecharge
