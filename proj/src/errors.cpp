#include "entbound/errors.hpp"

namespace entbound {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::BadDims: return "BadDims";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotUnitTrace: return "NotUnitTrace";
    case Errc::NotPositive: return "NotPositive";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotPhysical: return "NotPhysical";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::DegenerateChi: return "DegenerateChi";
    case Errc::NegativeAlpha: return "NegativeAlpha";
    case Errc::EpsOutOfRange: return "EpsOutOfRange";
    case Errc::BaseNotBoundEntangled: return "BaseNotBoundEntangled";
    case Errc::InvalidRange: return "InvalidRange";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace entbound
