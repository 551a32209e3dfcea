#include "seifalt/errors.hpp"

namespace seifalt {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::NotASurface: return "NotASurface";
    case ErrorKind::CurveNotEmbedded: return "CurveNotEmbedded";
    case ErrorKind::CurveTouchesBoundary: return "CurveTouchesBoundary";
    case ErrorKind::CurveOneSided: return "CurveOneSided";
    case ErrorKind::LabelUnknown: return "LabelUnknown";
    case ErrorKind::LengthMismatchUnrefinable: return "LengthMismatchUnrefinable";
    case ErrorKind::Incoherent: return "Incoherent";
    case ErrorKind::SiteOnBoundary: return "SiteOnBoundary";
    case ErrorKind::AttachmentOverlap: return "AttachmentOverlap";
    case ErrorKind::AttachmentOnBoundary: return "AttachmentOnBoundary";
    case ErrorKind::IntersectionMismatch: return "IntersectionMismatch";
    case ErrorKind::IncoherentMove: return "IncoherentMove";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::NotReducibleCase: return "NotReducibleCase";
    case ErrorKind::NoEmbeddingData: return "NoEmbeddingData";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::LabelArityError: return "LabelArityError";
    case ErrorKind::OrientationError: return "OrientationError";
    case ErrorKind::UnorientableSpec: return "UnorientableSpec";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
  }
  return "UnknownError";
}

TopologyError::TopologyError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) {
  throw TopologyError(kind, message);
}

namespace {
bool g_strict_validation = true;
}

bool strict_validation() noexcept { return g_strict_validation; }
void set_strict_validation(bool on) noexcept { g_strict_validation = on; }

}  // namespace seifalt
