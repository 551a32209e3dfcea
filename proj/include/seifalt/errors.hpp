#pragma once

#include <stdexcept>
#include <string>

namespace seifalt {

// Error taxonomy for the whole library.  Every thrown error carries one of
// these kinds so callers (and the CLI) can map failures to exit codes.
enum class ErrorKind {
  InvalidComplex,
  NotASurface,
  CurveNotEmbedded,
  CurveTouchesBoundary,
  CurveOneSided,
  LabelUnknown,
  LengthMismatchUnrefinable,
  Incoherent,
  SiteOnBoundary,
  AttachmentOverlap,
  AttachmentOnBoundary,
  IntersectionMismatch,
  IncoherentMove,
  ConfigInvalid,
  NotReducibleCase,
  NoEmbeddingData,
  DimensionMismatch,
  SyntaxError,
  LabelArityError,
  OrientationError,
  UnorientableSpec,
  InvalidArgument,
  IoError,
};

const char* error_kind_name(ErrorKind kind);

class TopologyError : public std::runtime_error {
 public:
  TopologyError(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

// Full structural re-validation after every primitive is the default.  Heavy
// verified loops (property trials whose results are checked independently)
// may switch it off.
bool strict_validation() noexcept;
void set_strict_validation(bool on) noexcept;

class ValidationGuard {
 public:
  explicit ValidationGuard(bool on) : prev_(strict_validation()) { set_strict_validation(on); }
  ~ValidationGuard() { set_strict_validation(prev_); }

 private:
  bool prev_;
};

}  // namespace seifalt
