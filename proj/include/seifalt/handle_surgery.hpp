#pragma once

// Coherent 1-handle (tubing) and 2-handle (compression) surgery, and tube
// sequences connecting Seifert surfaces.

#include <optional>
#include <vector>

#include "seifalt/surface_complex.hpp"
#include "seifalt/surface_ops.hpp"

namespace seifalt {

struct OneHandle {
  FaceId site_a = -1;
  FaceId site_b = -1;
  // Orientation datum relating the tube to the two sites.  The default is
  // coherent for sites on one component of an oriented surface; a wrong
  // value is refused (Incoherent).
  bool reversed = false;
  // Number of interior meridian circles carried by the tube (>= 1).  SAS
  // transport asks for 2k+1 of these to host punctures and midpoint disks.
  int rings = 1;
};

struct OneHandleResult {
  SurfaceComplex complex;
  // Meridian cycles in order from site_a to site_b.
  std::vector<EdgePath> meridians;
};

// Surgery along a coherent 1-handle: chi drops by 2, boundary untouched.
OneHandleResult attach_one_handle(const SurfaceComplex& s, const OneHandle& h);

struct TwoHandle {
  EdgePath cycle;  // embedded interior attach cycle
};

struct TwoHandleResult {
  SurfaceComplex complex;
  // Boundaries of the two capping disks, as interior cycles of the result.
  // cap_a is the left side of the oriented attach cycle.
  EdgePath cap_circle_a;
  EdgePath cap_circle_b;
  FaceId cap_a = -1;
  FaceId cap_b = -1;
};

// Surgery along a coherent 2-handle: chi grows by 2, boundary untouched.
TwoHandleResult surger_two_handle(const SurfaceComplex& s, const TwoHandle& h);

// --- intersection payloads (filled by SAS transport inputs) -------------------

struct HandlePuncture {
  int member = -1;   // index into the SAS
  int rank = 0;      // order along the tube axis, strictly increasing
  FaceId face = -1;  // pierced face on that member
};

struct OneHandleIntersections {
  std::vector<HandlePuncture> punctures;
};

struct BoundaryPointSpec {
  int member = -1;
  int position = -1;  // cyclic position on the attach circle
};

struct ChordSpec {
  int member = -1;
  int end_a = -1;
  int end_b = -1;   // cyclic positions of the chord endpoints
  EdgePath trace;   // properly embedded arc on the member
};

struct CircleSpec {
  int member = -1;
  int parent = -1;  // index of the nesting parent circle, -1 for roots
  EdgePath trace;   // embedded cycle in the member interior
};

struct ChordCircleConfig {
  std::vector<BoundaryPointSpec> boundary_points;
  std::vector<ChordSpec> chords;
  std::vector<CircleSpec> circles;
};

struct TubeMove {
  enum class Kind { OneHandle, TwoHandle };
  Kind kind = Kind::OneHandle;
  OneHandle one;
  TwoHandle two;
  std::optional<OneHandleIntersections> one_payload;
  std::optional<ChordCircleConfig> two_payload;
};

struct TubeSequence {
  std::vector<TubeMove> moves;
};

// Applies the moves in order; returns all intermediate surfaces (length
// N+1).  Errors are annotated with the failing step index.
std::vector<SurfaceComplex> apply_tube_sequence(const SurfaceComplex& start,
                                                const TubeSequence& seq);

}  // namespace seifalt
