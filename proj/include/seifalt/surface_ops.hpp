#pragma once

// Cut-and-paste operations on surface complexes.  These are the primitives
// behind handle surgery, alteration and SAS transport.  All functions take
// the input by value or const reference and return fresh complexes; ids of
// untouched cells are preserved so recorded curves elsewhere stay valid.

#include <map>
#include <utility>
#include <vector>

#include "seifalt/curves.hpp"
#include "seifalt/surface_complex.hpp"

namespace seifalt {

struct CutResult {
  SurfaceComplex complex;
  // Copies of the cut cycle, both running in the direction of the input
  // cycle.  Side a is the side holding the canonical face-use (smallest
  // (face, index)) of the first cycle edge -- a convention stable under any
  // operation elsewhere in the complex.
  EdgePath side_a;
  EdgePath side_b;
  std::map<EdgeId, std::pair<EdgeId, EdgeId>> edge_sides;      // original -> (a, b)
  std::map<VertexId, std::pair<VertexId, VertexId>> vertex_sides;
};

// Cuts along an embedded interior cycle.  chi is unchanged; the boundary
// gains two circles (CurveOneSided when the cycle is one-sided).
CutResult cut_along_cycle(const SurfaceComplex& c, const EdgePath& cycle);

struct CutArcResult {
  SurfaceComplex complex;
  EdgePath side_a;
  EdgePath side_b;
  std::map<EdgeId, std::pair<EdgeId, EdgeId>> edge_sides;
  std::map<VertexId, std::pair<VertexId, VertexId>> vertex_sides;
};

// Cuts along a properly embedded arc (boundary to boundary); chi increases
// by one.
CutArcResult cut_along_arc(const SurfaceComplex& c, const EdgePath& arc);

struct DisjointUnionResult {
  SurfaceComplex complex;
  // Id maps for the second summand (the first keeps its ids).
  std::map<VertexId, VertexId> vmap;
  std::map<EdgeId, EdgeId> emap;
  std::map<FaceId, FaceId> fmap;
};

DisjointUnionResult disjoint_union(const SurfaceComplex& a, const SurfaceComplex& b);

// Boundary circle whose minimal free edge id equals `label`.
EdgePath boundary_circle_by_label(const SurfaceComplex& c, EdgeId label);
EdgeId boundary_circle_label(const EdgePath& circle);

// Evenly subdivides circle edges until the circle has `target` edges.
// Returns the refined circle path.
EdgePath refine_circle_to_length(SurfaceComplex& c, const EdgePath& circle, int target);

struct GlueResult {
  SurfaceComplex complex;
  // The identified circle as a cycle in the result (runs along circle_a's
  // direction).
  EdgePath seam;
};

// Identifies two boundary circles of the same complex.  With reversed=false
// position i of circle_a matches position (L-1-i) of circle_b (the
// orientation-coherent pairing for circles traced with the induced boundary
// orientation); reversed=true matches positions directly.  Circles of
// different lengths are refined internally.
GlueResult glue_boundary_circles(const SurfaceComplex& c, const EdgePath& circle_a,
                                 const EdgePath& circle_b, bool reversed);

// Spec-shaped convenience: disjoint union of two complexes, then glue by
// labels.
GlueResult glue_boundary_circles(const SurfaceComplex& a, EdgeId label_a, const SurfaceComplex& b,
                                 EdgeId label_b, bool reversed);

struct GlueArcResult {
  SurfaceComplex complex;
  EdgePath seam;
};

// Identifies two disjoint free-edge arcs (walked against each other, the
// surface-gluing convention).  Lengths are refined to match.
GlueArcResult glue_boundary_arcs(const SurfaceComplex& c, const EdgePath& arc_a,
                                 const EdgePath& arc_b);

struct PunchResult {
  SurfaceComplex complex;
  // The fresh boundary circle around the hole (forward ring direction).
  EdgePath circle;
  // Collar quads that replaced the face.
  std::vector<FaceId> collar;
};

// Replaces the face interior by an annular collar around a fresh hole whose
// boundary is disjoint from the original face boundary.
PunchResult punch_hole(const SurfaceComplex& c, FaceId face);

struct LadderResult {
  SurfaceComplex complex;
  // Interior meridian rings, in order from circle_a toward circle_b; each a
  // closed cycle in circle_a's direction.
  std::vector<EdgePath> rings;
  // Rung paths, one per circle position, each from the circle_a layer to the
  // circle_b layer.
  std::vector<EdgePath> rungs;
  // The (refined) boundary paths that were glued.
  EdgePath circle_a;
  EdgePath circle_b;
};

// Glues an annulus ladder with `rings` interior meridian circles between two
// boundary circles.  Pairing convention matches glue_boundary_circles.
LadderResult glue_with_ladder(const SurfaceComplex& c, const EdgePath& circle_a,
                              const EdgePath& circle_b, int rings, bool reversed);

struct ThickenResult {
  SurfaceComplex complex;
  // Parallel copies of the cycle, ordered from side_a to side_b.
  std::vector<EdgePath> rings;
  // For every position along the cycle, the transverse rung path from the
  // side_a copy of that vertex to the side_b copy.
  std::vector<EdgePath> rungs;
  // The two outermost copies of the original cycle (side_a / side_b).
  EdgePath ring_a;
  EdgePath ring_b;
  // Other recorded paths, rerouted across the ladder where they crossed the
  // cycle transversally.  Index-matched with the input list.
  std::vector<EdgePath> rerouted;
  // For each rerouted path, the cycle positions where it crossed.
  std::vector<std::vector<int>> crossings;
};

// Replaces the collar of an interior cycle by a ladder annulus with `rings`
// interior parallel circles.  Homeomorphism type is unchanged.  Paths in
// `reroute` that cross the cycle transversally are rewired through the
// ladder rungs; paths sharing edges with the cycle are rejected.
ThickenResult thicken_cycle(const SurfaceComplex& c, const EdgePath& cycle, int rings,
                            const std::vector<EdgePath>& reroute,
                            const std::vector<bool>& reroute_closed);

// Caps a boundary circle with a single disk face; returns the new face.
std::pair<SurfaceComplex, FaceId> cap_with_disk(const SurfaceComplex& c, const EdgePath& circle);

struct InscribeResult {
  SurfaceComplex complex;
  // An interior cycle bounding the fresh inner disk face.
  EdgePath circle;
  FaceId inner_face = -1;
  std::vector<FaceId> collar;
};

// Subdivides a face into a collar plus an inner disk, yielding an embedded
// interior cycle that bounds a disk (the inner face).
InscribeResult inscribe_circle(const SurfaceComplex& c, FaceId face);

// +1 when `face` lies on the left of the oriented cycle, -1 on the right
// (relative to the complex's canonical orientation, matching the side
// convention of cut_along_cycle).  The face must use a cycle edge.
int side_sign(const SurfaceComplex& c, const EdgePath& cycle, FaceId face);

// A face whose word uses edges of both paths (the band between two parallel
// rings); fails when none exists.
FaceId face_adjacent_to_both(const SurfaceComplex& c, const EdgePath& a, const EdgePath& b);

}  // namespace seifalt
