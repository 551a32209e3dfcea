#pragma once

// Edge-path utilities: chained dart sequences used as cycles (closed) and
// arcs (open) on a SurfaceComplex.

#include <vector>

#include "seifalt/surface_complex.hpp"

namespace seifalt {

// Vertices visited by a path: tails of each dart, plus the final head for
// open paths.
std::vector<VertexId> path_vertices(const SurfaceComplex& c, const EdgePath& path, bool closed);

bool path_chains(const SurfaceComplex& c, const EdgePath& path, bool closed);

// Simple closed edge-path: chained, closed, edges pairwise distinct,
// vertices pairwise distinct.
void validate_cycle(const SurfaceComplex& c, const EdgePath& cycle);

// Additionally requires every cycle edge interior and every cycle vertex off
// the boundary (no incident free edge).
void validate_interior_cycle(const SurfaceComplex& c, const EdgePath& cycle);

// Simple open path with both endpoints on the boundary and everything else
// interior (used for trace arcs on altering surfaces).
void validate_proper_arc(const SurfaceComplex& c, const EdgePath& arc);

bool paths_vertex_disjoint(const SurfaceComplex& c, const EdgePath& a, bool a_closed,
                           const EdgePath& b, bool b_closed);

// Reverses a path in place semantics: returns the path walked backwards.
EdgePath reverse_path(const EdgePath& path);

// Rotates a closed path so it starts at the dart whose edge id is minimal.
EdgePath canonical_rotation(const EdgePath& cycle);

}  // namespace seifalt
