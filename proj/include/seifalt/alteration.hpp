#pragma once

// Altering surfaces, systems of altering surfaces (SAS), alteration, and the
// yields reading for Seifert surfaces.

#include <vector>

#include "seifalt/surface_complex.hpp"
#include "seifalt/surface_ops.hpp"

namespace seifalt {

// One boundary circle of an altering surface together with its target cycle
// in the host interior.  The host cycle is oriented; sign says which side of
// the cut receives the +1 push-off copy of the surface (+1 = left).
struct Attachment {
  EdgeId circle = -1;  // boundary circle label on the altering surface
  EdgePath host_cycle;
  int sign = +1;
};

struct AlteringSurface {
  SurfaceComplex surface;  // connected, orientable, non-empty boundary
  std::vector<Attachment> attachments;
};

struct SAS {
  std::vector<AlteringSurface> members;  // pairwise disjoint attachment cycles
};

void validate_altering_surface(const SurfaceComplex& host, const AlteringSurface& f);
void validate_sas(const SurfaceComplex& host, const SAS& sas);

// Alteration along one altering surface: the host is cut along every
// attachment cycle and two parallel copies of the surface are glued to the
// sides.  chi(result) = chi(host) + 2 chi(F).
SurfaceComplex alter(const SurfaceComplex& host, const AlteringSurface& f);

// Sequential alteration along all members (order-independent).
SurfaceComplex alter_sas(const SurfaceComplex& host, const SAS& sas);

struct YieldResult {
  std::vector<SurfaceType> seifert_part;  // components with boundary
  std::vector<SurfaceType> closed_part;   // closed components, recorded then discarded
};

// Partition of the alteration result into the Seifert part and the closed
// leftovers.  The host must itself be a Seifert surface model: non-empty
// boundary and no closed components.
YieldResult yields(const SurfaceComplex& host, const SAS& sas);

bool same_type_multiset(const std::vector<SurfaceType>& a, const std::vector<SurfaceType>& b);

// Mirror copy: all face words reversed (flips the orientation class).
SurfaceComplex mirrored(const SurfaceComplex& c);

}  // namespace seifalt
